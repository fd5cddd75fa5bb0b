#include "colortree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "colortree/errors.hpp"

namespace colortree {

ColoredTree::ColoredTree(std::vector<Edge> children) : children_(std::move(children)) {
    std::stable_sort(children_.begin(), children_.end(),
                     [](const Edge& a, const Edge& b) { return a.color < b.color; });
}

std::size_t ColoredTree::line_count() const {
    std::size_t n = children_.size();
    for (const Edge& e : children_) n += e.child.line_count();
    return n;
}

namespace {

void accumulate_profile(const ColoredTree& t, std::vector<unsigned>& counts) {
    for (const auto& e : t.children()) {
        if (e.color < 1 || e.color > counts.size()) {
            throw ColorError("color " + std::to_string(e.color) + " outside 1.." +
                             std::to_string(counts.size()));
        }
        ++counts[e.color - 1];
        accumulate_profile(e.child, counts);
    }
}

}  // namespace

ColorProfile ColoredTree::profile(unsigned d) const {
    std::vector<unsigned> counts(d, 0);
    accumulate_profile(*this, counts);
    return ColorProfile(std::move(counts));
}

bool operator==(const ColoredTree& a, const ColoredTree& b) { return a.children_ == b.children_; }

bool validate(const ColoredTree& tree, unsigned d) {
    unsigned previous = 0;
    for (const auto& e : tree.children()) {
        // children are sorted, so a repeat shows up as a non-increase
        if (e.color < 1 || e.color > d || e.color <= previous) return false;
        previous = e.color;
        if (!validate(e.child, d)) return false;
    }
    return true;
}

namespace {

void encode_into(const ColoredTree& tree, std::string& out) {
    out += '(';
    bool first = true;
    for (const auto& e : tree.children()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.color);
        out += ':';
        encode_into(e.child, out);
    }
    out += ')';
}

class Decoder {
  public:
    Decoder(std::string_view text, unsigned d) : text_(text), d_(d) {}

    ColoredTree parse() {
        ColoredTree t = parse_tree();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return t;
    }

  private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    unsigned parse_color() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) throw ParseError("expected color digits", start);
        if (text_[start] == '0' && pos_ - start > 1) {
            throw ParseError("leading zero in color", start);
        }
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || value < 1 || value > d_) {
            throw ColorError("color '" + std::string(text_.substr(start, pos_ - start)) +
                             "' outside 1.." + std::to_string(d_) + " at offset " +
                             std::to_string(start));
        }
        return value;
    }

    ColoredTree parse_tree() {
        expect('(');
        std::vector<ColoredTree::Edge> children;
        if (peek() != ')') {
            while (true) {
                const std::size_t at = pos_;
                const unsigned color = parse_color();
                if (!children.empty()) {
                    if (color == children.back().color) {
                        throw ColorError("repeated color " + std::to_string(color) +
                                         " at offset " + std::to_string(at));
                    }
                    if (color < children.back().color) {
                        throw ColorOrderError("children not in ascending color order at offset " +
                                              std::to_string(at));
                    }
                }
                expect(':');
                children.push_back({color, parse_tree()});
                if (peek() != ',') break;
                ++pos_;
            }
        }
        expect(')');
        return ColoredTree(std::move(children));
    }

    std::string_view text_;
    unsigned d_;
    std::size_t pos_ = 0;
};

// Calls `visit` on every composition of `total` into `parts` non-negative parts,
// lexicographically.
void for_each_composition(unsigned total, unsigned parts, std::vector<unsigned>& acc,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (acc.size() + 1 == parts) {
        acc.push_back(total);
        visit(acc);
        acc.pop_back();
        return;
    }
    for (unsigned c = 0; c <= total; ++c) {
        acc.push_back(c);
        for_each_composition(total - c, parts, acc, visit);
        acc.pop_back();
    }
}

// Cartesian product of the per-color subtree choices for one root child set.
void attach_children(const std::vector<unsigned>& colors, const std::vector<unsigned>& sizes,
                     const std::vector<std::vector<ColoredTree>>& by_lines,
                     std::vector<ColoredTree::Edge>& acc, std::vector<ColoredTree>& out) {
    const std::size_t i = acc.size();
    if (i == colors.size()) {
        out.emplace_back(acc);
        return;
    }
    for (const ColoredTree& sub : by_lines[sizes[i]]) {
        acc.push_back({colors[i], sub});
        attach_children(colors, sizes, by_lines, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<ColoredTree>> build_by_lines(unsigned d, unsigned max_lines) {
    std::vector<std::vector<ColoredTree>> by_lines(max_lines + 1);
    by_lines[0].emplace_back();
    for (unsigned lines = 1; lines <= max_lines; ++lines) {
        auto& bucket = by_lines[lines];
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            std::vector<unsigned> colors;
            for (unsigned c = 0; c < d; ++c) {
                if (mask & (1u << c)) colors.push_back(c + 1);
            }
            const auto k = static_cast<unsigned>(colors.size());
            if (k > lines) continue;
            std::vector<unsigned> acc;
            for_each_composition(lines - k, k, acc, [&](const std::vector<unsigned>& sizes) {
                std::vector<ColoredTree::Edge> edges;
                attach_children(colors, sizes, by_lines, edges, bucket);
            });
        }
        std::vector<std::pair<std::string, std::size_t>> keys;
        keys.reserve(bucket.size());
        for (std::size_t i = 0; i < bucket.size(); ++i) keys.emplace_back(encode(bucket[i]), i);
        std::sort(keys.begin(), keys.end());
        std::vector<ColoredTree> sorted;
        sorted.reserve(bucket.size());
        for (const auto& [key, i] : keys) sorted.push_back(std::move(bucket[i]));
        bucket = std::move(sorted);
    }
    return by_lines;
}

void check_budget(unsigned d, unsigned max_lines, const Limits& limits) {
    if (d < 2 || d > limits.max_colors || d > kHardMaxColors) {
        throw DomainError("unsupported number of colors " + std::to_string(d));
    }
    BigInt total = 0;
    for (unsigned lines = 0; lines <= max_lines; ++lines) total += tree_count_by_lines(d, lines);
    if (total > BigInt(std::to_string(limits.max_trees))) {
        throw BudgetExceeded("enumerating " + total.get_str() + " trees exceeds the cap of " +
                             std::to_string(limits.max_trees));
    }
}

}  // namespace

std::string encode(const ColoredTree& tree) {
    std::string out;
    encode_into(tree, out);
    return out;
}

ColoredTree decode(std::string_view text, unsigned d) { return Decoder(text, d).parse(); }

BigInt tree_count_by_lines(unsigned d, unsigned lines) {
    // forest[k][l]: ordered k-tuples of trees with l lines in total.
    std::vector<BigInt> trees(lines + 1);
    std::vector<std::vector<BigInt>> forest(d + 1, std::vector<BigInt>(lines + 1));
    forest[0][0] = 1;
    for (unsigned l = 0; l <= lines; ++l) {
        trees[l] = l == 0 ? 1 : 0;
        for (unsigned k = 1; k <= d && k <= l; ++k) {
            trees[l] += binomial(d, k) * forest[k][l - k];
        }
        for (unsigned k = 1; k <= d; ++k) {
            BigInt sum = 0;
            for (unsigned first = 0; first <= l; ++first) sum += trees[first] * forest[k - 1][l - first];
            forest[k][l] = sum;
        }
    }
    return trees[lines];
}

void for_each_tree(unsigned d, unsigned max_lines, const std::function<void(const ColoredTree&)>& visit,
                   const Limits& limits) {
    check_budget(d, max_lines, limits);
    const auto by_lines = build_by_lines(d, max_lines);
    for (const auto& bucket : by_lines) {
        for (const auto& t : bucket) visit(t);
    }
}

std::vector<ColoredTree> enumerate_by_lines(unsigned d, unsigned max_lines, const Limits& limits) {
    std::vector<ColoredTree> out;
    for_each_tree(d, max_lines, [&](const ColoredTree& t) { out.push_back(t); }, limits);
    return out;
}

std::map<ColorProfile, BigInt> count_by_profile_bruteforce(unsigned d, unsigned max_total,
                                                           const Limits& limits) {
    std::map<ColorProfile, BigInt> tally;
    for (const auto& p : profiles_up_to(d, max_total)) tally.emplace(p, 0);
    for_each_tree(d, max_total, [&](const ColoredTree& t) { ++tally.at(t.profile(d)); }, limits);
    return tally;
}

}  // namespace colortree

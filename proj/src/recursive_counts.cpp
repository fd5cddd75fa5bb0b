#include "colortree/recursive_counts.hpp"

#include <climits>

#include "colortree/errors.hpp"

namespace colortree {

namespace {

const BigInt kZero = 0;
const BigInt kOne = 1;

unsigned key_total(const std::vector<unsigned>& p) {
    unsigned t = 0;
    for (unsigned v : p) t += v;
    return t;
}

// Advances q through all vectors with 0 <= q <= bound componentwise, in
// lexicographic order (last component fastest). Returns false after the last one.
bool next_below(std::vector<unsigned>& q, const std::vector<unsigned>& bound) {
    for (std::size_t i = q.size(); i-- > 0;) {
        if (q[i] < bound[i]) {
            ++q[i];
            return true;
        }
        q[i] = 0;
    }
    return false;
}

std::vector<unsigned> minus(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// p - chi_S, or false if some color of S has no line left in p.
bool remove_color_set(const std::vector<unsigned>& p, unsigned mask, std::vector<unsigned>& out) {
    out = p;
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (mask & (1u << c)) {
            if (out[c] == 0) return false;
            --out[c];
        }
    }
    return true;
}

}  // namespace

ProfileCountTable::ProfileCountTable(unsigned d, const Limits& limits)
    : d_(d), cap_(limits.profile_total(d)), forests_(d + 1) {
    if (d < 2 || d > limits.max_colors || d > kHardMaxColors) {
        throw DomainError("unsupported number of colors " + std::to_string(d));
    }
}

void ProfileCountTable::check_cap(const ColorProfile& profile) const {
    if (profile.d() != d_) {
        throw DomainError("profile " + profile.to_string() + " has " + std::to_string(profile.d()) +
                          " colors, table expects " + std::to_string(d_));
    }
    if (profile.total() > cap_) {
        throw BudgetExceeded("profile total " + std::to_string(profile.total()) +
                             " exceeds the cap of " + std::to_string(cap_));
    }
}

const BigInt& ProfileCountTable::count(const ColorProfile& profile) {
    check_cap(profile);
    return count_key(Key(profile.counts().begin(), profile.counts().end()));
}

const BigInt& ProfileCountTable::count_key(const Key& p) {
    if (auto it = counts_.find(p); it != counts_.end()) return it->second;
    BigInt n = key_total(p) == 0 ? 1 : 0;
    Key rest;
    for (unsigned mask = 1; mask < (1u << d_); ++mask) {
        if (!remove_color_set(p, mask, rest)) continue;
        n += forest_count(static_cast<unsigned>(__builtin_popcount(mask)), rest);
    }
    return counts_.emplace(p, std::move(n)).first->second;
}

const BigInt& ProfileCountTable::forest_count(unsigned k, const Key& r) {
    if (k == 0) return key_total(r) == 0 ? kOne : kZero;
    if (k == 1) return count_key(r);
    auto& memo = forests_[k];
    if (auto it = memo.find(r); it != memo.end()) return it->second;
    BigInt sum = 0;
    Key q(r.size(), 0);
    do {
        sum += count_key(q) * forest_count(k - 1, minus(r, q));
    } while (next_below(q, r));
    return memo.emplace(r, std::move(sum)).first->second;
}

ColoredTree ProfileCountTable::unrank(const ColorProfile& profile, const BigInt& index) {
    const BigInt& n = count(profile);
    if (index < 0 || index >= n) {
        throw IndexOutOfRange("index " + index.get_str() + " outside [0, " + n.get_str() +
                              ") for profile " + profile.to_string());
    }
    return unrank_key(Key(profile.counts().begin(), profile.counts().end()), index);
}

ColoredTree ProfileCountTable::unrank_key(const Key& p, BigInt index) {
    if (key_total(p) == 0) return ColoredTree();

    Key rest;
    for (unsigned mask = 1; mask < (1u << d_); ++mask) {
        if (!remove_color_set(p, mask, rest)) continue;
        std::vector<unsigned> colors;
        for (unsigned c = 0; c < d_; ++c) {
            if (mask & (1u << c)) colors.push_back(c + 1);
        }
        const auto k = static_cast<unsigned>(colors.size());
        const BigInt& block = forest_count(k, rest);
        if (index >= block) {
            index -= block;
            continue;
        }

        // Fix the split one color at a time; each candidate q for position j
        // owns prefix * N(q) * forest(k - j - 1, remaining - q) indices.
        std::vector<Key> split;
        std::vector<BigInt> sizes;
        BigInt prefix = 1;
        Key remaining = rest;
        for (unsigned j = 0; j < k; ++j) {
            Key q(d_, 0);
            while (true) {
                const BigInt& nq = count_key(q);
                BigInt sub = prefix * nq * forest_count(k - j - 1, minus(remaining, q));
                if (index < sub) {
                    split.push_back(q);
                    sizes.push_back(nq);
                    prefix *= nq;
                    remaining = minus(remaining, q);
                    break;
                }
                index -= sub;
                if (!next_below(q, remaining)) {
                    throw Error("unrank: split search ran past the block (internal error)");
                }
            }
        }

        // Mixed radix, first color most significant.
        std::vector<BigInt> digits(k);
        for (unsigned j = k; j-- > 0;) {
            digits[j] = index % sizes[j];
            index /= sizes[j];
        }
        std::vector<ColoredTree::Edge> edges;
        edges.reserve(k);
        for (unsigned j = 0; j < k; ++j) edges.push_back({colors[j], unrank_key(split[j], digits[j])});
        return ColoredTree(std::move(edges));
    }
    throw Error("unrank: index ran past all color sets (internal error)");
}

BigInt recursive_count(const ColorProfile& profile, const Limits& limits) {
    ProfileCountTable table(profile.d(), limits);
    return table.count(profile);
}

static_assert(sizeof(unsigned long) * CHAR_BIT == 64, "uniform_below assumes 64-bit unsigned long");

BigInt uniform_below(const BigInt& bound, std::mt19937_64& engine) {
    if (bound <= 0) throw DomainError("uniform_below requires a positive bound");
    if (bound == 1) return 0;
    const BigInt top_value = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top_value.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    while (true) {
        BigInt value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = engine();
            if (w == 0) word &= top_mask;
            value <<= 64;
            value += static_cast<unsigned long>(word);
        }
        if (value < bound) return value;
    }
}

std::vector<ColoredTree> sample_uniform(const SampleRequest& request, ProfileCountTable& table) {
    if (request.count < 1) throw DomainError("sample count must be at least 1");
    const BigInt n = table.count(request.profile);
    std::mt19937_64 engine(request.seed);
    std::vector<ColoredTree> out;
    out.reserve(request.count);
    for (std::uint64_t i = 0; i < request.count; ++i) {
        out.push_back(table.unrank(request.profile, uniform_below(n, engine)));
    }
    return out;
}

std::vector<ColoredTree> sample_uniform(const SampleRequest& request, const Limits& limits) {
    ProfileCountTable table(request.profile.d(), limits);
    return sample_uniform(request, table);
}

}  // namespace colortree

#ifndef COLORTREE_TREE_HPP
#define COLORTREE_TREE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "colortree/combinatorics.hpp"
#include "colortree/limits.hpp"

namespace colortree {

/// Rooted tree whose edges carry colors. Each vertex owns its child edges,
/// kept sorted by ascending color. Trees are immutable values.
///
/// A ColoredTree may hold an invalid coloring (duplicate colors at a vertex,
/// colors out of range); `validate` reports that, `decode` never produces one.
class ColoredTree {
  public:
    struct Edge;

    ColoredTree() = default;  // single vertex
    explicit ColoredTree(std::vector<Edge> children);

    const std::vector<Edge>& children() const noexcept { return children_; }
    bool is_leaf() const noexcept { return children_.empty(); }

    std::size_t line_count() const;
    std::size_t vertex_count() const { return line_count() + 1; }

    // Lines per color. ColorError if some color lies outside 1..d.
    ColorProfile profile(unsigned d) const;

    friend bool operator==(const ColoredTree&, const ColoredTree&);

  private:
    std::vector<Edge> children_;
};

struct ColoredTree::Edge {
    unsigned color;
    ColoredTree child;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// True iff every vertex has pairwise distinct child colors, all in 1..d.
bool validate(const ColoredTree& tree, unsigned d);

/// Canonical text form:
///     tree  := "(" [entry ("," entry)*] ")"
///     entry := color ":" tree
/// with colors written in decimal without leading zeros, strictly increasing
/// within a vertex. The single vertex is "()".
std::string encode(const ColoredTree& tree);

// Inverse of encode. ParseError (with byte offset) on grammar violations,
// ColorError on colors outside 1..d or repeated, ColorOrderError on unsorted children.
ColoredTree decode(std::string_view text, unsigned d);

/// Every valid tree with at most `max_lines` lines, each exactly once. Trees
/// come grouped by line count, ascending; within one line count they are
/// ordered lexicographically by canonical encoding.
///
/// Throws BudgetExceeded before doing any work if the output would exceed
/// `limits.max_trees`.
std::vector<ColoredTree> enumerate_by_lines(unsigned d, unsigned max_lines,
                                            const Limits& limits = {});

// Streaming form of enumerate_by_lines; same order and budget rule.
void for_each_tree(unsigned d, unsigned max_lines, const std::function<void(const ColoredTree&)>& visit,
                   const Limits& limits = {});

// Number of valid trees with exactly `lines` lines, by direct recursion on the
// root's child set. Used for budget checks; independent of the closed forms.
BigInt tree_count_by_lines(unsigned d, unsigned lines);

/// Tally of the enumeration by color profile. Every profile with total
/// <= max_total is present as a key.
std::map<ColorProfile, BigInt> count_by_profile_bruteforce(unsigned d, unsigned max_total,
                                                           const Limits& limits = {});

}  // namespace colortree

#endif  // COLORTREE_TREE_HPP

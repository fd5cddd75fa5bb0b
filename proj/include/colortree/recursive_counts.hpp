#ifndef COLORTREE_RECURSIVE_COUNTS_HPP
#define COLORTREE_RECURSIVE_COUNTS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "colortree/combinatorics.hpp"
#include "colortree/limits.hpp"
#include "colortree/tree.hpp"

namespace colortree {

/// Memoized count of trees per color profile, from the root decomposition
///
///     N(p) = [p = 0] + sum over nonempty color sets S with chi_S <= p of
///            sum over ordered splits (q_s)_{s in S} of p - chi_S of prod N(q_s)
///
/// The inner double sum is kept as a memoized k-fold convolution
/// `forest_count(k, r)`, the number of ordered k-tuples of trees whose
/// profiles add up to r.
///
/// Unranking order for a profile p:
///   1. the single vertex (only when p = 0);
///   2. child color sets S by ascending bitmask (bit i-1 = color i);
///   3. within S, splits (q_{s_1}, ..., q_{s_k}) lexicographically, comparing
///      q_{s_1} first and each q as a count vector;
///   4. within a split, subtree indices in mixed radix, the lowest color's
///      subtree most significant.
///
/// Not synchronized: a table fills its memo lazily, so confine each instance
/// to one thread.
class ProfileCountTable {
  public:
    explicit ProfileCountTable(unsigned d, const Limits& limits = {});

    unsigned d() const noexcept { return d_; }

    /// N(profile). BudgetExceeded if the profile total exceeds the cap.
    const BigInt& count(const ColorProfile& profile);

    /// The index-th tree with this profile. IndexOutOfRange if index >= N(profile).
    ColoredTree unrank(const ColorProfile& profile, const BigInt& index);

    std::size_t memo_size() const noexcept { return counts_.size(); }

  private:
    using Key = std::vector<unsigned>;

    const BigInt& count_key(const Key& p);
    const BigInt& forest_count(unsigned k, const Key& r);
    ColoredTree unrank_key(const Key& p, BigInt index);
    void check_cap(const ColorProfile& profile) const;

    unsigned d_;
    unsigned cap_;
    std::map<Key, BigInt> counts_;
    std::vector<std::map<Key, BigInt>> forests_;  // indexed by k
};

/// Convenience wrapper: N(profile) with a fresh table.
BigInt recursive_count(const ColorProfile& profile, const Limits& limits = {});

struct SampleRequest {
    ColorProfile profile;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
};

/// Uniform integer in [0, bound) by rejection: draws ceil(bits / 64) words from
/// `engine`, most significant first, masks the top word to the bit length of
/// bound - 1, and retries while the result is >= bound. bound == 1 draws nothing.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& engine);

/// `request.count` independent uniform trees with the requested profile.
///
/// The generator is std::mt19937_64 seeded with `request.seed`, whose output
/// sequence is fixed by the C++ standard; each sample draws an index with
/// uniform_below and unranks it, so output depends only on the request.
std::vector<ColoredTree> sample_uniform(const SampleRequest& request, ProfileCountTable& table);
std::vector<ColoredTree> sample_uniform(const SampleRequest& request, const Limits& limits = {});

}  // namespace colortree

#endif  // COLORTREE_RECURSIVE_COUNTS_HPP

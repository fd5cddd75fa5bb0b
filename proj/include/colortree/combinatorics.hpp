#ifndef COLORTREE_COMBINATORICS_HPP
#define COLORTREE_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace colortree {

using BigInt = mpz_class;

// Largest number of colors any profile may carry. Subsets of colors are
// handled as bitmasks and series exponents are packed 8 bits per color.
inline constexpr unsigned kHardMaxColors = 8;

/// Per-color line counts (p_1, ..., p_D) of a line-colored tree.
///
/// The total P is always recomputed from the counts, so it cannot drift.
class ColorProfile {
  public:
    /// Throws DomainError unless 2 <= counts.size() <= kHardMaxColors.
    explicit ColorProfile(std::vector<unsigned> counts);

    /// The all-zero profile of the single-vertex tree.
    static ColorProfile zero(unsigned d);

    unsigned d() const noexcept { return static_cast<unsigned>(counts_.size()); }
    std::span<const unsigned> counts() const noexcept { return counts_; }
    unsigned operator[](unsigned color_index) const { return counts_.at(color_index); }
    unsigned total() const noexcept;

    // "(p1,p2,...)"
    std::string to_string() const;

    friend bool operator==(const ColorProfile&, const ColorProfile&) = default;
    friend auto operator<=>(const ColorProfile&, const ColorProfile&) = default;

  private:
    std::vector<unsigned> counts_;
};

// Parses "1,2,0" into a profile; DomainError on anything else.
ColorProfile parse_profile(const std::string& text);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::uint64_t n, std::int64_t k);

/// C^n_p = n / (P + n) * prod_j C(P + n, p_j), the number of ordered n-tuples
/// of line-colored trees whose line counts add up to `profile`.
///
/// The product is formed first and divided last; a nonzero remainder throws
/// IntegralityViolation. DomainError if n == 0.
BigInt closed_form_count(const ColorProfile& profile, unsigned n = 1);

/// Number of D-ary trees on `vertices` vertices: C(DP + 1, P) / (DP + 1).
BigInt fuss_catalan_total(unsigned d, unsigned vertices);

/// N(n, k) = C(n, k) C(n, k - 1) / n. DomainError unless 1 <= k <= n.
BigInt narayana(unsigned n, unsigned k);

// Calls `visit` on every profile of length d with the given total, in
// lexicographic order of the count vector.
void for_each_profile_with_total(unsigned d, unsigned total,
                                 const std::function<void(const ColorProfile&)>& visit);

// Every profile of length d with total <= max_total, ordered by total then lexicographically.
std::vector<ColorProfile> profiles_up_to(unsigned d, unsigned max_total);

}  // namespace colortree

#endif  // COLORTREE_COMBINATORICS_HPP

#ifndef COLORTREE_SERIES_HPP
#define COLORTREE_SERIES_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "colortree/combinatorics.hpp"
#include "colortree/limits.hpp"
#include "colortree/report.hpp"

namespace colortree {

/// Exponent vector (p_1, ..., p_d) of a monomial g_1^p_1 ... g_d^p_d, packed
/// into one 64-bit word: p_i occupies bits [8(i-1), 8i). Series orders are
/// capped at 255, so no exponent of a truncated product can overflow its byte
/// and adding two packed words adds the exponent vectors.
///
/// The packing only orders the internal map; the JSON dump writes plain arrays.
class Monomial {
  public:
    static constexpr unsigned kMaxExponent = 255;

    constexpr Monomial() = default;
    explicit Monomial(std::span<const unsigned> exponents);

    unsigned exponent(unsigned var) const noexcept {
        return static_cast<unsigned>((packed_ >> (8 * var)) & 0xffu);
    }
    unsigned total() const noexcept;
    std::vector<unsigned> exponents(unsigned d) const;
    std::uint64_t packed() const noexcept { return packed_; }

    // Caller guarantees the sum stays within kMaxExponent per variable.
    friend Monomial operator+(Monomial a, Monomial b) noexcept {
        Monomial m;
        m.packed_ = a.packed_ + b.packed_;
        return m;
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

  private:
    std::uint64_t packed_ = 0;
};

/// Truncated power series in g_1..g_d with exact integer coefficients. Only
/// monomials of total degree <= order are kept; zero coefficients are never stored.
class MultiSeries {
  public:
    MultiSeries(unsigned d, unsigned order);

    static MultiSeries constant(unsigned d, unsigned order, const BigInt& value);
    static MultiSeries variable(unsigned d, unsigned order, unsigned var);

    unsigned d() const noexcept { return d_; }
    unsigned order() const noexcept { return order_; }
    const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coefficient(std::span<const unsigned> exponents) const;
    BigInt coefficient(const ColorProfile& p) const { return coefficient(p.counts()); }

    // DomainError if the exponent vector has the wrong length or exceeds the order.
    void set(std::span<const unsigned> exponents, const BigInt& value);

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator-=(const MultiSeries& other);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

    MultiSeries pow(unsigned n) const;

    friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  private:
    void check_compatible(const MultiSeries& other) const;

    unsigned d_;
    unsigned order_;
    std::map<Monomial, BigInt> terms_;
};

/// e_0, ..., e_d: e_k is the sum of all squarefree degree-k monomials. When
/// k > order, e_k truncates to zero.
std::vector<MultiSeries> elementary_symmetric_series(unsigned d, unsigned order);

// One step of F <- sum_k e_k F^k (Horner form), truncated.
MultiSeries tree_equation_step(const MultiSeries& current, std::span<const MultiSeries> esym);

/// The series F with constant term 1 solving F = sum_{k=0}^{d} e_k F^k,
/// by fixed-point iteration from F = 1. Each step fixes one more total degree,
/// so the iterates stop changing after at most order + 1 steps; NonConvergence
/// if that fails within order + 2. BudgetExceeded above the series order cap.
MultiSeries solve_tree_equation(unsigned d, unsigned order, const Limits& limits = {});

/// F_n truncated at `order`, coefficient by coefficient from closed_form_count.
MultiSeries closed_form_series(unsigned d, unsigned n, unsigned order);

/// F_{n+1} == F_n + sum_{k=1}^{d} e_k F_{n+k} as truncated series, n = 0..n_max,
/// with F_0 = 1 and every other F_m from closed_form_series.
VerificationReport verify_linear_recursion(unsigned d, unsigned n_max, unsigned order,
                                           const Limits& limits = {});

/// closed_form_series(n) == F^n for n = 1..n_max, F from solve_tree_equation.
VerificationReport verify_geometric(unsigned d, unsigned n_max, unsigned order,
                                    const Limits& limits = {});

/// sum_{k <= p} C^n_k C^m_{p-k} == C^{n+m}_p for every profile p with total <= order,
/// evaluated directly on closed_form_count without series multiplication.
VerificationReport verify_convolution(unsigned d, unsigned n, unsigned m, unsigned order,
                                      const Limits& limits = {});

/// Sum of coefficient * prod g_i^p_i in double-precision complex arithmetic.
std::complex<double> evaluate(const MultiSeries& series, std::span<const std::complex<double>> point);

/// (D - 1)^(D - 1) / D^D, below which every F_n converges absolutely.
double convergence_radius(unsigned d);

}  // namespace colortree

#endif  // COLORTREE_SERIES_HPP

#ifndef COLORTREE_ROOTS_HPP
#define COLORTREE_ROOTS_HPP

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace colortree {

using Complex = std::complex<double>;

inline constexpr double kDefaultResidualTol = 1e-10;

// Roots closer than this (relative to max(1, |root|)) after polishing are one
// root with multiplicity.
inline constexpr double kClusterRadius = 1e-7;

/// Q(X) = -X + sum_{k=0}^{d} e_k(g) X^k at a fixed point g.
///
/// coefficients[k] multiplies X^k. `degree` is the index of the highest
/// coefficient that is exactly nonzero; nothing is dropped by tolerance.
struct CharPolynomial {
    unsigned d = 0;
    std::vector<Complex> point;
    std::vector<Complex> coefficients;
    unsigned degree = 0;

    Complex operator()(Complex x) const;
    Complex derivative(Complex x, unsigned times = 1) const;
};

CharPolynomial build_char_polynomial(unsigned d, std::span<const Complex> point);

struct Root {
    Complex value;
    unsigned multiplicity = 1;
};

struct RootReport {
    std::vector<Root> roots;
    double radius = 0.0;
    double epsilon_used = 0.0;
    bool admissible = false;
    unsigned inside_count = 0;               // with multiplicity, |root| < radius
    std::optional<Complex> principal_root;   // set only for admissible points with one inside root
    double residual_max = 0.0;               // max |Q(r)| over reported roots
    double relative_residual_max = 0.0;      // max |Q(r)| / sum_k |a_k| |r|^k

    // At admissible points exactly one root lies inside the radius.
    bool isolation_holds() const noexcept { return !admissible || inside_count == 1; }
};

/// All roots of the deflated polynomial: companion-matrix eigenvalues, Newton
/// polishing, then clustering. Each root must satisfy
/// |Q(r)| <= residual_tol * sum_k |a_k| |r|^k, otherwise RootFindingFailure.
/// DomainError when the effective degree is 0.
RootReport roots_all(const CharPolynomial& q, double residual_tol = kDefaultResidualTol);

/// (R^(1/d) - 1) / R.
double rouche_epsilon(unsigned d, double radius);

/// roots_all plus the isolation data for the circle |X| = radius: g is
/// admissible when max |g_i| < rouche_epsilon(d, radius).
RootReport rouche_isolation_check(const CharPolynomial& q, double radius,
                                  double residual_tol = kDefaultResidualTol);

/// Both roots of 1 + (g1 + g2 - 1) X + g1 g2 X^2, principal root first.
///
/// Evaluated as x0 = 2 / (b + s), x1 = (b + s) / (2 g1 g2) with b = 1 - g1 - g2
/// and s the square root of the discriminant aligned with b; algebraically the
/// same as (b -+ s) / (2 g1 g2) but without cancellation for small g.
/// DegenerateError when g1 g2 == 0.
std::pair<Complex, Complex> d2_closed_form(Complex g1, Complex g2);

}  // namespace colortree

#endif  // COLORTREE_ROOTS_HPP

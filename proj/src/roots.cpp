#include "colortree/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "colortree/errors.hpp"

namespace colortree {

Complex CharPolynomial::operator()(Complex x) const { return derivative(x, 0); }

Complex CharPolynomial::derivative(Complex x, unsigned times) const {
    // Horner on the `times`-th derivative's coefficients.
    Complex acc = 0.0;
    for (unsigned k = degree + 1; k-- > times;) {
        double falling = 1.0;
        for (unsigned j = 0; j < times; ++j) falling *= static_cast<double>(k - j);
        acc = acc * x + coefficients[k] * falling;
    }
    return acc;
}

CharPolynomial build_char_polynomial(unsigned d, std::span<const Complex> point) {
    if (d < 2) throw DomainError("characteristic polynomial requires d >= 2");
    if (point.size() != d) throw DomainError("point must have exactly d coordinates");
    CharPolynomial q;
    q.d = d;
    q.point.assign(point.begin(), point.end());
    q.coefficients.assign(d + 1, Complex(0.0));
    q.coefficients[0] = 1.0;
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned k = i + 1; k >= 1; --k) q.coefficients[k] += q.coefficients[k - 1] * point[i];
    }
    q.coefficients[1] -= 1.0;
    q.degree = 0;
    for (unsigned k = d; k > 0; --k) {
        if (q.coefficients[k] != Complex(0.0)) {
            q.degree = k;
            break;
        }
    }
    return q;
}

namespace {

double residual_scale(const CharPolynomial& q, Complex x) {
    double scale = 0.0;
    double power = 1.0;
    const double r = std::abs(x);
    for (unsigned k = 0; k <= q.degree; ++k) {
        scale += std::abs(q.coefficients[k]) * power;
        power *= r;
    }
    return scale;
}

std::vector<Complex> companion_eigenvalues(const CharPolynomial& q) {
    const unsigned n = q.degree;
    if (n == 1) return {-q.coefficients[0] / q.coefficients[1]};
    const Complex lead = q.coefficients[n];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (unsigned i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (unsigned i = 0; i < n; ++i) companion(i, n - 1) = -q.coefficients[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw RootFindingFailure("companion eigenvalue solver did not converge",
                                 std::numeric_limits<double>::infinity());
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

// Newton on q.derivative(., times), accepting only steps that shrink |value|
// and stay within max_move of the start.
Complex newton_polish(const CharPolynomial& q, Complex x, unsigned times, double max_move) {
    const Complex start = x;
    Complex fx = q.derivative(x, times);
    for (int it = 0; it < 60 && fx != Complex(0.0); ++it) {
        const Complex dfx = q.derivative(x, times + 1);
        if (dfx == Complex(0.0)) break;
        const Complex step = fx / dfx;
        const Complex next = x - step;
        if (std::abs(next - start) > max_move) break;
        const Complex fnext = q.derivative(next, times);
        if (!(std::abs(fnext) < std::abs(fx))) break;
        x = next;
        fx = fnext;
        if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
    }
    return x;
}

}  // namespace

RootReport roots_all(const CharPolynomial& q, double residual_tol) {
    if (q.degree == 0) throw DomainError("characteristic polynomial is a nonzero constant; no roots");
    std::vector<Complex> raw = companion_eigenvalues(q);

    std::vector<Complex> polished(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (j != i) nearest = std::min(nearest, std::abs(raw[i] - raw[j]));
        }
        const double max_move =
            std::isinf(nearest) ? std::numeric_limits<double>::infinity() : 0.5 * nearest;
        polished[i] = newton_polish(q, raw[i], 0, max_move);
    }

    // Greedy clustering in order of ascending modulus.
    std::sort(polished.begin(), polished.end(),
              [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    std::vector<std::vector<Complex>> clusters;
    for (Complex r : polished) {
        bool placed = false;
        for (auto& c : clusters) {
            if (std::abs(c.front() - r) <= kClusterRadius * std::max(1.0, std::abs(r))) {
                c.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({r});
    }

    RootReport report;
    for (const auto& c : clusters) {
        Complex centroid = 0.0;
        for (Complex r : c) centroid += r;
        centroid /= static_cast<double>(c.size());
        const auto mult = static_cast<unsigned>(c.size());
        if (mult > 1) {
            // a root of multiplicity m is a simple root of the (m-1)-th derivative
            const Complex refined =
                newton_polish(q, centroid, mult - 1, kClusterRadius * std::max(1.0, std::abs(centroid)));
            if (std::abs(q(refined)) <= std::abs(q(centroid))) centroid = refined;
        }
        report.roots.push_back({centroid, mult});
    }

    for (const auto& r : report.roots) {
        const double res = std::abs(q(r.value));
        report.residual_max = std::max(report.residual_max, res);
        report.relative_residual_max = std::max(report.relative_residual_max, res / residual_scale(q, r.value));
    }
    if (report.relative_residual_max > residual_tol) {
        throw RootFindingFailure("root residual " + std::to_string(report.relative_residual_max) +
                                     " exceeds tolerance " + std::to_string(residual_tol),
                                 report.relative_residual_max);
    }
    return report;
}

double rouche_epsilon(unsigned d, double radius) {
    if (!(radius > 1.0)) throw DomainError("isolation radius must exceed 1");
    return (std::pow(radius, 1.0 / d) - 1.0) / radius;
}

RootReport rouche_isolation_check(const CharPolynomial& q, double radius, double residual_tol) {
    const double eps = rouche_epsilon(q.d, radius);
    RootReport report = roots_all(q, residual_tol);
    report.radius = radius;
    report.epsilon_used = eps;
    double gmax = 0.0;
    for (Complex g : q.point) gmax = std::max(gmax, std::abs(g));
    report.admissible = gmax < eps;
    const Root* inside = nullptr;
    for (const auto& r : report.roots) {
        if (std::abs(r.value) < radius) {
            report.inside_count += r.multiplicity;
            inside = &r;
        }
    }
    if (report.admissible && report.inside_count == 1) report.principal_root = inside->value;
    return report;
}

std::pair<Complex, Complex> d2_closed_form(Complex g1, Complex g2) {
    const Complex prod = g1 * g2;
    if (prod == Complex(0.0)) throw DegenerateError("d2_closed_form needs g1 * g2 != 0");
    const Complex b = 1.0 - g1 - g2;
    Complex s = std::sqrt(b * b - 4.0 * prod);
    if (std::real(std::conj(b) * s) < 0.0) s = -s;
    const Complex big = b + s;
    return {2.0 / big, big / (2.0 * prod)};
}

}  // namespace colortree

#include "colortree/series.hpp"

#include <bit>
#include <cmath>
#include <functional>

#include "colortree/errors.hpp"

namespace colortree {

Monomial::Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > kHardMaxColors) throw DomainError("too many variables for a monomial");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > kMaxExponent) throw DomainError("exponent exceeds 255");
        packed_ |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
    }
}

unsigned Monomial::total() const noexcept {
    // byte sum: fold pairs, then quads, then halves
    std::uint64_t x = packed_;
    x = (x & 0x00ff00ff00ff00ffull) + ((x >> 8) & 0x00ff00ff00ff00ffull);
    x = (x & 0x0000ffff0000ffffull) + ((x >> 16) & 0x0000ffff0000ffffull);
    x = (x & 0x00000000ffffffffull) + (x >> 32);
    return static_cast<unsigned>(x);
}

std::vector<unsigned> Monomial::exponents(unsigned d) const {
    std::vector<unsigned> out(d);
    for (unsigned i = 0; i < d; ++i) out[i] = exponent(i);
    return out;
}

MultiSeries::MultiSeries(unsigned d, unsigned order) : d_(d), order_(order) {
    if (d < 1 || d > kHardMaxColors) throw DomainError("unsupported number of variables");
    if (order > Monomial::kMaxExponent) throw DomainError("series order exceeds 255");
}

MultiSeries MultiSeries::constant(unsigned d, unsigned order, const BigInt& value) {
    MultiSeries s(d, order);
    if (value != 0) s.terms_.emplace(Monomial(), value);
    return s;
}

MultiSeries MultiSeries::variable(unsigned d, unsigned order, unsigned var) {
    if (var >= d) throw DomainError("variable index out of range");
    MultiSeries s(d, order);
    if (order >= 1) {
        std::vector<unsigned> e(d, 0);
        e[var] = 1;
        s.terms_.emplace(Monomial(e), 1);
    }
    return s;
}

BigInt MultiSeries::coefficient(std::span<const unsigned> exponents) const {
    if (exponents.size() != d_) throw DomainError("exponent vector has the wrong length");
    auto it = terms_.find(Monomial(exponents));
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiSeries::set(std::span<const unsigned> exponents, const BigInt& value) {
    if (exponents.size() != d_) throw DomainError("exponent vector has the wrong length");
    const Monomial m(exponents);
    if (m.total() > order_) throw DomainError("monomial degree exceeds the series order");
    if (value == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = value;
    }
}

void MultiSeries::check_compatible(const MultiSeries& other) const {
    if (d_ != other.d_ || order_ != other.order_) {
        throw DomainError("series arithmetic needs matching variable count and order");
    }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    // bucket the right operand by total degree so each left term stops early
    std::vector<std::vector<std::pair<Monomial, const BigInt*>>> by_degree(a.order_ + 1);
    for (const auto& [m, c] : b.terms_) by_degree[m.total()].emplace_back(m, &c);

    MultiSeries out(a.d_, a.order_);
    for (const auto& [ma, ca] : a.terms_) {
        const unsigned ta = ma.total();
        for (unsigned tb = 0; ta + tb <= a.order_; ++tb) {
            for (const auto& [mb, cb] : by_degree[tb]) {
                BigInt& slot = out.terms_[ma + mb];
                mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb->get_mpz_t());
            }
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

MultiSeries MultiSeries::pow(unsigned n) const {
    MultiSeries result = constant(d_, order_, 1);
    MultiSeries base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

std::vector<MultiSeries> elementary_symmetric_series(unsigned d, unsigned order) {
    std::vector<MultiSeries> e(d + 1, MultiSeries(d, order));
    e[0] = MultiSeries::constant(d, order, 1);
    std::vector<unsigned> exps(d);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        const auto k = static_cast<unsigned>(std::popcount(mask));
        if (k > order) continue;
        for (unsigned i = 0; i < d; ++i) exps[i] = (mask >> i) & 1u;
        e[k].set(exps, 1);
    }
    return e;
}

MultiSeries tree_equation_step(const MultiSeries& current, std::span<const MultiSeries> esym) {
    MultiSeries acc = esym.back();
    for (std::size_t k = esym.size() - 1; k-- > 0;) {
        acc = acc * current;
        acc += esym[k];
    }
    return acc;
}

namespace {

void check_order_cap(unsigned d, unsigned order, const Limits& limits) {
    if (order > limits.series_order(d)) {
        throw BudgetExceeded("series order " + std::to_string(order) + " exceeds the cap of " +
                             std::to_string(limits.series_order(d)) + " for d=" + std::to_string(d));
    }
}

}  // namespace

MultiSeries solve_tree_equation(unsigned d, unsigned order, const Limits& limits) {
    if (d < 2) throw DomainError("solve_tree_equation requires d >= 2");
    check_order_cap(d, order, limits);
    const auto esym = elementary_symmetric_series(d, order);
    MultiSeries current = MultiSeries::constant(d, order, 1);
    for (unsigned step = 1; step <= order + 2; ++step) {
        MultiSeries next = tree_equation_step(current, esym);
        if (next == current) return next;
        current = std::move(next);
    }
    throw NonConvergence("fixed-point iteration did not stabilise within " +
                         std::to_string(order + 2) + " steps");
}

MultiSeries closed_form_series(unsigned d, unsigned n, unsigned order) {
    if (n == 0) throw DomainError("closed_form_series requires n >= 1");
    MultiSeries s(d, order);
    for (const auto& p : profiles_up_to(d, order)) s.set(p.counts(), closed_form_count(p, n));
    return s;
}

namespace {

// F_m for m >= 0, with F_0 = 1.
MultiSeries power_sequence_member(unsigned d, unsigned m, unsigned order) {
    return m == 0 ? MultiSeries::constant(d, order, 1) : closed_form_series(d, m, order);
}

void compare_series(const MultiSeries& expected, const MultiSeries& actual, unsigned n, unsigned m,
                    VerificationReport& report) {
    for (const auto& p : profiles_up_to(expected.d(), expected.order())) {
        ++report.coefficients_checked;
        BigInt want = expected.coefficient(p);
        BigInt got = actual.coefficient(p);
        if (want != got) {
            std::vector<unsigned> exps(p.counts().begin(), p.counts().end());
            report.failures.push_back({n, m, std::move(exps), std::move(want), std::move(got)});
        }
    }
}

}  // namespace

VerificationReport verify_linear_recursion(unsigned d, unsigned n_max, unsigned order,
                                           const Limits& limits) {
    check_order_cap(d, order, limits);
    VerificationReport report("recursion", d, order);
    const auto esym = elementary_symmetric_series(d, order);
    std::vector<MultiSeries> members;
    members.reserve(n_max + d + 1);
    for (unsigned m = 0; m <= n_max + d; ++m) members.push_back(power_sequence_member(d, m, order));
    for (unsigned n = 0; n <= n_max; ++n) {
        MultiSeries rhs = members[n];
        for (unsigned k = 1; k <= d; ++k) rhs += esym[k] * members[n + k];
        compare_series(members[n + 1], rhs, n, 0, report);
    }
    return report;
}

VerificationReport verify_geometric(unsigned d, unsigned n_max, unsigned order, const Limits& limits) {
    VerificationReport report("geometric", d, order);
    const MultiSeries f = solve_tree_equation(d, order, limits);
    MultiSeries power = MultiSeries::constant(d, order, 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        power = power * f;
        compare_series(closed_form_series(d, n, order), power, n, 0, report);
    }
    return report;
}

VerificationReport verify_convolution(unsigned d, unsigned n, unsigned m, unsigned order,
                                      const Limits& limits) {
    if (n == 0 || m == 0) throw DomainError("verify_convolution requires n, m >= 1");
    check_order_cap(d, order, limits);
    VerificationReport report("convolution", d, order);
    for (const auto& p : profiles_up_to(d, order)) {
        ++report.coefficients_checked;
        const std::vector<unsigned> bound(p.counts().begin(), p.counts().end());
        std::vector<unsigned> k(d, 0);
        std::vector<unsigned> rest(d);
        BigInt sum = 0;
        while (true) {
            for (unsigned i = 0; i < d; ++i) rest[i] = bound[i] - k[i];
            sum += closed_form_count(ColorProfile(k), n) * closed_form_count(ColorProfile(rest), m);
            unsigned i = d;
            while (i > 0 && k[i - 1] == bound[i - 1]) k[--i] = 0;
            if (i == 0) break;
            ++k[i - 1];
        }
        BigInt want = closed_form_count(p, n + m);
        if (sum != want) report.failures.push_back({n, m, bound, std::move(want), std::move(sum)});
    }
    return report;
}

std::complex<double> evaluate(const MultiSeries& series, std::span<const std::complex<double>> point) {
    if (point.size() != series.d()) throw DomainError("evaluation point has the wrong dimension");
    // powers[i][e] = point[i]^e
    std::vector<std::vector<std::complex<double>>> powers(series.d(),
                                                          std::vector<std::complex<double>>(series.order() + 1));
    for (unsigned i = 0; i < series.d(); ++i) {
        powers[i][0] = 1.0;
        for (unsigned e = 1; e <= series.order(); ++e) powers[i][e] = powers[i][e - 1] * point[i];
    }
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : series.terms()) {
        std::complex<double> term = c.get_d();
        for (unsigned i = 0; i < series.d(); ++i) term *= powers[i][m.exponent(i)];
        sum += term;
    }
    return sum;
}

double convergence_radius(unsigned d) {
    if (d < 2) throw DomainError("convergence_radius requires d >= 2");
    const double dd = d;
    return std::pow(dd - 1.0, dd - 1.0) / std::pow(dd, dd);
}

}  // namespace colortree

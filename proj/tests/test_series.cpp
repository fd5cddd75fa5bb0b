#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "colortree/combinatorics.hpp"
#include "colortree/errors.hpp"
#include "colortree/json_io.hpp"
#include "colortree/series.hpp"
#include "colortree/tree.hpp"

using namespace colortree;

namespace {

using Exps = std::vector<unsigned>;

BigInt coef(const MultiSeries& s, Exps e) { return s.coefficient(e); }

MultiSeries random_series(unsigned d, unsigned order, std::mt19937& rng) {
    std::uniform_int_distribution<int> value(-9, 9);
    std::bernoulli_distribution keep(0.6);
    MultiSeries s(d, order);
    for (const auto& p : profiles_up_to(d, order)) {
        if (keep(rng)) s.set(p.counts(), value(rng));
    }
    return s;
}

// Quadratic formula in its textbook form.
double naive_d2_small_root(double g1, double g2) {
    const double b = 1 - g1 - g2;
    return (b - std::sqrt(b * b - 4 * g1 * g2)) / (2 * g1 * g2);
}

}  // namespace

TEST(Monomial, PackingAndTotals) {
    const Monomial m(Exps{3, 0, 255, 1});
    EXPECT_EQ(m.exponent(0), 3u);
    EXPECT_EQ(m.exponent(2), 255u);
    EXPECT_EQ(m.total(), 259u);
    EXPECT_EQ(m.exponents(4), (Exps{3, 0, 255, 1}));
    EXPECT_EQ(m.packed(), 3ull | (255ull << 16) | (1ull << 24));
    EXPECT_EQ((Monomial(Exps{1, 2}) + Monomial(Exps{4, 0})).exponents(2), (Exps{5, 2}));
    EXPECT_THROW(Monomial(Exps{256}), DomainError);
}

TEST(MultiSeries, TruncationAndShape) {
    MultiSeries s(2, 3);
    EXPECT_THROW(s.set(Exps{2, 2}, 1), DomainError);
    EXPECT_THROW(s.set(Exps{1}, 1), DomainError);
    s.set(Exps{1, 2}, 5);
    s.set(Exps{1, 2}, 0);
    EXPECT_EQ(s.size(), 0u);
    const MultiSeries x = MultiSeries::variable(2, 3, 0);
    EXPECT_EQ(coef(x.pow(3), {3, 0}), 1);
    EXPECT_EQ(x.pow(4).size(), 0u);
    EXPECT_THROW(MultiSeries(2, 3) + MultiSeries(2, 4), DomainError);
    EXPECT_THROW(MultiSeries(2, 256), DomainError);
}

TEST(MultiSeries, RingLawsOnRandomSeries) {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned d = 2 + trial % 2;
        const MultiSeries a = random_series(d, 6, rng);
        const MultiSeries b = random_series(d, 6, rng);
        const MultiSeries c = random_series(d, 6, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - a).size(), 0u);
        EXPECT_EQ(a.pow(3), a * a * a);
    }
}

TEST(ElementarySymmetric, Examples) {
    const auto e2 = elementary_symmetric_series(2, 4);
    ASSERT_EQ(e2.size(), 3u);
    EXPECT_EQ(e2[0], MultiSeries::constant(2, 4, 1));
    EXPECT_EQ(e2[1], MultiSeries::variable(2, 4, 0) + MultiSeries::variable(2, 4, 1));
    EXPECT_EQ(e2[2], MultiSeries::variable(2, 4, 0) * MultiSeries::variable(2, 4, 1));

    const auto e3 = elementary_symmetric_series(3, 4);
    EXPECT_EQ(e3[2].size(), 3u);
    for (const Exps& e : {Exps{1, 1, 0}, Exps{1, 0, 1}, Exps{0, 1, 1}}) EXPECT_EQ(coef(e3[2], e), 1);

    // higher e_k vanish below their degree
    const auto low = elementary_symmetric_series(3, 1);
    EXPECT_EQ(low[2].size(), 0u);
    EXPECT_EQ(low[3].size(), 0u);
}

TEST(SolveTreeEquation, OrderTwoInTwoColors) {
    const MultiSeries f = solve_tree_equation(2, 2);
    EXPECT_EQ(f.size(), 6u);
    EXPECT_EQ(coef(f, {0, 0}), 1);
    EXPECT_EQ(coef(f, {1, 0}), 1);
    EXPECT_EQ(coef(f, {0, 1}), 1);
    EXPECT_EQ(coef(f, {2, 0}), 1);
    EXPECT_EQ(coef(f, {1, 1}), 3);
    EXPECT_EQ(coef(f, {0, 2}), 1);
}

TEST(SolveTreeEquation, ConstantAtOrderZero) {
    EXPECT_EQ(solve_tree_equation(2, 0), MultiSeries::constant(2, 0, 1));
    EXPECT_EQ(solve_tree_equation(5, 0), MultiSeries::constant(5, 0, 1));
}

TEST(SolveTreeEquation, CoefficientsCountTrees) {
    for (unsigned d = 2; d <= 3; ++d) {
        const MultiSeries f = solve_tree_equation(d, 4);
        for (const auto& [p, n] : count_by_profile_bruteforce(d, 4)) EXPECT_EQ(f.coefficient(p), n) << p.to_string();
    }
    EXPECT_EQ(coef(solve_tree_equation(3, 3), {1, 1, 1}), 16);
}

TEST(SolveTreeEquation, DegreesStabiliseOneAtATime) {
    const unsigned d = 3;
    const unsigned order = 6;
    const auto esym = elementary_symmetric_series(d, order);
    std::vector<MultiSeries> iterates{MultiSeries::constant(d, order, 1)};
    for (unsigned step = 0; step <= order + 1; ++step) iterates.push_back(tree_equation_step(iterates.back(), esym));
    const MultiSeries f = solve_tree_equation(d, order);
    EXPECT_EQ(iterates[order + 1], f);
    EXPECT_EQ(iterates[order + 2], f);
    for (unsigned t = 0; t <= order; ++t) {
        for (unsigned later = t + 1; later < iterates.size(); ++later) {
            for (const auto& p : profiles_up_to(d, t)) {
                ASSERT_EQ(iterates[later].coefficient(p), iterates[t + 1].coefficient(p))
                    << "degree " << t << " changed at iteration " << later;
            }
        }
    }
}

TEST(SolveTreeEquation, CoefficientsArePositive) {
    for (unsigned d = 2; d <= 4; ++d) {
        const unsigned order = d == 2 ? 12 : d == 3 ? 8 : 6;
        const MultiSeries f = solve_tree_equation(d, order);
        EXPECT_EQ(f.size(), profiles_up_to(d, order).size());
        for (const auto& [m, c] : f.terms()) EXPECT_GT(c, 0);
    }
}

TEST(SolveTreeEquation, OrderCap) {
    EXPECT_THROW(solve_tree_equation(2, 21), BudgetExceeded);
    EXPECT_THROW(solve_tree_equation(3, 13), BudgetExceeded);
    Limits wide;
    wide.series_order_cap = 14;
    EXPECT_NO_THROW(solve_tree_equation(3, 13, wide));
}

TEST(ClosedFormSeries, FirstMemberIsTheSolution) {
    EXPECT_EQ(closed_form_series(2, 1, 10), solve_tree_equation(2, 10));
    EXPECT_EQ(closed_form_series(3, 1, 6), solve_tree_equation(3, 6));
    EXPECT_EQ(coef(closed_form_series(2, 2, 3), {1, 0}), 2);
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(coef(closed_form_series(3, n, 2), {0, 0, 0}), 1);
    EXPECT_THROW(closed_form_series(2, 0, 3), DomainError);
}

TEST(LinearRecursion, SingleCoefficientByHand) {
    auto C = [](std::vector<unsigned> p, unsigned n) { return closed_form_count(ColorProfile(std::move(p)), n); };
    // n = 1, p = (1,1): C^2_{1,1} = C^1_{1,1} + C^2_{0,1} + C^2_{1,0} + C^3_{0,0}
    EXPECT_EQ(C({1, 1}, 2), 8);
    EXPECT_EQ(C({1, 1}, 1) + C({0, 1}, 2) + C({1, 0}, 2) + C({0, 0}, 3), 8);
}

TEST(LinearRecursion, FullRuns) {
    const auto r3 = verify_linear_recursion(3, 4, 6);
    EXPECT_TRUE(r3.passed());
    EXPECT_EQ(r3.coefficients_checked, 5 * profiles_up_to(3, 6).size());
    EXPECT_TRUE(verify_linear_recursion(2, 5, 8).passed());
    EXPECT_TRUE(verify_linear_recursion(4, 2, 5).passed());
}

TEST(Geometric, HandConvolutionAtOneOne) {
    const MultiSeries f = solve_tree_equation(2, 2);
    EXPECT_EQ(coef(f.pow(2), {1, 1}), 8);
    EXPECT_EQ(coef(f.pow(2), {1, 1}), 2 * coef(f, {1, 1}) * coef(f, {0, 0}) + 2 * coef(f, {1, 0}) * coef(f, {0, 1}));
    EXPECT_EQ(coef(closed_form_series(2, 2, 2), {1, 1}), 8);
}

TEST(Geometric, FullRuns) {
    EXPECT_TRUE(verify_geometric(3, 3, 5).passed());
    EXPECT_TRUE(verify_geometric(2, 1, 6).passed());
    EXPECT_TRUE(verify_geometric(2, 6, 8).passed());
}

TEST(Convolution, Examples) {
    auto C = [](std::vector<unsigned> p, unsigned n) { return closed_form_count(ColorProfile(std::move(p)), n); };
    EXPECT_EQ(C({0, 0}, 1) * C({1, 0}, 1) + C({1, 0}, 1) * C({0, 0}, 1), C({1, 0}, 2));
    const auto r = verify_convolution(2, 2, 3, 6);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.coefficients_checked, profiles_up_to(2, 6).size());
    EXPECT_TRUE(verify_convolution(3, 1, 1, 0).passed());
    EXPECT_THROW(verify_convolution(2, 0, 1, 3), DomainError);
}

TEST(Convolution, AgreesWithSeriesProduct) {
    // the direct coefficient sum and the truncated series product are two routes
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            EXPECT_EQ(closed_form_series(2, n, 5) * closed_form_series(2, m, 5), closed_form_series(2, n + m, 5));
        }
    }
}

TEST(Evaluate, Examples) {
    const std::vector<std::complex<double>> point{0.1, 0.1};
    EXPECT_EQ(evaluate(MultiSeries::constant(2, 5, 1), point), std::complex<double>(1.0));
    EXPECT_NEAR(evaluate(solve_tree_equation(2, 2), point).real(), 1.25, 1e-15);
    const std::complex<double> f20 = evaluate(solve_tree_equation(2, 20), point);
    EXPECT_NEAR(f20.real(), naive_d2_small_root(0.1, 0.1), 1e-6);
    EXPECT_NEAR(f20.real(), 1.27016654, 1e-6);
    EXPECT_EQ(f20.imag(), 0.0);
    EXPECT_THROW(evaluate(solve_tree_equation(2, 2), std::vector<std::complex<double>>{0.1}), DomainError);
}

TEST(Evaluate, TruncationErrorShrinksWithOrder) {
    const std::vector<std::complex<double>> point{0.1, 0.1};
    const double target = naive_d2_small_root(0.1, 0.1);
    double previous = 1.0;
    for (unsigned order = 2; order <= 20; order += 2) {
        const double err = std::abs(evaluate(solve_tree_equation(2, order), point).real() - target);
        EXPECT_LT(err, previous) << "order " << order;
        previous = err;
    }
    EXPECT_LT(previous, 1e-6);
}

TEST(Evaluate, ComplexPoint) {
    const std::vector<std::complex<double>> point{{0.02, 0.01}, {0.0, -0.03}};
    const MultiSeries f = solve_tree_equation(2, 16);
    const auto x = evaluate(f, point);
    // F solves F = 1 + e1 F + e2 F^2
    const auto e1 = point[0] + point[1];
    const auto e2 = point[0] * point[1];
    EXPECT_LT(std::abs(1.0 + e1 * x + e2 * x * x - x), 1e-12);
}

TEST(GrowthBound, AdmissiblePointAndBound) {
    const double eps = 0.05;
    const double d = 2.0;
    const double e = std::exp(1.0);
    EXPECT_LT(eps, convergence_radius(2));
    EXPECT_LT(eps, 1.0 / (2 * d * e));
    EXPECT_LT(std::exp(2 * d * eps) + (1.0 / std::sqrt(2 * M_PI)) * (2 * d * e * eps) / (1 - 2 * d * e * eps), 2.0);
    const std::vector<std::complex<double>> point{eps, eps};
    for (unsigned n = 1; n <= 6; ++n) {
        const double value = evaluate(closed_form_series(2, n, 12), point).real();
        EXPECT_LE(value, std::pow(2.0, n)) << "n=" << n;
    }
}

TEST(ConvergenceRadius, Values) {
    EXPECT_DOUBLE_EQ(convergence_radius(2), 0.25);
    EXPECT_DOUBLE_EQ(convergence_radius(3), 4.0 / 27.0);
    EXPECT_THROW(convergence_radius(1), DomainError);
}

TEST(SeriesJson, DumpFormatAndRoundTrip) {
    const MultiSeries f = solve_tree_equation(2, 2);
    EXPECT_EQ(series_to_json(f).dump(),
              R"({"d":2,"order":2,"coeffs":[{"p":[0,0],"c":"1"},{"p":[0,1],"c":"1"},{"p":[1,0],"c":"1"},)"
              R"({"p":[0,2],"c":"1"},{"p":[1,1],"c":"3"},{"p":[2,0],"c":"1"}]})");
    for (unsigned d = 2; d <= 4; ++d) {
        const MultiSeries s = closed_form_series(d, 3, 5);
        EXPECT_EQ(series_from_json(nlohmann::ordered_json::parse(series_to_json(s).dump())), s);
    }
    EXPECT_THROW(series_from_json(nlohmann::ordered_json::parse(R"({"d":2})")), DomainError);
    EXPECT_THROW(series_from_json(nlohmann::ordered_json::parse(R"({"d":2,"order":1,"coeffs":[{"p":[1,0],"c":"x"}]})")),
                 DomainError);
    EXPECT_THROW(series_from_json(nlohmann::ordered_json::parse(R"({"d":2,"order":1,"coeffs":[{"p":[1,1],"c":"1"}]})")),
                 DomainError);
}

TEST(SeriesJson, LargeCoefficientsStayExact) {
    const MultiSeries f = solve_tree_equation(2, 20);
    const auto doc = series_to_json(f);
    const BigInt big = closed_form_count(ColorProfile({10, 10}));
    EXPECT_GT(big, BigInt("1000000000"));
    bool found = false;
    for (const auto& row : doc["coeffs"]) {
        if (row["p"] == nlohmann::ordered_json::array({10, 10})) {
            EXPECT_EQ(row["c"].get<std::string>(), big.get_str());
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

#include "colortree/json_io.hpp"

#include <algorithm>
#include <numeric>

#include "colortree/errors.hpp"

namespace colortree {

using json = nlohmann::ordered_json;

namespace {

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

json series_to_json(const MultiSeries& series) {
    std::vector<std::pair<std::vector<unsigned>, const BigInt*>> rows;
    rows.reserve(series.size());
    for (const auto& [m, c] : series.terms()) rows.emplace_back(m.exponents(series.d()), &c);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        const auto ta = std::accumulate(a.first.begin(), a.first.end(), 0u);
        const auto tb = std::accumulate(b.first.begin(), b.first.end(), 0u);
        return ta != tb ? ta < tb : a.first < b.first;
    });
    json coeffs = json::array();
    for (const auto& [p, c] : rows) coeffs.push_back({{"p", p}, {"c", c->get_str()}});
    return {{"d", series.d()}, {"order", series.order()}, {"coeffs", std::move(coeffs)}};
}

MultiSeries series_from_json(const json& doc) {
    try {
        const auto d = doc.at("d").get<unsigned>();
        const auto order = doc.at("order").get<unsigned>();
        MultiSeries s(d, order);
        for (const auto& row : doc.at("coeffs")) {
            const auto p = row.at("p").get<std::vector<unsigned>>();
            BigInt c;
            if (c.set_str(row.at("c").get<std::string>(), 10) != 0) {
                throw DomainError("coefficient is not a decimal integer");
            }
            s.set(p, c);
        }
        return s;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed series document: ") + e.what());
    }
}

json root_report_to_json(const CharPolynomial& q, const RootReport& report) {
    json g = json::array();
    for (Complex z : q.point) {
        if (z.imag() == 0.0) {
            g.push_back(z.real());
        } else {
            g.push_back(complex_to_json(z));
        }
    }
    json roots = json::array();
    for (const auto& r : report.roots) {
        roots.push_back({{"re", r.value.real()}, {"im", r.value.imag()}, {"mult", r.multiplicity}});
    }
    return {
        {"d", q.d},
        {"g", std::move(g)},
        {"radius", report.radius},
        {"epsilon_R", report.epsilon_used},
        {"admissible", report.admissible},
        {"roots", std::move(roots)},
        {"inside_count", report.inside_count},
        {"principal_root", report.principal_root ? complex_to_json(*report.principal_root) : json(nullptr)},
        {"residual_max", report.residual_max},
        {"relative_residual_max", report.relative_residual_max},
        {"isolation_holds", report.isolation_holds()},
    };
}

json tree_to_json(const ColoredTree& tree, unsigned d) {
    const ColorProfile p = tree.profile(d);
    return {{"tree", encode(tree)}, {"profile", std::vector<unsigned>(p.counts().begin(), p.counts().end())}};
}

json report_to_json(const VerificationReport& report, std::size_t max_failures) {
    json failures = json::array();
    for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
        const auto& f = report.failures[i];
        failures.push_back({{"n", f.n},
                            {"m", f.m},
                            {"p", f.exponent},
                            {"expected", f.expected.get_str()},
                            {"actual", f.actual.get_str()},
                            {"route", f.route}});
    }
    return {{"check", report.check},
            {"d", report.d},
            {"order", report.order},
            {"passed", report.passed()},
            {"coefficients_checked", report.coefficients_checked},
            {"failure_count", report.failures.size()},
            {"failures", std::move(failures)}};
}

}  // namespace colortree

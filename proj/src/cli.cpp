#include "colortree/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "colortree/checks.hpp"
#include "colortree/combinatorics.hpp"
#include "colortree/errors.hpp"
#include "colortree/json_io.hpp"
#include "colortree/recursive_counts.hpp"
#include "colortree/roots.hpp"
#include "colortree/series.hpp"
#include "colortree/tree.hpp"

namespace colortree::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv, text };

struct Config {
    unsigned d = 2;
    std::optional<Format> format;
    unsigned max_order = 0;
    std::uint64_t max_trees = Limits{}.max_trees;
    unsigned max_total = 0;
    std::uint64_t seed = 0;

    Limits limits() const {
        Limits l;
        l.max_trees = max_trees;
        l.series_order_cap = max_order;
        l.profile_total_cap = max_total;
        return l;
    }
    Format format_or(Format fallback) const { return format.value_or(fallback); }
};

std::vector<unsigned> counts_of(const ColorProfile& p) { return {p.counts().begin(), p.counts().end()}; }

std::string join(const std::vector<unsigned>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

ColorProfile profile_for(const Config& cfg, const std::string& text) {
    ColorProfile p = parse_profile(text);
    if (p.d() != cfg.d) {
        throw DomainError("profile " + text + " has " + std::to_string(p.d()) + " entries, expected " +
                          std::to_string(cfg.d));
    }
    return p;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw DomainError("malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty() || (!text.empty() && text.back() == ',')) throw DomainError("malformed list '" + text + "'");
    return out;
}

void emit_trees(const std::vector<ColoredTree>& trees, unsigned d, Format fmt, std::ostream& out) {
    if (fmt == Format::csv) {
        out << "tree,lines";
        for (unsigned i = 1; i <= d; ++i) out << ",p" << i;
        out << '\n';
    }
    for (const auto& t : trees) {
        switch (fmt) {
            case Format::text:
                out << encode(t) << '\n';
                break;
            case Format::json:
                out << tree_to_json(t, d).dump() << '\n';
                break;
            case Format::csv:
                out << csv_quote(encode(t)) << ',' << t.line_count() << ',' << join(counts_of(t.profile(d)), ',')
                    << '\n';
                break;
        }
    }
}

int emit_report(const VerificationReport& report, Format fmt, std::ostream& out) {
    constexpr std::size_t kMaxListed = 100;
    switch (fmt) {
        case Format::json:
            out << report_to_json(report, kMaxListed).dump() << '\n';
            break;
        case Format::text:
            out << report.check << " d=" << report.d << " order=" << report.order << ": "
                << (report.passed() ? "PASS" : "FAIL") << " (" << report.coefficients_checked
                << " coefficients checked, " << report.failures.size() << " failures)\n";
            for (std::size_t i = 0; i < report.failures.size() && i < kMaxListed; ++i) {
                const auto& f = report.failures[i];
                out << "  n=" << f.n << " m=" << f.m << " p=(" << join(f.exponent, ',') << ") expected "
                    << f.expected.get_str() << " got " << f.actual.get_str();
                if (!f.route.empty()) out << " [" << f.route << "]";
                out << '\n';
            }
            break;
        case Format::csv:
            out << "n,m,p,expected,actual,route\n";
            for (std::size_t i = 0; i < report.failures.size() && i < kMaxListed; ++i) {
                const auto& f = report.failures[i];
                out << f.n << ',' << f.m << ',' << csv_quote(join(f.exponent, ',')) << ',' << f.expected.get_str()
                    << ',' << f.actual.get_str() << ',' << f.route << '\n';
            }
            break;
    }
    return report.passed() ? kOk : kCheckFailed;
}

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ColorError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumeric;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count, enumerate, sample and analyse rooted line-colored D-ary trees", "colortree"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    app.add_option("--d", cfg.d, "number of colors")->check(CLI::Range(2u, kHardMaxColors));
    app.add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--max-order", cfg.max_order, "series order cap (default depends on d)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-trees", cfg.max_trees, "enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--max-total", cfg.max_total, "profile total cap for counting and sampling (default depends on d)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "sampler seed");

    // count
    std::string count_profile;
    unsigned count_n = 1;
    auto* count = app.add_subcommand("count", "closed-form number of trees (or tuples) with a color profile");
    count->add_option("--profile", count_profile, "comma-separated line counts per color")->required();
    count->add_option("--n", count_n, "sequence index n of C^n")->check(CLI::PositiveNumber);

    // enumerate
    unsigned enum_lines = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list every tree with at most --max-lines lines");
    enumerate->add_option("--max-lines", enum_lines, "largest line count")->required();

    // series
    unsigned series_order = 0;
    unsigned series_n = 0;
    auto* series = app.add_subcommand("series", "truncated generating function coefficients");
    series->add_option("--order", series_order, "truncation order (total degree)")->required();
    series->add_option("--n", series_n, "dump F_n from the closed form instead of solving for F")
        ->check(CLI::PositiveNumber);

    // verify
    std::string verify_kind;
    unsigned verify_order = 6;
    unsigned verify_n_max = 5;
    unsigned verify_n = 1;
    unsigned verify_m = 1;
    auto* verify = app.add_subcommand("verify", "run one identity check");
    verify->add_option("kind", verify_kind, "recursion|geometric|convolution|fuss-catalan|narayana|oracle")
        ->required()
        ->check(CLI::IsMember({"recursion", "geometric", "convolution", "fuss-catalan", "narayana", "oracle"}));
    verify->add_option("--order", verify_order, "largest total degree / line count checked");
    verify->add_option("--n-max", verify_n_max, "largest sequence index")->check(CLI::PositiveNumber);
    verify->add_option("--n", verify_n, "first index for convolution")->check(CLI::PositiveNumber);
    verify->add_option("--m", verify_m, "second index for convolution")->check(CLI::PositiveNumber);

    // roots
    std::string roots_g;
    double roots_radius = 2.0;
    double roots_tol = kDefaultResidualTol;
    auto* roots = app.add_subcommand("roots", "roots of the characteristic polynomial at a point");
    roots->add_option("--g", roots_g, "comma-separated real coordinates g_1..g_d")->required();
    roots->add_option("--radius", roots_radius, "isolation radius R > 1");
    roots->add_option("--tol", roots_tol, "relative residual tolerance")->check(CLI::PositiveNumber);

    // sample
    std::string sample_profile;
    std::uint64_t sample_count = 1;
    auto* sample = app.add_subcommand("sample", "uniform random trees with a color profile");
    sample->add_option("--profile", sample_profile, "comma-separated line counts per color")->required();
    sample->add_option("--count", sample_count, "number of samples")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    const Limits limits = cfg.limits();
    const unsigned d = cfg.d;

    if (count->parsed()) {
        return guarded(err, [&] {
            const ColorProfile p = profile_for(cfg, count_profile);
            if (p.total() > limits.profile_total(d)) {
                throw BudgetExceeded("profile total " + std::to_string(p.total()) + " exceeds the cap of " +
                                     std::to_string(limits.profile_total(d)));
            }
            const BigInt c = closed_form_count(p, count_n);
            switch (cfg.format_or(Format::json)) {
                case Format::json:
                    out << json{{"profile", counts_of(p)}, {"n", count_n}, {"count", c.get_str()}}.dump() << '\n';
                    break;
                case Format::csv:
                    for (unsigned i = 1; i <= d; ++i) out << 'p' << i << ',';
                    out << "n,count\n" << join(counts_of(p), ',') << ',' << count_n << ',' << c.get_str() << '\n';
                    break;
                case Format::text:
                    out << "C^" << count_n << p.to_string() << " = " << c.get_str() << '\n';
                    break;
            }
            return int{kOk};
        });
    }

    if (enumerate->parsed()) {
        return guarded(err, [&] {
            const auto trees = enumerate_by_lines(d, enum_lines, limits);
            emit_trees(trees, d, cfg.format_or(Format::text), out);
            return int{kOk};
        });
    }

    if (series->parsed()) {
        return guarded(err, [&] {
            if (series_order > limits.series_order(d)) {
                throw BudgetExceeded("series order " + std::to_string(series_order) + " exceeds the cap of " +
                                     std::to_string(limits.series_order(d)));
            }
            const MultiSeries s =
                series_n ? closed_form_series(d, series_n, series_order) : solve_tree_equation(d, series_order, limits);
            const json doc = series_to_json(s);
            switch (cfg.format_or(Format::json)) {
                case Format::json:
                    out << doc.dump() << '\n';
                    break;
                case Format::csv:
                    for (unsigned i = 1; i <= d; ++i) out << 'p' << i << ',';
                    out << "c\n";
                    for (const auto& row : doc["coeffs"]) {
                        out << join(row["p"].get<std::vector<unsigned>>(), ',') << ','
                            << row["c"].get<std::string>() << '\n';
                    }
                    break;
                case Format::text:
                    for (const auto& row : doc["coeffs"]) {
                        out << '(' << join(row["p"].get<std::vector<unsigned>>(), ',') << ") "
                            << row["c"].get<std::string>() << '\n';
                    }
                    break;
            }
            return int{kOk};
        });
    }

    if (verify->parsed()) {
        return guarded(err, [&] {
            if (verify_kind != "narayana" && verify_kind != "fuss-catalan" && verify_kind != "oracle" &&
                verify_order > limits.series_order(d)) {
                throw BudgetExceeded("verification order " + std::to_string(verify_order) + " exceeds the cap of " +
                                     std::to_string(limits.series_order(d)));
            }
            VerificationReport report;
            if (verify_kind == "recursion") {
                report = verify_linear_recursion(d, verify_n_max, verify_order, limits);
            } else if (verify_kind == "geometric") {
                report = verify_geometric(d, verify_n_max, verify_order, limits);
            } else if (verify_kind == "convolution") {
                report = verify_convolution(d, verify_n, verify_m, verify_order, limits);
            } else if (verify_kind == "fuss-catalan") {
                report = verify_fuss_catalan(d, verify_order + 1);
            } else if (verify_kind == "narayana") {
                if (d != 2) throw DomainError("the Narayana check is defined only for d=2");
                report = verify_narayana(verify_order);
            } else {
                report = verify_oracle(d, verify_order, limits);
            }
            return emit_report(report, cfg.format_or(Format::json), out);
        });
    }

    if (roots->parsed()) {
        return guarded(err, [&] {
            const auto reals = parse_reals(roots_g);
            if (reals.size() != d) {
                throw DomainError("--g has " + std::to_string(reals.size()) + " entries, expected " +
                                  std::to_string(d));
            }
            if (!(roots_radius > 1.0)) throw DomainError("--radius must exceed 1");
            const std::vector<Complex> point(reals.begin(), reals.end());
            const CharPolynomial q = build_char_polynomial(d, point);
            const RootReport report = rouche_isolation_check(q, roots_radius, roots_tol);
            switch (cfg.format_or(Format::json)) {
                case Format::json:
                    out << root_report_to_json(q, report).dump() << '\n';
                    break;
                case Format::csv:
                    out << "re,im,mult,inside\n";
                    for (const auto& r : report.roots) {
                        out << r.value.real() << ',' << r.value.imag() << ',' << r.multiplicity << ','
                            << (std::abs(r.value) < roots_radius ? 1 : 0) << '\n';
                    }
                    break;
                case Format::text: {
                    std::ostringstream line;
                    line.precision(12);
                    line << "d=" << d << " R=" << roots_radius << " epsilon_R=" << report.epsilon_used
                         << " admissible=" << (report.admissible ? "yes" : "no")
                         << " inside_count=" << report.inside_count << '\n';
                    for (const auto& r : report.roots) {
                        line << "  " << r.value.real() << (r.value.imag() < 0 ? " - " : " + ")
                             << std::abs(r.value.imag()) << "i  x" << r.multiplicity << '\n';
                    }
                    out << line.str();
                    break;
                }
            }
            return report.isolation_holds() ? int{kOk} : int{kCheckFailed};
        });
    }

    if (sample->parsed()) {
        return guarded(err, [&] {
            const ColorProfile p = profile_for(cfg, sample_profile);
            const auto trees = sample_uniform(SampleRequest{p, sample_count, cfg.seed}, limits);
            emit_trees(trees, d, cfg.format_or(Format::text), out);
            return int{kOk};
        });
    }

    return kBadInput;
}

}  // namespace colortree::cli

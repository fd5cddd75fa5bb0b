#include "colortree/checks.hpp"

#include "colortree/combinatorics.hpp"
#include "colortree/recursive_counts.hpp"
#include "colortree/tree.hpp"

namespace colortree {

VerificationReport verify_fuss_catalan(unsigned d, unsigned max_vertices) {
    VerificationReport report("fuss-catalan", d, max_vertices == 0 ? 0 : max_vertices - 1);
    for (unsigned vertices = 1; vertices <= max_vertices; ++vertices) {
        BigInt row = 0;
        for_each_profile_with_total(d, vertices - 1,
                                    [&](const ColorProfile& p) { row += closed_form_count(p, 1); });
        ++report.coefficients_checked;
        BigInt want = fuss_catalan_total(d, vertices);
        if (row != want) report.failures.push_back({1, 0, {vertices}, std::move(want), std::move(row)});
    }
    return report;
}

VerificationReport verify_narayana(unsigned max_total) {
    VerificationReport report("narayana", 2, max_total);
    for (unsigned total = 0; total <= max_total; ++total) {
        for (unsigned p1 = 0; p1 <= total; ++p1) {
            const unsigned p2 = total - p1;
            ++report.coefficients_checked;
            BigInt want = narayana(total + 1, p1 + 1);
            BigInt got = closed_form_count(ColorProfile({p1, p2}), 1);
            if (want != got) report.failures.push_back({1, 0, {p1, p2}, std::move(want), std::move(got)});
        }
    }
    return report;
}

VerificationReport verify_oracle(unsigned d, unsigned max_total, const Limits& limits) {
    VerificationReport report("oracle", d, max_total);
    const auto tally = count_by_profile_bruteforce(d, max_total, limits);
    ProfileCountTable table(d, limits);
    for (const auto& [profile, brute] : tally) {
        ++report.coefficients_checked;
        const BigInt want = closed_form_count(profile, 1);
        std::vector<unsigned> exps(profile.counts().begin(), profile.counts().end());
        if (brute != want) report.failures.push_back({1, 0, exps, want, brute, "bruteforce"});
        const BigInt& rec = table.count(profile);
        if (rec != want) report.failures.push_back({1, 0, exps, want, rec, "recursive"});
    }
    return report;
}

}  // namespace colortree

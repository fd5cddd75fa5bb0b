#ifndef COLORTREE_REPORT_HPP
#define COLORTREE_REPORT_HPP

#include <string>
#include <vector>

#include "colortree/combinatorics.hpp"

namespace colortree {

// One coefficient where two routes disagree. n and m are the sequence
// indices involved (0 when unused); `route` names the side that disagreed
// when a check compares more than two.
struct CoefficientMismatch {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<unsigned> exponent;
    BigInt expected;
    BigInt actual;
    std::string route = {};
};

struct VerificationReport {
    VerificationReport() = default;
    VerificationReport(std::string check_name, unsigned d_, unsigned order_)
        : check(std::move(check_name)), d(d_), order(order_) {}

    std::string check;
    unsigned d = 0;
    unsigned order = 0;
    std::size_t coefficients_checked = 0;
    std::vector<CoefficientMismatch> failures;

    bool passed() const noexcept { return failures.empty(); }
};

}  // namespace colortree

#endif  // COLORTREE_REPORT_HPP

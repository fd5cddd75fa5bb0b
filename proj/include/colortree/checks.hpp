#ifndef COLORTREE_CHECKS_HPP
#define COLORTREE_CHECKS_HPP

#include "colortree/limits.hpp"
#include "colortree/report.hpp"

namespace colortree {

// Row sums of closed_form_count(., 1) over profiles with total P - 1 against
// fuss_catalan_total(d, P), for P = 1..max_vertices. Mismatch exponent is {P}.
VerificationReport verify_fuss_catalan(unsigned d, unsigned max_vertices);

// closed_form_count((p1, p2), 1) == narayana(p1 + p2 + 1, p1 + 1) for p1 + p2 <= max_total.
VerificationReport verify_narayana(unsigned max_total);

// Brute-force tally, memoized recursion and closed form agree on every profile
// with total <= max_total. Mismatch route is "bruteforce" or "recursive".
VerificationReport verify_oracle(unsigned d, unsigned max_total, const Limits& limits = {});

}  // namespace colortree

#endif  // COLORTREE_CHECKS_HPP

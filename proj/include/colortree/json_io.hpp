#ifndef COLORTREE_JSON_IO_HPP
#define COLORTREE_JSON_IO_HPP

#include <json.hpp>

#include "colortree/roots.hpp"
#include "colortree/series.hpp"
#include "colortree/tree.hpp"

namespace colortree {

/// Coefficient dump
///     {"d": D, "order": L, "coeffs": [{"p": [p1, ..., pD], "c": "<decimal>"}, ...]}
/// sorted by total degree, then lexicographically by exponent vector.
/// Coefficients are decimal strings so they never lose precision.
nlohmann::ordered_json series_to_json(const MultiSeries& series);

// Inverse of series_to_json. DomainError on schema violations.
MultiSeries series_from_json(const nlohmann::ordered_json& doc);

/// {"d", "g": [...], "radius", "epsilon_R", "admissible", "roots": [{"re", "im", "mult"}],
///  "inside_count", "principal_root": {"re", "im"} | null}
/// plus "residual_max", "relative_residual_max" and "isolation_holds".
nlohmann::ordered_json root_report_to_json(const CharPolynomial& q, const RootReport& report);

// {"tree": "<canonical encoding>", "profile": [...]}
nlohmann::ordered_json tree_to_json(const ColoredTree& tree, unsigned d);

nlohmann::ordered_json report_to_json(const VerificationReport& report, std::size_t max_failures = 100);

}  // namespace colortree

#endif  // COLORTREE_JSON_IO_HPP

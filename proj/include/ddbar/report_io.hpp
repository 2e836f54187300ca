#pragma once

#include <string>

#include <json.hpp>

#include "ddbar/cohomology.hpp"
#include "ddbar/group_action.hpp"

namespace ddbar {

/*
 * Report emitters. Both read the same report value, so the table and the
 * JSON agree entry for entry. Ordering is deterministic: bidegrees
 * lexicographic, representatives in pivot order.
 */

/// Per-bidegree dimension table plus Betti, Frolicher and verdict lines
/// (and representative listings when the report carries them).
std::string render_table(const CohomologyReport& r);

/// Schema: {name, n, field_order, hodge, bott_chern, aeppli, betti,
/// verdict_numeric, verdict_direct, frolicher_e1}; grids are row arrays
/// indexed by p, each listing q = 0..n.
nlohmann::json report_to_json(const CohomologyReport& r);
CohomologyReport report_from_json(const nlohmann::json& j);

/// Equality on the JSON-visible fields (representatives are not part of the
/// wire schema).
bool same_report(const CohomologyReport& a, const CohomologyReport& b);

/// Invariant-subcomplex section of the quotient output: group order,
/// dimension grid, basis listing, nonzero differentials.
std::string render_quotient_section(const Bicomplex& sub, size_t group_order,
                                    const std::vector<DifferentialRelation>& rels);

}  // namespace ddbar

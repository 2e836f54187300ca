#pragma once

#include <string>

#include "ddbar/cohomology.hpp"
#include "ddbar/manifest.hpp"

namespace ddbar {

/// Full-complex pipeline: build, compile, analyze.
CohomologyReport run_cohomology(const Manifest& m, bool with_reps = false);

struct QuotientResult {
    size_t group_order = 0;
    Bicomplex subcomplex;
    std::vector<DifferentialRelation> differentials;
    CohomologyReport report;
};

/// Quotient pipeline: validate the named action, close the group, extract
/// the invariant subcomplex, analyze it. Report name is "<name>/<action>"
/// unless overridden.
QuotientResult run_quotient(const Manifest& m, const std::string& action_name,
                            bool with_reps = false,
                            const std::string& report_name = "");

}  // namespace ddbar

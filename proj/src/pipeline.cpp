#include "ddbar/pipeline.hpp"

namespace ddbar {

CohomologyReport run_cohomology(const Manifest& m, bool with_reps) {
    Cdba algebra = build_cdba(m);
    Bicomplex bc = compile(algebra);
    return analyze(bc, m.name, with_reps);
}

QuotientResult run_quotient(const Manifest& m, const std::string& action_name,
                            bool with_reps, const std::string& report_name) {
    Cdba algebra = build_cdba(m);
    const GeneratorAction& action = find_action(m, action_name);
    GroupAction group = close_group(algebra, {action});
    Bicomplex full = compile(algebra);
    QuotientResult out;
    out.group_order = group.size();
    out.subcomplex = invariant_subcomplex(full, group);
    out.differentials = invariant_differentials(out.subcomplex);
    std::string name =
        report_name.empty() ? m.name + "/" + action_name : report_name;
    out.report = analyze(out.subcomplex, name, with_reps);
    return out;
}

}  // namespace ddbar

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ddbar/cdba.hpp"
#include "ddbar/group_action.hpp"

namespace ddbar {

/*
 * Parsed manifest: the textual description of an algebra and its group
 * actions. Line-oriented grammar ('#' starts a comment):
 *
 *   manifold NAME
 *   field zeta N            (optional; defaults to 1, i.e. coefficients in Q)
 *   gens N                  (declares phi1..phiN, each of bidegree (1,0))
 *   del phiI = expr         (a (2,0)-form; omitted equations are zero)
 *   delbar phiI = expr      (a (1,1)-form)
 *   action NAME: phiI -> expr, phiJ -> expr, ...
 *
 * expr is a signed sum of terms; a term is an optional product of
 * coefficient atoms (rational literals like 2 or -3/4, powers of zeta as z
 * or z^K) followed by one monomial, a '^'-joined word of phiI and bphiI
 * factors, e.g. "-1/2 z^2 phi1^bphi2". Declarations must precede use:
 * `field` before `gens`, `gens` before equations and actions. Generators
 * missing from an action act as the identity.
 */
struct Manifest {
    std::string name = "unnamed";
    unsigned field_order = 1;
    unsigned n = 0;
    std::vector<Form> del_eqs;     // per generator, zero when omitted
    std::vector<Form> delbar_eqs;
    std::vector<GeneratorAction> actions;
};

/// Parses the grammar above; throws ParseError (with line/column and the
/// expected tokens), UndeclaredGenerator, or BadCoefficient.
Manifest parse_manifest(std::string_view text);

Manifest read_manifest_file(const std::string& path);

/// Validated algebra from the parsed structure equations; throws
/// BadBidegree or IntegrabilityFailure.
Cdba build_cdba(const Manifest& m);

/// Throws UnknownName when the manifest declares no such action.
const GeneratorAction& find_action(const Manifest& m, const std::string& name);

}  // namespace ddbar

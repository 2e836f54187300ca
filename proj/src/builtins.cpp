#include "ddbar/builtins.hpp"

namespace ddbar {

namespace {

// Each text also ships as a file under manifests/; a test pins the two
// copies together.

const char* kTorus3 = R"(# complex 3-torus model: three closed generators
manifold torus3
gens 3
)";

const char* kIwasawa = R"(# holomorphically parallelizable nilmanifold model
# with one non-closed generator
manifold iwasawa
field zeta 3
gens 3
del phi3 = -1 phi1^phi2
action sigma: phi1 -> z phi1, phi2 -> z phi2, phi3 -> z^2 phi3
)";

const char* kNakamura = R"(# completely solvable solvmanifold model
manifold nakamura
field zeta 2
gens 3
del phi2 = phi1^phi2
del phi3 = -1 phi1^phi3
delbar phi2 = -1 phi2^bphi1
delbar phi3 = phi3^bphi1
action sigma: phi1 -> -1 phi1, phi2 -> -1 phi3, phi3 -> phi2
)";

}  // namespace

const std::vector<BuiltinEntry>& builtin_catalog() {
    static const std::vector<BuiltinEntry> catalog = {
        {"torus3", kTorus3, "", "complex 3-torus (all differentials zero)"},
        {"iwasawa", kIwasawa, "", "Iwasawa-type nilmanifold model"},
        {"nakamura", kNakamura, "", "completely solvable Nakamura-type model"},
        {"iwasawa-z3", kIwasawa, "sigma", "Iwasawa model / Z3 action"},
        {"nakamura-z2", kNakamura, "sigma", "Nakamura model / involution-generated action"},
    };
    return catalog;
}

const BuiltinEntry* find_builtin(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace ddbar

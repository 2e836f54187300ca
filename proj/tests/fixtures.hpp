#pragma once

/*
 * The three reference algebras built directly from forms, bypassing the
 * parser, for unit tests of the algebra and engine layers. The CLI tests
 * exercise the same models through their manifest texts.
 */

#include "ddbar/cdba.hpp"
#include "ddbar/group_action.hpp"

namespace fixtures {

// n = 3, all differentials zero, coefficients in Q
inline ddbar::Cdba torus3() {
    std::vector<ddbar::Form> zero(3, ddbar::Form::zero(3, 1));
    return ddbar::Cdba(3, 1, zero, zero);
}

// del phi3 = -phi1 ^ phi2, everything else closed; field Q(zeta_3)
inline ddbar::Cdba iwasawa() {
    const unsigned n = 3, ord = 3;
    std::vector<ddbar::Form> del(n, ddbar::Form::zero(n, ord));
    std::vector<ddbar::Form> delbar(n, ddbar::Form::zero(n, ord));
    del[2] = -wedge(ddbar::Form::generator(n, ord, 1), ddbar::Form::generator(n, ord, 2));
    return ddbar::Cdba(n, ord, del, delbar);
}

// del phi2 = phi1^phi2, del phi3 = -phi1^phi3,
// delbar phi2 = -phi2^bphi1, delbar phi3 = phi3^bphi1; field Q(zeta_2)
inline ddbar::Cdba nakamura() {
    const unsigned n = 3, ord = 2;
    auto phi = [&](unsigned i) { return ddbar::Form::generator(n, ord, i); };
    auto bphi = [&](unsigned i) { return ddbar::Form::conj_generator(n, ord, i); };
    std::vector<ddbar::Form> del(n, ddbar::Form::zero(n, ord));
    std::vector<ddbar::Form> delbar(n, ddbar::Form::zero(n, ord));
    del[1] = wedge(phi(1), phi(2));
    del[2] = -wedge(phi(1), phi(3));
    delbar[1] = -wedge(phi(2), bphi(1));
    delbar[2] = wedge(phi(3), bphi(1));
    return ddbar::Cdba(n, ord, del, delbar);
}

// sigma*: phi1 -> -phi1, phi2 -> -phi3, phi3 -> phi2
inline ddbar::GeneratorAction nakamura_sigma() {
    const unsigned n = 3, ord = 2;
    ddbar::GeneratorAction a;
    a.name = "sigma";
    a.images = {-ddbar::Form::generator(n, ord, 1), -ddbar::Form::generator(n, ord, 3),
                ddbar::Form::generator(n, ord, 2)};
    return a;
}

// sigma*: phi1 -> z phi1, phi2 -> z phi2, phi3 -> z^2 phi3 over Q(zeta_3)
inline ddbar::GeneratorAction iwasawa_sigma() {
    const unsigned n = 3, ord = 3;
    ddbar::GeneratorAction a;
    a.name = "sigma";
    auto z = ddbar::Cyclotomic::zeta(ord);
    a.images = {ddbar::Form::generator(n, ord, 1).scaled(z),
                ddbar::Form::generator(n, ord, 2).scaled(z),
                ddbar::Form::generator(n, ord, 3).scaled(z * z)};
    return a;
}

}  // namespace fixtures

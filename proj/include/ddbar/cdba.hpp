#pragma once

#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/form.hpp"

namespace ddbar {

/*
 * A complex differential bigraded algebra presented by structure equations on
 * holomorphic degree-(1,0) generators: del phi^i is a (2,0)-form, delbar
 * phi^i a (1,1)-form. The equations on the conjugate generators are never
 * stored; they are forced by conjugation,
 *
 *     del bphi^i = conjugate_form(delbar phi^i),
 *     delbar bphi^i = conjugate_form(del phi^i),
 *
 * which guarantees the real structure. Construction validates bidegrees and
 * the identities del^2 = delbar^2 = del delbar + delbar del = 0 on every
 * generator; by the derivation property they then hold on all forms. No
 * unvalidated value of this type exists.
 */
class Cdba {
public:
    /// Validating constructor; throws BadBidegree or IntegrabilityFailure.
    /// `del_gen[i]` / `delbar_gen[i]` are the differentials of phi^(i+1);
    /// zero forms mean closed generators.
    Cdba(unsigned n, unsigned order, std::vector<Form> del_gen,
         std::vector<Form> delbar_gen);

    unsigned generators() const { return n_; }
    unsigned field_order() const { return order_; }
    const Form& del_generator(unsigned i) const { return del_gen_[i]; }
    const Form& delbar_generator(unsigned i) const { return delbar_gen_[i]; }

private:
    unsigned n_;
    unsigned order_;
    std::vector<Form> del_gen_, delbar_gen_;
};

/// The unique graded derivation of bidegree (1,0) extending the generator
/// equations; on a product of 1-forms the k-th factor contributes with sign
/// (-1)^(k-1). Requires bihomogeneous input (NonHomogeneousInput otherwise).
Form apply_del(const Cdba& x, const Form& f);

/// Same for the bidegree-(0,1) derivation.
Form apply_delbar(const Cdba& x, const Form& f);

/// del + delbar.
Form apply_d(const Cdba& x, const Form& f);

/// Expands the derivations on every bidegree basis into exact matrices.
/// Columns follow the lexicographic monomial basis contract.
Bicomplex compile(const Cdba& x);

}  // namespace ddbar

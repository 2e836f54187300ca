#pragma once

#include <string>
#include <vector>

#include "ddbar/cdba.hpp"

namespace ddbar {

/*
 * Finite groups of algebra automorphisms. An action is specified by the
 * pullback images of the holomorphic generators only: sigma*(phi^i) is a
 * (1,0)-form, and sigma*(bphi^i) := conjugate_form(sigma*(phi^i)) is forced,
 * which keeps the real structure of the quotient.
 */
struct GeneratorAction {
    std::string name;
    std::vector<Form> images;  // images[i] = pullback of phi^(i+1), bidegree (1,0)
};

/// An action checked against an algebra: the degree-one block is invertible
/// and the pullback commutes with del and delbar on every generator.
struct CheckedAction {
    std::string name;
    Matrix matrix;  // n x n, images[i] = sum_j matrix(i,j) phi^(j+1)
};

/// The closure of one or more checked actions under composition, identity
/// included. elements[0] is the identity.
struct GroupAction {
    unsigned n = 0;
    unsigned order = 1;  // field order
    std::vector<Matrix> elements;
    size_t size() const { return elements.size(); }
};

/// Validates the action; throws BadBidegree when an image is not a
/// (1,0)-form, NotInvertible, or NotChainMap (with the offending generator
/// and the nonzero residual).
CheckedAction validate_action(const Cdba& x, const GeneratorAction& g);

/// Applies the algebra endomorphism given by an n x n degree-one matrix to a
/// form (multiplicative extension; conjugated matrix on the antiholomorphic
/// generators).
Form apply_action(const Matrix& m, const Form& f);

/// Closure under composition, computed to a fixed point. Throws
/// GroupClosureOverflow past `max_order` elements.
GroupAction close_group(const Cdba& x, const std::vector<GeneratorAction>& gens,
                        size_t max_order = 1024);

/// Matrix of the Reynolds projector (1/|G|) sum g* on the lexicographic
/// monomial basis of bidegree (p,q); idempotent and commuting with the
/// differential matrices.
Matrix reynolds_matrix(const GroupAction& group, int p, int q);

/// The fixed subcomplex of the Reynolds projector at every bidegree, with
/// del and delbar restricted to it. Input must be a compiled monomial-basis
/// bicomplex; the result carries the invariant basis vectors as labels and
/// is validated.
Bicomplex invariant_subcomplex(const Bicomplex& full, const GroupAction& group);

/// One nonzero differential of an invariant basis element.
struct DifferentialRelation {
    int p, q;
    Form element;  // invariant basis vector
    Form value;    // d(element), expanded in the ambient monomials
};

/// Human-readable listing of d on the basis of a subcomplex (or any labeled
/// bicomplex), for comparison with printed relations. Deterministic order:
/// bidegrees lexicographic, basis vectors in pivot order.
std::vector<DifferentialRelation> invariant_differentials(const Bicomplex& sub);

}  // namespace ddbar

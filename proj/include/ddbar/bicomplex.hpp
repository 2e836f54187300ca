#pragma once

#include <vector>

#include "ddbar/form.hpp"
#include "ddbar/matrix.hpp"

namespace ddbar {

/*
 * A finite double complex: a basis dimension per bidegree (p,q) in
 * [0,n] x [0,n] together with exact matrices of del: (p,q) -> (p+1,q) and
 * delbar: (p,q) -> (p,q+1) in fixed bases. Every engine computation runs on
 * this structure, whether it came from compiling structure equations or from
 * extracting an invariant subcomplex.
 *
 * `labels[p][q]` carries the basis vectors as forms (plain monomials for a
 * compiled algebra, invariant combinations for a subcomplex); they are used
 * for representative and differential printing only.
 *
 * Immutable after validate(); all queries are const, so bidegrees can be
 * processed concurrently.
 */
struct Bicomplex {
    unsigned n = 0;
    unsigned order = 1;
    std::vector<std::vector<size_t>> dims;           // [p][q], (n+1)^2
    std::vector<std::vector<Matrix>> del;            // del[p][q]: dim(p+1,q) x dim(p,q)
    std::vector<std::vector<Matrix>> delbar;         // delbar[p][q]: dim(p,q+1) x dim(p,q)
    std::vector<std::vector<std::vector<Form>>> labels;

    size_t dim_at(int p, int q) const;
    /// Matrix of del out of (p,q); correctly-shaped empty matrix outside the
    /// grid, so degenerate bidegrees need no branches.
    Matrix del_at(int p, int q) const;
    Matrix delbar_at(int p, int q) const;
    /// Matrix of del delbar : (p,q) -> (p+1,q+1).
    Matrix deldelbar_at(int p, int q) const;

    bool in_range(int p, int q) const {
        return p >= 0 && q >= 0 && p <= static_cast<int>(n) && q <= static_cast<int>(n);
    }

    /// Checks shape consistency and the matrix identities del^2 = 0,
    /// delbar^2 = 0, del delbar + delbar del = 0 at every bidegree; throws
    /// std::logic_error on violation.
    void validate() const;
};

}  // namespace ddbar

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddbar/bicomplex.hpp"

namespace ddbar {

using DimGrid = std::vector<std::vector<size_t>>;  // [p][q], (n+1)^2

/*
 * All cohomological invariants of a bicomplex in one value.
 *
 * hodge        h^{p,q} of delbar-cohomology (Dolbeault);
 * hodge_conj   h^{p,q} of del-cohomology (conjugate Dolbeault);
 * bc, aeppli   Bott-Chern (ker del ∩ ker delbar / im del delbar) and Aeppli
 *              (ker del delbar / im del + im delbar) dimensions;
 * betti        dimensions of the total complex with d = del + delbar;
 * verdict_numeric   sum_(p+q=k) (bc + aeppli) = 2 betti_k for every k;
 * verdict_direct    the induced map from Bott-Chern classes into de Rham
 *                   cohomology is injective in every degree;
 * frolicher_e1      betti_k = sum_(p+q=k) hodge for every k.
 *
 * The two verdicts are computed along independent routes and must agree on
 * every input; a mismatch is a bug, not a property of the input.
 */
struct CohomologyReport {
    std::string name;
    unsigned n = 0;
    unsigned field_order = 1;
    DimGrid hodge, hodge_conj, bc, aeppli;
    std::vector<size_t> betti;
    bool verdict_numeric = false;
    bool verdict_direct = false;
    bool frolicher_e1 = false;
    /// Dolbeault representative forms per bidegree, in pivot order; filled
    /// only when requested.
    std::optional<std::vector<std::vector<std::vector<Form>>>> representatives;
};

DimGrid dolbeault(const Bicomplex& bc);
DimGrid dolbeault_conjugate(const Bicomplex& bc);
DimGrid bott_chern(const Bicomplex& bc);
DimGrid aeppli(const Bicomplex& bc);
std::vector<size_t> de_rham(const Bicomplex& bc);

/// (numeric, direct); see CohomologyReport.
std::pair<bool, bool> ddbar_verdict(const Bicomplex& bc);

/// True iff the Frolicher spectral sequence degenerates at the first page,
/// i.e. betti_k equals the Dolbeault sum in every degree.
bool frolicher_check(const Bicomplex& bc);

/// Matrix of d = del + delbar from total degree k to k+1; blocks ordered by
/// ascending p within each degree.
Matrix total_differential(const Bicomplex& bc, int k);
size_t total_dim(const Bicomplex& bc, int k);

/// Everything at once (single pass over the grid, parallel across
/// bidegrees). `with_reps` additionally extracts Dolbeault representatives.
CohomologyReport analyze(const Bicomplex& bc, const std::string& name,
                         bool with_reps = false);

}  // namespace ddbar

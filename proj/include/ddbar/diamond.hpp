#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddbar/cohomology.hpp"

namespace ddbar {

/*
 * Dimension-level bookkeeping for blow-ups and projectivized bundles: a
 * Hodge grid h^{p,q} with its Betti vector. Entries outside [0,n]^2 (resp.
 * [0,2n]) read as zero, which is what the shift formulas rely on.
 */
struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<long long>> h;  // [p][q], (n+1)^2

    long long at(int p, int q) const {
        if (p < 0 || q < 0 || p > n || q > n) return 0;
        return h[p][q];
    }
    long long total() const;
};

struct BettiVector {
    int n = 0;
    std::vector<long long> b;  // length 2n+1

    long long at(int k) const {
        if (k < 0 || k > 2 * n) return 0;
        return b[k];
    }
};

struct Diamond {
    HodgeDiamond hodge;
    BettiVector betti;
    int dim() const { return hodge.n; }
};

Diamond make_diamond(int n);
/// The diamond of a point: n = 0, h^{0,0} = 1, b_0 = 1.
Diamond point_diamond();

/// Blow-up along a center of codimension k: the ambient gains k-1 diagonally
/// shifted copies of the center,
///   h^{p,q} += sum_{j=1..k-1} h^{p-j,q-j}(Z),  b_m += sum b_{m-2j}(Z).
/// Codimension 1 is the identity. Throws DimensionMismatch unless
/// dim Z = dim X - k with k >= 1.
Diamond blowup_diamond(const Diamond& ambient, const Diamond& center, int codim);

/// Projectivization of a rank-r bundle: r diagonally shifted copies of the
/// base; output dimension n + r - 1.
Diamond projectivize(const Diamond& base, int rank);

/// True iff h^{p,q} = h^{q,p} everywhere and b_k = sum_{p+q=k} h^{p,q} for
/// every k: the numeric shadow of carrying a Hodge structure.
bool check_hodge_structure(const HodgeDiamond& h, const BettiVector& b);

/// Diamond exported from an engine report, so bicomplex computations and
/// diamond arithmetic compose in pipelines.
Diamond diamond_from_report(const CohomologyReport& r);

/*
 * Flat text format: first line n, then n+1 rows of n+1 entries (row p lists
 * h^{p,0} .. h^{p,n}), then one row of 2n+1 Betti numbers. '#' starts a
 * comment.
 */
Diamond parse_diamond(const std::string& text);
Diamond read_diamond_file(const std::string& path);
std::string write_diamond(const Diamond& d);

}  // namespace ddbar

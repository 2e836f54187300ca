#include "ddbar/cohomology.hpp"

#include "ddbar/parallel.hpp"

namespace ddbar {

namespace {

int grid_n(const Bicomplex& bc) { return static_cast<int>(bc.n); }

DimGrid make_grid(const Bicomplex& bc) {
    return DimGrid(bc.n + 1, std::vector<size_t>(bc.n + 1, 0));
}

// h = dim ker(out) - rank(in) with ker computed as dim - rank
size_t homology_dim(const Matrix& out, const Matrix& in, size_t dim) {
    return dim - out.rank() - in.rank();
}

}  // namespace

DimGrid dolbeault(const Bicomplex& bc) {
    DimGrid g = make_grid(bc);
    parallel_for((bc.n + 1) * (bc.n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (bc.n + 1));
        int q = static_cast<int>(cell % (bc.n + 1));
        g[p][q] = homology_dim(bc.delbar_at(p, q), bc.delbar_at(p, q - 1),
                               bc.dim_at(p, q));
    });
    return g;
}

DimGrid dolbeault_conjugate(const Bicomplex& bc) {
    DimGrid g = make_grid(bc);
    parallel_for((bc.n + 1) * (bc.n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (bc.n + 1));
        int q = static_cast<int>(cell % (bc.n + 1));
        g[p][q] = homology_dim(bc.del_at(p, q), bc.del_at(p - 1, q),
                               bc.dim_at(p, q));
    });
    return g;
}

DimGrid bott_chern(const Bicomplex& bc) {
    DimGrid g = make_grid(bc);
    parallel_for((bc.n + 1) * (bc.n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (bc.n + 1));
        int q = static_cast<int>(cell % (bc.n + 1));
        // ker del ∩ ker delbar as kernel of the stacked matrix
        Matrix stacked = bc.del_at(p, q).vstack(bc.delbar_at(p, q));
        size_t ker = bc.dim_at(p, q) - stacked.rank();
        g[p][q] = ker - bc.deldelbar_at(p - 1, q - 1).rank();
    });
    return g;
}

DimGrid aeppli(const Bicomplex& bc) {
    DimGrid g = make_grid(bc);
    parallel_for((bc.n + 1) * (bc.n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (bc.n + 1));
        int q = static_cast<int>(cell % (bc.n + 1));
        size_t ker = bc.dim_at(p, q) - bc.deldelbar_at(p, q).rank();
        // im del + im delbar as the column space of the concatenation
        Matrix images = bc.del_at(p - 1, q).hstack(bc.delbar_at(p, q - 1));
        g[p][q] = ker - images.rank();
    });
    return g;
}

size_t total_dim(const Bicomplex& bc, int k) {
    size_t d = 0;
    for (int p = 0; p <= grid_n(bc); ++p) d += bc.dim_at(p, k - p);
    return d;
}

Matrix total_differential(const Bicomplex& bc, int k) {
    const int n = grid_n(bc);
    // block offsets by ascending p for degrees k and k+1
    std::vector<size_t> src_off(n + 2, 0), dst_off(n + 2, 0);
    for (int p = 0; p <= n; ++p) {
        src_off[p + 1] = src_off[p] + bc.dim_at(p, k - p);
        dst_off[p + 1] = dst_off[p] + bc.dim_at(p, k + 1 - p);
    }
    Matrix d(dst_off[n + 1], src_off[n + 1], bc.order);
    for (int p = 0; p <= n; ++p) {
        int q = k - p;
        if (bc.dim_at(p, q) == 0) continue;
        Matrix md = bc.del_at(p, q);      // lands in block (p+1, q)
        Matrix mdb = bc.delbar_at(p, q);  // lands in block (p, q+1)
        if (p + 1 <= n && md.rows() > 0)
            for (size_t i = 0; i < md.rows(); ++i)
                for (size_t j = 0; j < md.cols(); ++j)
                    d.at(dst_off[p + 1] + i, src_off[p] + j) = md.at(i, j);
        if (mdb.rows() > 0)
            for (size_t i = 0; i < mdb.rows(); ++i)
                for (size_t j = 0; j < mdb.cols(); ++j)
                    d.at(dst_off[p] + i, src_off[p] + j) = mdb.at(i, j);
    }
    return d;
}

std::vector<size_t> de_rham(const Bicomplex& bc) {
    const int top = 2 * grid_n(bc);
    std::vector<size_t> b(top + 1, 0);
    std::vector<size_t> ranks(top + 2, 0);  // ranks[k] = rank of d: k -> k+1
    parallel_for(top + 1, [&](size_t k) {
        ranks[k] = total_differential(bc, static_cast<int>(k)).rank();
    });
    for (int k = 0; k <= top; ++k) {
        size_t in = k == 0 ? 0 : ranks[k - 1];
        b[k] = total_dim(bc, k) - ranks[k] - in;
    }
    return b;
}

bool frolicher_check(const Bicomplex& bc) {
    DimGrid h = dolbeault(bc);
    std::vector<size_t> b = de_rham(bc);
    for (int k = 0; k <= 2 * grid_n(bc); ++k) {
        size_t sum = 0;
        for (int p = 0; p <= grid_n(bc); ++p) {
            int q = k - p;
            if (q >= 0 && q <= grid_n(bc)) sum += h[p][q];
        }
        if (sum != b[k]) return false;
    }
    return true;
}

namespace {

// Bott-Chern representatives at (p,q): a basis of ker del ∩ ker delbar
// modulo im del delbar, as coordinate columns in the (p,q) basis.
Matrix bott_chern_reps(const Bicomplex& bc, int p, int q) {
    Matrix stacked = bc.del_at(p, q).vstack(bc.delbar_at(p, q));
    Matrix ker = stacked.kernel();
    Matrix image = bc.deldelbar_at(p - 1, q - 1);
    return quotient_basis(ker, image);
}

bool direct_verdict(const Bicomplex& bc) {
    const int n = grid_n(bc);
    std::vector<char> degree_ok(2 * n + 1, 1);
    parallel_for(2 * n + 1, [&](size_t kk) {
        int k = static_cast<int>(kk);
        // embed all degree-k Bott-Chern representatives into the total
        // complex and test that they stay independent modulo im d
        std::vector<size_t> off(n + 2, 0);
        for (int p = 0; p <= n; ++p) off[p + 1] = off[p] + bc.dim_at(p, k - p);
        size_t dim = off[n + 1];
        std::vector<std::vector<Cyclotomic>> cols;
        for (int p = 0; p <= n; ++p) {
            int q = k - p;
            if (q < 0 || q > n || bc.dim_at(p, q) == 0) continue;
            Matrix reps = bott_chern_reps(bc, p, q);
            for (size_t j = 0; j < reps.cols(); ++j) {
                std::vector<Cyclotomic> v(dim, Cyclotomic::zero(bc.order));
                for (size_t i = 0; i < reps.rows(); ++i) v[off[p] + i] = reps.at(i, j);
                cols.push_back(std::move(v));
            }
        }
        Matrix rep_mat = Matrix::from_columns(dim, bc.order, cols);
        Matrix boundaries = total_differential(bc, k - 1);
        // rank([boundaries | reps]) - rank(boundaries) must equal the
        // number of representatives for the map to be injective
        size_t survivors = independent_count(rep_mat, boundaries);
        degree_ok[k] = (survivors == rep_mat.cols()) ? 1 : 0;
    });
    for (char ok : degree_ok)
        if (!ok) return false;
    return true;
}

std::vector<size_t> boundary_ranks(const Bicomplex& bc) {
    const int top = 2 * grid_n(bc);
    std::vector<size_t> ranks(top + 1, 0);
    parallel_for(top + 1, [&](size_t k) {
        ranks[k] = total_differential(bc, static_cast<int>(k)).rank();
    });
    return ranks;
}

bool numeric_verdict(const Bicomplex& bc, const DimGrid& bcg, const DimGrid& ag,
                     const std::vector<size_t>& betti) {
    const int n = grid_n(bc);
    for (int k = 0; k <= 2 * n; ++k) {
        size_t sum = 0;
        for (int p = 0; p <= n; ++p) {
            int q = k - p;
            if (q >= 0 && q <= n) sum += bcg[p][q] + ag[p][q];
        }
        if (sum != 2 * betti[k]) return false;
    }
    return true;
}

}  // namespace

std::pair<bool, bool> ddbar_verdict(const Bicomplex& bc) {
    bool numeric = numeric_verdict(bc, bott_chern(bc), aeppli(bc), de_rham(bc));
    bool direct = direct_verdict(bc);
    return {numeric, direct};
}

CohomologyReport analyze(const Bicomplex& bc, const std::string& name,
                         bool with_reps) {
    const int n = grid_n(bc);
    CohomologyReport r;
    r.name = name;
    r.n = bc.n;
    r.field_order = bc.order;

    // every grid below is assembled from this one set of ranks, so each
    // matrix is eliminated exactly once
    struct CellRanks {
        size_t del = 0, delbar = 0, stacked = 0, dd = 0, imgsum = 0;
    };
    std::vector<std::vector<CellRanks>> ranks(
        n + 1, std::vector<CellRanks>(n + 1));
    parallel_for((n + 1) * (n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (n + 1));
        int q = static_cast<int>(cell % (n + 1));
        CellRanks& c = ranks[p][q];
        c.del = bc.del_at(p, q).rank();
        c.delbar = bc.delbar_at(p, q).rank();
        c.stacked = bc.del_at(p, q).vstack(bc.delbar_at(p, q)).rank();
        c.dd = bc.deldelbar_at(p, q).rank();
        c.imgsum = bc.del_at(p - 1, q).hstack(bc.delbar_at(p, q - 1)).rank();
    });
    auto rk = [&](int p, int q) -> CellRanks {
        if (p < 0 || q < 0 || p > n || q > n) return {};
        return ranks[p][q];
    };
    std::vector<size_t> tot = boundary_ranks(bc);

    r.hodge = make_grid(bc);
    r.hodge_conj = make_grid(bc);
    r.bc = make_grid(bc);
    r.aeppli = make_grid(bc);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            size_t dim = bc.dim_at(p, q);
            r.hodge[p][q] = dim - rk(p, q).delbar - rk(p, q - 1).delbar;
            r.hodge_conj[p][q] = dim - rk(p, q).del - rk(p - 1, q).del;
            r.bc[p][q] = dim - rk(p, q).stacked - rk(p - 1, q - 1).dd;
            r.aeppli[p][q] = dim - rk(p, q).dd - rk(p, q).imgsum;
        }
    r.betti.assign(2 * n + 1, 0);
    for (int k = 0; k <= 2 * n; ++k)
        r.betti[k] = total_dim(bc, k) - tot[k] - (k == 0 ? 0 : tot[k - 1]);

    r.verdict_numeric = numeric_verdict(bc, r.bc, r.aeppli, r.betti);
    r.verdict_direct = direct_verdict(bc);
    r.frolicher_e1 = [&] {
        for (int k = 0; k <= 2 * grid_n(bc); ++k) {
            size_t sum = 0;
            for (int p = 0; p <= grid_n(bc); ++p) {
                int q = k - p;
                if (q >= 0 && q <= grid_n(bc)) sum += r.hodge[p][q];
            }
            if (sum != r.betti[k]) return false;
        }
        return true;
    }();
    if (with_reps) {
        std::vector<std::vector<std::vector<Form>>> reps(
            bc.n + 1, std::vector<std::vector<Form>>(bc.n + 1));
        parallel_for((bc.n + 1) * (bc.n + 1), [&](size_t cell) {
            int p = static_cast<int>(cell / (bc.n + 1));
            int q = static_cast<int>(cell % (bc.n + 1));
            if (bc.dim_at(p, q) == 0) return;
            Matrix ker = bc.delbar_at(p, q).kernel();
            Matrix image = bc.delbar_at(p, q - 1);
            Matrix basis = quotient_basis(ker, image);
            for (size_t j = 0; j < basis.cols(); ++j) {
                Form f = Form::zero(bc.n, bc.order);
                for (size_t i = 0; i < basis.rows(); ++i) {
                    if (basis.at(i, j).is_zero()) continue;
                    f = f + bc.labels[p][q][i].scaled(basis.at(i, j));
                }
                reps[p][q].push_back(std::move(f));
            }
        });
        r.representatives = std::move(reps);
    }
    return r;
}

}  // namespace ddbar

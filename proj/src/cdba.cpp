#include "ddbar/cdba.hpp"

#include <functional>
#include <stdexcept>

#include "ddbar/errors.hpp"
#include "ddbar/parallel.hpp"

namespace ddbar {

namespace {

// d(m) for a single canonical monomial, where dgen gives the differential of
// each degree-1 factor: factor k (0-based position) contributes
// (-1)^k prefix ^ dgen(factor) ^ suffix.
Form derive_monomial(const Cdba& x, const Monomial& m,
                     const std::function<Form(bool anti, unsigned idx)>& dgen) {
    const unsigned n = x.generators();
    const unsigned order = x.field_order();
    Form out = Form::zero(n, order);
    int position = 0;
    for (int pass = 0; pass < 2; ++pass) {
        bool anti = pass == 1;
        uint32_t bits = anti ? m.anti : m.holo;
        while (bits) {
            unsigned i = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            Form dg = dgen(anti, i + 1);
            if (!dg.is_zero()) {
                uint32_t bit = 1u << i;
                Monomial prefix, suffix;
                if (!anti) {
                    prefix = Monomial{m.holo & (bit - 1), 0};
                    suffix = Monomial{m.holo & ~((bit << 1) - 1), m.anti};
                } else {
                    prefix = Monomial{m.holo, m.anti & (bit - 1)};
                    suffix = Monomial{0, m.anti & ~((bit << 1) - 1)};
                }
                Form term = wedge(Form::monomial(n, order, prefix),
                                  wedge(dg, Form::monomial(n, order, suffix)));
                if (position & 1) term = -term;
                out = out + term;
            }
            ++position;
        }
    }
    return out;
}

Form derive(const Cdba& x, const Form& f,
            const std::function<Form(bool anti, unsigned idx)>& dgen) {
    if (!f.is_bihomogeneous())
        throw NonHomogeneousInput("differential of a non-bihomogeneous form");
    Form out = Form::zero(x.generators(), x.field_order());
    for (const auto& [m, c] : f.terms())
        out = out + derive_monomial(x, m, dgen).scaled(c);
    return out;
}

}  // namespace

Form apply_del(const Cdba& x, const Form& f) {
    return derive(x, f, [&x](bool anti, unsigned i) {
        // del bphi^i = conjugate(delbar phi^i)
        return anti ? conjugate_form(x.delbar_generator(i - 1))
                    : x.del_generator(i - 1);
    });
}

Form apply_delbar(const Cdba& x, const Form& f) {
    return derive(x, f, [&x](bool anti, unsigned i) {
        // delbar bphi^i = conjugate(del phi^i)
        return anti ? conjugate_form(x.del_generator(i - 1))
                    : x.delbar_generator(i - 1);
    });
}

Form apply_d(const Cdba& x, const Form& f) {
    return apply_del(x, f) + apply_delbar(x, f);
}

Cdba::Cdba(unsigned n, unsigned order, std::vector<Form> del_gen,
           std::vector<Form> delbar_gen)
    : n_(n), order_(order), del_gen_(std::move(del_gen)),
      delbar_gen_(std::move(delbar_gen)) {
    if (n_ == 0 || n_ > 16)
        throw GeneratorCountMismatch("generator count must be in [1,16]");
    if (del_gen_.size() != n_ || delbar_gen_.size() != n_)
        throw GeneratorCountMismatch("one structure equation slot per generator expected");
    for (unsigned i = 0; i < n_; ++i) {
        const Form& d = del_gen_[i];
        const Form& db = delbar_gen_[i];
        if (d.generators() != n_ || d.order() != order_ ||
            db.generators() != n_ || db.order() != order_)
            throw GeneratorCountMismatch("structure equation over the wrong algebra");
        if (!d.is_zero() && !d.has_bidegree(2, 0))
            throw BadBidegree("del phi" + std::to_string(i + 1) +
                              " must be a (2,0)-form, got " + d.str());
        if (!db.is_zero() && !db.has_bidegree(1, 1))
            throw BadBidegree("delbar phi" + std::to_string(i + 1) +
                              " must be a (1,1)-form, got " + db.str());
    }
    for (unsigned i = 0; i < n_; ++i) {
        Form r = apply_del(*this, del_gen_[i]);
        if (!r.is_zero())
            throw IntegrabilityFailure(i + 1, "del^2 = 0", r.str());
        r = apply_delbar(*this, delbar_gen_[i]);
        if (!r.is_zero())
            throw IntegrabilityFailure(i + 1, "delbar^2 = 0", r.str());
        r = apply_del(*this, delbar_gen_[i]) + apply_delbar(*this, del_gen_[i]);
        if (!r.is_zero())
            throw IntegrabilityFailure(i + 1, "del delbar + delbar del = 0", r.str());
    }
}

namespace {

// coordinates of a bihomogeneous form in the lexicographic monomial basis
std::vector<Cyclotomic> coordinates(const Form& f, const std::vector<Monomial>& basis,
                                    unsigned order) {
    std::vector<Cyclotomic> v(basis.size(), Cyclotomic::zero(order));
    for (size_t i = 0; i < basis.size(); ++i) v[i] = f.coefficient(basis[i]);
    return v;
}

}  // namespace

Bicomplex compile(const Cdba& x) {
    const unsigned n = x.generators();
    const unsigned order = x.field_order();
    Bicomplex bc;
    bc.n = n;
    bc.order = order;
    bc.dims.assign(n + 1, std::vector<size_t>(n + 1, 0));
    bc.del.assign(n + 1, std::vector<Matrix>(n + 1));
    bc.delbar.assign(n + 1, std::vector<Matrix>(n + 1));
    bc.labels.assign(n + 1, std::vector<std::vector<Form>>(n + 1));

    std::vector<std::vector<std::vector<Monomial>>> bases(
        n + 1, std::vector<std::vector<Monomial>>(n + 1));
    for (int p = 0; p <= static_cast<int>(n); ++p)
        for (int q = 0; q <= static_cast<int>(n); ++q) {
            bases[p][q] = bidegree_basis(n, p, q);
            bc.dims[p][q] = bases[p][q].size();
            for (const Monomial& m : bases[p][q])
                bc.labels[p][q].push_back(Form::monomial(n, order, m));
        }

    // independent per-bidegree outputs, evaluated in parallel
    parallel_for((n + 1) * (n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (n + 1));
        int q = static_cast<int>(cell % (n + 1));
        const auto& src = bases[p][q];
        const auto del_rows = bc.dim_at(p + 1, q);
        const auto delbar_rows = bc.dim_at(p, q + 1);
        Matrix md(del_rows, src.size(), order);
        Matrix mdb(delbar_rows, src.size(), order);
        for (size_t j = 0; j < src.size(); ++j) {
            Form mono = Form::monomial(n, order, src[j]);
            if (del_rows > 0) {
                auto col = coordinates(apply_del(x, mono), bases[p + 1][q], order);
                for (size_t i = 0; i < del_rows; ++i) md.at(i, j) = col[i];
            }
            if (delbar_rows > 0) {
                auto col = coordinates(apply_delbar(x, mono), bases[p][q + 1], order);
                for (size_t i = 0; i < delbar_rows; ++i) mdb.at(i, j) = col[i];
            }
        }
        bc.del[p][q] = std::move(md);
        bc.delbar[p][q] = std::move(mdb);
    });

    bc.validate();
    return bc;
}

size_t Bicomplex::dim_at(int p, int q) const {
    if (!in_range(p, q)) return 0;
    return dims[p][q];
}

Matrix Bicomplex::del_at(int p, int q) const {
    if (!in_range(p, q)) return Matrix(dim_at(p + 1, q), 0, order);
    return del[p][q];
}

Matrix Bicomplex::delbar_at(int p, int q) const {
    if (!in_range(p, q)) return Matrix(dim_at(p, q + 1), 0, order);
    return delbar[p][q];
}

Matrix Bicomplex::deldelbar_at(int p, int q) const {
    return del_at(p, q + 1) * delbar_at(p, q);
}

void Bicomplex::validate() const {
    const int nn = static_cast<int>(n);
    if (dims.size() != n + 1 || del.size() != n + 1 || delbar.size() != n + 1)
        throw std::logic_error("bicomplex: grid size mismatch");
    for (int p = 0; p <= nn; ++p)
        for (int q = 0; q <= nn; ++q) {
            const Matrix& d = del[p][q];
            const Matrix& db = delbar[p][q];
            if (d.rows() != dim_at(p + 1, q) || d.cols() != dims[p][q])
                throw std::logic_error("bicomplex: del matrix shape mismatch");
            if (db.rows() != dim_at(p, q + 1) || db.cols() != dims[p][q])
                throw std::logic_error("bicomplex: delbar matrix shape mismatch");
        }
    for (int p = 0; p <= nn; ++p)
        for (int q = 0; q <= nn; ++q) {
            if (!(del_at(p + 1, q) * del_at(p, q)).is_zero())
                throw std::logic_error("bicomplex: del^2 != 0");
            if (!(delbar_at(p, q + 1) * delbar_at(p, q)).is_zero())
                throw std::logic_error("bicomplex: delbar^2 != 0");
            Matrix anti = del_at(p, q + 1) * delbar_at(p, q) +
                          delbar_at(p + 1, q) * del_at(p, q);
            if (!anti.is_zero())
                throw std::logic_error("bicomplex: del delbar + delbar del != 0");
        }
}

}  // namespace ddbar

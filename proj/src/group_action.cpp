#include "ddbar/group_action.hpp"

#include <deque>

#include "ddbar/errors.hpp"
#include "ddbar/parallel.hpp"

namespace ddbar {

namespace {

Matrix action_matrix(const Cdba& x, const GeneratorAction& g) {
    const unsigned n = x.generators();
    const unsigned order = x.field_order();
    if (g.images.size() != n)
        throw GeneratorCountMismatch("action must give an image per generator");
    Matrix m(n, n, order);
    for (unsigned i = 0; i < n; ++i) {
        const Form& img = g.images[i];
        if (img.is_zero() || !img.has_bidegree(1, 0))
            throw BadBidegree("action image of phi" + std::to_string(i + 1) +
                              " must be a nonzero (1,0)-form");
        for (const auto& [mono, c] : img.terms()) {
            unsigned j = static_cast<unsigned>(std::countr_zero(mono.holo));
            m.at(i, j) = c;
        }
    }
    return m;
}

}  // namespace

Form apply_action(const Matrix& m, const Form& f) {
    const unsigned n = static_cast<unsigned>(m.rows());
    const unsigned order = m.order();
    Form out = Form::zero(n, order);
    for (const auto& [mono, c] : f.terms()) {
        Form prod = Form::scalar(n, order, c);
        for (int pass = 0; pass < 2; ++pass) {
            bool anti = pass == 1;
            uint32_t bits = anti ? mono.anti : mono.holo;
            while (bits) {
                unsigned i = static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                Form img(n, order);
                for (unsigned j = 0; j < n; ++j) {
                    const Cyclotomic& a = m.at(i, j);
                    if (a.is_zero()) continue;
                    img.add_term(anti ? Monomial{0, 1u << j} : Monomial{1u << j, 0},
                                 anti ? a.conj() : a);
                }
                prod = wedge(prod, img);
            }
        }
        out = out + prod;
    }
    return out;
}

CheckedAction validate_action(const Cdba& x, const GeneratorAction& g) {
    const unsigned n = x.generators();
    Matrix m = action_matrix(x, g);
    if (m.rank() != n)
        throw NotInvertible("action '" + g.name +
                            "' is singular on the degree-one block");
    for (unsigned i = 0; i < n; ++i) {
        Form phi = Form::generator(n, x.field_order(), i + 1);
        Form r = apply_action(m, apply_del(x, phi)) - apply_del(x, apply_action(m, phi));
        if (!r.is_zero()) throw NotChainMap(i + 1, r.str());
        r = apply_action(m, apply_delbar(x, phi)) -
            apply_delbar(x, apply_action(m, phi));
        if (!r.is_zero()) throw NotChainMap(i + 1, r.str());
    }
    return CheckedAction{g.name, std::move(m)};
}

GroupAction close_group(const Cdba& x, const std::vector<GeneratorAction>& gens,
                        size_t max_order) {
    GroupAction group;
    group.n = x.generators();
    group.order = x.field_order();
    std::vector<Matrix> mats;
    for (const auto& g : gens) mats.push_back(validate_action(x, g).matrix);

    auto contains = [&](const Matrix& m) {
        for (const auto& e : group.elements)
            if (e == m) return true;
        return false;
    };
    group.elements.push_back(Matrix::identity(group.n, group.order));
    std::deque<Matrix> work(mats.begin(), mats.end());
    while (!work.empty()) {
        Matrix m = std::move(work.front());
        work.pop_front();
        if (contains(m)) continue;
        group.elements.push_back(m);
        if (group.elements.size() > max_order)
            throw GroupClosureOverflow("group closure exceeds " +
                                       std::to_string(max_order) + " elements");
        for (const auto& g : mats) {
            work.push_back(m * g);
            work.push_back(g * m);
        }
    }
    return group;
}

namespace {

// matrix of g* on the monomial basis of bidegree (p,q)
Matrix action_on_bidegree(const GroupAction& group, const Matrix& g,
                          const std::vector<Monomial>& basis) {
    const unsigned n = group.n;
    const unsigned order = group.order;
    Matrix m(basis.size(), basis.size(), order);
    for (size_t j = 0; j < basis.size(); ++j) {
        Form img = apply_action(g, Form::monomial(n, order, basis[j]));
        for (size_t i = 0; i < basis.size(); ++i) m.at(i, j) = img.coefficient(basis[i]);
    }
    return m;
}

}  // namespace

Matrix reynolds_matrix(const GroupAction& group, int p, int q) {
    std::vector<Monomial> basis = bidegree_basis(group.n, p, q);
    Matrix sum(basis.size(), basis.size(), group.order);
    for (const auto& g : group.elements)
        sum = sum + action_on_bidegree(group, g, basis);
    return sum.scaled(Cyclotomic::from_rational(
        make_rational(1, BigInt(static_cast<unsigned long>(group.size()))),
        group.order));
}

Bicomplex invariant_subcomplex(const Bicomplex& full, const GroupAction& group) {
    const unsigned n = full.n;
    const int nn = static_cast<int>(n);
    if (group.n != n) throw GeneratorCountMismatch("action/bicomplex generator mismatch");
    if (group.order != full.order) throw OrderMismatch("action/bicomplex field mismatch");

    Bicomplex sub;
    sub.n = n;
    sub.order = full.order;
    sub.dims.assign(n + 1, std::vector<size_t>(n + 1, 0));
    sub.del.assign(n + 1, std::vector<Matrix>(n + 1));
    sub.delbar.assign(n + 1, std::vector<Matrix>(n + 1));
    sub.labels.assign(n + 1, std::vector<std::vector<Form>>(n + 1));

    // invariant basis per bidegree: kernel of (P - I) for the Reynolds
    // projector P, extracted with the deterministic pivot rule of kernel()
    std::vector<std::vector<Matrix>> inv_basis(n + 1, std::vector<Matrix>(n + 1));
    parallel_for((n + 1) * (n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (n + 1));
        int q = static_cast<int>(cell % (n + 1));
        size_t dim = bidegree_basis(n, p, q).size();
        Matrix reynolds = reynolds_matrix(group, p, q);
        Matrix b = (reynolds - Matrix::identity(dim, full.order)).kernel();
        inv_basis[p][q] = b;
        sub.dims[p][q] = b.cols();
        for (size_t j = 0; j < b.cols(); ++j) {
            Form f = Form::zero(n, full.order);
            for (size_t i = 0; i < dim; ++i) {
                if (b.at(i, j).is_zero()) continue;
                f = f + full.labels[p][q][i].scaled(b.at(i, j));
            }
            sub.labels[p][q].push_back(std::move(f));
        }
    });

    // restrict the differentials: del B_(p,q) lies in the span of B_(p+1,q)
    // because the action commutes with del, so the solve is always consistent
    parallel_for((n + 1) * (n + 1), [&](size_t cell) {
        int p = static_cast<int>(cell / (n + 1));
        int q = static_cast<int>(cell % (n + 1));
        Matrix image_del = full.del_at(p, q) * inv_basis[p][q];
        Matrix image_delbar = full.delbar_at(p, q) * inv_basis[p][q];
        Matrix bdel = (p + 1 <= nn) ? inv_basis[p + 1][q]
                                    : Matrix(0, 0, full.order);
        Matrix bdelbar = (q + 1 <= nn) ? inv_basis[p][q + 1]
                                       : Matrix(0, 0, full.order);
        size_t del_rows = (p + 1 <= nn) ? sub.dims[p + 1][q] : 0;
        size_t delbar_rows = (q + 1 <= nn) ? sub.dims[p][q + 1] : 0;
        if (p + 1 <= nn)
            sub.del[p][q] = bdel.solve(image_del);
        else
            sub.del[p][q] = Matrix(del_rows, sub.dims[p][q], full.order);
        if (q + 1 <= nn)
            sub.delbar[p][q] = bdelbar.solve(image_delbar);
        else
            sub.delbar[p][q] = Matrix(delbar_rows, sub.dims[p][q], full.order);
    });

    sub.validate();
    return sub;
}

std::vector<DifferentialRelation> invariant_differentials(const Bicomplex& sub) {
    std::vector<DifferentialRelation> out;
    const int n = static_cast<int>(sub.n);
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            Matrix md = sub.del_at(p, q);
            Matrix mdb = sub.delbar_at(p, q);
            for (size_t j = 0; j < sub.dims[p][q]; ++j) {
                Form value = Form::zero(sub.n, sub.order);
                for (size_t i = 0; i < md.rows(); ++i)
                    if (!md.at(i, j).is_zero())
                        value = value + sub.labels[p + 1][q][i].scaled(md.at(i, j));
                for (size_t i = 0; i < mdb.rows(); ++i)
                    if (!mdb.at(i, j).is_zero())
                        value = value + sub.labels[p][q + 1][i].scaled(mdb.at(i, j));
                if (!value.is_zero())
                    out.push_back({p, q, sub.labels[p][q][j], std::move(value)});
            }
        }
    }
    return out;
}

}  // namespace ddbar

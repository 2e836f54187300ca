#include "ddbar/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "ddbar/errors.hpp"

namespace ddbar {

Matrix::Matrix(size_t rows, size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order),
      a_(rows * cols, Cyclotomic::zero(order)) {}

Matrix Matrix::identity(size_t k, unsigned order) {
    Matrix m(k, k, order);
    for (size_t i = 0; i < k; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

Matrix Matrix::from_columns(size_t rows, unsigned order,
                            const std::vector<std::vector<Cyclotomic>>& cols) {
    Matrix m(rows, cols.size(), order);
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::logic_error("from_columns: column length mismatch");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Cyclotomic> Matrix::column(size_t j) const {
    std::vector<Cyclotomic> c(rows_, Cyclotomic::zero(order_));
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void Matrix::check_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::logic_error("matrix shape mismatch");
    if (order_ != rhs.order_)
        throw OrderMismatch("matrix coefficient fields differ");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("matrix product shape mismatch");
    if (order_ != rhs.order_) throw OrderMismatch("matrix coefficient fields differ");
    Matrix out(rows_, rhs.cols_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + at(i, k) * rhs.at(k, j);
            }
        }
    return out;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
    Matrix out = *this;
    for (auto& x : out.a_) x = x * c;
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && order_ == rhs.order_ &&
           a_ == rhs.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::logic_error("vstack column mismatch");
    if (order_ != other.order_) throw OrderMismatch("vstack field mismatch");
    Matrix out(rows_ + other.rows_, cols_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (size_t i = 0; i < other.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::logic_error("hstack row mismatch");
    if (order_ != other.order_) throw OrderMismatch("hstack field mismatch");
    Matrix out(rows_, cols_ + other.cols_, order_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < other.cols_; ++j)
            out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    Matrix m = *this;
    const size_t nr = rows_, nc = cols_;
    // clear denominators row by row (rank-preserving); the Bareiss updates
    // below then stay within integer-coefficient values, where the exact
    // divisions are cheap
    for (size_t i = 0; i < nr; ++i) {
        BigInt l = 1;
        for (size_t j = 0; j < nc; ++j)
            for (const Rational& c : m.at(i, j).coeffs())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        if (l == 1) continue;
        Cyclotomic scale = Cyclotomic::from_rational(Rational(l), order_);
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = m.at(i, j) * scale;
    }
    size_t r = 0;
    Cyclotomic prev = Cyclotomic::one(order_);
    std::vector<size_t> row_nnz(nr), col_nnz(nc);
    while (r < nr && r < nc) {
        // Markowitz pivot: nonzero entry minimizing (row_nnz-1)*(col_nnz-1)
        // over the trailing submatrix, ties broken by (row, col).
        for (size_t i = r; i < nr; ++i) {
            row_nnz[i] = 0;
            for (size_t j = r; j < nc; ++j)
                if (!m.at(i, j).is_zero()) ++row_nnz[i];
        }
        for (size_t j = r; j < nc; ++j) {
            col_nnz[j] = 0;
            for (size_t i = r; i < nr; ++i)
                if (!m.at(i, j).is_zero()) ++col_nnz[j];
        }
        bool found = false;
        size_t pi = 0, pj = 0, best = 0;
        for (size_t i = r; i < nr; ++i) {
            for (size_t j = r; j < nc; ++j) {
                if (m.at(i, j).is_zero()) continue;
                size_t score = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if (!found || score < best) {
                    found = true;
                    best = score;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        if (pi != r)
            for (size_t j = 0; j < nc; ++j) std::swap(m.at(r, j), m.at(pi, j));
        if (pj != r)
            for (size_t i = 0; i < nr; ++i) std::swap(m.at(i, r), m.at(i, pj));
        const Cyclotomic pivot = m.at(r, r);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = r + 1; j < nc; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, r) * m.at(r, j)) / prev;
            m.at(i, r) = Cyclotomic::zero(order_);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

namespace {

struct Echelon {
    Matrix m;                     // reduced row echelon form
    std::vector<size_t> pivot_cols;
    std::vector<size_t> pivot_rows;  // pivot_rows[k] is the row of pivot_cols[k]
};

Echelon rref(const Matrix& in) {
    Echelon e{in, {}, {}};
    Matrix& m = e.m;
    size_t pr = 0;
    for (size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        size_t sel = pr;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(sel, j));
        Cyclotomic inv = m.at(pr, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(pr, j);
        }
        e.pivot_cols.push_back(c);
        e.pivot_rows.push_back(pr);
        ++pr;
    }
    return e;
}

}  // namespace

Matrix Matrix::kernel() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclotomic> v(cols_, Cyclotomic::zero(order_));
        v[f] = Cyclotomic::one(order_);
        for (size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.m.at(e.pivot_rows[k], f);
        basis.push_back(std::move(v));
    }
    return from_columns(cols_, order_, basis);
}

Matrix Matrix::solve(const Matrix& rhs) const {
    if (rhs.rows() != rows_) throw std::logic_error("solve: rhs row mismatch");
    Echelon e = rref(hstack(rhs));
    Matrix x(cols_, rhs.cols(), order_);
    for (size_t k = 0; k < e.pivot_cols.size(); ++k) {
        size_t c = e.pivot_cols[k];
        if (c >= cols_)
            throw std::logic_error("solve: inconsistent linear system");
        for (size_t j = 0; j < rhs.cols(); ++j)
            x.at(c, j) = e.m.at(e.pivot_rows[k], cols_ + j);
    }
    return x;
}

namespace {

// incremental column elimination: normalized reducers with unit pivots
struct Reducer {
    size_t pivot;
    std::vector<Cyclotomic> v;  // v[pivot] = 1
};

class ColumnFeeder {
public:
    explicit ColumnFeeder(size_t dim) : dim_(dim) {}

    // reduce v against the accumulated set; absorb and report true when a
    // new pivot appears
    bool feed(std::vector<Cyclotomic> v) {
        for (const auto& red : reducers_) {
            if (v[red.pivot].is_zero()) continue;
            Cyclotomic f = v[red.pivot];
            for (size_t i = 0; i < dim_; ++i) v[i] = v[i] - f * red.v[i];
        }
        size_t p = 0;
        while (p < dim_ && v[p].is_zero()) ++p;
        if (p == dim_) return false;
        Cyclotomic inv = v[p].inverse();
        for (size_t i = 0; i < dim_; ++i) v[i] = v[i] * inv;
        reducers_.push_back(Reducer{p, std::move(v)});
        return true;
    }

    const std::vector<Reducer>& reducers() const { return reducers_; }

private:
    size_t dim_;
    std::vector<Reducer> reducers_;
};

}  // namespace

size_t independent_count(const Matrix& candidates, const Matrix& modulus) {
    if (candidates.rows() != modulus.rows())
        throw std::logic_error("independent_count: row mismatch");
    ColumnFeeder feeder(candidates.rows());
    for (size_t j = 0; j < modulus.cols(); ++j) feeder.feed(modulus.column(j));
    size_t count = 0;
    for (size_t j = 0; j < candidates.cols(); ++j)
        if (feeder.feed(candidates.column(j))) ++count;
    return count;
}

Matrix quotient_basis(const Matrix& candidates, const Matrix& modulus) {
    if (candidates.rows() != modulus.rows())
        throw std::logic_error("quotient_basis: row mismatch");
    const size_t dim = candidates.rows();
    const unsigned order = candidates.order();

    ColumnFeeder feeder(dim);
    for (size_t j = 0; j < modulus.cols(); ++j) feeder.feed(modulus.column(j));
    std::vector<size_t> rep_idx;
    for (size_t j = 0; j < candidates.cols(); ++j)
        if (feeder.feed(candidates.column(j)))
            rep_idx.push_back(feeder.reducers().size() - 1);
    const std::vector<Reducer>& reducers = feeder.reducers();
    // inter-reduce the surviving representatives against all pivots so the
    // printed basis is in reduced echelon form
    std::vector<std::vector<Cyclotomic>> reps;
    for (size_t k : rep_idx) {
        std::vector<Cyclotomic> v = reducers[k].v;
        for (size_t r = 0; r < reducers.size(); ++r) {
            if (r == k) continue;
            if (v[reducers[r].pivot].is_zero()) continue;
            Cyclotomic f = v[reducers[r].pivot];
            for (size_t i = 0; i < dim; ++i) v[i] = v[i] - f * reducers[r].v[i];
        }
        reps.push_back(std::move(v));
    }
    return Matrix::from_columns(dim, order, reps);
}

}  // namespace ddbar

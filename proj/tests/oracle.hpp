#pragma once

/*
 * Test-only oracles, deliberately naive and independent of the engine's
 * implementation paths:
 *   - naive_rank: textbook Gaussian elimination with field division and
 *     first-nonzero pivoting (the engine uses fraction-free Bareiss with
 *     sparsity pivoting);
 *   - poly_mul / poly_divmod: straightforward dense polynomial arithmetic
 *     over Q for checking the cyclotomic polynomials.
 */

#include <utility>
#include <vector>

#include "ddbar/matrix.hpp"
#include "ddbar/rational.hpp"

namespace oracle {

inline size_t naive_rank(ddbar::Matrix m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            ddbar::Cyclotomic f = m.at(i, c) / m.at(r, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// h = dim ker(out) - rank(in), everything through the naive rank
inline size_t naive_homology(const ddbar::Matrix& out_map, const ddbar::Matrix& in_map,
                             size_t dim) {
    return dim - naive_rank(out_map) - naive_rank(in_map);
}

using Poly = std::vector<ddbar::Rational>;  // ascending, may carry trailing zeros

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    Poly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        ddbar::Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
        if (a.size() < b.size()) break;
    }
    poly_trim(q);
    return {q, a};
}

// x^n - 1
inline Poly poly_xn_minus_1(unsigned n) {
    Poly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace oracle

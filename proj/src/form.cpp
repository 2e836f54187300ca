#include "ddbar/form.hpp"

#include <sstream>

#include "ddbar/errors.hpp"

namespace ddbar {

bool subset_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    uint32_t x = a ^ b;
    int e = std::countr_zero(x);
    if (a & (1u << e)) {
        // a owns the first differing index; a precedes unless b is exhausted
        // beyond it (then b is a proper prefix of a).
        return (b >> e) != 0;
    }
    return (a >> e) == 0;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    int ha = a.holo_degree(), hb = b.holo_degree();
    if (ha != hb) return ha > hb;  // (p,q) before (p',q') when p > p' at equal total degree
    if (a.holo != b.holo) return subset_lex_less(a.holo, b.holo);
    return subset_lex_less(a.anti, b.anti);
}

int merge_sign(uint32_t a, uint32_t b) {
    // count inversions: pairs (x in a, y in b) with x > y
    int inv = 0;
    uint32_t rest = b;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

std::pair<int, Monomial> wedge_monomials(const Monomial& a, const Monomial& b) {
    if ((a.holo & b.holo) || (a.anti & b.anti)) return {0, Monomial{}};
    int sign = merge_sign(a.holo, b.holo) * merge_sign(a.anti, b.anti);
    // moving b's holomorphic block left past a's antiholomorphic block
    if ((a.anti_degree() * b.holo_degree()) & 1) sign = -sign;
    return {sign, Monomial{a.holo | b.holo, a.anti | b.anti}};
}

namespace {

void subsets_of_size(unsigned n, int k, std::vector<uint32_t>& out) {
    // k-subsets of {1..n} in lexicographic order of ascending index tuples
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    if (k == 0) {
        out.push_back(0);
        return;
    }
    if (k > static_cast<int>(n)) return;
    while (true) {
        uint32_t mask = 0;
        for (int v : idx) mask |= 1u << (v - 1);
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(n) - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Monomial> bidegree_basis(unsigned n, int p, int q) {
    std::vector<Monomial> out;
    if (p < 0 || q < 0 || p > static_cast<int>(n) || q > static_cast<int>(n))
        return out;
    std::vector<uint32_t> holo, anti;
    subsets_of_size(n, p, holo);
    subsets_of_size(n, q, anti);
    out.reserve(holo.size() * anti.size());
    for (uint32_t h : holo)
        for (uint32_t a : anti) out.push_back(Monomial{h, a});
    return out;
}

Form Form::monomial(unsigned n, unsigned order, Monomial m) {
    return monomial(n, order, m, Cyclotomic::one(order));
}

Form Form::monomial(unsigned n, unsigned order, Monomial m, Cyclotomic coeff) {
    Form f(n, order);
    f.add_term(m, coeff);
    return f;
}

Form Form::scalar(unsigned n, unsigned order, Cyclotomic c) {
    return monomial(n, order, Monomial{}, std::move(c));
}

Form Form::generator(unsigned n, unsigned order, unsigned i) {
    return monomial(n, order, Monomial{1u << (i - 1), 0});
}

Form Form::conj_generator(unsigned n, unsigned order, unsigned i) {
    return monomial(n, order, Monomial{0, 1u << (i - 1)});
}

Cyclotomic Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Cyclotomic::zero(order_);
    return it->second;
}

std::optional<std::pair<int, int>> Form::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto bd = terms_.begin()->first.bidegree();
    for (const auto& [m, c] : terms_)
        if (m.bidegree() != bd) return std::nullopt;
    return bd;
}

bool Form::is_bihomogeneous() const {
    return terms_.empty() || bidegree().has_value();
}

bool Form::has_bidegree(int p, int q) const {
    auto bd = bidegree();
    return bd && bd->first == p && bd->second == q;
}

void Form::check_compatible(const Form& rhs) const {
    if (n_ != rhs.n_)
        throw GeneratorCountMismatch("forms over " + std::to_string(n_) + " vs " +
                                     std::to_string(rhs.n_) + " generators");
    if (order_ != rhs.order_)
        throw OrderMismatch("form coefficient fields differ: Q(zeta_" +
                            std::to_string(order_) + ") vs Q(zeta_" +
                            std::to_string(rhs.order_) + ")");
}

void Form::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Form Form::operator-() const {
    Form out(n_, order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Form Form::operator+(const Form& rhs) const {
    check_compatible(rhs);
    Form out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Form Form::operator-(const Form& rhs) const {
    check_compatible(rhs);
    Form out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Form Form::scaled(const Cyclotomic& c) const {
    Form out(n_, order_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.add_term(m, x * c);
    return out;
}

bool Form::operator==(const Form& rhs) const {
    return n_ == rhs.n_ && order_ == rhs.order_ && terms_ == rhs.terms_;
}

Form wedge(const Form& a, const Form& b) {
    if (a.generators() != b.generators())
        throw GeneratorCountMismatch("wedge of forms over different generator counts");
    if (a.order() != b.order())
        throw OrderMismatch("wedge of forms over different coefficient fields");
    Form out(a.generators(), a.order());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [sign, m] = wedge_monomials(ma, mb);
            if (sign == 0) continue;
            Cyclotomic c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

Form conjugate_form(const Form& a) {
    Form out(a.generators(), a.order());
    for (const auto& [m, c] : a.terms()) {
        Cyclotomic cc = c.conj();
        if ((m.holo_degree() * m.anti_degree()) & 1) cc = -cc;
        out.add_term(Monomial{m.anti, m.holo}, cc);
    }
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.holo == 0 && m.anti == 0) return "1";
    std::ostringstream out;
    out << "phi[";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (m.holo & (1u << i)) {
            if (!first) out << " ";
            out << (i + 1);
            first = false;
        }
    }
    for (int i = 0; i < 32; ++i) {
        if (m.anti & (1u << i)) {
            if (!first) out << " ";
            out << "~" << (i + 1);
            first = false;
        }
    }
    out << "]";
    return out.str();
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (c.is_rational() && c.rational_value() < 0) {
            cs = (-c).str();
            negated = true;
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        bool unit = (cs == "1");
        bool scalar_term = (m.holo == 0 && m.anti == 0);
        if (!unit || scalar_term) {
            if (c.is_rational())
                out << cs;
            else
                out << "(" << cs << ")";
            if (!scalar_term) out << " ";
        }
        if (!scalar_term) out << monomial_str(m);
        first = false;
    }
    return out.str();
}

}  // namespace ddbar

#include "ddbar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace ddbar {

namespace {

// Dense polynomials over Q, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly scale(Poly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

// Precomputed data for one field order, immutable once built.
struct Context {
    unsigned order = 1;
    size_t deg = 1;
    Poly phi;                                  // Phi_N, monic
    std::vector<std::vector<Rational>> zpow;   // zpow[m] = zeta^m reduced, length deg
};

Poly cyclo_poly_impl(unsigned n, std::map<unsigned, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(num, cyclo_poly_impl(d, memo));
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    memo.emplace(n, num);
    return num;
}

std::shared_ptr<const Context> context_for(unsigned order) {
    static std::mutex mtx;
    static std::map<unsigned, std::shared_ptr<const Context>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<Context>();
    ctx->order = order;
    ctx->phi = [&] {
        static std::map<unsigned, Poly> memo;
        return cyclo_poly_impl(order, memo);
    }();
    ctx->deg = ctx->phi.size() - 1;
    ctx->zpow.resize(order);
    Poly cur = {Rational(1)};  // zeta^0
    for (unsigned m = 0; m < order; ++m) {
        std::vector<Rational> row(ctx->deg);
        for (size_t i = 0; i < cur.size(); ++i) row[i] = cur[i];
        ctx->zpow[m] = std::move(row);
        // multiply by x, reduce mod phi
        cur.insert(cur.begin(), Rational(0));
        cur = divmod(cur, ctx->phi).second;
    }
    cache.emplace(order, ctx);
    return cache.at(order);
}

std::vector<Rational> reduced(const Poly& p, const Context& ctx) {
    Poly r = p;
    trim(r);
    if (r.size() > ctx.deg) r = divmod(r, ctx.phi).second;
    std::vector<Rational> out(ctx.deg);
    for (size_t i = 0; i < r.size(); ++i) out[i] = r[i];
    return out;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    return context_for(n)->phi;
}

Cyclotomic Cyclotomic::zero(unsigned order) {
    auto ctx = context_for(order);
    return Cyclotomic(order, std::vector<Rational>(ctx->deg));
}

Cyclotomic Cyclotomic::one(unsigned order) {
    return from_rational(Rational(1), order);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, unsigned order) {
    auto ctx = context_for(order);
    std::vector<Rational> c(ctx->deg);
    c[0] = r;
    // In Q(zeta_1) the residue of a constant c mod (x - 1) is still c, and for
    // every N >= 2 the constant term is already reduced.
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_int(long v, unsigned order) {
    return from_rational(Rational(v), order);
}

Cyclotomic Cyclotomic::zeta(unsigned order) { return zeta_power(order, 1); }

Cyclotomic Cyclotomic::zeta_power(unsigned order, long k) {
    auto ctx = context_for(order);
    long m = k % static_cast<long>(order);
    if (m < 0) m += order;
    return Cyclotomic(order, ctx->zpow[static_cast<size_t>(m)]);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void Cyclotomic::check_same_order(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_)
        throw OrderMismatch("cyclotomic orders differ: " + std::to_string(order_) +
                            " vs " + std::to_string(rhs.order_));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    auto ctx = context_for(order_);
    Poly a(coeffs_.begin(), coeffs_.end());
    Poly b(rhs.coeffs_.begin(), rhs.coeffs_.end());
    trim(a);
    trim(b);
    return Cyclotomic(order_, reduced(mul(a, b), *ctx));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
    auto ctx = context_for(order_);
    // Extended Euclid on (b, Phi_N): maintain r = t*b (mod Phi_N). Phi_N is
    // irreducible over Q, so the gcd is a nonzero constant.
    Poly r0 = ctx->phi;
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly t0, t1 = {Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = divmod(r0, r1);
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty())
        return Cyclotomic(order_, reduced(scale(t0, Rational(1) / r0[0]), *ctx));
    return Cyclotomic(order_, reduced(scale(t1, Rational(1) / r1[0]), *ctx));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    return *this * rhs.inverse();
}

Cyclotomic Cyclotomic::conj() const {
    auto ctx = context_for(order_);
    Cyclotomic out = Cyclotomic::zero(order_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        size_t m = (k * (order_ - 1)) % order_;
        for (size_t i = 0; i < ctx->deg; ++i)
            out.coeffs_[i] += coeffs_[k] * ctx->zpow[m][i];
    }
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool need_coeff = (k == 0) || mag != 1;
        if (need_coeff) out << rational_str(mag);
        if (k > 0) {
            if (need_coeff) out << " ";
            out << "z";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace ddbar

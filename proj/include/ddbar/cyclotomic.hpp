#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddbar/rational.hpp"

namespace ddbar {

/*
 * Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * A value is a polynomial in zeta_N with rational coefficients, kept reduced
 * modulo the N-th cyclotomic polynomial Phi_N; the reduced residue is unique,
 * so equality is coefficient-wise. All operations are pure and values are
 * immutable after construction, so they can be shared freely across threads.
 *
 * The field order N is part of the value; mixing orders is rejected with
 * OrderMismatch rather than embedded into a common field.
 */
class Cyclotomic {
public:
    /// Zero of Q(zeta_1) = Q. Exists so containers can default-construct;
    /// real code should use the named constructors below.
    Cyclotomic() : order_(1), coeffs_(1) {}

    static Cyclotomic zero(unsigned order);
    static Cyclotomic one(unsigned order);
    static Cyclotomic from_rational(const Rational& r, unsigned order);
    static Cyclotomic from_int(long v, unsigned order);
    /// zeta_N itself (reduced; e.g. zeta_2 = -1).
    static Cyclotomic zeta(unsigned order);
    /// zeta_N^k for any integer k (k taken mod N).
    static Cyclotomic zeta_power(unsigned order, long k);

    unsigned order() const { return order_; }
    /// Reduced coefficients, ascending powers of zeta, length deg(Phi_N).
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all higher coefficients vanish).
    bool is_rational() const;
    /// The rational value; only meaningful when is_rational().
    Rational rational_value() const { return coeffs_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    /// Field division; throws DivisionByZero when rhs = 0.
    Cyclotomic operator/(const Cyclotomic& rhs) const;
    Cyclotomic inverse() const;

    /// Image under the automorphism zeta |-> zeta^(N-1); complex conjugation
    /// on the standard embedding, an involution fixing the rationals.
    Cyclotomic conj() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    /// Rendering as a polynomial in `z`, e.g. "1 - 2 z^2"; "0" for zero.
    std::string str() const;

private:
    Cyclotomic(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}
    void check_same_order(const Cyclotomic& rhs) const;

    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending, monic.
/// Computed by exact division of x^N - 1 by the Phi_d over proper divisors d.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

}  // namespace ddbar

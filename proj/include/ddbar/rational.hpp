#pragma once

#include <gmpxx.h>

#include <string>

#include "ddbar/errors.hpp"

namespace ddbar {

using BigInt = mpz_class;

// Exact rationals, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace ddbar

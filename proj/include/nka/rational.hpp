#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nka {

// All scalars in this library are exact.  Integer is an arbitrary-precision
// integer; Rational is an arbitrary-precision fraction kept in lowest terms
// with positive denominator (zero is 0/1).  No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& x) { return numerator(x); }
inline Integer den(const Rational& x) { return denominator(x); }

inline Integer pow_integer(Integer base, unsigned long exp) {
    Integer result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// p^e for a (possibly negative) exponent, as an exact rational.
inline Rational pow_rational(const Integer& p, long e) {
    if (e >= 0) return Rational(pow_integer(p, static_cast<unsigned long>(e)));
    return Rational(1, pow_integer(p, static_cast<unsigned long>(-e)));
}

}  // namespace nka

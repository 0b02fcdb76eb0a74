#pragma once

#include <compare>
#include <string>

#include "nka/rational.hpp"

namespace nka {

bool is_prime(const Integer& n);

// Largest k with p^k | n.  n must be nonzero (the valuation of 0 is +infinity
// and is not representable here), p prime.
long padic_valuation(const Integer& n, const Integer& p);

// |x|_p with the convention |p|_p = p^{-1}: zero maps to 0, otherwise
// p^{v(den) - v(num)} returned exactly as a power of p.
Rational padic_norm(const Rational& x, const Integer& p);

// nu_2(u^e - 1) for odd u >= 3, e >= 1, via the two-case lifting lemma:
// if nu_2(u - 1) = 1 and e is even the answer is nu_2(u + 1) + nu_2(e),
// otherwise it is nu_2(u - 1) + nu_2(e).
long lte_nu2(const Integer& u, const Integer& e);

// Value of an amenability norm: a nonnegative power p^k of a prime, 1, or
// infinity.  The exponent is stored, never a float; comparisons are integer
// comparisons.  p^0 and One compare equal; Infinity absorbs multiplication.
class ExtendedNorm {
public:
    ExtendedNorm() = default;  // One
    static ExtendedNorm one() { return ExtendedNorm(); }
    static ExtendedNorm infinity() {
        ExtendedNorm n;
        n.infinite_ = true;
        return n;
    }
    static ExtendedNorm power(long prime, long exponent);

    bool is_infinity() const { return infinite_; }
    bool is_one() const { return !infinite_ && exponent_ == 0; }
    bool is_finite() const { return !infinite_; }
    // Exponent of a finite value (0 for One).
    long exponent() const;
    // Base prime; only meaningful when exponent() > 0.
    long prime() const { return prime_; }

    // Exact value of a finite norm.
    Integer value() const;

    ExtendedNorm operator*(const ExtendedNorm& other) const;
    bool operator==(const ExtendedNorm& other) const;
    bool operator<=(const ExtendedNorm& other) const;

    std::string str() const;

private:
    bool infinite_ = false;
    long exponent_ = 0;  // valid when !infinite_
    long prime_ = 0;     // 0 when exponent_ == 0
};

}  // namespace nka

#include "nka/valuation.hpp"

#include "nka/errors.hpp"

namespace nka {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long padic_valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw precondition_error("padic_valuation: argument is zero");
    if (!is_prime(p)) throw precondition_error("padic_valuation: base is not prime");
    Integer m = abs(n);
    long k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

Rational padic_norm(const Rational& x, const Integer& p) {
    if (!is_prime(p)) throw precondition_error("padic_norm: base is not prime");
    if (x == 0) return Rational(0);
    long v = padic_valuation(num(x), p) - padic_valuation(den(x), p);
    return pow_rational(p, -v);
}

long lte_nu2(const Integer& u, const Integer& e) {
    if (u % 2 == 0) throw precondition_error("lte_nu2: u must be odd");
    if (u < 3) throw precondition_error("lte_nu2: u must be >= 3");
    if (e < 1) throw precondition_error("lte_nu2: e must be >= 1");
    long nu_e = (e % 2 == 0) ? padic_valuation(e, 2) : 0;
    if (padic_valuation(u - 1, 2) == 1 && e % 2 == 0)
        return padic_valuation(u + 1, 2) + nu_e;
    return padic_valuation(u - 1, 2) + nu_e;
}

ExtendedNorm ExtendedNorm::power(long prime, long exponent) {
    if (exponent < 0) throw precondition_error("ExtendedNorm: negative exponent");
    ExtendedNorm n;
    if (exponent > 0) {
        if (!is_prime(Integer(prime))) throw precondition_error("ExtendedNorm: base is not prime");
        n.exponent_ = exponent;
        n.prime_ = prime;
    }
    return n;
}

long ExtendedNorm::exponent() const {
    if (infinite_) throw precondition_error("ExtendedNorm: exponent of infinity");
    return exponent_;
}

Integer ExtendedNorm::value() const {
    if (infinite_) throw precondition_error("ExtendedNorm: value of infinity");
    if (exponent_ == 0) return 1;
    return pow_integer(Integer(prime_), static_cast<unsigned long>(exponent_));
}

ExtendedNorm ExtendedNorm::operator*(const ExtendedNorm& other) const {
    if (infinite_ || other.infinite_) return infinity();
    if (exponent_ == 0) return other;
    if (other.exponent_ == 0) return *this;
    if (prime_ != other.prime_)
        throw precondition_error("ExtendedNorm: product of powers of distinct primes");
    return power(prime_, exponent_ + other.exponent_);
}

bool ExtendedNorm::operator==(const ExtendedNorm& other) const {
    if (infinite_ != other.infinite_) return false;
    if (infinite_) return true;
    if (exponent_ == 0 && other.exponent_ == 0) return true;
    return exponent_ == other.exponent_ && prime_ == other.prime_;
}

bool ExtendedNorm::operator<=(const ExtendedNorm& other) const {
    if (other.infinite_) return true;
    if (infinite_) return false;
    if (exponent_ == 0) return true;
    if (other.exponent_ == 0) return false;
    if (prime_ == other.prime_) return exponent_ <= other.exponent_;
    return value() <= other.value();
}

std::string ExtendedNorm::str() const {
    if (infinite_) return "infinity";
    return value().str();
}

}  // namespace nka

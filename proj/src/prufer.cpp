#include "nka/prufer.hpp"

#include <iterator>

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

PruferElement PruferElement::zero(long p) {
    if (!is_prime(Integer(p))) throw precondition_error("prufer: p must be prime");
    PruferElement e;
    e.p_ = p;
    return e;
}

PruferElement PruferElement::from_digits(long p, std::vector<int> digits) {
    PruferElement e = zero(p);
    for (int d : digits)
        if (d < 0 || d >= p) throw precondition_error("prufer: digit out of range");
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    e.digits_ = std::move(digits);
    return e;
}

PruferElement PruferElement::from_index(long p, int N, const Integer& k) {
    if (N < 0) throw precondition_error("prufer: negative depth");
    Integer pn = pow_integer(Integer(p), static_cast<unsigned long>(N));
    Integer r = k % pn;
    if (r < 0) r += pn;
    // base-p digits of r, least significant first = deepest first
    std::vector<int> digits(static_cast<std::size_t>(N));
    for (int i = N - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(r % p);
        r /= p;
    }
    return from_digits(p, std::move(digits));
}

PruferElement PruferElement::add(const PruferElement& other) const {
    if (p_ != other.p_) throw precondition_error("prufer: mixed primes");
    const int n = std::max(depth(), other.depth());
    std::vector<int> sum(static_cast<std::size_t>(n), 0);
    int carry = 0;
    for (int i = n - 1; i >= 0; --i) {  // deepest digit first
        int a = i < depth() ? digits_[static_cast<std::size_t>(i)] : 0;
        int b = i < other.depth() ? other.digits_[static_cast<std::size_t>(i)] : 0;
        int s = a + b + carry;
        sum[static_cast<std::size_t>(i)] = static_cast<int>(s % p_);
        carry = s >= p_ ? 1 : 0;
    }
    // carry out of the p^{-1} digit leaves the unit interval: discarded mod 1
    return from_digits(p_, std::move(sum));
}

Rational PruferElement::value() const {
    Rational v(0);
    Rational scale(1, p_);
    for (int d : digits_) {
        v += d * scale;
        scale /= p_;
    }
    return v;
}

std::string PruferElement::str() const {
    if (is_zero()) return "0";
    std::string s = "(";
    for (std::size_t i = 0; i < digits_.size(); ++i)
        s += (i ? "," : "") + std::to_string(digits_[i]);
    return s + ")";
}

Rational standard_section(const PruferElement& x) { return x.value(); }

namespace {

Integer mod_inverse(Integer a, const Integer& m) {
    Integer t = 0, new_t = 1, r = m, new_r = a % m;
    if (new_r < 0) new_r += m;
    while (new_r != 0) {
        Integer q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw precondition_error("mod_inverse: not invertible");
    t %= m;
    if (t < 0) t += m;
    return t;
}

}  // namespace

PruferElement project_to_prufer(const Rational& x, long p) {
    if (!is_prime(Integer(p))) throw precondition_error("project_to_prufer: p must be prime");
    const Integer d = den(x);
    if (d % p != 0) return PruferElement::zero(p);
    long k = padic_valuation(d, Integer(p));
    const Integer pk = pow_integer(Integer(p), static_cast<unsigned long>(k));
    const Integer m = d / pk;  // prime to p
    // x = num / (m p^k);  the fractional digits are those of num * m^{-1} mod p^k.
    Integer y = (num(x) % pk) * mod_inverse(m, pk) % pk;
    if (y < 0) y += pk;
    auto e = PruferElement::from_index(p, static_cast<int>(k), y);
    // correctness criterion: the difference lies in the p-local subring
    if (den(x - standard_section(e)) % p == 0)
        throw precondition_error("project_to_prufer: digit extraction failed");
    return e;
}

LaurentTail LaurentTail::zero(long p) {
    if (!is_prime(Integer(p))) throw precondition_error("laurent tail: p must be prime");
    LaurentTail t;
    t.p_ = p;
    return t;
}

LaurentTail LaurentTail::from_coefficients(long p, std::map<int, int> coefficients) {
    LaurentTail t = zero(p);
    for (auto it = coefficients.begin(); it != coefficients.end();) {
        if (it->first >= 0) throw precondition_error("laurent tail: degree must be negative");
        if (it->second < 0 || it->second >= p)
            throw precondition_error("laurent tail: coefficient out of range");
        it = it->second == 0 ? coefficients.erase(it) : std::next(it);
    }
    t.coeffs_ = std::move(coefficients);
    return t;
}

LaurentTail LaurentTail::add(const LaurentTail& other) const {
    if (p_ != other.p_) throw precondition_error("laurent tail: mixed primes");
    std::map<int, int> sum = coeffs_;
    for (const auto& [deg, c] : other.coeffs_) {
        int v = (sum.count(deg) ? sum[deg] : 0) + c;
        v %= static_cast<int>(p_);
        if (v == 0)
            sum.erase(deg);
        else
            sum[deg] = v;
    }
    return from_coefficients(p_, std::move(sum));
}

}  // namespace nka

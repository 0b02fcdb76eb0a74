#include "nka/orders.hpp"

#include <boost/multiprecision/integer.hpp>

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

namespace {

bool is_prime_power(const Integer& q) {
    if (q < 2) return false;
    for (Integer p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        Integer m = q;
        while (m % p == 0) m /= p;
        return m == 1;
    }
    return true;  // q itself is prime
}

}  // namespace

Integer gl_order(int n, const Integer& q) {
    if (n < 1) throw precondition_error("gl_order: degree must be >= 1");
    if (!is_prime_power(q)) throw precondition_error("gl_order: q must be a prime power");
    Integer qn = pow_integer(q, static_cast<unsigned long>(n));
    Integer result = 1;
    Integer qi = 1;
    for (int i = 0; i < n; ++i) {
        result *= qn - qi;
        qi *= q;
    }
    return result;
}

Integer sl_order(int n, const Integer& q) { return gl_order(n, q) / (q - 1); }

Integer psl_order(int n, const Integer& q) {
    return sl_order(n, q) / gcd(Integer(n), q - 1);
}

Integer sz_order(const Integer& q) {
    if (q < 2) throw precondition_error("sz_order: q must be a power of 2");
    Integer m = q;
    long k = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++k;
    }
    if (m != 1) throw precondition_error("sz_order: q must be a power of 2");
    if (k % 2 == 0) throw precondition_error("sz_order: q must be 2^k with k odd");
    return (q * q + 1) * q * q * (q - 1);
}

Integer family_order(FamilyTag tag, int n, const Integer& q) {
    switch (tag) {
        case FamilyTag::GL: return gl_order(n, q);
        case FamilyTag::SL: return sl_order(n, q);
        case FamilyTag::PSL: return psl_order(n, q);
        case FamilyTag::Sz: return sz_order(q);
    }
    throw precondition_error("family_order: unknown family");
}

Integer chain_field_size(const Integer& ell, long a, int k) {
    if (!is_prime(ell)) throw precondition_error("chain_field_size: ell must be prime");
    if (a < 1 || k < 1) throw precondition_error("chain_field_size: a and k must be >= 1");
    Integer exp = pow_integer(Integer(a), static_cast<unsigned long>(k));
    return pow_integer(ell, exp.convert_to<unsigned long>());
}

Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Integer tree_sphere_size(int d, int n) {
    if (d < 3 || n < 1) throw precondition_error("tree_sphere_size: need d >= 3, n >= 1");
    return Integer(d) * pow_integer(Integer(d - 1), static_cast<unsigned long>(n - 1));
}

Integer tree_ball_order(int d, int n) {
    if (d < 3 || n < 1) throw precondition_error("tree_ball_order: need d >= 3, n >= 1");
    Integer order = factorial(d);
    const Integer kernel_base = factorial(d - 1);
    for (int m = 1; m < n; ++m)
        order *= pow_integer(kernel_base, tree_sphere_size(d, m).convert_to<unsigned long>());
    return order;
}

}  // namespace nka

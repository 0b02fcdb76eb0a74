#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

using namespace nka;

namespace {

// independent oracle: trial division, no shortcuts
long valuation_bruteforce(Integer n, const Integer& p) {
    n = abs(n);
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("padic_valuation on the pinned examples") {
    CHECK(padic_valuation(Integer(48), Integer(2)) == 4);
    CHECK(padic_valuation(Integer(7), Integer(7)) == 1);
    // |Sz(8)| = (64 + 1) * 64 * 7 = 29120, not divisible by 3
    CHECK(padic_valuation(Integer(29120), Integer(3)) == 0);
    CHECK(padic_valuation(Integer(-48), Integer(2)) == 4);
}

TEST_CASE("padic_valuation rejects zero and composite bases") {
    CHECK_THROWS_AS(padic_valuation(Integer(0), Integer(2)), precondition_error);
    CHECK_THROWS_AS(padic_valuation(Integer(12), Integer(6)), precondition_error);
}

TEST_CASE("padic_norm values") {
    CHECK(padic_norm(Rational(8), Integer(2)) == Rational(1, 8));
    CHECK(padic_norm(Rational(3, 4), Integer(2)) == Rational(4));
    CHECK(padic_norm(Rational(5, 6), Integer(2)) == Rational(2));
    CHECK(padic_norm(Rational(0), Integer(5)) == Rational(0));
}

TEST_CASE("ultrametric inequality with equality off the diagonal") {
    const Integer primes[] = {2, 3, 5};
    for (const auto& p : primes)
        for (int a = -12; a <= 12; ++a)
            for (int b = 1; b <= 12; ++b)
                for (int c = -12; c <= 12; ++c)
                    for (int d = 1; d <= 12; ++d) {
                        Rational x(a, b), y(c, d);
                        Rational nx = padic_norm(x, p), ny = padic_norm(y, p);
                        Rational ns = padic_norm(x + y, p);
                        CHECK(ns <= std::max(nx, ny));
                        if (nx != ny) CHECK(ns == std::max(nx, ny));
                        CHECK(padic_norm(x * y, p) == nx * ny);
                    }
}

TEST_CASE("lte_nu2 pinned examples") {
    // 3^2 - 1 = 8
    CHECK(lte_nu2(Integer(3), Integer(2)) == 3);
    // 5^4 - 1 = 624 = 2^4 * 39
    CHECK(lte_nu2(Integer(5), Integer(4)) == 4);
    CHECK(lte_nu2(Integer(3), Integer(1)) == 1);
    CHECK_THROWS_AS(lte_nu2(Integer(4), Integer(2)), precondition_error);
}

TEST_CASE("lte_nu2 against direct factorization") {
    for (Integer u = 3; u <= 31; u += 2)
        for (Integer e = 1; e <= 10; ++e) {
            Integer big = pow_integer(u, e.convert_to<unsigned long>()) - 1;
            CHECK(lte_nu2(u, e) == valuation_bruteforce(big, Integer(2)));
        }
}

TEST_CASE("extended norm algebra") {
    auto one = ExtendedNorm::one();
    auto four = ExtendedNorm::power(2, 2);
    auto inf = ExtendedNorm::infinity();
    CHECK(ExtendedNorm::power(2, 0) == one);
    CHECK(ExtendedNorm::power(3, 0) == ExtendedNorm::power(5, 0));
    CHECK((four * four) == ExtendedNorm::power(2, 4));
    CHECK((four * inf).is_infinity());
    CHECK((one * four) == four);
    CHECK(one <= four);
    CHECK(four <= inf);
    CHECK(!(inf <= four));
    CHECK(four.value() == 4);
    CHECK(four.str() == "4");
    CHECK(inf.str() == "infinity");
    CHECK_THROWS_AS(ExtendedNorm::power(2, 1) * ExtendedNorm::power(3, 1), precondition_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nka/cochain.hpp"
#include "nka/errors.hpp"

using namespace nka;

namespace {

GroupPtr make(long n) { return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n)); }

Cochain random_cochain(GroupPtr g, int degree, long field_char, std::mt19937& rng) {
    Cochain f(g, degree, field_char);
    std::uniform_int_distribution<int> nums(-6, 6);
    std::uniform_int_distribution<int> dens(1, 4);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (field_char == 0)
            f.set(i, Rational(nums(rng), dens(rng)));
        else
            f.set(i, Rational(std::abs(nums(rng)) % field_char));
    }
    return f;
}

}  // namespace

TEST_CASE("coboundary formula in low degree") {
    auto z2 = make(2);
    Cochain f(z2, 1, 0);
    f.set(std::vector<int>{0}, Rational(0));
    f.set(std::vector<int>{1}, Rational(1));
    Cochain df = coboundary(f);
    // df(g,h) = f(h) - f(gh) + f(g)
    CHECK(df.at(std::vector<int>{1, 1}) == Rational(2));  // 1 - 0 + 1
    CHECK(df.at(std::vector<int>{0, 1}) == Rational(0));
    CHECK(df.at(std::vector<int>{1, 0}) == Rational(0));
    CHECK(df.at(std::vector<int>{0, 0}) == Rational(0));
}

TEST_CASE("constant degree-1 cochain has constant coboundary") {
    auto z3 = make(3);
    Cochain c(z3, 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c.set(i, Rational(7, 2));
    Cochain dc = coboundary(c);
    for (std::size_t i = 0; i < dc.size(); ++i) CHECK(dc[i] == Rational(7, 2));
}

TEST_CASE("degree-0 coboundary vanishes under the trivial action") {
    auto z5 = make(5);
    Cochain v(z5, 0, 0);
    v.set(0, Rational(9, 4));
    Cochain dv = coboundary(v);
    for (std::size_t i = 0; i < dv.size(); ++i) CHECK(dv[i] == 0);
}

TEST_CASE("coboundary squares to zero on every group of order up to 8") {
    std::mt19937 rng(7);
    std::vector<GroupPtr> groups;
    for (long n = 1; n <= 8; ++n) groups.push_back(make(n));
    groups.push_back(std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3)));
    groups.push_back(std::make_shared<FiniteGroup>(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    groups.push_back(std::make_shared<FiniteGroup>(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))));
    groups.push_back(std::make_shared<FiniteGroup>(FiniteGroup::direct_product(
        FiniteGroup::cyclic(2),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)))));
    // dihedral group of the square: rotation and a reflection
    groups.push_back(std::make_shared<FiniteGroup>(
        FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}, "D4")));
    // quaternion group in its regular representation
    groups.push_back(std::make_shared<FiniteGroup>(FiniteGroup::from_permutation_generators(
        8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}, "Q8")));
    for (const auto& g : groups) {
        for (long field_char : {0L, 2L, 3L}) {
            const int max_degree = g->order() <= 4 ? 3 : (g->order() <= 6 ? 2 : 1);
            for (int degree = 0; degree <= max_degree; ++degree) {
                auto f = random_cochain(g, degree, field_char, rng);
                auto ddf = coboundary(coboundary(f));
                for (std::size_t i = 0; i < ddf.size(); ++i) CHECK(ddf[i] == 0);
            }
        }
    }
    // degree 3 exercised on the order-8 groups once over the rationals
    for (std::size_t idx : {7u, 12u, 13u}) {  // Z/8, D4, Q8
        auto f = random_cochain(groups[idx], 3, 0, rng);
        auto ddf = coboundary(coboundary(f));
        for (std::size_t i = 0; i < ddf.size(); ++i) CHECK(ddf[i] == 0);
    }
}

TEST_CASE("sup norm") {
    auto z2 = make(2);
    Cochain f(z2, 1, 0);
    f.set(std::vector<int>{1}, Rational(1));
    Cochain df = coboundary(f);  // values {0, 2}
    CHECK(sup_norm(df, 2) == Rational(1, 2));
    CHECK(sup_norm(Cochain(z2, 1, 0), 2) == Rational(0));
    // Dirac at the nonidentity element
    CHECK(sup_norm(f, 2) == Rational(1));
    CHECK(sup_norm(f, 3) == Rational(1));
}

TEST_CASE("sup norm of a coboundary never exceeds the input") {
    std::mt19937 rng(11);
    for (long n : {2, 3, 4}) {
        auto g = make(n);
        for (int degree : {1, 2}) {
            auto f = random_cochain(g, degree, 0, rng);
            for (long p : {2L, 3L, 5L}) CHECK(sup_norm(coboundary(f), p) <= sup_norm(f, p));
        }
    }
}

TEST_CASE("bar conversion round trip and coboundary compatibility") {
    std::mt19937 rng(3);
    auto z3 = make(3);
    for (int degree : {0, 1, 2}) {
        auto f = random_cochain(z3, degree, 0, rng);
        auto h = to_homogeneous(f);
        CHECK(h.is_invariant());
        CHECK(to_inhomogeneous(h) == f);
        // the two coboundaries commute with the conversion
        CHECK(to_inhomogeneous(homogeneous_coboundary(h)) == coboundary(f));
        // norms agree
        for (long p : {2L, 3L}) CHECK(sup_norm(h, p) == sup_norm(f, p));
    }
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3));
    auto f = random_cochain(s3, 1, 0, rng);
    auto h = to_homogeneous(f);
    CHECK(to_inhomogeneous(homogeneous_coboundary(h)) == coboundary(f));
}

TEST_CASE("constant homogeneous cochains convert to constants") {
    auto z3 = make(3);
    HomogeneousCochain h(z3, 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i) h.set(i, Rational(5));
    auto f = to_inhomogeneous(h);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == Rational(5));
}

TEST_CASE("non-invariant homogeneous input is rejected") {
    auto z2 = make(2);
    HomogeneousCochain h(z2, 1, 0);
    h.set(std::vector<int>{0, 1}, Rational(1));  // shifting (0,1) to (1,0) changes the value
    CHECK(!h.is_invariant());
    CHECK_THROWS_AS(to_inhomogeneous(h), precondition_error);
    CHECK_THROWS_AS(contracting_homotopy(h, 2), precondition_error);
}

TEST_CASE("homotopy identity holds exactly on full bases") {
    auto z3 = make(3);
    // all invariant homogeneous degree-1 cochains: pull back the Dirac basis
    for (std::size_t basis = 0; basis < 3; ++basis) {
        Cochain dirac(z3, 1, 0);
        dirac.set(basis, Rational(1));
        auto h = to_homogeneous(dirac);
        auto lhs = homogeneous_coboundary(contracting_homotopy(h, 2));
        auto rhs = contracting_homotopy(homogeneous_coboundary(h), 2);
        for (std::size_t i = 0; i < h.size(); ++i) CHECK(lhs[i] + rhs[i] == h[i]);
    }
}

TEST_CASE("homotopy of a constant is the constant one degree lower") {
    auto z4 = make(4);
    HomogeneousCochain h(z4, 2, 0);
    for (std::size_t i = 0; i < h.size(); ++i) h.set(i, Rational(3, 7));
    auto jh = contracting_homotopy(h, 2);
    CHECK(jh.degree() == 1);
    for (std::size_t i = 0; i < jh.size(); ++i) CHECK(jh[i] == Rational(3, 7));
}

TEST_CASE("homotopy norm bound") {
    std::mt19937 rng(5);
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3));
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_cochain(s3, 2, 0, rng);
        auto h = to_homogeneous(f);
        auto jh = contracting_homotopy(h, 3);
        // |6|_3^{-1} = 3
        CHECK(sup_norm(jh, 3) <= Rational(3) * sup_norm(h, 3));
    }
}

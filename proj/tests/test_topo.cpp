#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nka/errors.hpp"
#include "nka/topo.hpp"
#include "nka/valuation.hpp"

using namespace nka;

TEST_CASE("cellular dims of the standard complexes") {
    // circle as one vertex and one edge with zero boundary
    CellComplex circle;
    circle.cells = {1, 1};
    circle.boundary = {{{0}}};
    CHECK(cellular_cohomology_dims(circle, 0) == std::vector<long>{1, 1});

    // torus as a CW complex with zero boundary maps
    CHECK(cellular_cohomology_dims(builtin_cell("torus_cw"), 0) == std::vector<long>{1, 2, 1});

    // 2-sphere as the boundary of a 3-simplex
    CHECK(cellular_cohomology_dims(builtin_simplicial("s2").to_cells(), 0) ==
          std::vector<long>{1, 0, 1});

    CHECK(cellular_cohomology_dims(builtin_simplicial("circle3").to_cells(), 0) ==
          std::vector<long>{1, 1});

    // triangulated torus matches its CW model
    CHECK(cellular_cohomology_dims(builtin_simplicial("torus").to_cells(), 0) ==
          std::vector<long>{1, 2, 1});

    // field coefficients of characteristic p agree here (no torsion)
    CHECK(cellular_cohomology_dims(builtin_simplicial("s2").to_cells(), 2) ==
          std::vector<long>{1, 0, 1});

    CHECK(cellular_cohomology_dims(builtin_simplicial("wedge2").to_cells(), 0) ==
          std::vector<long>{1, 2});
}

TEST_CASE("boundary square is checked") {
    CellComplex broken;
    broken.cells = {2, 2, 1};
    broken.boundary = {{{1, 0}, {-1, 1}}, {{1}, {1}}};
    CHECK_THROWS_AS(broken.validate(), input_error);
}

TEST_CASE("projective plane separates the coefficient characteristics") {
    // one cell per dimension, degree-2 attaching map
    CellComplex rp2;
    rp2.cells = {1, 1, 1};
    rp2.boundary = {{{0}}, {{2}}};
    rp2.validate();
    CHECK(cellular_cohomology_dims(rp2, 0) == std::vector<long>{1, 0, 0});
    CHECK(cellular_cohomology_dims(rp2, 2) == std::vector<long>{1, 1, 1});
    CHECK(cellular_cohomology_dims(rp2, 3) == std::vector<long>{1, 0, 0});
}

TEST_CASE("simplicial complexes close faces and validate") {
    auto s2 = builtin_simplicial("s2");
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);
    CHECK(s2.contains(1, {0, 3}));
    CHECK_THROWS_AS(SimplicialComplex::from_maximal(3, {{0, 0, 1}}), input_error);
}

TEST_CASE("subdivision of a single edge") {
    auto edge = SimplicialComplex::from_maximal(2, {{0, 1}});
    auto sub = barycentric_subdivision(edge);
    CHECK(sub.complex.count(0) == 3);  // two endpoints and the midpoint
    CHECK(sub.complex.count(1) == 2);
    // the edge maps to a sum of two pieces with coefficients +-1
    const auto& image = sub.chain_map[1][0];
    REQUIRE(image.size() == 2);
    for (const auto& [piece, coeff] : image) {
        (void)piece;
        CHECK((coeff == 1 || coeff == -1));
    }
}

TEST_CASE("subdivision norm and cohomology checks") {
    for (const char* name : {"circle3", "s2", "wedge2"}) {
        auto x = builtin_simplicial(name);
        for (int degree = 0; degree <= x.dim(); ++degree) {
            auto report = subdivision_norm_check(x, degree);
            CHECK(report.dual_norm_bounded);
            CHECK(report.dims_preserved);
            CHECK(report.induced_iso);
        }
    }
    // 0-dimensional complex: the identity situation
    auto point = SimplicialComplex::from_maximal(1, {{0}});
    auto report = subdivision_norm_check(point, 0);
    CHECK(report.passed());
}

TEST_CASE("subdivision on the torus") {
    auto report = subdivision_norm_check(builtin_simplicial("torus"), 1);
    CHECK(report.passed());
    CHECK(report.dims_before == std::vector<long>{1, 2, 1});
}

TEST_CASE("mayer-vietoris on the wedge of two circles") {
    auto inst = builtin_mv("wedge");
    auto report = mayer_vietoris_check(inst.x, inst.a, inst.b, 0);
    CHECK(report.exact);
    CHECK(report.dims_x == std::vector<long>{1, 2});
    CHECK(report.dims_a == std::vector<long>{1, 1});
    CHECK(report.dims_b == std::vector<long>{1, 1});
    CHECK(report.alternating_sum == 0);
}

TEST_CASE("mayer-vietoris degenerate cover X = A = B") {
    auto x = builtin_simplicial("circle3");
    auto report = mayer_vietoris_check(x, x, x, 0);
    CHECK(report.exact);
}

TEST_CASE("mayer-vietoris on the torus split into two cylinders") {
    auto inst = builtin_mv("torus");
    auto report = mayer_vietoris_check(inst.x, inst.a, inst.b, 0);
    CHECK(report.exact);
    CHECK(report.dims_x == std::vector<long>{1, 2, 1});
    // each cylinder retracts to a circle
    CHECK(report.dims_a == std::vector<long>{1, 1, 0});
    CHECK(report.dims_b == std::vector<long>{1, 1, 0});
    // the overlap is two disjoint annuli
    CHECK(report.dims_ab == std::vector<long>{2, 2, 0});
    CHECK(report.alternating_sum == 0);
    // same verification over a prime field
    CHECK(mayer_vietoris_check(inst.x, inst.a, inst.b, 5).exact);
}

TEST_CASE("mayer-vietoris rejects non-covering pairs") {
    auto x = builtin_simplicial("wedge2");
    auto a = x.subcomplex({{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(mayer_vietoris_check(x, a, a, 0), input_error);
}

TEST_CASE("fundamental cycles") {
    auto circle = na_simplicial_volume(builtin_simplicial("circle3"), 5);
    CHECK(circle.max_norm == Rational(1));
    CHECK(circle.top_kernel_rank == 1);
    CHECK(circle.primitive);
    CHECK(circle.lower_bound_certified);
    for (long c : circle.cycle) CHECK((c == 1 || c == -1));

    auto sphere = na_simplicial_volume(builtin_simplicial("s2"), 2);
    CHECK(sphere.max_norm == Rational(1));
    CHECK(sphere.lower_bound_certified);

    auto torus = na_simplicial_volume(builtin_simplicial("torus"), 3);
    CHECK(torus.max_norm == Rational(1));
}

TEST_CASE("volume refuses non-manifold input") {
    // two triangles sharing an edge: top homology is trivial
    auto strip = SimplicialComplex::from_maximal(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK_THROWS_AS(na_simplicial_volume(strip, 2), precondition_error);
}

TEST_CASE("finite disjoint unions add dimensions per degree") {
    auto a = builtin_simplicial("circle3");
    auto b = builtin_simplicial("s2");
    auto u = disjoint_union(a, b);
    auto da = cellular_cohomology_dims(a.to_cells(), 0);
    auto db = cellular_cohomology_dims(b.to_cells(), 0);
    auto du = cellular_cohomology_dims(u.to_cells(), 0);
    for (int n = 0; n <= u.dim(); ++n) {
        long expect = (n < static_cast<int>(da.size()) ? da[n] : 0) +
                      (n < static_cast<int>(db.size()) ? db[n] : 0);
        CHECK(du[n] == expect);
    }
}

TEST_CASE("random complexes: boundary squares to zero and subdivision preserves dims") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> nv(4, 7);
    std::uniform_int_distribution<int> ntri(2, 6);
    for (int trial = 0; trial < 12; ++trial) {
        const int v = nv(rng);
        std::uniform_int_distribution<int> pick(0, v - 1);
        std::vector<std::vector<int>> maximal;
        for (int t = ntri(rng); t > 0; --t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || b == c || a == c) continue;
            maximal.push_back({a, b, c});
        }
        maximal.push_back({0, 1});  // keep at least one simplex
        auto x = SimplicialComplex::from_maximal(v, maximal);
        auto cells = x.to_cells();  // validates d o d = 0
        auto dims = cellular_cohomology_dims(cells, 0);
        auto sub = barycentric_subdivision(x);
        CHECK(cellular_cohomology_dims(sub.complex.to_cells(), 0) == dims);
        CHECK(cellular_cohomology_dims(sub.complex.to_cells(), 2) ==
              cellular_cohomology_dims(cells, 2));
        for (const auto& level : sub.chain_map)
            for (const auto& image : level)
                for (const auto& [piece, coeff] : image) {
                    (void)piece;
                    CHECK((coeff == 1 || coeff == -1));
                }
    }
}

TEST_CASE("integer cocycle representatives stay within the unit ball") {
    // dims computations emit representatives through the shared machinery
    // indirectly; here we check the integral cocycles of the sphere directly
    auto cert = na_simplicial_volume(builtin_simplicial("s2"), 3);
    for (long c : cert.cycle) CHECK(padic_norm(Rational(c), Integer(3)) <= Rational(1));
}

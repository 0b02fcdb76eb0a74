#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "nka/cohomology.hpp"
#include "nka/errors.hpp"

using namespace nka;

namespace {

GroupPtr cyclic(long n) { return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n)); }

}  // namespace

TEST_CASE("vanishing over characteristic zero") {
    // no nonzero homomorphisms into a torsion-free field
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3));
    CHECK(cohomology_dim(s3, 0, 1).dim_cohomology == 0);
    CHECK(cohomology_dim(cyclic(4), 0, 2).dim_cohomology == 0);
    for (long n : {2, 3, 4}) {
        for (int degree : {1, 2, 3}) {
            auto summary = cohomology_dim(cyclic(n), 0, degree);
            CHECK(summary.dim_cohomology == 0);
            CHECK(summary.dim_cocycles == summary.dim_coboundaries);
        }
    }
}

TEST_CASE("degree zero is the invariants") {
    auto summary = cohomology_dim(cyclic(6), 0, 0);
    CHECK(summary.dim_cocycles == 1);  // constants
    CHECK(summary.dim_coboundaries == 0);
    CHECK(summary.dim_cohomology == 1);
}

TEST_CASE("characteristic p sees the group") {
    // Hom(Z/2, F_2) is one-dimensional
    auto summary = cohomology_dim(cyclic(2), 2, 1);
    CHECK(summary.dim_cohomology == 1);
    REQUIRE(summary.sample_representatives.size() == 1);
    const auto& rep = summary.sample_representatives[0];
    // the representative is a nonzero homomorphism
    CHECK(rep.at(std::vector<int>{1}) != 0);

    // Hom(Z/3, F_2) = 0 but Hom(Z/3, F_3) is one-dimensional
    CHECK(cohomology_dim(cyclic(3), 2, 1).dim_cohomology == 0);
    CHECK(cohomology_dim(cyclic(3), 3, 1).dim_cohomology == 1);
    // Z/p over F_p keeps going up in degree 2 (polynomial cohomology)
    CHECK(cohomology_dim(cyclic(2), 2, 2).dim_cohomology == 1);
}

TEST_CASE("representatives are genuine cocycles") {
    auto summary = cohomology_dim(cyclic(2), 2, 1);
    for (const auto& rep : summary.sample_representatives) {
        auto d = coboundary(rep);
        for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == 0);
    }
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(cohomology_dim(cyclic(13), 0, 3), budget_error);
    // 12^4 = 20736 is exactly the documented budget
    CHECK_NOTHROW(cohomology_dim(cyclic(12), 0, 0));
}

TEST_CASE("h1b dimension formulas") {
    AbelianizationData ab;
    ab.rank = 2;
    ab.torsion = {Integer(4), Integer(3)};
    CHECK(h1b_dimension(ab, field_from_label("Qp:2")) == 2);
    CHECK(h1b_dimension(ab, field_from_label("Fp_laurent:2")) == 3);
    CHECK(h1b_dimension(ab, field_from_label("Fp_laurent:3")) == 3);
    CHECK(h1b_dimension(ab, field_from_label("Fp_laurent:5")) == 2);
    AbelianizationData trivial_group;
    CHECK(h1b_dimension(trivial_group, field_from_label("Qp:5")) == 0);
    // mixed torsion order 12 = 4 * 3 counts once at p = 2 and once at p = 3
    AbelianizationData mixed;
    mixed.rank = 0;
    mixed.torsion = {Integer(12)};
    CHECK(h1b_dimension(mixed, field_from_label("Fp_laurent:2")) == 1);
    CHECK(h1b_dimension(mixed, field_from_label("Fp_laurent:3")) == 1);
    CHECK(h1b_dimension(mixed, field_from_label("Fp_laurent:5")) == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nka/amenability.hpp"
#include "nka/errors.hpp"
#include "nka/linalg.hpp"
#include "nka/orders.hpp"

using namespace nka;

TEST_CASE("finite group norms across the trichotomy") {
    // |S_3| = 6 over the 3-adics: norm 3
    CHECK(finite_group_norm(Integer(6), field_from_label("Qp:3")) == ExtendedNorm::power(3, 1));
    // 3 does not divide 5
    CHECK(finite_group_norm(Integer(5), field_from_label("Qp:3")) == ExtendedNorm::one());
    // order 2 over a trivially valued field of characteristic 2: no mean
    CHECK(finite_group_norm(Integer(2), field_from_label("trivial:Fp:2")).is_infinity());
    CHECK(finite_group_norm(Integer(3), field_from_label("trivial:Fp:2")) == ExtendedNorm::one());
    CHECK(finite_group_norm(Integer(1000), field_from_label("trivial:Q")) == ExtendedNorm::one());
}

TEST_CASE("finite norm is multiplicative at the exponent level") {
    auto q3 = field_from_label("Qp:3");
    for (long n = 1; n <= 40; ++n)
        for (long m = 1; m <= 40; ++m)
            CHECK(finite_group_norm(Integer(n * m), q3) ==
                  finite_group_norm(Integer(n), q3) * finite_group_norm(Integer(m), q3));
}

TEST_CASE("uniform mean") {
    auto z2 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
    auto mean = uniform_mean(z2, 2);
    CHECK(mean.coefficients == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(mean.operator_norm == ExtendedNorm::power(2, 1));

    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    CHECK(uniform_mean(z3, 2).operator_norm == ExtendedNorm::one());

    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3));
    CHECK(uniform_mean(s3, 3).operator_norm == ExtendedNorm::power(3, 1));
}

namespace {

// oracle: solve invariance + normalization over the rationals and insist on
// a unique solution
bool mean_is_unique_and_uniform(const FiniteGroup& g) {
    linalg::RationalField field;
    const int n = g.order();
    // homogeneous part: alpha_{gx} - alpha_x = 0
    std::vector<linalg::SparseRow<linalg::RationalField>> rows;
    for (int gg = 0; gg < n; ++gg)
        for (int x = 0; x < n; ++x) {
            int y = g.mul(gg, x);
            if (y == x) continue;
            linalg::SparseRow<linalg::RationalField> row;
            row.emplace_back(std::min(x, y), Rational(1));
            row.emplace_back(std::max(x, y), Rational(-1));
            rows.push_back(std::move(row));
        }
    auto kernel = linalg::kernel_basis(field, rows, n);
    if (kernel.size() != 1) return false;  // invariance solutions must be 1-dimensional
    // scale the kernel vector to meet the normalization sum = 1
    Rational total(0);
    for (const auto& v : kernel[0]) total += v;
    if (total == 0) return false;
    for (const auto& v : kernel[0])
        if (v / total != Rational(1, n)) return false;
    return true;
}

}  // namespace

TEST_CASE("mean uniqueness oracle") {
    CHECK(mean_is_unique_and_uniform(FiniteGroup::cyclic(2)));
    CHECK(mean_is_unique_and_uniform(FiniteGroup::cyclic(3)));
    CHECK(mean_is_unique_and_uniform(FiniteGroup::cyclic(4)));
    CHECK(mean_is_unique_and_uniform(FiniteGroup::symmetric(3)));
    CHECK(mean_is_unique_and_uniform(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
}

TEST_CASE("dispatcher on the worked examples") {
    const auto q2 = field_from_label("Qp:2");
    const auto q3 = field_from_label("Qp:3");

    auto prufer2 = GroupDescriptor::family("prufer", {{"p", 2}});
    CHECK(amenability_norm(prufer2, q2).norm.is_infinity());
    CHECK(amenability_norm(prufer2, q2).reason == Reason::ExponentDiverges);
    CHECK(amenability_norm(prufer2, q3).norm == ExtendedNorm::one());

    // pro-3 kernel with trivial 2-exponent under the GL_2(F_3) quotient
    auto ext = GroupDescriptor::extension(GroupDescriptor::family("z_ell", {{"ell", 3}}),
                                          GroupDescriptor::finite(gl_order(2, Integer(3))));
    auto verdict = amenability_norm(ext, q2);
    CHECK(verdict.norm == ExtendedNorm::power(2, 4));  // 16
    CHECK(verdict.certified);

    // Z_ell quotients at p != ell: norm one
    auto z5 = GroupDescriptor::family("z_ell", {{"ell", 5}});
    CHECK(amenability_norm(z5, q2).norm == ExtendedNorm::one());
    CHECK(amenability_norm(z5, field_from_label("Qp:5")).norm.is_infinity());
}

TEST_CASE("dispatcher over other field classes") {
    auto tree = GroupDescriptor::family("tree_fix", {{"d", 3}});
    // char p field: needs p-free
    CHECK(amenability_norm(tree, field_from_label("trivial:Fp:2")).norm.is_infinity());
    CHECK(amenability_norm(tree, field_from_label("trivial:Fp:5")).norm == ExtendedNorm::one());
    // equal characteristic zero: norm 1 once locally elliptic
    CHECK(amenability_norm(tree, field_from_label("trivial:Q")).norm == ExtendedNorm::one());

    // non-spherically complete field: compactness required
    FieldDescriptor cp;
    cp.label = "nonsc:3";
    cp.char_field = 0;
    cp.residue_char = 3;
    cp.spherically_complete = false;
    cp.discretely_valued = false;
    auto prufer3 = GroupDescriptor::family("prufer", {{"p", 3}});  // discrete infinite: not compact
    auto v = amenability_norm(prufer3, cp);
    CHECK(v.norm.is_infinity());
    CHECK(v.reason == Reason::NotCompact);
    // compact tree stabilizer survives with its exponent
    CHECK(amenability_norm(tree, cp).norm == ExtendedNorm::power(3, 1));
}

TEST_CASE("monotonicity across parts") {
    auto q2 = field_from_label("Qp:2");
    auto a = GroupDescriptor::cyclic(8);
    auto b = GroupDescriptor::cyclic(6);
    auto whole = GroupDescriptor::extension(a, b);
    CHECK(amenability_norm(a, q2).norm <= amenability_norm(whole, q2).norm);
    CHECK(amenability_norm(b, q2).norm <= amenability_norm(whole, q2).norm);
    auto uni = GroupDescriptor::directed_union({a, b}, true);
    CHECK(amenability_norm(a, q2).norm <= amenability_norm(uni, q2).norm);
}

TEST_CASE("directed union verdict is the sup of member verdicts") {
    auto q2 = field_from_label("Qp:2");
    std::vector<GroupDescriptor> members = {GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(4),
                                            GroupDescriptor::cyclic(24)};
    auto uni = GroupDescriptor::directed_union(members, true);
    ExtendedNorm sup = ExtendedNorm::one();
    for (const auto& m : members) {
        auto v = amenability_norm(m, q2);
        if (sup <= v.norm) sup = v.norm;
    }
    CHECK(amenability_norm(uni, q2).norm == sup);
    CHECK(amenability_norm(uni, q2).certified);
}

TEST_CASE("simplicity obstruction rows") {
    NormTable realized;  // 2: 4, 3: > 1, 5: > 1 -- realized by a simple group
    realized.entries[2] = ExtendedNorm::power(2, 2);
    realized.entries[3] = ExtendedNorm::power(3, 1);
    realized.entries[5] = ExtendedNorm::infinity();
    realized.tail_is_one = true;
    CHECK(!simplicity_obstruction(realized).obstructed);

    NormTable small2;
    small2.entries[2] = ExtendedNorm::power(2, 1);
    small2.entries[3] = ExtendedNorm::infinity();
    small2.entries[5] = ExtendedNorm::power(5, 3);
    small2.tail_is_one = true;
    CHECK(simplicity_obstruction(small2).obstructed);

    NormTable one_odd;
    one_odd.entries[2] = ExtendedNorm::power(2, 2);
    one_odd.entries[3] = ExtendedNorm::power(3, 2);
    one_odd.entries[5] = ExtendedNorm::one();
    one_odd.tail_is_one = true;
    CHECK(simplicity_obstruction(one_odd).obstructed);

    NormTable missing2;
    missing2.entries[3] = ExtendedNorm::one();
    missing2.tail_is_one = true;
    CHECK_THROWS_AS(simplicity_obstruction(missing2), input_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "nka/descriptor.hpp"
#include "nka/errors.hpp"
#include "nka/orders.hpp"
#include "nka/valuation.hpp"

using namespace nka;

TEST_CASE("finite and cyclic exponents") {
    auto z12 = GroupDescriptor::cyclic(12);
    auto e = z12.p_exponent(2, 5);
    CHECK(e.value == 2);
    CHECK(e.certified);
    CHECK(z12.p_exponent(3, 5).value == 1);
    CHECK(z12.p_exponent(5, 5).value == 0);
    CHECK(GroupDescriptor::symmetric(4).p_exponent(2, 5).value == 3);
}

TEST_CASE("explicit order streams") {
    auto tower = OrderStream::explicit_orders({Integer(2), Integer(4), Integer(12)}, true, true);
    auto profinite = GroupDescriptor::profinite(tower);
    CHECK(profinite.p_exponent(2, 5).value == 2);
    CHECK(profinite.p_exponent(2, 5).certified);
    CHECK(profinite.compact() == Tri::True);

    // non-exhaustive lists give lower bounds only
    auto partial = GroupDescriptor::profinite(
        OrderStream::explicit_orders({Integer(2), Integer(4)}, false));
    CHECK(partial.p_exponent(2, 5).value == 2);
    CHECK(!partial.p_exponent(2, 5).certified);

    // divisibility enforced when the tower flag is set
    CHECK_THROWS_AS(OrderStream::explicit_orders({Integer(4), Integer(6)}, true, true),
                    descriptor_error);
}

TEST_CASE("formula stream certifies only declared primes") {
    auto stream = OrderStream::formula(
        [](int k) { return pow_integer(Integer(3), static_cast<unsigned long>(k)); },
        {{3, std::nullopt}, {2, 0L}});
    auto g = GroupDescriptor::profinite(stream);
    auto at3 = g.p_exponent(3, 4);
    CHECK(at3.diverges());
    CHECK(at3.certified);
    auto at2 = g.p_exponent(2, 4);
    CHECK(at2.value == 0);
    CHECK(at2.certified);
    auto at5 = g.p_exponent(5, 4);
    CHECK(at5.value == 0);
    CHECK(!at5.certified);  // sampled
}

TEST_CASE("extension and product add exponents") {
    auto a = GroupDescriptor::cyclic(8);
    auto b = GroupDescriptor::cyclic(12);
    auto ext = GroupDescriptor::extension(a, b);
    CHECK(ext.p_exponent(2, 5).value == 5);
    CHECK(ext.p_exponent(2, 5).certified);
    auto prod = GroupDescriptor::product({a, b, GroupDescriptor::cyclic(2)});
    CHECK(prod.p_exponent(2, 5).value == 6);

    auto with_diverging = GroupDescriptor::extension(
        GroupDescriptor::family("prufer", {{"p", 2}}), b);
    CHECK(with_diverging.p_exponent(2, 5).diverges());
    CHECK(with_diverging.p_exponent(2, 5).certified);
    CHECK(with_diverging.p_exponent(3, 5).value == 1);
}

TEST_CASE("directed unions take sups and need the open flag to certify") {
    std::vector<GroupDescriptor> members = {GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(4),
                                            GroupDescriptor::cyclic(8)};
    auto open_union = GroupDescriptor::directed_union(members, true);
    auto e = open_union.p_exponent(2, 5);
    CHECK(e.value == 3);
    CHECK(e.certified);
    auto closed_union = GroupDescriptor::directed_union(members, false);
    CHECK(closed_union.p_exponent(2, 5).value == 3);
    CHECK(!closed_union.p_exponent(2, 5).certified);
}

TEST_CASE("family exponents") {
    auto prufer = GroupDescriptor::family("prufer", {{"p", 3}});
    CHECK(prufer.p_exponent(3, 4).diverges());
    CHECK(prufer.p_exponent(2, 4).value == 0);
    CHECK(prufer.locally_elliptic() == Tri::True);
    CHECK(prufer.compact() == Tri::False);

    auto zl = GroupDescriptor::family("z_ell", {{"ell", 5}});
    CHECK(zl.p_exponent(5, 4).diverges());
    CHECK(zl.p_exponent(2, 4).value == 0);
    CHECK(zl.compact() == Tri::True);

    auto tree = GroupDescriptor::family("tree_fix", {{"d", 3}});
    CHECK(tree.p_exponent(2, 4).diverges());
    CHECK(tree.p_exponent(3, 4).value == 1);
    CHECK(tree.p_exponent(5, 4).value == 0);
    // nu_2 of the ball orders strictly increases
    long prev = -1;
    for (int k = 1; k <= 4; ++k) {
        long v = padic_valuation(tree.chain_order_at(k), Integer(2));
        CHECK(v > prev);
        prev = v;
    }

    auto gl = GroupDescriptor::family("gl_chain", {{"ell", 3}, {"a", 3}});
    auto gl2 = gl.p_exponent(2, 5);
    CHECK(gl2.value == 4);
    CHECK(gl2.certified);
    CHECK(gl.p_exponent(3, 5).diverges());

    auto psl = GroupDescriptor::family("psl_chain", {{"ell", 3}, {"a", 3}});
    auto psl2 = psl.p_exponent(2, 5);
    CHECK(psl2.value == 2);
    CHECK(psl2.certified);

    auto sz = GroupDescriptor::family("sz_chain", {{"a", 3}});
    CHECK(sz.p_exponent(2, 4).diverges());
    CHECK(sz.p_exponent(3, 4).value == 0);
    CHECK(sz.p_exponent(3, 4).certified);

    // closed forms cross-checked against direct valuations of the pieces
    for (int k = 1; k <= 3; ++k) {
        CHECK(padic_valuation(gl.chain_order_at(k), Integer(2)) == 4);
        CHECK(padic_valuation(psl.chain_order_at(k), Integer(2)) == 2);
        CHECK(padic_valuation(sz.chain_order_at(k), Integer(3)) == 0);
    }
}

TEST_CASE("gl chain with even a diverges at 2") {
    auto gl = GroupDescriptor::family("gl_chain", {{"ell", 3}, {"a", 2}});
    auto e = gl.p_exponent(2, 4);
    CHECK(e.diverges());
    CHECK(e.certified);
    for (int k = 1; k <= 3; ++k)
        CHECK(padic_valuation(gl.chain_order_at(k), Integer(2)) >=
              padic_valuation(gl.chain_order_at(1), Integer(2)));
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(GroupDescriptor::family("prufer", {{"p", 4}}), descriptor_error);
    CHECK_THROWS_AS(GroupDescriptor::family("sz_chain", {{"a", 2}}), descriptor_error);
    CHECK_THROWS_AS(GroupDescriptor::family("tree_fix", {{"d", 2}}), descriptor_error);
    CHECK_THROWS_AS(GroupDescriptor::family("nonsense", {}), descriptor_error);
}

TEST_CASE("json round trip") {
    auto d = GroupDescriptor::extension(
        GroupDescriptor::family("z_ell", {{"ell", 3}}),
        GroupDescriptor::directed_union(
            {GroupDescriptor::cyclic(4),
             GroupDescriptor::product({GroupDescriptor::finite(Integer(48)),
                                       GroupDescriptor::symmetric(3)})},
            true));
    auto j = d.to_json();
    auto back = GroupDescriptor::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(j.at("kind") == "extension");
    CHECK(back.p_exponent(2, 4).value == d.p_exponent(2, 4).value);

    auto table_doc = nlohmann::json::parse(R"({"kind":"finite","table":[[0,1],[1,0]]})");
    CHECK(GroupDescriptor::from_json(table_doc).finite_order() == 2);

    // stream flags survive the round trip
    auto prof = GroupDescriptor::profinite(
        OrderStream::explicit_orders({Integer(2), Integer(4)}, false, true));
    auto prof_back = GroupDescriptor::from_json(prof.to_json());
    CHECK(prof_back.to_json() == prof.to_json());
    CHECK(!prof_back.p_exponent(2, 3).certified);
}

TEST_CASE("inline descriptor strings") {
    CHECK(descriptor_from_string("prufer:2").family_name() == "prufer");
    CHECK(descriptor_from_string("z_ell:3").family_params().at("ell") == 3);
    CHECK(descriptor_from_string("tree_fix:3").family_params().at("d") == 3);
    auto psl = descriptor_from_string("psl_chain:q0=3,ell=3,a=odd");
    CHECK(psl.family_name() == "psl_chain");
    CHECK(psl.family_params().at("a") == 3);
    CHECK(descriptor_from_string("cyclic:12").p_exponent(2, 3).value == 2);
    CHECK_THROWS_AS(descriptor_from_string("what:is:this"), input_error);
}

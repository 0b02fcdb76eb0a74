#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nka/errors.hpp"
#include "nka/field.hpp"

using namespace nka;

TEST_CASE("registry labels") {
    auto qp = field_from_label("Qp:3");
    CHECK(qp.char_field == 0);
    CHECK(qp.residue_char == 3);
    CHECK(qp.spherically_complete);
    CHECK(qp.discretely_valued);

    auto laurent = field_from_label("Fp_laurent:2");
    CHECK(laurent.char_field == 2);
    CHECK(laurent.residue_char == 2);

    auto q = field_from_label("trivial:Q");
    CHECK(q.char_field == 0);
    CHECK(q.residue_char == 0);

    auto fp = field_from_label("trivial:Fp:5");
    CHECK(fp.char_field == 5);
    CHECK(fp.residue_char == 5);

    CHECK_THROWS_AS(field_from_label("Qp:4"), input_error);
    CHECK_THROWS_AS(field_from_label("weird"), input_error);
}

TEST_CASE("trichotomy classification") {
    CHECK(classify_trichotomy(field_from_label("Qp:5")).kind == Trichotomy::Mixed);
    CHECK(classify_trichotomy(field_from_label("Qp:5")).p == 5);
    CHECK(classify_trichotomy(field_from_label("Fp_laurent:3")).kind == Trichotomy::CharP);
    CHECK(classify_trichotomy(field_from_label("trivial:Q")).kind == Trichotomy::EqualCharZero);
}

TEST_CASE("descriptor invariants") {
    FieldDescriptor bad;
    bad.label = "bad";
    bad.char_field = 3;
    bad.residue_char = 5;
    CHECK_THROWS_AS(bad.validate(), descriptor_error);

    FieldDescriptor bad2;
    bad2.label = "bad2";
    bad2.char_field = 3;
    bad2.residue_char = 0;
    CHECK_THROWS_AS(bad2.validate(), descriptor_error);
}

TEST_CASE("flat record round trip") {
    auto fd = field_from_label("Qp:2");
    auto rec = fd.record();
    REQUIRE(rec.size() == 5);
    CHECK(rec[0].second == "Qp:2");
    CHECK(rec[1].second == "0");
    CHECK(rec[2].second == "2");
    CHECK(rec[3].second == "true");
}

#include "doctest.h"
#include "persimod/field.hpp"

using namespace persimod;

TEST_CASE("field specs") {
    CHECK(FieldSpec::rationals().name() == "Q");
    CHECK(FieldSpec::rationals().is_rational());
    CHECK(FieldSpec::prime(5).name() == "F5");
    CHECK_FALSE(FieldSpec::prime(2).is_rational());
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime(0), Error);

    CHECK(parse_field_spec("q") == FieldSpec::rationals());
    CHECK(parse_field_spec("Q") == FieldSpec::rationals());
    CHECK(parse_field_spec("p:7") == FieldSpec::prime(7));
    CHECK(parse_field_spec("p:1000003") == FieldSpec::prime(1000003));
    CHECK_THROWS_AS(parse_field_spec("p:9"), Error);
    CHECK_THROWS_AS(parse_field_spec("p:"), Error);
    CHECK_THROWS_AS(parse_field_spec("r"), Error);
    CHECK_THROWS_AS(parse_field_spec("p:12x"), Error);
    try {
        parse_field_spec("p:6");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_field);
    }
}

TEST_CASE("rational arithmetic") {
    RationalField F;
    Rational a = F.parse("-4/7"), b = F.parse("3");
    CHECK((a + b).str() == "17/7");
    CHECK((a * b).str() == "-12/7");
    CHECK((b / a).str() == "-21/4");
    CHECK((-a).str() == "4/7");
    CHECK(a.inverse().str() == "-7/4");
    CHECK(F.parse("0.25") == F.parse("1/4"));
    CHECK(F.parse("-1.5") == F.parse("-3/2"));
    CHECK(F.parse("2.") == F.parse("2"));
    CHECK(F.zero().is_zero());
    CHECK(F.one().is_one());
    CHECK(F.from_long(-3).str() == "-3");
    CHECK(a.cmp(b) < 0);
    CHECK(b.cmp(a) > 0);
    CHECK(a.cmp(a) == 0);
    CHECK_THROWS_AS(F.zero().inverse(), Error);
    CHECK_THROWS_AS(b / F.zero(), Error);
    CHECK_THROWS_AS(F.parse("3/2/1"), Error);
    CHECK_THROWS_AS(F.parse("x"), Error);
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(FieldSpec::prime(5));
    Fp two = F.from_long(2), three = F.from_long(3);
    CHECK((two + three).is_zero());
    CHECK((two * three).value() == 1);
    CHECK((two - three).value() == 4);
    CHECK((-two).value() == 3);
    CHECK(two.inverse().value() == 3);
    CHECK((three / two).value() == 4);
    CHECK(F.from_long(-1).value() == 4);
    CHECK(F.parse("12").value() == 2);
    CHECK(F.parse("-13").value() == 2);
    CHECK_THROWS_AS(F.zero().inverse(), Error);

    // detached zero joins whichever side carries a modulus
    Fp detached;
    CHECK((detached + two).value() == 2);
    CHECK((two + detached).value() == 2);
    CHECK((detached * two).is_zero());
    CHECK((two - detached).value() == 2);

    // Fermat: x^p = x
    for (uint32_t p : {2u, 3u, 5u, 7u, 1000003u}) {
        PrimeField Fp_(FieldSpec::prime(p));
        for (long x : {0L, 1L, 2L, 17L, -5L, 123456L}) {
            auto v = Fp_.from_long(x);
            CHECK(v.pow(p) == v);
            if (!v.is_zero()) CHECK((v * v.inverse()).is_one());
        }
    }
}

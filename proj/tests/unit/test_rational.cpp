#include <doctest.h>

#include <algorithm>
#include <vector>

#include "equidissect/errors.hpp"
#include "equidissect/rational.hpp"
#include "support/generators.hpp"

using namespace equidissect;
namespace tg = equidissect::testgen;

TEST_SUITE("rational") {

TEST_CASE("parse and str round-trip canonical forms") {
    CHECK(Rational::parse("12/5").str() == "12/5");
    CHECK(Rational::parse("-3/8").str() == "-3/8");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-7/1").str() == "-7");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("0/9").str() == "0");
}

TEST_CASE("parse rejects malformed literals") {
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("-6/-4"), ParseError);  // sign goes in front
    CHECK_THROWS_AS(Rational::parse("zebra"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("constructor canonicalizes sign and gcd") {
    CHECK(Rational(BigInt(6), BigInt(-4)) == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK(Rational(BigInt(-2), BigInt(-2)) == Rational(1));
    CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("field axioms on random values") {
    tg::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        Rational a = tg::random_rational(rng, 1000, 1000);
        Rational b = tg::random_rational(rng, 1000, 1000);
        Rational c = tg::random_rational(rng, 1000, 1000);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        if (!b.is_zero()) {
            CHECK((a * b) / b == a);
            CHECK(b * b.reciprocal() == Rational(1));
        }
        CHECK((a - b).sign() == (a < b ? -1 : (a == b ? 0 : 1)));
        CHECK(a.abs() >= Rational(0));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("floor and ceiling") {
    CHECK(floor_of(Rational::parse("7/2")) == BigInt(3));
    CHECK(ceil_of(Rational::parse("7/2")) == BigInt(4));
    CHECK(floor_of(Rational::parse("-7/2")) == BigInt(-4));
    CHECK(ceil_of(Rational::parse("-7/2")) == BigInt(-3));
    CHECK(floor_of(Rational(5)) == BigInt(5));
    CHECK(ceil_of(Rational(5)) == BigInt(5));
    CHECK(floor_of(Rational(-5)) == BigInt(-5));
    tg::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Rational q = tg::random_rational(rng, 500, 30);
        CHECK(Rational(floor_of(q)) <= q);
        CHECK(q < Rational(floor_of(q) + 1));
        CHECK(q <= Rational(ceil_of(q)));
        CHECK(Rational(ceil_of(q) - 1) < q);
    }
}

TEST_CASE("ordering is total and consistent") {
    std::vector<Rational> vals = {Rational::parse("-3/2"), Rational(2), Rational(0),
                                  Rational::parse("1/3"), Rational::parse("-2")};
    std::sort(vals.begin(), vals.end());
    CHECK(vals.front() == Rational(-2));
    CHECK(vals.back() == Rational(2));
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) CHECK(vals[i] < vals[i + 1]);
}

}  // TEST_SUITE

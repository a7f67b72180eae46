#include "sesh/rational.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using sesh::Rational;
using sesh::rat_cmp_sqrt;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.squared() == Rational(1, 4));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(2) > Rational(3, 2));
}

TEST_CASE("rational string forms") {
    CHECK(Rational(3, 8).str() == "3/8");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(3, 8).decimal() == "0.375000");
    CHECK(Rational(-1, 3).decimal() == "-0.333333");
    CHECK(Rational(1, 22).decimal() == "0.045454");  // truncated, not rounded
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("0.5"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::domain_error);
}

TEST_CASE("rational parse/str round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("rational field axioms (randomized)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 50);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 300; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a / a == Rational(1));
        CHECK(a + (-a) == Rational(0));
    }
}

TEST_CASE("exact comparison against square roots") {
    CHECK(rat_cmp_sqrt(Rational(1, 10), Rational(4, 216)) == std::strong_ordering::less);
    CHECK(rat_cmp_sqrt(Rational(2, 3), Rational(4, 9)) == std::strong_ordering::equal);
    CHECK(rat_cmp_sqrt(Rational(1, 2), Rational(1, 9)) == std::strong_ordering::greater);
    CHECK(rat_cmp_sqrt(Rational(-1), Rational(4)) == std::strong_ordering::less);
    CHECK(rat_cmp_sqrt(Rational(0), Rational(0)) == std::strong_ordering::equal);
    CHECK_THROWS_AS(rat_cmp_sqrt(Rational(1), Rational(-1)), std::domain_error);
}

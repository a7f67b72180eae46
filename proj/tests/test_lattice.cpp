#include "sesh/lattice.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sesh;

TEST_CASE("projective plane lattice") {
    auto p2 = SurfaceModel::projective_plane();
    DivisorClass h{p2, {Rational(1)}};
    CHECK(pair(p2, h, h) == Rational(1));
    CHECK(is_ample(p2, h));
    CHECK(is_nef(p2, DivisorClass{p2, {Rational(0)}}));
    CHECK_FALSE(is_ample(p2, DivisorClass{p2, {Rational(0)}}));
    CHECK_FALSE(is_nef(p2, DivisorClass{p2, {Rational(-1)}}));
    // adjunction: a smooth plane curve of degree d has genus (d-1)(d-2)/2
    for (int d = 1; d <= 6; ++d) {
        DivisorClass c{p2, {Rational(d)}};
        CHECK(adjunction_genus(p2, c) ==
              Rational(static_cast<long long>(d - 1) * (d - 2) / 2));
    }
}

TEST_CASE("ruled surface lattice") {
    for (int e : {0, 1, 2, 4}) {
        auto xe = SurfaceModel::ruled(0, e);
        DivisorClass c0{xe, {Rational(1), Rational(0)}};
        DivisorClass f{xe, {Rational(0), Rational(1)}};
        CHECK(pair(xe, c0, c0) == Rational(-e));
        CHECK(pair(xe, c0, f) == Rational(1));
        CHECK(pair(xe, f, f) == Rational(0));
        DivisorClass k{xe, *xe->canonical_class};
        CHECK(pair(xe, k, k) == Rational(8));
        // fibers are rational: adjunction gives genus 0
        CHECK(adjunction_genus(xe, f) == Rational(0));

        // nef = nonnegative against the curve-cone generators C0 and f
        for (int a = -5; a <= 5; ++a)
            for (int b = -5; b <= 5; ++b) {
                DivisorClass d{xe, {Rational(a), Rational(b)}};
                bool expect_nef = !pair(xe, d, f).is_negative() &&
                                  !pair(xe, d, c0).is_negative();
                CHECK(is_nef(xe, d) == expect_nef);
                if (is_ample(xe, d)) CHECK(expect_nef);
            }
    }
    // genus enters the canonical class
    auto x14 = SurfaceModel::ruled(1, 4);
    CHECK(*x14->canonical_square == Rational(0));
    CHECK_THROWS_AS(SurfaceModel::ruled(-1, 0), std::domain_error);
}

TEST_CASE("pairing is bilinear and symmetric (randomized)") {
    auto s = std::make_shared<SurfaceModel>();
    s->kind = SurfaceKind::AbstractLattice;
    s->rank = 3;
    s->gram = {{Rational(2), Rational(1), Rational(0)},
               {Rational(1), Rational(-2), Rational(3)},
               {Rational(0), Rational(3), Rational(-1)}};
    s->basis_labels = {"u", "v", "w"};
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    auto rnd = [&] {
        return DivisorClass{s, {Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))}};
    };
    for (int i = 0; i < 100; ++i) {
        DivisorClass a = rnd(), b = rnd(), c = rnd();
        Rational m(coeff(rng));
        CHECK(pair(s, a, b) == pair(s, b, a));
        CHECK(pair(s, a + b, c) == pair(s, a, c) + pair(s, b, c));
        CHECK(pair(s, m * a, b) == m * pair(s, a, b));
    }
}

TEST_CASE("abstract lattice positivity evidence") {
    auto s = std::make_shared<SurfaceModel>();
    s->kind = SurfaceKind::AbstractLattice;
    s->rank = 2;
    s->gram = {{Rational(2), Rational(1)}, {Rational(1), Rational(-2)}};
    s->basis_labels = {"L", "E"};
    s->ample_classes = {{Rational(1), Rational(0)}};
    s->curve_classes = {{Rational(0), Rational(1)}};
    SurfacePtr sp = s;

    DivisorClass l{sp, {Rational(3), Rational(0)}};
    CHECK(is_nef(sp, l));   // positive multiple of the declared ample class
    CHECK(is_ample(sp, l));
    DivisorClass zero{sp, {Rational(0), Rational(0)}};
    CHECK(is_nef(sp, zero));
    CHECK_FALSE(is_ample(sp, zero));
    DivisorClass bad{sp, {Rational(0), Rational(1)}};
    CHECK_FALSE(is_nef(sp, bad));  // E itself pairs negatively with E
    DivisorClass unknown{sp, {Rational(2), Rational(1)}};  // E-degree 0, no evidence
    CHECK_THROWS_AS(is_nef(sp, unknown), UnsupportedSurfaceError);
}

TEST_CASE("divisor class plumbing") {
    auto p2 = SurfaceModel::projective_plane();
    CHECK_THROWS_AS((DivisorClass{p2, {Rational(1), Rational(2)}}), std::domain_error);
    auto xe = SurfaceModel::ruled(0, 2);
    DivisorClass h{p2, {Rational(1)}};
    DivisorClass f{xe, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(pair(p2, h, f), std::domain_error);
    CHECK((Rational(2) * h).str() == "2");
    CHECK((f + f).str() == "0,2");
}

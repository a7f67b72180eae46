#include "sesh/seshadri.hpp"

#include <catch_amalgamated.hpp>

using namespace sesh;

namespace {

DivisorClass hyperplane(const Arrangement& arr) {
    return DivisorClass{arr.surface, {Rational(1)}};
}

}  // namespace

TEST_CASE("configurational constant and minimum ratio") {
    Arrangement qp = preset_quasi_pencil(5);
    DivisorClass h = hyperplane(qp);
    CHECK(configurational_epsilon(qp, h) == Rational(5, 12));
    auto ratio = min_curve_ratio(qp, h);
    CHECK(ratio.value == Rational(1, 4));
    CHECK(ratio.argmin == "h4");

    // no singular points: both are undefined
    auto p2 = SurfaceModel::projective_plane();
    Arrangement empty{p2, {{"a", DivisorClass{p2, {Rational(1)}}, {}}}, {}};
    CHECK_THROWS_AS(configurational_epsilon(empty, hyperplane(empty)), std::domain_error);
    CHECK_THROWS_AS(min_curve_ratio(empty, hyperplane(empty)), std::domain_error);
}

TEST_CASE("main theorem certifies a plane star") {
    Arrangement arr = build_star_lines(5, 77);
    DivisorClass h = hyperplane(arr);
    auto res = certify_main_theorem(arr, h);
    CHECK(res.kind == ResultKind::Exact);
    CHECK(*res.value == Rational(1, 4));
    for (const auto& c : res.checks) CHECK(c.passed);
}

TEST_CASE("star corollary on plane stars") {
    for (int d : {5, 8}) {
        Arrangement arr = build_star_lines(d, 77);
        auto res = certify_star_corollary(arr, hyperplane(arr));
        CHECK(res.kind == ResultKind::Exact);
        CHECK(*res.value == Rational(1, d - 1));
    }
    // d = 3 cannot certify (needs d >= 4) but still reports a candidate
    Arrangement small = build_star_lines(3, 77);
    auto res = certify_star_corollary(small, hyperplane(small));
    CHECK(res.kind == ResultKind::Candidate);
    CHECK(*res.value == Rational(1, 2));
}

TEST_CASE("two-sided bounds on the hesse conics") {
    Arrangement arr = preset_hesse_conics();
    DivisorClass h = hyperplane(arr);
    auto bounds = bounds_cor_main(arr, h);
    REQUIRE(bounds.kind == ResultKind::Bounds);
    CHECK(*bounds.lower == Rational(1, 22));
    CHECK(*bounds.upper == Rational(1, 4));
    CHECK(!(*bounds.upper < *bounds.lower));

    auto main = certify_main_theorem(arr, h);
    CHECK(main.kind == ResultKind::Candidate);
}

TEST_CASE("sqrt upper bound") {
    auto p2 = SurfaceModel::projective_plane();
    DivisorClass h{p2, {Rational(3)}};
    auto bound = sqrt_upper_bound(h, 4);  // sqrt(9/4) = 3/2
    CHECK(bound.compare(Rational(3, 2)) == std::strong_ordering::equal);
    CHECK(bound.consistent_with(Rational(1)));
    CHECK_FALSE(bound.consistent_with(Rational(2)));
    CHECK_THROWS_AS(sqrt_upper_bound(h, 0), std::domain_error);
}

TEST_CASE("pullback to a ruled surface") {
    Arrangement plane = build_fermat_plane(3);
    Arrangement arr = pullback_to_ruled(plane, 4);
    CHECK(arr.surface->kind == SurfaceKind::RuledSurface);
    CHECK(arr.surface->ruled_e == 4);
    auto pinv = invariants(plane), inv = invariants(arr);
    for (const auto& [k, t] : pinv.t) CHECK(inv.t.at(k) == 4 * t);
    CHECK(inv.f1 == 4 * pinv.f1);
    CHECK(arr.curves.front().cls->str() == "1,4");
    CHECK(validate(arr, ValidationLevel::Lattice).empty());

    CHECK_THROWS_AS(pullback_to_ruled(plane, 0), std::domain_error);
    CHECK_THROWS_AS(pullback_to_ruled(arr, 2), std::domain_error);  // not on P^2
    Arrangement conics = preset_hesse_conics();
    CHECK_THROWS_AS(pullback_to_ruled(conics, 2), std::domain_error);  // class 2H
}

TEST_CASE("hirzebruch-type inequality on ruled pullbacks") {
    Arrangement arr = pullback_to_ruled(build_fermat_plane(3), 4);
    auto rep = verify_htin(arr, 1, 4);
    CHECK(rep.holds);
    CHECK(rep.lhs == Rational(36));
    CHECK(rep.rhs == Rational(-88));

    // hypothesis screens
    CHECK_THROWS_AS(verify_htin(arr, 1, 3), std::domain_error);  // b < a*e classes mismatch
    Arrangement low_e = pullback_to_ruled(build_fermat_plane(3), 2);
    CHECK_THROWS_AS(verify_htin(low_e, 1, 2), std::domain_error);  // e < 4
}

TEST_CASE("ruled-surface lower bound") {
    Arrangement arr = pullback_to_ruled(build_fermat_plane(3), 4);
    DivisorClass l{arr.surface, {Rational(1), Rational(5)}};
    Rational lb = lower_bound_ruled(arr, l, 1, 4);
    CHECK(lb == Rational(45, 692));
    Rational eps = configurational_epsilon(arr, l);
    CHECK(eps == Rational(5, 16));
    CHECK(!(eps < lb));

    DivisorClass not_ample{arr.surface, {Rational(1), Rational(4)}};  // nef, not ample
    CHECK_THROWS_AS(lower_bound_ruled(arr, not_ample, 1, 4), std::domain_error);
}

TEST_CASE("kodaira-type inequality and lower bound") {
    Arrangement arr = build_double_cover_fermat(3);
    DivisorClass l{arr.surface, {Rational(1)}};
    auto rep = verify_kodaira_inequality(arr);
    CHECK(rep.holds);
    CHECK(rep.lhs == Rational(-60));
    CHECK(rep.rhs == Rational(72));

    Rational lb = lower_bound_kodaira(arr, l);
    CHECK(lb == Rational(1, 22));
    CHECK(!(configurational_epsilon(arr, l) < lb));

    // missing canonical/Chern data is rejected
    auto bare = std::make_shared<SurfaceModel>();
    bare->kind = SurfaceKind::AbstractLattice;
    bare->rank = 1;
    bare->gram = {{Rational(2)}};
    bare->basis_labels = {"L"};
    Arrangement stripped = arr;
    stripped.surface = bare;
    for (auto& c : stripped.curves) c.cls = DivisorClass{bare, {Rational(1)}};
    DivisorClass lb2{bare, {Rational(1)}};
    CHECK_THROWS_AS(lower_bound_kodaira(stripped, lb2), std::domain_error);
    CHECK_THROWS_AS(verify_kodaira_inequality(stripped), std::domain_error);
}

TEST_CASE("homogeneity under scaling the line bundle") {
    Arrangement arr = preset_klein();
    DivisorClass h = hyperplane(arr);
    for (long long m : {2, 3, 11}) {
        Rational rm(m);
        auto base = min_curve_ratio(arr, h);
        auto scaled = min_curve_ratio(arr, rm * h);
        CHECK(scaled.value == rm * base.value);
        CHECK(scaled.argmin == base.argmin);
        CHECK(configurational_epsilon(arr, rm * h) == rm * configurational_epsilon(arr, h));
    }
}

TEST_CASE("candidate results carry failing checks") {
    Arrangement arr = pullback_to_ruled(build_star_lines(5, 2024), 2);
    DivisorClass l{arr.surface, {Rational(1), Rational(3)}};
    auto res = certify_star_corollary(arr, l);
    CHECK(res.kind == ResultKind::Candidate);
    CHECK_FALSE(res.certified());
    CHECK(*res.value == Rational(3, 8));
    bool some_failed = false;
    for (const auto& c : res.checks) some_failed = some_failed || !c.passed;
    CHECK(some_failed);
}

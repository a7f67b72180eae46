#include "sesh/arrangement.hpp"
#include "sesh/geometry.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace sesh;

namespace {

bool has_code(const std::vector<Diagnostic>& diags, const std::string& code) {
    return std::any_of(diags.begin(), diags.end(),
                       [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace

TEST_CASE("invariants of a quasi-pencil") {
    Arrangement arr = preset_quasi_pencil(5);
    auto inv = invariants(arr);
    CHECK(inv.d == 5);
    CHECK(inv.t == std::map<int, int>{{2, 4}, {4, 1}});
    CHECK(inv.f0 == 5);
    CHECK(inv.f1 == 12);
    CHECK(inv.b.at("h0") == 2);
    CHECK(inv.b.at("h4") == 4);
    CHECK(inv.bs == 4);
    long long sum_b = 0;
    for (const auto& [id, bi] : inv.b) sum_b += bi;
    CHECK(sum_b == inv.f1);
}

TEST_CASE("pair-count identity") {
    for (const char* name : {"klein", "wiman", "hesse_conics", "fermat_plane_combinatorial(4)"}) {
        Arrangement arr = preset(name);
        auto rep = verify_count_identity(arr);
        INFO(name);
        CHECK(rep.holds);
        CHECK(rep.lhs == rep.rhs);
    }
}

TEST_CASE("validation diagnostics") {
    auto p2 = SurfaceModel::projective_plane();
    DivisorClass h{p2, {Rational(1)}};

    SECTION("duplicate curve id") {
        Arrangement arr{p2, {{"a", h, {}}, {"a", h, {}}}, {{"p", {"a", "a"}}}};
        CHECK(has_code(validate(arr, ValidationLevel::Combinatorial), "duplicate-curve"));
    }
    SECTION("unknown curve reference") {
        Arrangement arr{p2, {{"a", h, {}}, {"b", h, {}}}, {{"p", {"a", "zz"}}}};
        CHECK(has_code(validate(arr, ValidationLevel::Combinatorial), "unknown-curve"));
    }
    SECTION("point below multiplicity 2") {
        Arrangement arr{p2, {{"a", h, {}}, {"b", h, {}}}, {{"p", {"a"}}, {"q", {"a", "b"}}}};
        CHECK(has_code(validate(arr, ValidationLevel::Combinatorial),
                       "point-below-multiplicity-2"));
    }
    SECTION("disconnected union") {
        Arrangement arr{p2,
                        {{"a", h, {}}, {"b", h, {}}, {"c", h, {}}, {"d", h, {}}},
                        {{"p", {"a", "b"}}, {"q", {"c", "d"}}}};
        CHECK(has_code(validate(arr, ValidationLevel::Combinatorial), "not-connected"));
    }
    SECTION("transversality mismatch at lattice level") {
        // two plane lines sharing two points pair to 1, not 2
        Arrangement arr{p2,
                        {{"a", h, {}}, {"b", h, {}}},
                        {{"p", {"a", "b"}}, {"q", {"a", "b"}}}};
        CHECK(validate(arr, ValidationLevel::Combinatorial).empty());
        CHECK(has_code(validate(arr, ValidationLevel::Lattice), "transversality-mismatch"));
    }
    SECTION("clean arrangement validates at both levels") {
        Arrangement arr = build_fermat_plane(3);
        CHECK(validate(arr, ValidationLevel::Combinatorial).empty());
        CHECK(validate(arr, ValidationLevel::Lattice).empty());
    }
}

TEST_CASE("invariants are permutation invariant") {
    Arrangement arr = preset_klein();
    Arrangement shuffled = arr;
    std::mt19937_64 rng(99);
    std::shuffle(shuffled.curves.begin(), shuffled.curves.end(), rng);
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    for (auto& p : shuffled.points) std::shuffle(p.curves.begin(), p.curves.end(), rng);

    auto a = invariants(arr), b = invariants(shuffled);
    CHECK(a.t == b.t);
    CHECK(a.f0 == b.f0);
    CHECK(a.f1 == b.f1);
    CHECK(a.b == b.b);
    CHECK(a.bs == b.bs);
    auto ra = verify_count_identity(arr), rb = verify_count_identity(shuffled);
    CHECK(ra.lhs == rb.lhs);
    CHECK(ra.rhs == rb.rhs);
}

TEST_CASE("structural predicates") {
    Arrangement star = build_star_lines(5, 42);
    CHECK(is_star(star));
    CHECK(check_assumption_star1(star));
    CHECK(no_common_point(star));

    Arrangement qp = preset_quasi_pencil(5);
    CHECK_FALSE(is_star(qp));
    CHECK(check_assumption_star1(qp));
    CHECK(no_common_point(qp));

    // a pencil through one point violates no_common_point
    auto p2 = SurfaceModel::projective_plane();
    DivisorClass h{p2, {Rational(1)}};
    Arrangement pencil{p2,
                       {{"a", h, {}}, {"b", h, {}}, {"c", h, {}}},
                       {{"p", {"a", "b", "c"}}}};
    CHECK_FALSE(no_common_point(pencil));
    CHECK_FALSE(check_assumption_star1(pencil));  // d < 4
}

#include "sesh/geometry.hpp"
#include "sesh/io.hpp"

#include <catch_amalgamated.hpp>

using namespace sesh;

TEST_CASE("fermat plane arrangement geometry") {
    Arrangement arr = build_fermat_plane(4);
    auto inv = invariants(arr);
    CHECK(inv.d == 12);
    CHECK(inv.t == std::map<int, int>{{3, 16}, {4, 3}});
    CHECK(validate(arr, ValidationLevel::Lattice).empty());
    CHECK_THROWS_AS(build_fermat_plane(2), std::domain_error);
}

TEST_CASE("star line builder") {
    Arrangement arr = build_star_lines(6, 123);
    CHECK(is_star(arr));
    CHECK(static_cast<int>(arr.points.size()) == 15);
    CHECK(validate(arr, ValidationLevel::Lattice).empty());
    // deterministic for a fixed seed
    Arrangement again = build_star_lines(6, 123);
    CHECK(serialize_arrangement(arr) == serialize_arrangement(again));
    CHECK_THROWS_AS(build_star_lines(1, 0), std::domain_error);
}

TEST_CASE("group presets are lattice-valid") {
    for (const char* name : {"klein", "wiman"}) {
        Arrangement arr = preset(name);
        INFO(name);
        CHECK(validate(arr, ValidationLevel::Lattice).empty());
    }
}

TEST_CASE("hesse conic preset") {
    Arrangement arr = preset_hesse_conics();
    auto inv = invariants(arr);
    CHECK(inv.d == 12);
    CHECK(inv.f0 == 21);
    CHECK(inv.t == std::map<int, int>{{2, 12}, {8, 9}});
    // every pair of conics shares exactly 4 points, matching 2H.2H
    CHECK(validate(arr, ValidationLevel::Lattice).empty());
}

TEST_CASE("combinatorial fermat preset and its double cover") {
    Arrangement plane = preset_fermat_plane_combinatorial(3);
    auto inv = invariants(plane);
    CHECK(inv.t == std::map<int, int>{{3, 12}});
    CHECK(validate(plane, ValidationLevel::Lattice).empty());

    Arrangement dc = build_double_cover_fermat(3);
    auto dinv = invariants(dc);
    CHECK(dinv.d == 9);
    CHECK(dinv.t == std::map<int, int>{{3, 24}});
    CHECK(validate(dc, ValidationLevel::Lattice).empty());
    CHECK(*dc.curves.front().genus == Rational(2));
    // genus 2 agrees with adjunction on the K3 cover: L^2 = 2, K = 0
    CHECK(adjunction_genus(dc.surface, *dc.curves.front().cls) == Rational(2));
}

TEST_CASE("preset dispatcher") {
    CHECK(preset("quasi_pencil(6)").curves.size() == 6);
    CHECK_THROWS_AS(preset("nope"), std::domain_error);
    CHECK_THROWS_AS(preset("quasi_pencil(3)"), std::domain_error);
}

TEST_CASE("fermat quartic incidence structure") {
    auto geo = build_fermat_quartic_geometry();
    CHECK(geo.lines.size() == 48);
    const Arrangement& arr = geo.arrangement;
    auto inv = invariants(arr);
    CHECK(inv.f0 == 216);
    CHECK(inv.t == std::map<int, int>{{2, 192}, {4, 24}});
    CHECK(validate(arr, ValidationLevel::Lattice).empty());

    auto groups = hyperplane_grouping_fermat_quartic(arr);
    CHECK(groups.size() == 24);
    std::map<std::string, int> seen;
    for (const auto& g : groups) {
        CHECK(g.size() == 4);
        for (const auto& id : g) seen[id] += 1;
    }
    for (const auto& [id, count] : seen) CHECK(count == 2);

    // lines are rational (genus 0) by adjunction on the K3
    CHECK(adjunction_genus(arr.surface, *arr.curves.front().cls) == Rational(0));
}

#include "sesh/geometry.hpp"
#include "sesh/io.hpp"
#include "sesh/seshadri.hpp"

#include <catch_amalgamated.hpp>

using namespace sesh;

namespace {

const char* kRuledDoc =
    "format: 1\n"
    "# a 4-line pencil-free arrangement on X_2\n"
    "surface: ruled e=2 g=0\n"
    "curve: c1 class=1,2 genus=0\n"
    "curve: c2 class=1,2 genus=0\n"
    "curve: c3 class=1,2 genus=0\n"
    "curve: c4 class=1,2 genus=0\n"
    "point: p1 curves=c1,c2\n"
    "point: p2 curves=c1,c2\n"
    "point: p3 curves=c1,c3\n"
    "point: p4 curves=c1,c3\n"
    "point: p5 curves=c1,c4\n"
    "point: p6 curves=c1,c4\n"
    "point: p7 curves=c2,c3\n"
    "point: p8 curves=c2,c3\n"
    "point: p9 curves=c2,c4\n"
    "point: p10 curves=c2,c4\n"
    "point: p11 curves=c3,c4\n"
    "point: p12 curves=c3,c4\n";

}  // namespace

TEST_CASE("parse a ruled-surface document") {
    Arrangement arr = parse_arrangement(std::string(kRuledDoc));
    CHECK(arr.surface->kind == SurfaceKind::RuledSurface);
    CHECK(arr.surface->ruled_e == 2);
    CHECK(arr.curves.size() == 4);
    CHECK(arr.points.size() == 12);
    CHECK(arr.curves[0].cls->str() == "1,2");
    CHECK(validate(arr, ValidationLevel::Lattice).empty());
}

TEST_CASE("parse an abstract-surface document") {
    std::string doc =
        "format: 1\n"
        "surface: abstract\n"
        "rank: 2\n"
        "labels: L,E\n"
        "gram: 2 1 ; 1 -2\n"
        "canonical: 0 0\n"
        "c2: 24\n"
        "k2: 0\n"
        "ample: 1 0\n"
        "curveclass: 0 1\n"
        "curve: a class=1,0\n"
        "curve: b class=1,0\n"
        "point: p curves=a,b\n"
        "point: q curves=a,b\n";
    Arrangement arr = parse_arrangement(doc);
    CHECK(arr.surface->kind == SurfaceKind::AbstractLattice);
    CHECK(arr.surface->rank == 2);
    CHECK(pair(arr.surface, *arr.curves[0].cls, *arr.curves[1].cls) == Rational(2));
    CHECK(*arr.surface->chern_c2 == Rational(24));
    DivisorClass l{arr.surface, {Rational(1), Rational(0)}};
    CHECK(is_ample(arr.surface, l));
}

TEST_CASE("positioned parse errors") {
    auto line_of = [](const std::string& doc) {
        try {
            parse_arrangement(doc);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("surface: p2\n") == 1);                      // missing format header
    CHECK(line_of("format: 2\n") == 1);                        // unsupported version
    CHECK(line_of("format: 1\nsurface: klein\n") == 2);        // unknown surface kind
    CHECK(line_of("format: 1\nsurface: p2\nnonsense\n") == 3); // no key separator
    CHECK(line_of("format: 1\nsurface: p2\ncurve: a class=0.5\n") == 3);  // float rejected
    CHECK(line_of("format: 1\nsurface: p2\ncurve: a class=1,2\n") == 3);  // wrong rank
    CHECK(line_of("format: 1\nsurface: p2\ncurve: a class=1\npoint: p\n") == 4);
    CHECK(line_of("format: 1\nrank: 2\n") == 2);  // abstract field outside a surface
}

TEST_CASE("serialization is canonical and byte-stable") {
    Arrangement arr = parse_arrangement(std::string(kRuledDoc));
    std::string once = serialize_arrangement(arr);
    std::string twice = serialize_arrangement(parse_arrangement(once));
    CHECK(once == twice);
}

TEST_CASE("round trip preserves arrangements of every surface kind") {
    std::vector<Arrangement> cases;
    cases.push_back(build_fermat_plane(3));
    cases.push_back(preset_hesse_conics());
    cases.push_back(pullback_to_ruled(build_star_lines(5, 9), 3));
    cases.push_back(build_double_cover_fermat(3));
    for (const auto& arr : cases) {
        Arrangement back = parse_arrangement(serialize_arrangement(arr));
        auto a = invariants(arr), b = invariants(back);
        CHECK(a.t == b.t);
        CHECK(a.b == b.b);
        CHECK(a.f1 == b.f1);
        CHECK(back.surface->kind == arr.surface->kind);
        CHECK(serialize_arrangement(back) == serialize_arrangement(arr));
        // lattice content survives too
        CHECK(pair(back.surface, *back.curves[0].cls, *back.curves[1].cls) ==
              pair(arr.surface, *arr.curves[0].cls, *arr.curves[1].cls));
    }
}

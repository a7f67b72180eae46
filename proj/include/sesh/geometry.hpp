#pragma once

// Builders for the concrete arrangements: Fermat line arrangements in P^2
// over Q(zeta_n), the 48 lines on the Fermat quartic in P^3 over
// Q(zeta_8), deterministic generic star arrangements, and combinatorial
// presets (Klein, Wiman, Hesse conics, quasi-pencil, combinatorial Fermat).

#include "sesh/arrangement.hpp"
#include "sesh/permgroup.hpp"
#include "sesh/projective.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sesh {

namespace detail {

// Turns named lines in P^2 into an arrangement: all pairwise meets are
// computed exactly and clustered by canonical coordinates.
inline Arrangement arrangement_from_p2_lines(
    const std::vector<std::pair<std::string, ProjLine2>>& lines) {
    auto p2 = SurfaceModel::projective_plane();
    Arrangement arr;
    arr.surface = p2;
    DivisorClass h{p2, {Rational(1)}};
    for (const auto& [id, line] : lines) arr.curves.push_back({id, h, Rational(0)});

    std::map<ProjPoint, std::set<std::string>> clusters;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            ProjPoint p = line_meet_p2(lines[i].second, lines[j].second);
            auto& members = clusters[p];
            members.insert(lines[i].first);
            members.insert(lines[j].first);
        }
    int idx = 0;
    for (const auto& [pt, members] : clusters)
        arr.points.push_back(
            {"p" + std::to_string(idx++), {members.begin(), members.end()}});
    return arr;
}

}  // namespace detail

// The n-th Fermat arrangement of 3n lines in P^2, from the linear factors
// of (x^n - y^n)(y^n - z^n)(z^n - x^n) over Q(zeta_n).
inline Arrangement build_fermat_plane(int n) {
    if (n < 3) throw std::domain_error("build_fermat_plane: need n >= 3");
    Cyclotomic zero(n), one(n, Rational(1));
    std::vector<std::pair<std::string, ProjLine2>> lines;
    for (int i = 0; i < n; ++i) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, i);
        lines.emplace_back("a" + std::to_string(i), ProjLine2({one, -z, zero}));  // x - z^i y
        lines.emplace_back("b" + std::to_string(i), ProjLine2({zero, one, -z}));  // y - z^i z
        lines.emplace_back("c" + std::to_string(i), ProjLine2({-z, zero, one}));  // z - z^i x
    }
    return detail::arrangement_from_p2_lines(lines);
}

// d generic lines in P^2 with small pseudo-random rational coefficients;
// genericity (t_2 = C(d,2)) is verified exactly and the seed is perturbed
// on failure, up to a fixed retry cap.
inline Arrangement build_star_lines(int d, unsigned long long seed) {
    if (d < 2) throw std::domain_error("build_star_lines: need d >= 2");
    constexpr int kRetryCap = 32;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<unsigned long long>(attempt) * 0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<int> coeff(-40, 40);
        Cyclotomic one(1, Rational(1));
        std::vector<std::pair<std::string, ProjLine2>> lines;
        std::set<std::vector<Cyclotomic>> seen;
        for (int i = 0; i < d; ++i) {
            Cyclotomic a(1, Rational(coeff(rng)));
            Cyclotomic b(1, Rational(coeff(rng)));
            ProjLine2 l({a, b, one});  // never the line at infinity
            if (!seen.insert(l.coeffs).second) { --i; continue; }
            lines.emplace_back("s" + std::to_string(i), l);
        }
        Arrangement arr = detail::arrangement_from_p2_lines(lines);
        if (static_cast<long long>(arr.points.size()) ==
                static_cast<long long>(d) * (d - 1) / 2 &&
            is_star(arr))
            return arr;
    }
    throw std::runtime_error("build_star_lines: genericity not achieved within retry cap");
}

// --- Fermat quartic ------------------------------------------------------

struct FermatQuarticGeometry {
    std::vector<std::pair<std::string, ProjLine3>> lines;
    Arrangement arrangement;
};

// The 48 lines on x0^4 + x1^4 + x2^4 + x3^4 = 0 over Q(zeta_8), their
// exact pairwise intersections, and the induced numerical lattice
// (spanned by O_X(1) and the line classes).
inline FermatQuarticGeometry build_fermat_quartic_geometry() {
    const int n = 8;
    Cyclotomic zero(n), one(n, Rational(1));
    // alpha, beta range over the primitive eighth roots of unity.
    std::vector<Cyclotomic> roots;
    for (int k : {1, 3, 5, 7}) roots.push_back(Cyclotomic::root_of_unity(n, k));

    std::vector<std::pair<std::string, ProjLine3>> lines;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Cyclotomic& a = roots[i];
            const Cyclotomic& b = roots[j];
            std::string suffix = std::to_string(i) + std::to_string(j);
            lines.emplace_back("A" + suffix,
                               ProjLine3({one, -a, zero, zero}, {zero, zero, one, -b}));
            lines.emplace_back("Ap" + suffix,
                               ProjLine3({one, zero, -a, zero}, {zero, one, zero, -b}));
            lines.emplace_back("App" + suffix,
                               ProjLine3({one, zero, zero, -a}, {zero, one, -b, zero}));
        }

    const int d = static_cast<int>(lines.size());
    std::map<ProjPoint, std::set<int>> clusters;
    std::vector<std::vector<int>> meets(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto p = line_meet_p3(lines[i].second, lines[j].second);
            if (!p) continue;  // skew pair: absent from the incidence structure
            meets[i][j] = meets[j][i] = 1;
            auto& members = clusters[*p];
            members.insert(i);
            members.insert(j);
        }

    // Numerical lattice on basis (L, l_1, ..., l_48): L^2 = 4 (quartic),
    // L.l_i = 1, l_i^2 = -2 (adjunction with K = 0), l_i.l_j from the
    // computed meets. Standard K3 constants: K = 0, c2 = 24.
    auto surf = std::make_shared<SurfaceModel>();
    surf->kind = SurfaceKind::AbstractLattice;
    surf->rank = d + 1;
    surf->basis_labels.push_back("L");
    for (const auto& [id, line] : lines) surf->basis_labels.push_back(id);
    surf->gram.assign(d + 1, std::vector<Rational>(d + 1));
    surf->gram[0][0] = Rational(4);
    for (int i = 0; i < d; ++i) {
        surf->gram[0][i + 1] = surf->gram[i + 1][0] = Rational(1);
        surf->gram[i + 1][i + 1] = Rational(-2);
        for (int j = 0; j < d; ++j)
            if (j != i) surf->gram[i + 1][j + 1] = Rational(meets[i][j]);
    }
    surf->canonical_class = std::vector<Rational>(d + 1);
    surf->chern_c2 = Rational(24);
    surf->canonical_square = Rational(0);
    std::vector<Rational> l_class(d + 1);
    l_class[0] = Rational(1);
    surf->ample_classes = {l_class};
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> c(d + 1);
        c[i + 1] = Rational(1);
        surf->curve_classes.push_back(std::move(c));
    }

    FermatQuarticGeometry geo;
    geo.lines = std::move(lines);
    geo.arrangement.surface = surf;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> c(d + 1);
        c[i + 1] = Rational(1);
        geo.arrangement.curves.push_back(
            {geo.lines[i].first, DivisorClass{surf, std::move(c)}, Rational(0)});
    }
    int idx = 0;
    for (const auto& [pt, members] : clusters) {
        SingPoint sp;
        sp.id = "p" + std::to_string(idx++);
        for (int m : members) sp.curves.push_back(geo.lines[m].first);
        geo.arrangement.points.push_back(std::move(sp));
    }
    return geo;
}

inline Arrangement build_fermat_quartic_lines() {
    return build_fermat_quartic_geometry().arrangement;
}

// The 24 hyperplanes of the form x_i = alpha x_j cutting the arrangement
// into sets of 4 lines whose sum is a hyperplane section; every line
// appears in exactly two groups.
inline std::vector<std::vector<std::string>> hyperplane_grouping_fermat_quartic(
    const Arrangement& arr) {
    FermatQuarticGeometry geo = build_fermat_quartic_geometry();
    if (arr.curves.size() != geo.lines.size())
        throw std::domain_error("hyperplane_grouping: not a Fermat quartic arrangement");
    for (size_t i = 0; i < arr.curves.size(); ++i)
        if (arr.curves[i].id != geo.lines[i].first)
            throw std::domain_error("hyperplane_grouping: not a Fermat quartic arrangement");

    const int n = 8;
    Cyclotomic zero(n), one(n, Rational(1));
    std::vector<Cyclotomic> roots;
    for (int k : {1, 3, 5, 7}) roots.push_back(Cyclotomic::root_of_unity(n, k));

    // Hyperplanes x_i - alpha x_j = 0 for the six index pairs used by the
    // three line types.
    std::vector<CycVec> hyperplanes;
    const std::pair<int, int> index_pairs[] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}, {1, 2}};
    for (auto [i, j] : index_pairs)
        for (const auto& alpha : roots) {
            CycVec h(4, zero);
            h[i] = one;
            h[j] = -alpha;
            hyperplanes.push_back(std::move(h));
        }

    std::vector<std::vector<std::string>> groups;
    std::map<std::string, int> appearances;
    for (const auto& h : hyperplanes) {
        std::vector<std::string> group;
        for (const auto& [id, line] : geo.lines)
            if (line.contained_in_hyperplane(h)) group.push_back(id);
        if (group.size() != 4)
            throw std::logic_error("hyperplane_grouping: hyperplane does not contain 4 lines");
        for (const auto& id : group) appearances[id] += 1;
        groups.push_back(std::move(group));
    }
    for (const auto& [id, count] : appearances)
        if (count != 2)
            throw std::logic_error("hyperplane_grouping: line '" + id +
                                   "' is not in exactly two groups");
    return groups;
}

// --- Combinatorial presets -----------------------------------------------

namespace detail {

inline Arrangement group_preset(const GroupConfiguration& cfg, const std::string& prefix) {
    auto p2 = SurfaceModel::projective_plane();
    Arrangement arr;
    arr.surface = p2;
    DivisorClass h{p2, {Rational(1)}};
    for (int i = 0; i < cfg.line_count; ++i)
        arr.curves.push_back({prefix + std::to_string(i), h, Rational(0)});
    int idx = 0;
    for (const auto& members : cfg.points) {
        SingPoint p;
        p.id = "p" + std::to_string(idx++);
        for (int m : members) p.curves.push_back(prefix + std::to_string(m));
        arr.points.push_back(std::move(p));
    }
    return arr;
}

}  // namespace detail

// Klein arrangement of 21 lines: t_4 = 21, t_3 = 28.
inline Arrangement preset_klein() {
    static const detail::GroupConfiguration cfg =
        detail::reflection_configuration(detail::psl_2_7(), /*with_quintuple_points=*/false);
    return detail::group_preset(cfg, "k");
}

// Wiman arrangement of 45 lines: t_3 = 120, t_4 = 45, t_5 = 36.
inline Arrangement preset_wiman() {
    static const detail::GroupConfiguration cfg =
        detail::reflection_configuration(detail::alternating_6(), /*with_quintuple_points=*/true);
    return detail::group_preset(cfg, "w");
}

// Hirzebruch quasi-pencil of k >= 4 lines: t_{k-1} = 1, t_2 = k-1.
inline Arrangement preset_quasi_pencil(int k) {
    if (k < 4) throw std::domain_error("preset_quasi_pencil: need k >= 4");
    auto p2 = SurfaceModel::projective_plane();
    Arrangement arr;
    arr.surface = p2;
    DivisorClass h{p2, {Rational(1)}};
    for (int i = 0; i < k; ++i) arr.curves.push_back({"h" + std::to_string(i), h, Rational(0)});
    SingPoint center{"p0", {}};
    for (int i = 0; i < k - 1; ++i) center.curves.push_back("h" + std::to_string(i));
    arr.points.push_back(std::move(center));
    for (int i = 0; i < k - 1; ++i)
        arr.points.push_back({"p" + std::to_string(i + 1),
                              {"h" + std::to_string(i), "h" + std::to_string(k - 1)}});
    return arr;
}

// Hesse arrangement of 12 conics: f0 = 21, t_2 = 12, t_8 = 9. The stored
// incidence witness realizes the conics as the 12 lines of AG(2,3): the
// conic for line l passes through the 6 base points off l, and each
// parallel pair of lines shares one extra double point.
inline Arrangement preset_hesse_conics() {
    auto p2 = SurfaceModel::projective_plane();
    Arrangement arr;
    arr.surface = p2;
    DivisorClass conic{p2, {Rational(2)}};

    // Lines of AG(2,3): 4 directions x 3 lines, as point triples on the
    // 3x3 grid (point index = 3*row + col).
    std::vector<std::vector<int>> ag_lines;
    for (int c = 0; c < 3; ++c) ag_lines.push_back({c, c + 3, c + 6});            // vertical
    for (int r = 0; r < 3; ++r) ag_lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});  // horizontal
    for (int s : {1, 2})
        for (int b = 0; b < 3; ++b) {
            std::vector<int> l;
            for (int x = 0; x < 3; ++x) l.push_back(3 * ((s * x + b) % 3) + x);
            ag_lines.push_back(std::move(l));
        }

    for (int i = 0; i < 12; ++i)
        arr.curves.push_back({"e" + std::to_string(i), conic, Rational(0)});

    // The 9 base points, each on the 8 conics whose line misses it.
    for (int p = 0; p < 9; ++p) {
        SingPoint sp{"b" + std::to_string(p), {}};
        for (int i = 0; i < 12; ++i) {
            const auto& l = ag_lines[i];
            if (std::find(l.begin(), l.end(), p) == l.end())
                sp.curves.push_back("e" + std::to_string(i));
        }
        arr.points.push_back(std::move(sp));
    }
    // The 12 double points, one per parallel pair (same direction class).
    int idx = 0;
    for (int dir = 0; dir < 4; ++dir)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                arr.points.push_back({"d" + std::to_string(idx++),
                                      {"e" + std::to_string(3 * dir + i),
                                       "e" + std::to_string(3 * dir + j)}});
    return arr;
}

// Incidence-level Fermat arrangement: 3 pencil centers of multiplicity n
// plus n^2 triple points a_i, b_j, c_{(-i-j) mod n}.
inline Arrangement preset_fermat_plane_combinatorial(int n) {
    if (n < 3) throw std::domain_error("preset_fermat_plane_combinatorial: need n >= 3");
    auto p2 = SurfaceModel::projective_plane();
    Arrangement arr;
    arr.surface = p2;
    DivisorClass h{p2, {Rational(1)}};
    const char* fam = "abc";
    for (int f = 0; f < 3; ++f)
        for (int i = 0; i < n; ++i)
            arr.curves.push_back({std::string(1, fam[f]) + std::to_string(i), h, Rational(0)});
    for (int f = 0; f < 3; ++f) {
        SingPoint center{std::string("center_") + fam[f], {}};
        for (int i = 0; i < n; ++i)
            center.curves.push_back(std::string(1, fam[f]) + std::to_string(i));
        arr.points.push_back(std::move(center));
    }
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = ((-i - j) % n + n) % n;
            arr.points.push_back({"t" + std::to_string(idx++),
                                  {"a" + std::to_string(i), "b" + std::to_string(j),
                                   "c" + std::to_string(k)}});
        }
    return arr;
}

// The pullback of the n-th Fermat line arrangement to the K3 double cover
// of P^2 branched along a generic sextic avoiding the singular points:
// 3n curves of class L = pullback of O(1) (L^2 = 2), genus 2, and every
// plane singular point replaced by two points. Modeled on the rank-1
// sublattice generated by L, with standard K3 constants.
inline Arrangement build_double_cover_fermat(int n) {
    Arrangement plane = preset_fermat_plane_combinatorial(n);
    auto surf = std::make_shared<SurfaceModel>();
    surf->kind = SurfaceKind::AbstractLattice;
    surf->rank = 1;
    surf->gram = {{Rational(2)}};
    surf->basis_labels = {"L"};
    surf->canonical_class = std::vector<Rational>{Rational(0)};
    surf->chern_c2 = Rational(24);
    surf->canonical_square = Rational(0);
    surf->ample_classes = {{Rational(1)}};

    Arrangement out;
    out.surface = surf;
    DivisorClass cls{surf, {Rational(1)}};
    for (const auto& c : plane.curves) out.curves.push_back({c.id, cls, Rational(2)});
    for (const auto& p : plane.points)
        for (int copy = 0; copy < 2; ++copy)
            out.points.push_back({p.id + "@" + std::to_string(copy), p.curves});
    return out;
}

// Name dispatcher: klein | wiman | hesse_conics | quasi_pencil(k) |
// fermat_plane_combinatorial(n).
inline Arrangement preset(const std::string& name) {
    if (name == "klein") return preset_klein();
    if (name == "wiman") return preset_wiman();
    if (name == "hesse_conics") return preset_hesse_conics();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string base = name.substr(0, paren);
        int arg = std::stoi(name.substr(paren + 1, name.size() - paren - 2));
        if (base == "quasi_pencil") return preset_quasi_pencil(arg);
        if (base == "fermat_plane_combinatorial") return preset_fermat_plane_combinatorial(arg);
        if (base == "double_cover_fermat") return build_double_cover_fermat(arg);
    }
    throw std::domain_error("unknown preset '" + name + "'");
}

}  // namespace sesh

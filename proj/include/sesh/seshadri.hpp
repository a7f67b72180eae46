#pragma once

// The theorem engine: configurational Seshadri constants, candidate curve
// ratios, certified exact values with machine-checked hypotheses,
// two-sided bounds, the sqrt(L^2/r) bound, the combinatorial pullback to
// ruled surfaces, and the Hirzebruch-type and Kodaira-type lower bounds.
//
// Certification semantics: a result is Exact only when every hypothesis
// check passed. Anything else degrades to Candidate with the failing
// check named; a Candidate never claims the value is wrong, only that it
// is not certified.

#include "sesh/arrangement.hpp"
#include "sesh/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sesh {

struct HypothesisCheck {
    std::string hypothesis;
    bool passed = false;
    std::string witness;  // human-readable evidence, esp. on failure
};

enum class ResultKind { Exact, Bounds, Candidate };

struct SeshadriResult {
    ResultKind kind = ResultKind::Candidate;
    std::string theorem;
    std::optional<Rational> value;         // Exact / Candidate
    std::optional<Rational> lower, upper;  // Bounds
    std::vector<HypothesisCheck> checks;

    bool certified() const { return kind != ResultKind::Candidate; }
};

struct SqrtBound {
    Rational l_squared;
    long long r = 0;

    // Ordering of a claimed value against sqrt(L^2 / r).
    std::strong_ordering compare(const Rational& value) const {
        return rat_cmp_sqrt(value, l_squared / Rational(r));
    }
    bool consistent_with(const Rational& value) const {
        return compare(value) != std::strong_ordering::greater;
    }
};

struct CurveRatio {
    Rational value;
    std::string argmin;
};

namespace detail {

inline const DivisorClass& curve_class(const Curve& c) {
    if (!c.cls) throw std::domain_error("curve '" + c.id + "' has no lattice class");
    return *c.cls;
}

}  // namespace detail

// epsilon_C(L) = (sum_i L.C_i) / f1.
inline Rational configurational_epsilon(const Arrangement& arr, const DivisorClass& l) {
    Rational num;
    for (const auto& c : arr.curves) num += pair(arr.surface, l, detail::curve_class(c));
    auto inv = invariants(arr);
    if (inv.f1 == 0)
        throw std::domain_error("configurational_epsilon: arrangement has no singular points");
    return num / Rational(inv.f1);
}

// min_i (L.C_i) / b_i, ties broken by the first curve in declaration order.
inline CurveRatio min_curve_ratio(const Arrangement& arr, const DivisorClass& l) {
    auto inv = invariants(arr);
    std::optional<CurveRatio> best;
    for (const auto& c : arr.curves) {
        int bi = inv.b.at(c.id);
        if (bi == 0) continue;  // curve through no singular point computes no ratio
        Rational ratio = pair(arr.surface, l, detail::curve_class(c)) / Rational(bi);
        if (!best || ratio < best->value) best = CurveRatio{ratio, c.id};
    }
    if (!best) throw std::domain_error("min_curve_ratio: no curve meets the singular locus");
    return *best;
}

namespace detail {

inline HypothesisCheck nef_check(const std::string& name, const SurfacePtr& s,
                                 const DivisorClass& d) {
    try {
        bool ok = is_nef(s, d);
        return {name, ok, (ok ? "nef divisor " : "non-nef divisor ") + d.str()};
    } catch (const UnsupportedSurfaceError&) {
        return {name, false, "nefness undecidable on this surface"};
    }
}

inline HypothesisCheck ample_check(const SurfacePtr& s, const DivisorClass& l) {
    try {
        bool ok = is_ample(s, l);
        return {"L is ample", ok, "L = " + l.str()};
    } catch (const UnsupportedSurfaceError&) {
        return {"L is ample", false, "ampleness undecidable on this surface"};
    }
}

inline bool all_passed(const std::vector<HypothesisCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

}  // namespace detail

// Main theorem: if d >= 4, the arrangement is lattice-valid and connected,
// L is ample, and (d*sum(b_i) / ((d-1)^2 * sum(L.C_j))) * L - C_i is nef
// for every i, then the multi-point Seshadri constant at Sing(C) equals
// min_i (L.C_i)/b_i.
inline SeshadriResult certify_main_theorem(const Arrangement& arr, const DivisorClass& l) {
    SeshadriResult res;
    res.theorem = "main-theorem";
    const int d = static_cast<int>(arr.curves.size());
    res.checks.push_back({"d >= 4", d >= 4, "d = " + std::to_string(d)});

    auto diags = validate(arr, ValidationLevel::Lattice);
    res.checks.push_back({"transversal arrangement (lattice-validated)", diags.empty(),
                          diags.empty() ? "" : diags.front().message});
    res.checks.push_back(detail::ample_check(arr.surface, l));

    if (diags.empty() && d >= 2) {
        auto inv = invariants(arr);
        Rational sum_b(inv.f1);
        Rational sum_lc;
        for (const auto& c : arr.curves) sum_lc += pair(arr.surface, l, detail::curve_class(c));
        Rational coeff = (Rational(d) * sum_b) /
                         (Rational(static_cast<long long>(d - 1) * (d - 1)) * sum_lc);
        HypothesisCheck nef_all{"(d*sum(b)/((d-1)^2*sum(L.C)))*L - C_i nef for all i", true, ""};
        for (const auto& c : arr.curves) {
            DivisorClass ni = coeff * l - detail::curve_class(c);
            auto check = detail::nef_check("", arr.surface, ni);
            if (!check.passed) {
                nef_all.passed = false;
                nef_all.witness = "fails at curve '" + c.id + "': " + check.witness;
                break;
            }
        }
        if (nef_all.passed) nef_all.witness = "coefficient " + coeff.str();
        res.checks.push_back(std::move(nef_all));
    } else {
        res.checks.push_back({"(d*sum(b)/((d-1)^2*sum(L.C)))*L - C_i nef for all i", false,
                              "not evaluated: arrangement invalid"});
    }

    auto ratio = min_curve_ratio(arr, l);
    res.value = ratio.value;
    res.kind = detail::all_passed(res.checks) ? ResultKind::Exact : ResultKind::Candidate;
    return res;
}

// Star corollary: for a star configuration with equal classes, d >= 4,
// ample L and (d*C1^2/((d-1)*L.C1))*L - C1 nef, the constant is
// L.C1 / (C1^2 * (d-1)).
inline SeshadriResult certify_star_corollary(const Arrangement& arr, const DivisorClass& l) {
    SeshadriResult res;
    res.theorem = "star-corollary";
    res.checks.push_back({"star configuration", is_star(arr), ""});
    bool star1 = check_assumption_star1(arr);
    res.checks.push_back({"equal classes, d >= 4, connected", star1, ""});
    res.checks.push_back(detail::ample_check(arr.surface, l));

    const int d = static_cast<int>(arr.curves.size());
    std::optional<Rational> formula_value;
    if (d >= 2) {
        const DivisorClass& c1 = detail::curve_class(arr.curves.front());
        Rational c1sq = pair(arr.surface, c1, c1);
        Rational lc1 = pair(arr.surface, l, c1);
        if (!lc1.is_zero()) {
            Rational coeff = (Rational(d) * c1sq) / (Rational(d - 1) * lc1);
            DivisorClass nd = coeff * l - c1;
            res.checks.push_back(
                detail::nef_check("(d*C1^2/((d-1)*L.C1))*L - C1 nef", arr.surface, nd));
            formula_value = lc1 / (c1sq * Rational(d - 1));
        }
    }
    if (detail::all_passed(res.checks) && formula_value) {
        res.kind = ResultKind::Exact;
        res.value = formula_value;
    } else {
        res.kind = ResultKind::Candidate;
        res.value = min_curve_ratio(arr, l).value;
    }
    return res;
}

// Two-sided bounds under the equal-classes assumption:
// L.C1/(C1^2 (d-1)) <= eps <= L.C1/bs(C), given the nef hypothesis.
inline SeshadriResult bounds_cor_main(const Arrangement& arr, const DivisorClass& l) {
    SeshadriResult res;
    res.theorem = "bounds-corollary";
    bool star1 = check_assumption_star1(arr);
    res.checks.push_back({"equal classes, d >= 4, connected", star1, ""});
    res.checks.push_back(detail::ample_check(arr.surface, l));

    const int d = static_cast<int>(arr.curves.size());
    if (star1) {
        const DivisorClass& c1 = detail::curve_class(arr.curves.front());
        Rational c1sq = pair(arr.surface, c1, c1);
        Rational lc1 = pair(arr.surface, l, c1);
        Rational coeff = (Rational(d) * c1sq) / (Rational(d - 1) * lc1);
        DivisorClass nd = coeff * l - c1;
        res.checks.push_back(
            detail::nef_check("(d*C1^2/((d-1)*L.C1))*L - C1 nef", arr.surface, nd));
        if (detail::all_passed(res.checks)) {
            auto inv = invariants(arr);
            res.kind = ResultKind::Bounds;
            res.lower = lc1 / (c1sq * Rational(d - 1));
            res.upper = lc1 / Rational(inv.bs);
            return res;
        }
    } else {
        res.checks.push_back(
            {"(d*C1^2/((d-1)*L.C1))*L - C1 nef", false, "not evaluated: assumption fails"});
    }
    res.kind = ResultKind::Candidate;
    res.value = min_curve_ratio(arr, l).value;
    return res;
}

// The dimension-2 upper bound sqrt(L^2 / r) at r points.
inline SqrtBound sqrt_upper_bound(const DivisorClass& l, long long r) {
    if (r < 1) throw std::domain_error("sqrt_upper_bound: need r >= 1");
    return SqrtBound{self_intersection(l), r};
}

// Combinatorial pullback of a line arrangement in P^2 to the ruled
// surface X_e: every line acquires class C0 + e*f and every singular
// point is replicated e times with the same incidence set.
inline Arrangement pullback_to_ruled(const Arrangement& plane_arr, int e) {
    if (e < 1) throw std::domain_error("pullback_to_ruled: need e >= 1");
    if (plane_arr.surface->kind != SurfaceKind::ProjectivePlane)
        throw std::domain_error("pullback_to_ruled: source must live on P^2");
    for (const auto& c : plane_arr.curves)
        if (!c.cls || !(c.cls->coeffs == std::vector<Rational>{Rational(1)}))
            throw std::domain_error("pullback_to_ruled: all source classes must equal H");

    auto xe = SurfaceModel::ruled(0, e);
    Arrangement out;
    out.surface = xe;
    DivisorClass cls{xe, {Rational(1), Rational(e)}};
    for (const auto& c : plane_arr.curves) out.curves.push_back({c.id, cls, Rational(0)});
    for (const auto& p : plane_arr.points)
        for (int copy = 0; copy < e; ++copy)
            out.points.push_back({p.id + "@" + std::to_string(copy), p.curves});
    return out;
}

struct InequalityReport {
    bool holds = false;
    Rational lhs, rhs;
};

namespace detail {

// Shared hypothesis screen for the ruled-surface Hirzebruch-type results:
// genus g >= 0, e >= 4, every class = a*C0 + b*f with a > 0, b >= a*e,
// not all curves through one point, and for a = 1 a four-curve subset
// with no common point.
inline void require_htin_hypotheses(const Arrangement& arr, long long a, long long b) {
    if (arr.surface->kind != SurfaceKind::RuledSurface)
        throw std::domain_error("Hirzebruch-type bound: surface must be ruled");
    const int e = arr.surface->ruled_e;
    if (e < 4) throw std::domain_error("Hirzebruch-type bound: requires invariant e >= 4");
    if (a <= 0) throw std::domain_error("Hirzebruch-type bound: requires a > 0");
    if (b < a * e) throw std::domain_error("Hirzebruch-type bound: requires b >= a*e");
    std::vector<Rational> expected{Rational(a), Rational(b)};
    for (const auto& c : arr.curves)
        if (!c.cls || !(c.cls->coeffs == expected))
            throw std::domain_error("Hirzebruch-type bound: curve '" + c.id +
                                    "' is not in class " + std::to_string(a) + "C0+" +
                                    std::to_string(b) + "f");
    if (!no_common_point(arr))
        throw std::domain_error("Hirzebruch-type bound: all curves meet in a point");
    if (a == 1 && arr.curves.size() >= 4) {
        // need four curves with no common point; max multiplicity < 4 is
        // enough, otherwise check the points of multiplicity >= d-? directly
        auto inv = invariants(arr);
        int max_mult = inv.t.empty() ? 0 : inv.t.rbegin()->first;
        if (max_mult >= static_cast<int>(arr.curves.size()))
            throw std::domain_error(
                "Hirzebruch-type bound: no four curves avoid a common point");
    }
}

}  // namespace detail

// Hirzebruch-type inequality on a ruled surface (checked exactly):
// t_2 + (3/4) t_3 >= -16 + 16g + sum_{k>=5} (2k-9) t_k
//                    + d(e(5a^2-2a) - 10ab - 4ag + 4a + 4b).
inline InequalityReport verify_htin(const Arrangement& arr, long long a, long long b) {
    detail::require_htin_hypotheses(arr, a, b);
    const long long e = arr.surface->ruled_e;
    const long long g = arr.surface->ruled_genus;
    const long long d = static_cast<long long>(arr.curves.size());
    auto inv = invariants(arr);
    auto tk = [&](int k) { auto it = inv.t.find(k); return it == inv.t.end() ? 0 : it->second; };

    InequalityReport rep;
    rep.lhs = Rational(tk(2)) + Rational(3, 4) * Rational(tk(3));
    Rational tail;
    for (const auto& [k, t] : inv.t)
        if (k >= 5) tail += Rational(2 * k - 9) * Rational(t);
    rep.rhs = Rational(-16 + 16 * g) + tail +
              Rational(d) * Rational(e * (5 * a * a - 2 * a) - 10 * a * b - 4 * a * g +
                                     4 * a + 4 * b);
    rep.holds = !(rep.lhs < rep.rhs);
    return rep;
}

// Lower bound for the configurational constant on ruled surfaces:
// eps_C(L) >= d(L.C1) / (8 - 8g + 9(2ab-a^2 e)d^2/4
//                        + d(2ae - a^2 e/2 + ab + 4ag - 4a - 4b)/2).
inline Rational lower_bound_ruled(const Arrangement& arr, const DivisorClass& l,
                                  long long a, long long b) {
    detail::require_htin_hypotheses(arr, a, b);
    if (!is_ample(arr.surface, l))
        throw std::domain_error("lower_bound_ruled: L must be ample");
    const long long e = arr.surface->ruled_e;
    const long long g = arr.surface->ruled_genus;
    const long long d = static_cast<long long>(arr.curves.size());
    auto inv = invariants(arr);
    // the f0 chain used in the proof, asserted as input validation
    Rational pair_bound = Rational(2 * a * b - a * a * e) * Rational(d * (d - 1) / 2);
    if (Rational(inv.f0) < Rational(d) || pair_bound < Rational(inv.f0))
        throw std::domain_error("lower_bound_ruled: f0 outside [d, (2ab-a^2e)*C(d,2)]");

    Rational lc1 = pair(arr.surface, l, detail::curve_class(arr.curves.front()));
    Rational denom = Rational(8 - 8 * g) +
                     Rational(9 * (2 * a * b - a * a * e) * d * d, 4) +
                     Rational(d) * (Rational(2 * a * e) - Rational(a * a * e, 2) +
                                    Rational(a * b + 4 * a * g - 4 * a - 4 * b)) /
                         Rational(2);
    if (!(denom > Rational(0)))
        throw std::domain_error("lower_bound_ruled: bound vacuous (nonpositive denominator)");
    return Rational(d) * lc1 / denom;
}

// The non-negative-Kodaira-dimension inequality (checked exactly):
// K.C + 4*sum(1-g_i) - t_2 + sum_{r>=3} (r-4) t_r <= 3c2 - K^2.
inline InequalityReport verify_kodaira_inequality(const Arrangement& arr) {
    const auto& s = arr.surface;
    if (!s->canonical_class || !s->chern_c2 || !s->canonical_square)
        throw std::domain_error("verify_kodaira_inequality: missing canonical/Chern data");
    DivisorClass k{s, *s->canonical_class};
    Rational kc;
    Rational genus_term;
    for (const auto& c : arr.curves) {
        kc += pair(s, k, detail::curve_class(c));
        if (!c.genus) throw std::domain_error("verify_kodaira_inequality: curve '" + c.id +
                                              "' has no genus");
        genus_term += Rational(1) - *c.genus;
    }
    auto inv = invariants(arr);
    InequalityReport rep;
    rep.lhs = kc + Rational(4) * genus_term;
    for (const auto& [kk, t] : inv.t) {
        if (kk == 2) rep.lhs -= Rational(t);
        else rep.lhs += Rational(kk - 4) * Rational(t);
    }
    rep.rhs = Rational(3) * *s->chern_c2 - *s->canonical_square;
    rep.holds = !(rep.rhs < rep.lhs);
    return rep;
}

// Lower bound on surfaces of non-negative Kodaira dimension:
// eps_C(L) >= d(L.C1) / (3c2 - K^2 + 4 C1^2 C(d,2) - K.C - 4 sum(1-g_i)).
inline Rational lower_bound_kodaira(const Arrangement& arr, const DivisorClass& l) {
    const auto& s = arr.surface;
    if (!s->canonical_class || !s->chern_c2 || !s->canonical_square)
        throw std::domain_error("lower_bound_kodaira: missing canonical/Chern data");
    if (!check_assumption_star1(arr))
        throw std::domain_error("lower_bound_kodaira: equal-classes assumption fails");
    if (!no_common_point(arr))
        throw std::domain_error("lower_bound_kodaira: all curves meet in a point");
    DivisorClass k{s, *s->canonical_class};
    Rational kc, genus_term;
    for (const auto& c : arr.curves) {
        kc += pair(s, k, detail::curve_class(c));
        if (!c.genus)
            throw std::domain_error("lower_bound_kodaira: curve '" + c.id + "' has no genus");
        genus_term += Rational(1) - *c.genus;
    }
    const long long d = static_cast<long long>(arr.curves.size());
    const DivisorClass& c1 = detail::curve_class(arr.curves.front());
    Rational denom = Rational(3) * *s->chern_c2 - *s->canonical_square +
                     Rational(4) * pair(s, c1, c1) * Rational(d * (d - 1) / 2) - kc -
                     Rational(4) * genus_term;
    if (!(denom > Rational(0)))
        throw std::domain_error("lower_bound_kodaira: bound vacuous (nonpositive denominator)");
    Rational lc1 = pair(s, l, c1);
    return Rational(d) * lc1 / denom;
}

}  // namespace sesh

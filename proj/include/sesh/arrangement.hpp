#pragma once

// Transversal-arrangement data model: curves with lattice classes,
// singular points with incidence sets, derived combinatorial invariants,
// and validators for the standing hypotheses.

#include "sesh/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sesh {

struct Curve {
    std::string id;
    std::optional<DivisorClass> cls;
    std::optional<Rational> genus;
};

struct SingPoint {
    std::string id;
    std::vector<std::string> curves;  // sorted, unique
};

struct Arrangement {
    SurfacePtr surface;
    std::vector<Curve> curves;
    std::vector<SingPoint> points;

    const Curve* find_curve(const std::string& id) const {
        for (const auto& c : curves)
            if (c.id == id) return &c;
        return nullptr;
    }
};

// t_k profile and derived counts; see the invariants
//   f0 = sum t_k, f1 = sum k*t_k = sum b_i, bs = max b_i.
struct InvariantSummary {
    int d = 0;
    std::map<int, int> t;           // multiplicity k (>= 2) -> t_k
    long long f0 = 0, f1 = 0;
    std::map<std::string, int> b;   // curve id -> number of singular points on it
    int bs = 0;
};

struct Diagnostic {
    std::string code;
    std::string message;
};

struct IdentityReport {
    bool holds = false;
    Rational lhs;  // sum over pairs i<j of C_i . C_j
    Rational rhs;  // sum over k of C(k,2) * t_k
};

enum class ValidationLevel { Combinatorial, Lattice };

namespace detail {

inline bool curves_connected(const Arrangement& arr) {
    if (arr.curves.empty()) return false;
    std::map<std::string, int> index;
    for (size_t i = 0; i < arr.curves.size(); ++i) index[arr.curves[i].id] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(arr.curves.size());
    for (const auto& p : arr.points) {
        for (size_t i = 0; i < p.curves.size(); ++i)
            for (size_t j = i + 1; j < p.curves.size(); ++j) {
                auto a = index.find(p.curves[i]), b = index.find(p.curves[j]);
                if (a == index.end() || b == index.end()) continue;
                adj[a->second].push_back(b->second);
                adj[b->second].push_back(a->second);
            }
    }
    std::vector<bool> seen(arr.curves.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = true; ++reached; stack.push_back(w); }
    }
    return reached == arr.curves.size();
}

}  // namespace detail

inline InvariantSummary invariants(const Arrangement& arr) {
    InvariantSummary s;
    s.d = static_cast<int>(arr.curves.size());
    for (const auto& c : arr.curves) s.b[c.id] = 0;
    for (const auto& p : arr.points) {
        int k = static_cast<int>(p.curves.size());
        s.t[k] += 1;
        s.f0 += 1;
        s.f1 += k;
        for (const auto& cid : p.curves) s.b[cid] += 1;
    }
    for (const auto& [id, bi] : s.b) s.bs = std::max(s.bs, bi);
    return s;
}

// Pair-count identity: sum_{i<j} C_i.C_j against sum_k C(k,2) t_k.
inline IdentityReport verify_count_identity(const Arrangement& arr) {
    IdentityReport rep;
    for (size_t i = 0; i < arr.curves.size(); ++i) {
        if (!arr.curves[i].cls)
            throw std::domain_error("verify_count_identity: curve '" + arr.curves[i].id +
                                    "' has no class");
        for (size_t j = i + 1; j < arr.curves.size(); ++j)
            rep.lhs += pair(arr.surface, *arr.curves[i].cls, *arr.curves[j].cls);
    }
    auto inv = invariants(arr);
    for (const auto& [k, tk] : inv.t)
        rep.rhs += Rational(static_cast<long long>(k) * (k - 1) / 2) * Rational(tk);
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

// Structural checks at Combinatorial level; Lattice level additionally
// checks that every pair of curves shares exactly C_i.C_j points.
inline std::vector<Diagnostic> validate(const Arrangement& arr, ValidationLevel level) {
    std::vector<Diagnostic> out;
    std::set<std::string> curve_ids;
    for (const auto& c : arr.curves)
        if (!curve_ids.insert(c.id).second)
            out.push_back({"duplicate-curve", "duplicate curve id '" + c.id + "'"});
    std::set<std::string> point_ids;
    for (const auto& p : arr.points) {
        if (!point_ids.insert(p.id).second)
            out.push_back({"duplicate-point", "duplicate point id '" + p.id + "'"});
        std::set<std::string> inc(p.curves.begin(), p.curves.end());
        if (inc.size() != p.curves.size())
            out.push_back({"duplicate-incidence",
                           "point '" + p.id + "' lists a curve twice"});
        if (inc.size() < 2)
            out.push_back({"point-below-multiplicity-2",
                           "point '" + p.id + "' lies on fewer than 2 curves"});
        for (const auto& cid : inc)
            if (!curve_ids.count(cid))
                out.push_back({"unknown-curve",
                               "point '" + p.id + "' references unknown curve '" + cid + "'"});
    }
    if (arr.curves.size() < 2)
        out.push_back({"too-few-curves", "a transversal arrangement needs d >= 2"});
    if (!arr.curves.empty() && !detail::curves_connected(arr))
        out.push_back({"not-connected", "the union of the curves is not connected"});

    if (level == ValidationLevel::Lattice && out.empty()) {
        for (size_t i = 0; i < arr.curves.size(); ++i) {
            if (!arr.curves[i].cls) {
                out.push_back({"missing-class",
                               "curve '" + arr.curves[i].id + "' has no lattice class"});
            }
        }
        if (!out.empty()) return out;
        // pairwise shared-point counts vs the pairing
        std::map<std::pair<std::string, std::string>, int> shared;
        for (const auto& p : arr.points)
            for (size_t i = 0; i < p.curves.size(); ++i)
                for (size_t j = i + 1; j < p.curves.size(); ++j) {
                    auto key = std::minmax(p.curves[i], p.curves[j]);
                    shared[{key.first, key.second}] += 1;
                }
        for (size_t i = 0; i < arr.curves.size(); ++i)
            for (size_t j = i + 1; j < arr.curves.size(); ++j) {
                auto key = std::minmax(arr.curves[i].id, arr.curves[j].id);
                auto it = shared.find({key.first, key.second});
                int count = it == shared.end() ? 0 : it->second;
                Rational expected = pair(arr.surface, *arr.curves[i].cls, *arr.curves[j].cls);
                if (!(expected == Rational(count)))
                    out.push_back({"transversality-mismatch",
                                   "curves '" + arr.curves[i].id + "' and '" + arr.curves[j].id +
                                       "' share " + std::to_string(count) + " points but " +
                                       "their classes pair to " + expected.str()});
            }
    }
    return out;
}

// Star configuration: every singular point is a double point.
inline bool is_star(const Arrangement& arr) {
    for (const auto& p : arr.points)
        if (p.curves.size() != 2) return false;
    return !arr.points.empty();
}

// The standing equal-classes assumption: d >= 4, connected, and all
// curve classes equal as lattice vectors.
inline bool check_assumption_star1(const Arrangement& arr) {
    if (arr.curves.size() < 4) return false;
    if (!detail::curves_connected(arr)) return false;
    for (const auto& c : arr.curves)
        if (!c.cls) throw std::domain_error("check_assumption_star1: missing class on '" + c.id + "'");
    for (size_t i = 1; i < arr.curves.size(); ++i)
        if (!(arr.curves[i].cls->coeffs == arr.curves[0].cls->coeffs)) return false;
    return true;
}

// Hypothesis "the curves do not all meet in a point": no single point is
// incident to all d curves.
inline bool no_common_point(const Arrangement& arr) {
    for (const auto& p : arr.points)
        if (p.curves.size() == arr.curves.size()) return false;
    return true;
}

}  // namespace sesh

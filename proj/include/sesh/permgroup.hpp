#pragma once

// Minimal permutation-group utilities backing the combinatorial presets.
// The Klein and Wiman line configurations are generated from the
// involutions of PSL(2,7) and A6: mirrors correspond to involutions, and
// the k-fold points to centralizer Sylow-2 subgroups (quadruple points),
// S3 subgroups (triple points) and normalized C5 subgroups (quintuple
// points). The resulting incidence structures are validated at the
// lattice level when the presets are built.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace sesh::detail {

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inv(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

inline int perm_order(const Perm& a) {
    Perm e(a.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i);
    Perm x = a;
    int k = 1;
    while (x != e) { x = perm_mul(a, x); ++k; }
    return k;
}

inline std::set<Perm> group_closure(const std::vector<Perm>& gens) {
    Perm e(gens.at(0).size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i);
    std::set<Perm> elems{e};
    std::vector<Perm> frontier{e};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                Perm c = perm_mul(g, a);
                if (elems.insert(c).second) next.push_back(std::move(c));
            }
        frontier = std::move(next);
    }
    return elems;
}

// PSL(2,7) acting on the projective line over F7 (points 0..6, infinity=7),
// generated by z -> z+1 and z -> -1/z.
inline std::set<Perm> psl_2_7() {
    const int p = 7;
    Perm t(p + 1), s(p + 1);
    for (int z = 0; z < p; ++z) t[z] = (z + 1) % p;
    t[p] = p;
    auto inv_mod = [&](int z) {  // z^(p-2) mod p
        int r = 1, b = z, e = p - 2;
        while (e) { if (e & 1) r = r * b % p; b = b * b % p; e >>= 1; }
        return r;
    };
    for (int z = 0; z < p; ++z) s[z] = z == 0 ? p : (p - inv_mod(z)) % p;
    s[p] = 0;
    return group_closure({t, s});
}

// The alternating group on 6 symbols, by direct enumeration.
inline std::set<Perm> alternating_6() {
    std::set<Perm> out;
    Perm p{0, 1, 2, 3, 4, 5};
    do {
        int inversions = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < i; ++j)
                if (p[j] > p[i]) ++inversions;
        if (inversions % 2 == 0) out.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// The incidence structure of a reflection-style configuration derived
// from a finite group: lines are the involutions; points are given as
// sets of line indices, sorted for determinism.
struct GroupConfiguration {
    int line_count = 0;
    std::vector<std::vector<int>> points;  // each: sorted indices of incident lines
};

inline GroupConfiguration reflection_configuration(const std::set<Perm>& group,
                                                   bool with_quintuple_points) {
    std::vector<Perm> invs;
    for (const auto& g : group)
        if (perm_order(g) == 2) invs.push_back(g);
    std::sort(invs.begin(), invs.end());

    auto index_of = [&](const Perm& g) {
        auto it = std::lower_bound(invs.begin(), invs.end(), g);
        if (it == invs.end() || *it != g)
            throw std::logic_error("reflection_configuration: not an involution");
        return static_cast<int>(it - invs.begin());
    };

    std::set<std::vector<int>> points;

    // Quadruple points: the non-central involutions of the centralizer of
    // each involution (the Sylow-2 subgroup in which it is central).
    for (const auto& z : invs) {
        std::vector<int> members;
        for (const auto& u : invs)
            if (!(u == z) && perm_mul(u, z) == perm_mul(z, u)) members.push_back(index_of(u));
        if (members.size() != 4)
            throw std::logic_error("reflection_configuration: unexpected centralizer shape");
        std::sort(members.begin(), members.end());
        points.insert(std::move(members));
    }

    // Triple points: S3 subgroups, one per {u, rur^-1, r^2ur^-2} orbit of an
    // involution u inverting an order-3 element r.
    std::set<std::vector<int>> seen_c3;
    for (const auto& r : group) {
        if (perm_order(r) != 3) continue;
        for (const auto& u : invs) {
            if (perm_mul(perm_mul(u, r), u) != perm_mul(r, r)) continue;  // uru != r^-1
            Perm u2 = perm_mul(perm_mul(r, u), perm_inv(r));
            Perm u3 = perm_mul(perm_mul(perm_inv(r), u), r);
            std::vector<int> tri{index_of(u), index_of(u2), index_of(u3)};
            std::sort(tri.begin(), tri.end());
            points.insert(std::move(tri));
        }
    }

    // Quintuple points: involutions inverting a C5 subgroup.
    if (with_quintuple_points) {
        for (const auto& r : group) {
            if (perm_order(r) != 5) continue;
            Perm rinv = perm_inv(r);
            std::vector<int> quint;
            for (const auto& u : invs)
                if (perm_mul(perm_mul(u, r), u) == rinv) quint.push_back(index_of(u));
            if (quint.size() != 5)
                throw std::logic_error("reflection_configuration: unexpected C5 normalizer");
            std::sort(quint.begin(), quint.end());
            points.insert(std::move(quint));
        }
    }

    GroupConfiguration cfg;
    cfg.line_count = static_cast<int>(invs.size());
    cfg.points.assign(points.begin(), points.end());
    return cfg;
}

}  // namespace sesh::detail

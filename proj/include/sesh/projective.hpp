#pragma once

// Exact projective primitives over cyclotomic fields: points and lines in
// P^2, lines in P^3 as row-reduced pairs of linear forms, and their meets.
// All representatives are canonically normalized (first nonzero entry 1,
// reduced row echelon form) so exact equality clusters coincident points.

#include "sesh/cyclotomic.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace sesh {

using CycVec = std::vector<Cyclotomic>;
using CycMatrix = std::vector<CycVec>;

namespace detail {

inline void normalize_projective(CycVec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            Cyclotomic inv = x.inverse();
            for (auto& y : v) y = y * inv;
            return;
        }
    }
    throw std::domain_error("projective vector is zero");
}

// In-place reduced row echelon form; returns the rank.
inline int rref(CycMatrix& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Cyclotomic inv = m[row][col].inverse();
        for (auto& x : m[row]) x = x * inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Cyclotomic factor = m[r][col];
            for (size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

// Kernel basis of an rref'd matrix (one vector per free column).
inline CycMatrix kernel_of_rref(const CycMatrix& m, int order) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (size_t r = 0; r < m.size(); ++r) {
        size_t c = 0;
        while (c < cols && m[r][c].is_zero()) ++c;
        if (c == cols) continue;
        pivot_of_col[c] = static_cast<int>(r);
        ++rank;
    }
    CycMatrix basis;
    Cyclotomic zero(order), one(order, Rational(1));
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        CycVec v(cols, zero);
        v[free_col] = one;
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

struct ProjPoint {
    CycVec coords;  // length 3 or 4, first nonzero entry normalized to 1

    explicit ProjPoint(CycVec c) : coords(std::move(c)) {
        detail::normalize_projective(coords);
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords == b.coords;
    }
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
        if (auto c = a.coords.size() <=> b.coords.size(); c != 0) return c;
        for (size_t i = 0; i < a.coords.size(); ++i)
            if (auto c = a.coords[i] <=> b.coords[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

// A line in P^2 as a*x + b*y + c*z = 0.
struct ProjLine2 {
    CycVec coeffs;  // length 3, normalized

    explicit ProjLine2(CycVec c) : coeffs(std::move(c)) {
        if (coeffs.size() != 3) throw std::domain_error("ProjLine2: need 3 coefficients");
        detail::normalize_projective(coeffs);
    }

    friend bool operator==(const ProjLine2& a, const ProjLine2& b) {
        return a.coeffs == b.coeffs;
    }
};

// A line in P^3 as the joint zero locus of two independent linear forms,
// stored as the RREF of the 2x4 coefficient matrix.
struct ProjLine3 {
    CycMatrix forms;  // 2x4, rank 2, RREF

    ProjLine3(CycVec f1, CycVec f2) : forms{std::move(f1), std::move(f2)} {
        if (forms[0].size() != 4 || forms[1].size() != 4)
            throw std::domain_error("ProjLine3: forms must have 4 coefficients");
        if (detail::rref(forms) != 2)
            throw std::domain_error("ProjLine3: forms are not independent");
    }

    friend bool operator==(const ProjLine3& a, const ProjLine3& b) {
        return a.forms == b.forms;
    }

    bool contains(const ProjPoint& p) const {
        for (const auto& f : forms) {
            Cyclotomic acc(p.coords[0].order());
            for (size_t i = 0; i < 4; ++i) acc = acc + f[i] * p.coords[i];
            if (!acc.is_zero()) return false;
        }
        return true;
    }

    // The line lies in the hyperplane V(h) iff h is in the row space of
    // the two defining forms.
    bool contained_in_hyperplane(const CycVec& h) const {
        CycMatrix m = forms;
        m.push_back(h);
        return detail::rref(m) == 2;
    }
};

// Intersection point of two distinct lines in P^2 (cross product).
inline ProjPoint line_meet_p2(const ProjLine2& l1, const ProjLine2& l2) {
    if (l1 == l2) throw std::domain_error("line_meet_p2: identical lines");
    const CycVec& a = l1.coeffs;
    const CycVec& b = l2.coeffs;
    CycVec x{a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]};
    return ProjPoint(std::move(x));
}

// Intersection of two lines in P^3: nullopt when skew, otherwise the
// unique common point from the nullspace of the stacked 4x4 system.
inline std::optional<ProjPoint> line_meet_p3(const ProjLine3& l1, const ProjLine3& l2) {
    if (l1 == l2) throw std::domain_error("line_meet_p3: identical lines");
    CycMatrix m = l1.forms;
    m.push_back(l2.forms[0]);
    m.push_back(l2.forms[1]);
    int rank = detail::rref(m);
    if (rank == 4) return std::nullopt;
    auto kernel = detail::kernel_of_rref(m, m[0][0].order());
    if (kernel.size() != 1)
        throw std::logic_error("line_meet_p3: distinct lines with 2-dimensional meet");
    return ProjPoint(std::move(kernel[0]));
}

}  // namespace sesh

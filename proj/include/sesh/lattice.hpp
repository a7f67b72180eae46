#pragma once

// Numerical Picard lattices: intersection pairing, canonical class and
// Chern data, adjunction genus, and nef/ample tests where a classical
// criterion applies.
//
// Supported surface kinds:
//   - ProjectivePlane: rank 1, gram [1], K = -3H.
//   - RuledSurface(g, e): rank 2 with basis (C0, f), gram [[-e,1],[1,0]],
//     K = -2*C0 + (2g-2-e)*f. Nef/ample criteria require e >= 0.
//   - AbstractLattice: arbitrary symmetric gram matrix. Nefness is
//     undecidable in general; a preset may carry external evidence
//     (declared ample classes, known effective curve classes) that
//     decides some cases.

#include "sesh/rational.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sesh {

enum class SurfaceKind { ProjectivePlane, RuledSurface, AbstractLattice };

// Raised by nef/ample queries the lattice cannot decide; the caller must
// supply external nefness evidence (or record the check as undecided).
struct UnsupportedSurfaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurfaceModel {
    SurfaceKind kind = SurfaceKind::AbstractLattice;
    int rank = 0;
    std::vector<std::vector<Rational>> gram;  // symmetric rank x rank
    std::vector<std::string> basis_labels;
    std::optional<std::vector<Rational>> canonical_class;
    std::optional<Rational> chern_c2;
    std::optional<Rational> canonical_square;

    // RuledSurface parameters.
    int ruled_genus = 0;
    int ruled_e = 0;

    // External positivity evidence for AbstractLattice presets: classes
    // known to be ample, and classes of known effective curves (used to
    // refute nefness by a negative pairing).
    std::vector<std::vector<Rational>> ample_classes;
    std::vector<std::vector<Rational>> curve_classes;

    static std::shared_ptr<const SurfaceModel> projective_plane() {
        auto s = std::make_shared<SurfaceModel>();
        s->kind = SurfaceKind::ProjectivePlane;
        s->rank = 1;
        s->gram = {{Rational(1)}};
        s->basis_labels = {"H"};
        s->canonical_class = std::vector<Rational>{Rational(-3)};
        s->chern_c2 = Rational(3);
        s->canonical_square = Rational(9);
        return s;
    }

    static std::shared_ptr<const SurfaceModel> ruled(int g, int e) {
        if (g < 0) throw std::domain_error("SurfaceModel: genus must be >= 0");
        auto s = std::make_shared<SurfaceModel>();
        s->kind = SurfaceKind::RuledSurface;
        s->rank = 2;
        s->ruled_genus = g;
        s->ruled_e = e;
        s->gram = {{Rational(-e), Rational(1)}, {Rational(1), Rational(0)}};
        s->basis_labels = {"C0", "f"};
        s->canonical_class = std::vector<Rational>{Rational(-2), Rational(2 * g - 2 - e)};
        s->chern_c2 = Rational(4 - 4 * g);
        s->canonical_square = Rational(8 - 8 * g);
        return s;
    }

    bool same_lattice_as(const SurfaceModel& o) const {
        return kind == o.kind && rank == o.rank && gram == o.gram &&
               ruled_genus == o.ruled_genus && ruled_e == o.ruled_e;
    }
};

using SurfacePtr = std::shared_ptr<const SurfaceModel>;

struct DivisorClass {
    SurfacePtr surface;
    std::vector<Rational> coeffs;

    DivisorClass() = default;
    DivisorClass(SurfacePtr s, std::vector<Rational> c)
        : surface(std::move(s)), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != surface->rank)
            throw std::domain_error("DivisorClass: coefficient length != surface rank");
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
        return r;
    }
    friend DivisorClass operator*(const Rational& c, const DivisorClass& d) {
        DivisorClass r = d;
        for (auto& x : r.coeffs) x *= c;
        return r;
    }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coeffs == b.coeffs && a.surface->same_lattice_as(*b.surface);
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (!out.empty()) out += ",";
            out += coeffs[i].str();
        }
        return out;
    }
};

namespace detail {
inline void check_surface(const SurfacePtr& s, const DivisorClass& d) {
    if (d.surface.get() != s.get() && !d.surface->same_lattice_as(*s))
        throw std::domain_error("DivisorClass does not belong to this surface");
}
inline std::vector<Rational> gram_apply(const SurfaceModel& s,
                                        const std::vector<Rational>& v) {
    std::vector<Rational> out(s.rank);
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) out[i] += s.gram[i][j] * v[j];
    return out;
}
}  // namespace detail

// Intersection pairing D1 . D2 via the gram matrix.
inline Rational pair(const SurfacePtr& s, const DivisorClass& d1, const DivisorClass& d2) {
    detail::check_surface(s, d1);
    detail::check_surface(s, d2);
    auto gv = detail::gram_apply(*s, d2.coeffs);
    Rational out;
    for (int i = 0; i < s->rank; ++i) out += d1.coeffs[i] * gv[i];
    return out;
}

inline Rational self_intersection(const DivisorClass& d) {
    return pair(d.surface, d, d);
}

namespace detail {

// Is v a nonnegative rational multiple of w (w != 0)?
inline bool nonneg_multiple_of(const std::vector<Rational>& v,
                               const std::vector<Rational>& w) {
    std::optional<Rational> lambda;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) {
            if (!v[i].is_zero()) return false;
        } else {
            Rational l = v[i] / w[i];
            if (lambda && !(*lambda == l)) return false;
            lambda = l;
        }
    }
    return lambda && !lambda->is_negative();
}

enum class Positivity { Nef, Ample };

inline bool positivity_test(const SurfacePtr& s, const DivisorClass& d, Positivity want) {
    check_surface(s, d);
    const bool strict = want == Positivity::Ample;
    switch (s->kind) {
        case SurfaceKind::ProjectivePlane: {
            const Rational& deg = d.coeffs[0];
            return strict ? !deg.is_negative() && !deg.is_zero() : !deg.is_negative();
        }
        case SurfaceKind::RuledSurface: {
            if (s->ruled_e < 0)
                throw UnsupportedSurfaceError(
                    "nef/ample criterion unavailable on ruled surfaces with e < 0");
            // D = a*C0 + b*f: nef iff a >= 0 and b >= a*e; ample iff strict.
            const Rational& a = d.coeffs[0];
            const Rational& b = d.coeffs[1];
            Rational ae = a * Rational(s->ruled_e);
            if (strict) return a > Rational(0) && b > ae;
            return !a.is_negative() && b >= ae;
        }
        case SurfaceKind::AbstractLattice: {
            // Refutation: a known effective curve pairing negatively
            // (or nonpositively, for ampleness).
            for (const auto& c : s->curve_classes) {
                DivisorClass cd{s, c};
                Rational p = pair(s, d, cd);
                if (p.is_negative() || (strict && p.is_zero())) return false;
            }
            // Certification: a nonnegative multiple of a declared ample class.
            for (const auto& a : s->ample_classes) {
                if (nonneg_multiple_of(d.coeffs, a)) {
                    bool zero = true;
                    for (const auto& x : d.coeffs) zero = zero && x.is_zero();
                    return strict ? !zero : true;
                }
            }
            throw UnsupportedSurfaceError(
                "nefness undecidable on this surface; external evidence required");
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline bool is_nef(const SurfacePtr& s, const DivisorClass& d) {
    return detail::positivity_test(s, d, detail::Positivity::Nef);
}

inline bool is_ample(const SurfacePtr& s, const DivisorClass& d) {
    return detail::positivity_test(s, d, detail::Positivity::Ample);
}

// Genus from adjunction: 2g - 2 = D^2 + K.D. The result may be
// non-integral or negative for classes not represented by smooth
// irreducible curves; callers treat that as a diagnostic.
inline Rational adjunction_genus(const SurfacePtr& s, const DivisorClass& d) {
    if (!s->canonical_class)
        throw std::domain_error("adjunction_genus: surface has no canonical class");
    DivisorClass k{s, *s->canonical_class};
    return (pair(s, d, d) + pair(s, k, d) + Rational(2)) / Rational(2);
}

}  // namespace sesh

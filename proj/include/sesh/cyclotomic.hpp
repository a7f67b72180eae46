#pragma once

// Arithmetic in the cyclotomic field Q(zeta_n), with elements stored as
// dense coefficient vectors in the power basis 1, zeta, ..., zeta^(phi(n)-1)
// and reduced modulo the n-th cyclotomic polynomial Phi_n.
//
// Order 1 is allowed and gives plain Q, which the geometry builders use
// for arrangements with rational coordinates.

#include "sesh/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace sesh {

namespace detail {

// Monic polynomials over Q, coefficients low to high, no trailing zeros.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

// Remainder of a modulo monic divisor m.
inline Poly poly_mod(Poly a, const Poly& m) {
    a = poly_trim(std::move(a));
    while (a.size() >= m.size()) {
        Rational lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

// Exact quotient; requires m monic and m | a.
inline Poly poly_div_exact(Poly a, const Poly& m) {
    a = poly_trim(std::move(a));
    if (a.empty()) return {};
    Poly q(a.size() - m.size() + 1);
    while (a.size() >= m.size()) {
        Rational lead = a.back();
        size_t shift = a.size() - m.size();
        q[shift] = lead;
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        a = poly_trim(std::move(a));
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Phi_n by the divide-out recurrence: x^n - 1 = prod_{d | n} Phi_d.
inline const Poly& cyclotomic_polynomial(int n) {
    static std::map<int, Poly> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    Poly num(n + 1);
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return cache.emplace(n, poly_trim(std::move(num))).first->second;
}

inline int euler_phi(int n) {
    return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

}  // namespace detail

class Cyclotomic {
public:
    // Zero in Q(zeta_n).
    explicit Cyclotomic(int order)
        : order_(check_order(order)), coeffs_(detail::euler_phi(order)) {}

    Cyclotomic(int order, Rational rational_value) : Cyclotomic(order) {
        coeffs_[0] = std::move(rational_value);
    }

    // zeta_n^power.
    static Cyclotomic root_of_unity(int order, int power = 1) {
        power %= order;
        if (power < 0) power += order;
        detail::Poly p(power + 1);
        p[power] = Rational(1);
        return Cyclotomic(order, std::move(p));
    }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    // Requires is_rational().
    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: not a rational value");
        return coeffs_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_orders(a, b);
        Cyclotomic r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_orders(a, b);
        Cyclotomic r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_orders(a, b);
        return Cyclotomic(a.order_, detail::poly_mul(a.coeffs_, b.coeffs_));
    }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_n, which is coprime to any nonzero reduced element.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        detail::Poly r0 = detail::cyclotomic_polynomial(order_);
        detail::Poly r1 = detail::poly_trim(coeffs_);
        detail::Poly s0, s1{Rational(1)};
        while (r1.size() > 1) {
            // divide r0 by r1 (not monic in general): scale, then step
            detail::Poly q(r0.size() - r1.size() + 1);
            detail::Poly rem = r0;
            while (rem.size() >= r1.size()) {
                Rational lead = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] = lead;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
                rem = detail::poly_trim(std::move(rem));
            }
            detail::Poly s2 = s0;  // s2 = s0 - q*s1
            detail::Poly qs = detail::poly_mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size());
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = detail::poly_trim(std::move(s2));
        }
        if (r1.empty()) throw std::logic_error("Cyclotomic: element shares a factor with Phi_n");
        // r1 is a nonzero constant: gcd = r1[0], so (s1 / r1[0]) * this = 1
        Rational c = r1[0];
        for (auto& x : s1) x /= c;
        return Cyclotomic(order_, std::move(s1));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    // Total order for use as map keys during exact point clustering.
    friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
        if (auto c = a.order_ <=> b.order_; c != 0) return c;
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (is_rational()) return coeffs_[0].str();
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[i].str();
            if (i > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    Cyclotomic(int order, detail::Poly raw) : order_(check_order(order)) {
        raw = detail::poly_mod(std::move(raw), detail::cyclotomic_polynomial(order));
        raw.resize(detail::euler_phi(order));
        coeffs_ = std::move(raw);
    }

    static int check_order(int n) {
        if (n < 1) throw std::domain_error("Cyclotomic: order must be positive");
        return n;
    }
    static void check_orders(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_)
            throw std::domain_error("Cyclotomic: mixed field orders");
    }

    int order_;
    std::vector<Rational> coeffs_;
};

}  // namespace sesh

#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
//
// Invariants: gcd(|num|, den) = 1 and den > 0 always hold after
// construction; zero is represented as 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sesh {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(unreduced{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // cross-multiplication; denominators are positive
        Int l = a.num_ * b.den_, r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational squared() const {
        return Rational(unreduced{}, num_ * num_, den_ * den_);
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Decimal rendering, truncated toward zero. Display only; never
    // fed back into any computation.
    std::string decimal(unsigned places = 6) const {
        Int scale = 1;
        for (unsigned i = 0; i < places; ++i) scale *= 10;
        Int scaled = boost::multiprecision::abs(num_) * scale / den_;
        Int ip = scaled / scale, fp = scaled % scale;
        std::string frac = fp.str();
        frac.insert(0, places - frac.size(), '0');
        std::string out = (num_ < 0 ? "-" : "") + ip.str();
        if (places > 0) out += "." + frac;
        return out;
    }

    // Parses "p" or "p/q"; q must be nonzero.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
            Int n{std::string(s.substr(0, slash))};
            Int d{std::string(s.substr(slash + 1))};
            if (d == 0) throw std::domain_error("zero denominator");
            return Rational(std::move(n), std::move(d));
        } catch (const std::runtime_error&) {
            throw std::domain_error("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

private:
    struct unreduced {};
    Rational(unreduced, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

// Exact comparison of q against sqrt(s), decided on integers.
// Requires s >= 0. A negative q compares less unless q = s = 0.
inline std::strong_ordering rat_cmp_sqrt(const Rational& q, const Rational& s) {
    if (s.is_negative()) throw std::domain_error("rat_cmp_sqrt: negative radicand");
    if (q.is_negative())
        return s.is_zero() && q.is_zero() ? std::strong_ordering::equal
                                          : std::strong_ordering::less;
    return q.squared() <=> s;
}

}  // namespace sesh

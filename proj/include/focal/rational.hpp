#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace focal {

namespace detail {

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

inline __int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow128(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(x);
}

} // namespace detail

/// Exact rational number on 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator > 0). Intermediate products use 128-bit arithmetic and
/// throw std::overflow_error instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}                      // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ +
                           static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ -
                           static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_,
                       static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Canonical "p/q" form (always with the denominator).
    std::string to_fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Human form: "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return to_fraction_string();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static Rational from128(__int128 n, __int128 d) {
        Rational r;
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        r.num_ = detail::narrow128(n);
        r.den_ = detail::narrow128(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) {
        *this = from128(n, d);
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct RationalHash {
    std::size_t operator()(const Rational& r) const {
        return hash_combine(std::hash<std::int64_t>{}(r.num()),
                            std::hash<std::int64_t>{}(r.den()));
    }
};

/// Element of Q[sqrt(2)]: a + b*sqrt(2) with exact rational parts. Closed
/// under ring operations; exact zero tests need both parts zero.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rational& rat_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s,  s = sqrt(2)
        return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QuadExt operator-() const { return {-a_, -b_}; }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * 1.4142135623730950488;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(2)";
    }

private:
    Rational a_;
    Rational b_;
};

} // namespace focal

#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "focal/errors.hpp"
#include "focal/rational.hpp"

namespace focal {

/// Vector with exact rational coordinates in the ambient realization space.
/// Used for roots, weights and coroot vectors; equality is exact.
struct Vec {
    std::vector<Rational> coords;

    Vec() = default;
    explicit Vec(std::size_t dim) : coords(dim) {}
    Vec(std::initializer_list<Rational> init) : coords(init) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw DimensionMismatch("vector addition: dimension mismatch");
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw DimensionMismatch("vector subtraction: dimension mismatch");
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
        return r;
    }
    friend Vec operator*(const Rational& s, const Vec& v) {
        Vec r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r.coords[i] = s * v.coords[i];
        return r;
    }
    Vec operator-() const { return Rational(-1) * *this; }
    Vec& operator+=(const Vec& o) { return *this = *this + o; }
    Vec& operator-=(const Vec& o) { return *this = *this - o; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.coords == b.coords; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    /// Lexicographic coordinate order; the canonical root order.
    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ", ";
            s += coords[i].to_string();
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
        return os << v.to_string();
    }
};

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 0x51ab5fe1u;
        RationalHash rh;
        for (const auto& c : v.coords) h = hash_combine(h, rh(c));
        return h;
    }
};

/// Exact Euclidean inner product.
inline Rational inner(const Vec& u, const Vec& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("inner: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u.coords[i] * v.coords[i];
    return s;
}

/// 2 <mu, alpha> / <alpha, alpha>, the coroot pairing <mu, alpha^vee>.
inline Rational pairing(const Vec& mu, const Vec& alpha) {
    if (alpha.is_zero()) throw ZeroRoot("pairing: alpha must be nonzero");
    return Rational(2) * inner(mu, alpha) / inner(alpha, alpha);
}

/// Solves the square system M x = rhs by exact Gaussian elimination.
/// Throws std::domain_error on a singular matrix.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw DimensionMismatch("solve_linear: rhs size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

} // namespace focal

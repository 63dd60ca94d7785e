#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "focal/errors.hpp"
#include "focal/rational.hpp"
#include "focal/vec.hpp"

namespace focal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of a simple Lie algebra: family letter plus rank.
/// Accepted ranks: A n>=1, B n>=2, C n>=3 (C2 rejected, use B2), D n>=4,
/// E n in {6,7,8}, F n=4, G n=2.
struct CartanType {
    Family family;
    int rank;

    bool is_classical() const {
        return family == Family::A || family == Family::B || family == Family::C ||
               family == Family::D;
    }

    std::string to_string() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

inline void validate_cartan_type(const CartanType& ct) {
    const int n = ct.rank;
    switch (ct.family) {
        case Family::A:
            if (n >= 1) return;
            break;
        case Family::B:
            if (n >= 2) return;
            break;
        case Family::C:
            if (n == 2) throw InvalidCartanType("C2 duplicates B2; use B2");
            if (n >= 3) return;
            break;
        case Family::D:
            if (n >= 4) return;
            break;
        case Family::E:
            if (n >= 6 && n <= 8) return;
            break;
        case Family::F:
            if (n == 4) return;
            break;
        case Family::G:
            if (n == 2) return;
            break;
    }
    throw InvalidCartanType("invalid Cartan type " + ct.to_string());
}

/// Parses "A3", "e8", "B12" (case-insensitive letter + decimal rank).
inline CartanType parse_cartan_type(const std::string& s) {
    if (s.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + s + "'");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (fam < 'A' || fam > 'G') throw InvalidCartanType("unknown family in '" + s + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidCartanType("bad rank in '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 64) throw InvalidCartanType("rank out of range in '" + s + "'");
    }
    if (rank == 0) throw InvalidCartanType("bad rank in '" + s + "'");
    CartanType ct{static_cast<Family>(fam), rank};
    validate_cartan_type(ct);
    return ct;
}

/// Number of positive roots by the classical closed forms.
inline int positive_root_count(const CartanType& ct) {
    const int n = ct.rank;
    switch (ct.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::G: return 6;
        case Family::F: return 24;
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    }
    throw InvalidCartanType("invalid family");
}

/// Exact rational realization of an irreducible root system in the Bourbaki
/// ambient coordinates. Positive roots are stored in the canonical order
/// (lexicographic on coordinates) together with their expansions over the
/// simple roots.
struct RootSystem {
    CartanType cartan_type;
    int ambient_dim = 0;
    std::vector<Vec> simple_roots;
    std::vector<Vec> positive_roots;
    // positive_roots[i] = sum_j simple_coords[i][j] * simple_roots[j]
    std::vector<std::vector<int>> simple_coords;
    std::unordered_map<Vec, int, VecHash> root_index;
    std::vector<Vec> fundamental_weights;
    int highest_root_index = -1;

    int rank() const { return static_cast<int>(simple_roots.size()); }
    int num_positive() const { return static_cast<int>(positive_roots.size()); }

    /// Index of v in the positive roots, or -1.
    int index_of(const Vec& v) const {
        auto it = root_index.find(v);
        return it == root_index.end() ? -1 : it->second;
    }
    bool is_positive_root(const Vec& v) const { return index_of(v) >= 0; }
    bool is_root(const Vec& v) const { return is_positive_root(v) || is_positive_root(-v); }

    const Vec& highest_root() const { return positive_roots[highest_root_index]; }

    int height(int i) const {
        return std::accumulate(simple_coords[i].begin(), simple_coords[i].end(), 0);
    }
};

namespace detail {

inline Vec unit_vec(int dim, int i, Rational scale = 1) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = scale;
    return v;
}

inline std::pair<int, std::vector<Vec>> simple_root_realization(const CartanType& ct) {
    const int n = ct.rank;
    std::vector<Vec> simples;
    int dim = 0;
    auto e = [&](int i) { return unit_vec(dim, i); };
    switch (ct.family) {
        case Family::A:
            dim = n + 1;
            for (int i = 0; i < n; ++i) simples.push_back(e(i) - e(i + 1));
            break;
        case Family::B:
            dim = n;
            for (int i = 0; i + 1 < n; ++i) simples.push_back(e(i) - e(i + 1));
            simples.push_back(e(n - 1));
            break;
        case Family::C:
            dim = n;
            for (int i = 0; i + 1 < n; ++i) simples.push_back(e(i) - e(i + 1));
            simples.push_back(Rational(2) * e(n - 1));
            break;
        case Family::D:
            dim = n;
            for (int i = 0; i + 1 < n; ++i) simples.push_back(e(i) - e(i + 1));
            simples.push_back(e(n - 2) + e(n - 1));
            break;
        case Family::G:
            // Bourbaki plane x1+x2+x3 = 0 inside R^3; a rational realization
            // of G2 in two coordinates does not exist.
            dim = 3;
            simples.push_back(e(0) - e(1));
            simples.push_back(Rational(-2) * e(0) + e(1) + e(2));
            break;
        case Family::F: {
            dim = 4;
            simples.push_back(e(1) - e(2));
            simples.push_back(e(2) - e(3));
            simples.push_back(e(3));
            Vec half(4);
            half[0] = Rational(1, 2);
            half[1] = Rational(-1, 2);
            half[2] = Rational(-1, 2);
            half[3] = Rational(-1, 2);
            simples.push_back(half);
            break;
        }
        case Family::E: {
            dim = 8;
            Vec a1(8);
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            for (int i = 1; i <= 6; ++i) a1[static_cast<std::size_t>(i)] = Rational(-1, 2);
            simples.push_back(a1);
            simples.push_back(e(0) + e(1));
            for (int i = 0; i + 2 < n; ++i) simples.push_back(e(i + 1) - e(i));
            break;
        }
    }
    return {dim, simples};
}

} // namespace detail

/// Builds the root system for a valid Cartan type. Positive roots are
/// generated from the simple roots with the root-string recursion and then
/// sorted into the canonical lexicographic order.
inline RootSystem build_root_system(const CartanType& ct) {
    validate_cartan_type(ct);
    RootSystem rs;
    rs.cartan_type = ct;
    auto [dim, simples] = detail::simple_root_realization(ct);
    rs.ambient_dim = dim;
    rs.simple_roots = simples;
    const int r = static_cast<int>(simples.size());

    struct Gen {
        Vec v;
        std::vector<int> coeff;
    };
    std::vector<Gen> roots;
    std::unordered_map<Vec, int, VecHash> seen;
    for (int i = 0; i < r; ++i) {
        std::vector<int> c(static_cast<std::size_t>(r), 0);
        c[static_cast<std::size_t>(i)] = 1;
        seen.emplace(simples[static_cast<std::size_t>(i)], static_cast<int>(roots.size()));
        roots.push_back({simples[static_cast<std::size_t>(i)], std::move(c)});
    }

    // Grow by height: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> >= 1,
    // where p is the length of the downward alpha_i-string through beta.
    std::size_t lo = 0, hi = roots.size();
    while (lo < hi) {
        for (std::size_t bi = lo; bi < hi; ++bi) {
            for (int i = 0; i < r; ++i) {
                const Vec& alpha = simples[static_cast<std::size_t>(i)];
                const Vec beta = roots[bi].v; // copy: roots may reallocate
                if (beta == alpha) continue;
                int p = 0;
                Vec down = beta - alpha;
                while (seen.count(down)) {
                    ++p;
                    down = down - alpha;
                }
                Rational cart = pairing(beta, alpha);
                if (!cart.is_integer()) throw std::logic_error("non-integral Cartan pairing");
                const long q = p - cart.num();
                if (q >= 1) {
                    Vec up = beta + alpha;
                    if (!seen.count(up)) {
                        auto coeff = roots[bi].coeff;
                        coeff[static_cast<std::size_t>(i)] += 1;
                        seen.emplace(up, static_cast<int>(roots.size()));
                        roots.push_back({std::move(up), std::move(coeff)});
                    }
                }
            }
        }
        lo = hi;
        hi = roots.size();
    }

    std::sort(roots.begin(), roots.end(), [](const Gen& a, const Gen& b) { return a.v < b.v; });
    rs.positive_roots.reserve(roots.size());
    rs.simple_coords.reserve(roots.size());
    for (auto& g : roots) {
        rs.root_index.emplace(g.v, static_cast<int>(rs.positive_roots.size()));
        rs.positive_roots.push_back(std::move(g.v));
        rs.simple_coords.push_back(std::move(g.coeff));
    }

    if (rs.num_positive() != positive_root_count(ct))
        throw std::logic_error("positive root count mismatch for " + ct.to_string());

    // Highest root: unique maximal element of the simple-root partial order.
    std::vector<int> maximal;
    for (int i = 0; i < rs.num_positive(); ++i) {
        bool dominated = false;
        for (int j = 0; j < rs.num_positive() && !dominated; ++j) {
            if (j == i) continue;
            bool ge = true, strict = false;
            for (int k = 0; k < r; ++k) {
                int d = rs.simple_coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                        rs.simple_coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (d < 0) { ge = false; break; }
                if (d > 0) strict = true;
            }
            dominated = ge && strict;
        }
        if (!dominated) maximal.push_back(i);
    }
    if (maximal.size() != 1)
        throw std::logic_error("highest root is not unique for " + ct.to_string());
    rs.highest_root_index = maximal[0];
    for (const Vec& s : rs.simple_roots) {
        if (pairing(rs.highest_root(), s).sign() < 0)
            throw std::logic_error("highest root fails dominance check");
    }

    // Fundamental weights inside the span of the simple roots:
    // omega_i = sum_k c_k alpha_k with sum_k c_k <alpha_k, alpha_j^vee> = delta_ij.
    std::vector<std::vector<Rational>> cartan_t(static_cast<std::size_t>(r),
                                                std::vector<Rational>(static_cast<std::size_t>(r)));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            cartan_t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                pairing(simples[static_cast<std::size_t>(k)], simples[static_cast<std::size_t>(j)]);
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> rhs(static_cast<std::size_t>(r));
        rhs[static_cast<std::size_t>(i)] = 1;
        auto c = solve_linear(cartan_t, rhs);
        Vec w(static_cast<std::size_t>(dim));
        for (int k = 0; k < r; ++k) w += c[static_cast<std::size_t>(k)] * simples[static_cast<std::size_t>(k)];
        rs.fundamental_weights.push_back(std::move(w));
    }

    return rs;
}

inline RootSystem build_root_system(const std::string& type_string) {
    return build_root_system(parse_cartan_type(type_string));
}

/// Dominant integral weight sum_i coeffs[i] * omega_i.
inline Vec weight_from_fundamental(const RootSystem& rs, const std::vector<long>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
        throw WrongLength("weight_from_fundamental: expected " + std::to_string(rs.rank()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    bool all_zero = true;
    for (long c : coeffs) {
        if (c < 0) throw ZeroWeight("weight_from_fundamental: coefficients must be nonnegative");
        if (c != 0) all_zero = false;
    }
    if (all_zero) throw ZeroWeight("weight_from_fundamental: zero weight (trivial representation)");
    Vec w(static_cast<std::size_t>(rs.ambient_dim));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        w += Rational(coeffs[i]) * rs.fundamental_weights[i];
    return w;
}

/// max over roots alpha with <alpha, theta> != 0 of
/// |alpha|^2 |theta|^2 / <alpha, theta>^2, theta the highest root.
/// This is 1/cos^2 of the angle, so the crystallographic bound is <= 4.
inline Rational isoparametric_check(const RootSystem& rs) {
    const Vec& theta = rs.highest_root();
    const Rational theta_sq = inner(theta, theta);
    Rational best = 0;
    for (const Vec& alpha : rs.positive_roots) {
        Rational ip = inner(alpha, theta);
        if (ip.is_zero()) continue;
        Rational val = inner(alpha, alpha) * theta_sq / (ip * ip);
        if (val > best) best = val;
    }
    return best;
}

} // namespace focal

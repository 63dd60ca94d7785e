#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "focal/rootsys.hpp"

namespace focal {

/// Which valid set of structure-constant signs to generate. The two
/// conventions differ in the choice of distinguished decomposition per root
/// sum and in its sign; every geometric quantity downstream must agree
/// between them (tested).
enum class SignConvention { canonical, alternate };

/// Basis element of the semisimple Lie algebra: e_alpha / f_alpha indexed by
/// a positive root, or a Cartan element carried as its exact coroot vector.
struct BasisElem {
    enum class Kind { E, F, H };
    Kind kind;
    int index = -1; // positive-root index for E/F
    Vec coroot;     // ambient vector for H

    static BasisElem e(int i) { return {Kind::E, i, {}}; }
    static BasisElem f(int i) { return {Kind::F, i, {}}; }
    static BasisElem h(Vec v) { return {Kind::H, -1, std::move(v)}; }
};

/// Rational linear combination of e/f basis vectors plus a Cartan component.
struct LinCombBasis {
    std::map<std::pair<char, int>, Rational> ef; // key ('e'|'f', root index)
    Vec h; // empty dim == zero

    void add_ef(char kind, int index, const Rational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(kind, index);
        auto it = ef.find(key);
        if (it == ef.end()) {
            ef.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) ef.erase(it);
        }
    }
    void add_h(const Vec& v, const Rational& c) {
        if (c.is_zero() || v.dim() == 0) return;
        if (h.dim() == 0) h = Vec(v.dim());
        h += c * v;
    }
    void add(const LinCombBasis& o, const Rational& c) {
        for (const auto& [k, v] : o.ef) add_ef(k.first, k.second, c * v);
        if (o.h.dim() != 0) add_h(o.h, c);
    }
    bool is_zero() const {
        if (!ef.empty()) return false;
        return h.dim() == 0 || h.is_zero();
    }
};

/// Integer structure constants N_{alpha,beta} on positive-root pairs whose
/// sum is again a root, normalized so |N| = p+1 with p the downward
/// root-string length. Mixed-sign constants are derived on demand.
struct ChevalleyTable {
    RootSystem rs;
    SignConvention convention = SignConvention::canonical;
    // key (i << 20) | j for the ordered positive pair (i, j)
    std::unordered_map<std::uint64_t, long> n_const;

    static std::uint64_t key(int i, int j) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 20) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(j));
    }

    /// N_{alpha_i, alpha_j}; zero when alpha_i + alpha_j is not a root.
    long n_pp(int i, int j) const {
        auto it = n_const.find(key(i, j));
        return it == n_const.end() ? 0 : it->second;
    }

    /// Downward root-string length p = max{k : beta - k*alpha in Delta}.
    int string_down(int alpha_idx, int beta_idx) const {
        const Vec& alpha = rs.positive_roots[static_cast<std::size_t>(alpha_idx)];
        Vec v = rs.positive_roots[static_cast<std::size_t>(beta_idx)] - alpha;
        int p = 0;
        while (rs.is_root(v)) {
            ++p;
            v -= alpha;
        }
        return p;
    }

    /// N_{u,v} for signed roots (sign*positive_root[index]); u + v != 0.
    /// Reduces to stored constants with N_{-a,-b} = -N_{a,b} and the cyclic
    /// relation N_{a,b}/|c|^2 = N_{b,c}/|a|^2 = N_{c,a}/|b|^2 for a+b+c = 0.
    Rational n_signed(int i, int sign_i, int j, int sign_j) const {
        if (sign_i > 0 && sign_j > 0) return Rational(n_pp(i, j));
        if (sign_i < 0 && sign_j < 0) return Rational(-n_pp(i, j));
        if (sign_i < 0) return -n_signed(j, +1, i, -1); // N_{-a,b} = -N_{b,-a}
        // u = +alpha_i, v = -alpha_j
        if (i == j) throw std::logic_error("n_signed: opposite roots");
        const Vec& a = rs.positive_roots[static_cast<std::size_t>(i)];
        const Vec& b = rs.positive_roots[static_cast<std::size_t>(j)];
        Vec s = a - b;
        int d = rs.index_of(s);
        if (d >= 0) { // a = b + delta
            const Vec& delta = rs.positive_roots[static_cast<std::size_t>(d)];
            return -(inner(delta, delta) / inner(a, a)) * Rational(n_pp(j, d));
        }
        d = rs.index_of(-s);
        if (d >= 0) { // b = a + delta
            const Vec& delta = rs.positive_roots[static_cast<std::size_t>(d)];
            return -(inner(delta, delta) / inner(b, b)) * Rational(n_pp(i, d));
        }
        return Rational(0);
    }

    /// Same as n_signed but takes the signed roots as ambient vectors;
    /// returns 0 when an argument is not a root or the sum is not a root.
    Rational n_vec(const Vec& u, const Vec& v) const {
        int iu = rs.index_of(u), su = +1;
        if (iu < 0) {
            iu = rs.index_of(-u);
            su = -1;
        }
        int iv = rs.index_of(v), sv = +1;
        if (iv < 0) {
            iv = rs.index_of(-v);
            sv = -1;
        }
        if (iu < 0 || iv < 0) return Rational(0);
        if (iu == iv && su != sv) throw std::logic_error("n_vec: opposite roots");
        return n_signed(iu, su, iv, sv);
    }

    /// Coroot vector 2*alpha/|alpha|^2 of a positive root.
    Vec coroot(int i) const {
        const Vec& a = rs.positive_roots[static_cast<std::size_t>(i)];
        return (Rational(2) / inner(a, a)) * a;
    }
};

/// Builds the structure constants, processing root sums by increasing height.
/// The distinguished pair of each sum gets |N| = p+1 with a fixed sign; all
/// remaining pairs follow from the Jacobi identity applied to
/// (e_eps, e_{-alpha}, e_{-beta}).
inline ChevalleyTable build_chevalley(const RootSystem& rs,
                                      SignConvention convention = SignConvention::canonical) {
    ChevalleyTable tbl;
    tbl.rs = rs;
    tbl.convention = convention;
    const int n = rs.num_positive();

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    for (int gi : order) {
        const Vec& gamma = rs.positive_roots[static_cast<std::size_t>(gi)];
        // Unordered decompositions gamma = alpha_a + alpha_b, a < b.
        std::vector<std::pair<int, int>> decomps;
        for (int a = 0; a < n; ++a) {
            int b = rs.index_of(gamma - rs.positive_roots[static_cast<std::size_t>(a)]);
            if (b > a) decomps.emplace_back(a, b);
        }
        if (decomps.empty()) continue;

        // decomps is sorted by first index, which is the canonical (lex) order.
        const auto [eps, eta] = (convention == SignConvention::canonical)
                                    ? decomps.front()
                                    : decomps.back();
        const long sign = (convention == SignConvention::canonical) ? 1 : -1;
        const long p0 = tbl.string_down(eps, eta);
        tbl.n_const[ChevalleyTable::key(eps, eta)] = sign * (p0 + 1);
        tbl.n_const[ChevalleyTable::key(eta, eps)] = -sign * (p0 + 1);

        const Vec& ve = rs.positive_roots[static_cast<std::size_t>(eps)];
        for (const auto& [a, b] : decomps) {
            if (a == eps) continue;
            const Vec& va = rs.positive_roots[static_cast<std::size_t>(a)];
            const Vec& vb = rs.positive_roots[static_cast<std::size_t>(b)];
            // N_{a,b} = (N_{e,-a} N_{e-a,-b} + N_{-b,e} N_{e-b,-a}) / N_{-g,e}
            Rational num = 0;
            if (tbl.rs.is_root(ve - va))
                num += tbl.n_vec(ve, -va) * tbl.n_vec(ve - va, -vb);
            if (tbl.rs.is_root(ve - vb))
                num += tbl.n_vec(-vb, ve) * tbl.n_vec(ve - vb, -va);
            Rational den = tbl.n_vec(-gamma, ve);
            if (den.is_zero()) throw std::logic_error("chevalley: zero pivot constant");
            Rational nab = num / den;
            if (!nab.is_integer()) throw std::logic_error("chevalley: non-integer constant");
            const long expect = tbl.string_down(a, b) + 1;
            if (std::abs(nab.num()) != expect)
                throw std::logic_error("chevalley: |N| != p+1 for " + rs.cartan_type.to_string());
            tbl.n_const[ChevalleyTable::key(a, b)] = nab.num();
            tbl.n_const[ChevalleyTable::key(b, a)] = -nab.num();
        }
    }
    return tbl;
}

/// Exact commutator of two basis elements.
inline LinCombBasis bracket(const ChevalleyTable& tbl, const BasisElem& x, const BasisElem& y) {
    using Kind = BasisElem::Kind;
    const RootSystem& rs = tbl.rs;
    LinCombBasis out;

    auto root = [&](int i) -> const Vec& { return rs.positive_roots[static_cast<std::size_t>(i)]; };

    if (x.kind == Kind::H && y.kind == Kind::H) return out;
    if (x.kind == Kind::H) {
        // [h, e_a] = <a, h> e_a, [h, f_a] = -<a, h> f_a
        Rational c = inner(root(y.index), x.coroot);
        out.add_ef(y.kind == Kind::E ? 'e' : 'f', y.index, y.kind == Kind::E ? c : -c);
        return out;
    }
    if (y.kind == Kind::H) {
        LinCombBasis t = bracket(tbl, y, x);
        out.add(t, Rational(-1));
        return out;
    }

    const bool xe = x.kind == Kind::E, ye = y.kind == Kind::E;
    if (xe && ye) {
        int s = rs.index_of(root(x.index) + root(y.index));
        if (s >= 0) out.add_ef('e', s, Rational(tbl.n_pp(x.index, y.index)));
        return out;
    }
    if (!xe && !ye) { // [f_a, f_b] = -N_{a,b} f_{a+b}
        int s = rs.index_of(root(x.index) + root(y.index));
        if (s >= 0) out.add_ef('f', s, Rational(-tbl.n_pp(x.index, y.index)));
        return out;
    }
    if (xe && !ye) {
        if (x.index == y.index) { // [e_a, f_a] = h_{a^vee}
            out.add_h(tbl.coroot(x.index), Rational(1));
            return out;
        }
        Rational c = tbl.n_signed(x.index, +1, y.index, -1);
        if (c.is_zero()) return out;
        Vec diff = root(x.index) - root(y.index);
        int d = rs.index_of(diff);
        if (d >= 0) {
            out.add_ef('e', d, c);
        } else {
            d = rs.index_of(-diff);
            if (d >= 0) out.add_ef('f', d, c); // e_{-(b-a)} = f_{b-a}
        }
        return out;
    }
    // [f_a, e_b] = -[e_b, f_a]
    LinCombBasis t = bracket(tbl, y, x);
    out.add(t, Rational(-1));
    return out;
}

/// Bilinear extension of the bracket to linear combinations.
inline LinCombBasis bracket(const ChevalleyTable& tbl, const LinCombBasis& x,
                            const LinCombBasis& y) {
    LinCombBasis out;
    auto elem = [](char kind, int idx) {
        return kind == 'e' ? BasisElem::e(idx) : BasisElem::f(idx);
    };
    for (const auto& [kx, cx] : x.ef) {
        for (const auto& [ky, cy] : y.ef) {
            LinCombBasis t = bracket(tbl, elem(kx.first, kx.second), elem(ky.first, ky.second));
            out.add(t, cx * cy);
        }
        if (y.h.dim() != 0) {
            LinCombBasis t = bracket(tbl, elem(kx.first, kx.second), BasisElem::h(y.h));
            out.add(t, cx);
        }
    }
    if (x.h.dim() != 0) {
        for (const auto& [ky, cy] : y.ef) {
            LinCombBasis t = bracket(tbl, BasisElem::h(x.h), elem(ky.first, ky.second));
            out.add(t, cy);
        }
    }
    return out;
}

inline LinCombBasis to_lincomb(const BasisElem& x) {
    LinCombBasis out;
    if (x.kind == BasisElem::Kind::H)
        out.add_h(x.coroot, Rational(1));
    else
        out.add_ef(x.kind == BasisElem::Kind::E ? 'e' : 'f', x.index, Rational(1));
    return out;
}

struct JacobiReport {
    bool ok = true;
    std::uint64_t triples_checked = 0;
    bool exhaustive = false;
    std::string failure;
};

namespace detail {

inline std::vector<BasisElem> chevalley_basis(const ChevalleyTable& tbl) {
    std::vector<BasisElem> basis;
    for (int i = 0; i < tbl.rs.num_positive(); ++i) basis.push_back(BasisElem::e(i));
    for (int i = 0; i < tbl.rs.num_positive(); ++i) basis.push_back(BasisElem::f(i));
    for (int i = 0; i < tbl.rs.rank(); ++i) {
        const Vec& a = tbl.rs.simple_roots[static_cast<std::size_t>(i)];
        basis.push_back(BasisElem::h((Rational(2) / inner(a, a)) * a));
    }
    return basis;
}

inline bool jacobi_holds(const ChevalleyTable& tbl, const BasisElem& x, const BasisElem& y,
                         const BasisElem& z) {
    LinCombBasis lx = to_lincomb(x), ly = to_lincomb(y), lz = to_lincomb(z);
    LinCombBasis s = bracket(tbl, bracket(tbl, lx, ly), lz);
    s.add(bracket(tbl, bracket(tbl, ly, lz), lx), Rational(1));
    s.add(bracket(tbl, bracket(tbl, lz, lx), ly), Rational(1));
    return s.is_zero();
}

} // namespace detail

/// Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 exactly on basis triples:
/// all unordered triples for rank <= 4, otherwise a seeded random sample.
inline JacobiReport verify_jacobi(const ChevalleyTable& tbl, std::uint64_t sample_size = 10000,
                                  std::uint64_t seed = 0xF0CA1) {
    JacobiReport rep;
    auto basis = detail::chevalley_basis(tbl);
    const std::size_t m = basis.size();

    auto record_failure = [&](std::size_t i, std::size_t j, std::size_t k) {
        rep.ok = false;
        rep.failure = "Jacobi fails on basis triple (" + std::to_string(i) + ", " +
                      std::to_string(j) + ", " + std::to_string(k) + ")";
    };

    if (tbl.rs.rank() <= 4) {
        rep.exhaustive = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                for (std::size_t k = j; k < m; ++k) {
                    ++rep.triples_checked;
                    if (!detail::jacobi_holds(tbl, basis[i], basis[j], basis[k])) {
                        record_failure(i, j, k);
                        return rep;
                    }
                }
        return rep;
    }

    std::mt19937_64 rng(seed);
    if (sample_size < 10000) sample_size = 10000; // sampled mode floor
    for (std::uint64_t t = 0; t < sample_size; ++t) {
        std::size_t i = static_cast<std::size_t>(rng() % m);
        std::size_t j = static_cast<std::size_t>(rng() % m);
        std::size_t k = static_cast<std::size_t>(rng() % m);
        ++rep.triples_checked;
        if (!detail::jacobi_holds(tbl, basis[i], basis[j], basis[k])) {
            record_failure(i, j, k);
            return rep;
        }
    }
    return rep;
}

} // namespace focal

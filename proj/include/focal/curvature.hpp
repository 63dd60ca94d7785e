#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "focal/hwmodule.hpp"
#include "focal/parallel.hpp"
#include "focal/rng.hpp"
#include "focal/rootsys.hpp"

namespace focal {

/// m^2 for a pair of positive roots: 2 when alpha = beta or the angle is
/// obtuse, 1 otherwise.
inline int m_squared(const RootSystem& rs, int alpha_idx, int beta_idx) {
    if (alpha_idx == beta_idx) return 2;
    const Vec& a = rs.positive_roots[static_cast<std::size_t>(alpha_idx)];
    const Vec& b = rs.positive_roots[static_cast<std::size_t>(beta_idx)];
    return inner(a, b).sign() < 0 ? 2 : 1;
}

/// All ways of writing each element of 2*Delta+ as an ordered sum of two
/// positive roots, with the m^2 weight of each ordered pair.
struct SGammaEvaluator {
    struct Pair {
        int a;
        int b;
        bool obtuse_or_equal; // m^2 == 2
    };
    struct Block {
        Vec gamma;
        std::vector<Pair> pairs; // ordered pairs (a, b) with alpha_a + alpha_b = gamma
    };
    std::vector<Block> blocks; // sorted by gamma in the canonical order
    int n_roots = 0;

    static SGammaEvaluator build(const RootSystem& rs) {
        SGammaEvaluator ev;
        ev.n_roots = rs.num_positive();
        std::map<Vec, std::vector<Pair>> by_sum;
        for (int a = 0; a < ev.n_roots; ++a)
            for (int b = 0; b < ev.n_roots; ++b) {
                Vec g = rs.positive_roots[static_cast<std::size_t>(a)] +
                        rs.positive_roots[static_cast<std::size_t>(b)];
                by_sum[g].push_back({a, b, m_squared(rs, a, b) == 2});
            }
        ev.blocks.reserve(by_sum.size());
        for (auto& [g, pairs] : by_sum) ev.blocks.push_back({g, std::move(pairs)});
        return ev;
    }

    /// S_gamma = (sum m r_a r_b)^2 - 2 sum r_a^2 r_b^2 over the block pairs.
    double s_gamma(const Block& blk, std::span<const double> r) const {
        double lin1 = 0.0, lin2 = 0.0, quad = 0.0;
        for (const Pair& p : blk.pairs) {
            double prod = r[static_cast<std::size_t>(p.a)] * r[static_cast<std::size_t>(p.b)];
            (p.obtuse_or_equal ? lin2 : lin1) += prod;
            quad += prod * prod;
        }
        double lin = lin1 + 1.4142135623730950488 * lin2;
        return lin * lin - 2.0 * quad;
    }

    /// Exact S_gamma as an element of Q[sqrt(2)].
    QuadExt s_gamma_exact(const Block& blk, std::span<const Rational> r) const {
        Rational lin1 = 0, lin2 = 0, quad = 0;
        for (const Pair& p : blk.pairs) {
            Rational prod = r[static_cast<std::size_t>(p.a)] * r[static_cast<std::size_t>(p.b)];
            if (p.obtuse_or_equal)
                lin2 += prod;
            else
                lin1 += prod;
            quad += prod * prod;
        }
        // (lin1 + sqrt(2) lin2)^2 - 2 quad
        return QuadExt(lin1 * lin1 + Rational(2) * lin2 * lin2 - Rational(2) * quad,
                       Rational(2) * lin1 * lin2);
    }

    double total_s(std::span<const double> r) const {
        double acc = 0.0;
        for (const Block& b : blocks) acc += s_gamma(b, r);
        return acc;
    }
    QuadExt total_s_exact(std::span<const Rational> r) const {
        QuadExt acc;
        for (const Block& b : blocks) acc += s_gamma_exact(b, r);
        return acc;
    }
};

/// C_Delta = max over gamma in 2*Delta+ of sum_{alpha+beta=gamma} m^2,
/// counting ordered pairs.
inline std::int64_t c_delta(const RootSystem& rs) {
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    std::int64_t best = 0;
    for (const auto& blk : ev.blocks) {
        std::int64_t s = 0;
        for (const auto& p : blk.pairs) s += p.obtuse_or_equal ? 2 : 1;
        if (s > best) best = s;
    }
    return best;
}

/// The set Phi: sums gamma admitting more than two ordered decompositions
/// or at least one obtuse decomposition. S_gamma vanishes identically off
/// this set.
inline std::vector<Vec> phi_set(const RootSystem& rs) {
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    std::vector<Vec> out;
    for (const auto& blk : ev.blocks) {
        bool obtuse = false;
        for (const auto& p : blk.pairs)
            if (p.a != p.b && p.obtuse_or_equal) obtuse = true;
        if (blk.pairs.size() > 2 || obtuse) out.push_back(blk.gamma);
    }
    return out;
}

/// Per-gamma S values; no normalization of r is required (the vanishing
/// pattern is scale invariant).
inline std::map<Vec, double> s_gamma_map(const RootSystem& rs, std::span<const double> r) {
    if (r.size() != static_cast<std::size_t>(rs.num_positive()))
        throw IndexMismatch("s_gamma_map: r must have one entry per positive root");
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    std::map<Vec, double> out;
    for (const auto& blk : ev.blocks) out.emplace(blk.gamma, ev.s_gamma(blk, r));
    return out;
}

inline std::map<Vec, QuadExt> s_gamma_map_exact(const RootSystem& rs,
                                                std::span<const Rational> r) {
    if (r.size() != static_cast<std::size_t>(rs.num_positive()))
        throw IndexMismatch("s_gamma_map_exact: r must have one entry per positive root");
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    std::map<Vec, QuadExt> out;
    for (const auto& blk : ev.blocks) out.emplace(blk.gamma, ev.s_gamma_exact(blk, r));
    return out;
}

namespace detail {

inline void check_r_feasible_float(std::span<const double> r, int n_roots) {
    if (r.size() != static_cast<std::size_t>(n_roots))
        throw IndexMismatch("estimate_sum: r must have one entry per positive root");
    double norm_sq = 0.0;
    for (double v : r) {
        if (v < 0.0) throw InfeasibleR("estimate_sum: r entries must be nonnegative");
        norm_sq += v * v;
    }
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw InfeasibleR("estimate_sum: sum of r^2 must be 1");
}

} // namespace detail

/// Upper-bound functional 2 + sum_gamma S_gamma evaluated at a unit vector r.
inline double estimate_sum(const RootSystem& rs, std::span<const double> r) {
    detail::check_r_feasible_float(r, rs.num_positive());
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    return 2.0 + ev.total_s(r);
}

/// Exact variant for rational r with sum r^2 = 1 exactly.
inline QuadExt estimate_sum_exact(const RootSystem& rs, std::span<const Rational> r) {
    if (r.size() != static_cast<std::size_t>(rs.num_positive()))
        throw IndexMismatch("estimate_sum_exact: r must have one entry per positive root");
    Rational norm_sq = 0;
    for (const Rational& v : r) {
        if (v.sign() < 0) throw InfeasibleR("estimate_sum_exact: r entries must be nonnegative");
        norm_sq += v * v;
    }
    if (norm_sq != Rational(1)) throw InfeasibleR("estimate_sum_exact: sum of r^2 must be 1");
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    return QuadExt(Rational(2)) + ev.total_s_exact(r);
}

/// Exact ||(f_alpha f_beta p)^nu||^2: the squared norm of the degree-two
/// vector minus its component along the tangent direction f_{alpha+beta} p
/// when that direction is present.
inline Rational sff_pair_norm_sq(const HWContext& ctx, int alpha_idx, int beta_idx) {
    Rational na = ctx.lambda_pairing(alpha_idx);
    Rational nb = ctx.lambda_pairing(beta_idx);
    if (na.sign() <= 0 || nb.sign() <= 0)
        throw ZeroTangent("sff_pair_norm_sq: root with <lambda, alpha^vee> = 0");

    FMonomial fab(std::vector<int>{alpha_idx, beta_idx});
    Rational norm_sq = shapovalov_inner(ctx, fab, fab);

    const Vec gamma = ctx.rs().positive_roots[static_cast<std::size_t>(alpha_idx)] +
                      ctx.rs().positive_roots[static_cast<std::size_t>(beta_idx)];
    int g = ctx.rs().index_of(gamma);
    if (g >= 0) {
        Rational ng = ctx.lambda_pairing(g);
        if (ng.sign() > 0) {
            FMonomial fg(std::vector<int>{g});
            Rational cross = shapovalov_inner(ctx, fab, fg);
            norm_sq -= cross * cross / ng;
        }
    }
    return norm_sq;
}

/// Per-weight-level Gram matrices of the projected second-fundamental-form
/// vectors (f_alpha f_beta p)^nu over ordered active pairs.
struct GramTable {
    struct Block {
        Vec gamma;
        int proj_root = -1; // positive-root index of gamma when the projection acts
        std::vector<std::pair<int, int>> pairs; // ordered (alpha, beta) root indices
        std::vector<std::vector<Rational>> g;   // symmetric PSD, exact
    };
    std::vector<int> active;          // root indices with <lambda, alpha^vee> > 0
    std::vector<Rational> norm_sq;    // pairing(lambda, alpha), aligned with active
    std::vector<Block> blocks;        // sorted by gamma

    int active_pos(int root_idx) const {
        for (std::size_t i = 0; i < active.size(); ++i)
            if (active[i] == root_idx) return static_cast<int>(i);
        return -1;
    }
    bool is_identically_zero() const {
        for (const auto& blk : blocks)
            for (const auto& row : blk.g)
                for (const auto& v : row)
                    if (!v.is_zero()) return false;
        return true;
    }
};

inline GramTable sff_gram(const HWContext& ctx) {
    GramTable table;
    const RootSystem& rs = ctx.rs();
    for (int i = 0; i < rs.num_positive(); ++i) {
        Rational n = ctx.lambda_pairing(i);
        if (n.sign() > 0) {
            table.active.push_back(i);
            table.norm_sq.push_back(n);
        }
    }

    std::map<Vec, std::vector<std::pair<int, int>>> by_sum;
    for (int a : table.active)
        for (int b : table.active)
            by_sum[rs.positive_roots[static_cast<std::size_t>(a)] +
                   rs.positive_roots[static_cast<std::size_t>(b)]]
                .emplace_back(a, b);

    for (auto& [gamma, pairs] : by_sum) {
        GramTable::Block blk;
        blk.gamma = gamma;
        blk.pairs = std::move(pairs);
        int g = rs.index_of(gamma);
        if (g >= 0 && ctx.lambda_pairing(g).sign() > 0) blk.proj_root = g;

        const std::size_t m = blk.pairs.size();
        // Inner products against the projection direction, once per pair.
        std::vector<Rational> cross(m, Rational(0));
        Rational ng = 0;
        if (blk.proj_root >= 0) {
            ng = ctx.lambda_pairing(blk.proj_root);
            FMonomial fg(std::vector<int>{blk.proj_root});
            for (std::size_t i = 0; i < m; ++i) {
                FMonomial fi(std::vector<int>{blk.pairs[i].first, blk.pairs[i].second});
                cross[i] = shapovalov_inner(ctx, fi, fg);
            }
        }
        blk.g.assign(m, std::vector<Rational>(m, Rational(0)));
        for (std::size_t i = 0; i < m; ++i) {
            FMonomial fi(std::vector<int>{blk.pairs[i].first, blk.pairs[i].second});
            for (std::size_t j = i; j < m; ++j) {
                FMonomial fj(std::vector<int>{blk.pairs[j].first, blk.pairs[j].second});
                Rational v = shapovalov_inner(ctx, fi, fj);
                if (blk.proj_root >= 0) v -= cross[i] * cross[j] / ng;
                blk.g[i][j] = v;
                blk.g[j][i] = v;
            }
        }
        table.blocks.push_back(std::move(blk));
    }
    return table;
}

/// ||II_p(fp, fp)||^2 = sum_gamma v_gamma^* G_gamma v_gamma with
/// v_gamma = (z_alpha z_beta) over the ordered pairs of the block.
/// z is indexed like GramTable::active.
inline double sff_value_sq(const GramTable& gram, std::span<const std::complex<double>> z) {
    if (z.size() != gram.active.size())
        throw IndexMismatch("sff_value_sq: z must match the active root list");
    std::map<int, int> loc; // root index -> local position
    for (std::size_t i = 0; i < gram.active.size(); ++i)
        loc[gram.active[i]] = static_cast<int>(i);

    double total = 0.0;
    for (const auto& blk : gram.blocks) {
        const std::size_t m = blk.pairs.size();
        std::vector<std::complex<double>> v(m);
        for (std::size_t i = 0; i < m; ++i)
            v[i] = z[static_cast<std::size_t>(loc[blk.pairs[i].first])] *
                   z[static_cast<std::size_t>(loc[blk.pairs[i].second])];
        for (std::size_t i = 0; i < m; ++i) {
            std::complex<double> gv = 0.0;
            for (std::size_t j = 0; j < m; ++j) gv += blk.g[i][j].to_double() * v[j];
            total += (std::conj(v[i]) * gv).real();
        }
    }
    return total;
}

/// Exact variant for real rational coefficients.
inline Rational sff_value_sq_exact(const GramTable& gram, std::span<const Rational> z) {
    if (z.size() != gram.active.size())
        throw IndexMismatch("sff_value_sq_exact: z must match the active root list");
    std::map<int, int> loc;
    for (std::size_t i = 0; i < gram.active.size(); ++i)
        loc[gram.active[i]] = static_cast<int>(i);
    Rational total = 0;
    for (const auto& blk : gram.blocks) {
        const std::size_t m = blk.pairs.size();
        std::vector<Rational> v(m);
        for (std::size_t i = 0; i < m; ++i)
            v[i] = z[static_cast<std::size_t>(loc[blk.pairs[i].first])] *
                   z[static_cast<std::size_t>(loc[blk.pairs[i].second])];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) total += v[i] * blk.g[i][j] * v[j];
    }
    return total;
}

/// Wirtinger derivative dQ/d(conj z_c) of sff_value_sq, one entry per active
/// root. The real gradient with respect to (Re z, Im z) is twice its real
/// and imaginary parts.
inline std::vector<std::complex<double>> sff_gradient(const GramTable& gram,
                                                      std::span<const std::complex<double>> z) {
    if (z.size() != gram.active.size())
        throw IndexMismatch("sff_gradient: z must match the active root list");
    std::map<int, int> loc;
    for (std::size_t i = 0; i < gram.active.size(); ++i)
        loc[gram.active[i]] = static_cast<int>(i);
    std::vector<std::complex<double>> grad(z.size(), 0.0);
    for (const auto& blk : gram.blocks) {
        const std::size_t m = blk.pairs.size();
        std::vector<std::complex<double>> v(m), gv(m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            v[i] = z[static_cast<std::size_t>(loc[blk.pairs[i].first])] *
                   z[static_cast<std::size_t>(loc[blk.pairs[i].second])];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gv[i] += blk.g[i][j].to_double() * v[j];
        for (std::size_t i = 0; i < m; ++i) {
            int a = loc[blk.pairs[i].first], b = loc[blk.pairs[i].second];
            grad[static_cast<std::size_t>(a)] += std::conj(z[static_cast<std::size_t>(b)]) * gv[i];
            grad[static_cast<std::size_t>(b)] += std::conj(z[static_cast<std::size_t>(a)]) * gv[i];
        }
    }
    return grad;
}

/// Unit tangent coefficients: z per active root and r_alpha = |z_alpha| *
/// ||f_alpha p||.
struct CoefVector {
    std::vector<int> roots;
    std::vector<std::complex<double>> z;
    std::vector<double> r;

    double feasibility_residual() const {
        double s = 0.0;
        for (double v : r) s += v * v;
        return std::abs(s - 1.0);
    }
};

struct MaximizeConfig {
    int starts = 64;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-9;       // projected-gradient norm target
    int max_iters = 500;
    bool real_only = false;
    int workers = 0;         // 0: FOCALBOUND_WORKERS or hardware
};

struct MaxReport {
    double best_value_sq = 0.0;
    CoefVector best;
    int starts = 0;
    bool converged = false;
    double grad_norm = 0.0;
};

namespace detail {

/// Gram data flattened to doubles with block-local indices.
struct CompiledGram {
    struct Block {
        std::vector<std::pair<int, int>> pairs; // local active positions
        std::vector<double> g;                  // row-major m x m
    };
    std::vector<Block> blocks;
    std::vector<double> norm_sq; // per active root
    std::size_t n = 0;

    static CompiledGram build(const GramTable& gram) {
        CompiledGram cg;
        cg.n = gram.active.size();
        std::map<int, int> loc;
        for (std::size_t i = 0; i < gram.active.size(); ++i)
            loc[gram.active[i]] = static_cast<int>(i);
        for (const Rational& q : gram.norm_sq) cg.norm_sq.push_back(q.to_double());
        for (const auto& blk : gram.blocks) {
            Block b;
            const std::size_t m = blk.pairs.size();
            bool nonzero = false;
            b.g.resize(m * m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    double val = blk.g[i][j].to_double();
                    b.g[i * m + j] = val;
                    if (val != 0.0) nonzero = true;
                }
            if (!nonzero) continue;
            b.pairs.reserve(m);
            for (const auto& [ra, rb] : blk.pairs) b.pairs.emplace_back(loc[ra], loc[rb]);
            cg.blocks.push_back(std::move(b));
        }
        return cg;
    }

    double value(const std::vector<std::complex<double>>& z) const {
        double total = 0.0;
        for (const auto& blk : blocks) {
            const std::size_t m = blk.pairs.size();
            std::vector<std::complex<double>> v(m);
            for (std::size_t i = 0; i < m; ++i)
                v[i] = z[static_cast<std::size_t>(blk.pairs[i].first)] *
                       z[static_cast<std::size_t>(blk.pairs[i].second)];
            for (std::size_t i = 0; i < m; ++i) {
                std::complex<double> gv = 0.0;
                for (std::size_t j = 0; j < m; ++j) gv += blk.g[i * m + j] * v[j];
                total += (std::conj(v[i]) * gv).real();
            }
        }
        return total;
    }

    std::vector<std::complex<double>> wirtinger(const std::vector<std::complex<double>>& z) const {
        std::vector<std::complex<double>> grad(z.size(), 0.0);
        for (const auto& blk : blocks) {
            const std::size_t m = blk.pairs.size();
            std::vector<std::complex<double>> v(m), gv(m, 0.0);
            for (std::size_t i = 0; i < m; ++i)
                v[i] = z[static_cast<std::size_t>(blk.pairs[i].first)] *
                       z[static_cast<std::size_t>(blk.pairs[i].second)];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) gv[i] += blk.g[i * m + j] * v[j];
            for (std::size_t i = 0; i < m; ++i) {
                grad[static_cast<std::size_t>(blk.pairs[i].first)] +=
                    std::conj(z[static_cast<std::size_t>(blk.pairs[i].second)]) * gv[i];
                grad[static_cast<std::size_t>(blk.pairs[i].second)] +=
                    std::conj(z[static_cast<std::size_t>(blk.pairs[i].first)]) * gv[i];
            }
        }
        return grad;
    }

    void normalize(std::vector<std::complex<double>>& z) const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += norm_sq[i] * std::norm(z[i]);
        double f = 1.0 / std::sqrt(s);
        for (auto& c : z) c *= f;
    }
};

struct StartResult {
    double value = 0.0;
    std::vector<std::complex<double>> z;
    double grad_norm = 0.0;
    bool converged = false;
};

/// Ascent from one random start: steepest ascent in the real coordinates,
/// renormalizing to the feasibility ellipsoid, with backtracking.
inline StartResult ascend_once(const CompiledGram& cg, Rng& rng, const MaximizeConfig& cfg) {
    const std::size_t n = cg.n;
    std::vector<std::complex<double>> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = rng.gaussian();
        double im = cfg.real_only ? 0.0 : rng.gaussian();
        z[i] = {re, im};
    }
    cg.normalize(z);

    auto projected_grad = [&](const std::vector<std::complex<double>>& zz) {
        std::vector<std::complex<double>> w = cg.wirtinger(zz);
        // real gradient is 2*w (re/im); constraint normal is norm_sq .* zz
        std::vector<std::complex<double>> d(n);
        double gd = 0.0, dd = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = cg.norm_sq[i] * zz[i];
            gd += 2.0 * (w[i].real() * d[i].real() + w[i].imag() * d[i].imag());
            dd += std::norm(d[i]);
        }
        double f = dd > 0.0 ? gd / dd : 0.0;
        std::vector<std::complex<double>> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * w[i] - f * d[i];
        if (cfg.real_only)
            for (auto& c : g) c = {c.real(), 0.0};
        return g;
    };

    double value = cg.value(z);
    double step = 0.5;
    double gnorm = 0.0;
    bool converged = false;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        std::vector<std::complex<double>> g = projected_grad(z);
        double g2 = 0.0;
        for (const auto& c : g) g2 += std::norm(c);
        gnorm = std::sqrt(g2);
        if (gnorm <= cfg.tol * std::max(1.0, std::abs(value))) {
            converged = true;
            break;
        }
        bool accepted = false;
        double t = step;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<std::complex<double>> cand(n);
            for (std::size_t i = 0; i < n; ++i) cand[i] = z[i] + t * g[i];
            cg.normalize(cand);
            double cv = cg.value(cand);
            if (cv > value + 1e-4 * t * g2) {
                z = std::move(cand);
                value = cv;
                step = t * 1.5;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            // no ascent direction left at float resolution
            std::vector<std::complex<double>> gg = projected_grad(z);
            double s = 0.0;
            for (const auto& c : gg) s += std::norm(c);
            gnorm = std::sqrt(s);
            converged = gnorm <= 1e-6 * std::max(1.0, std::abs(value));
            break;
        }
    }
    return {value, std::move(z), gnorm, converged};
}

} // namespace detail

/// Multi-start projected gradient ascent for the supremum of
/// ||II_p(fp, fp)||^2 over unit tangent vectors fp. Deterministic for a
/// fixed seed regardless of the worker count; reports the best start.
inline MaxReport maximize_sff(const HWContext& ctx, const MaximizeConfig& cfg = {}) {
    GramTable gram = sff_gram(ctx);
    detail::CompiledGram cg = detail::CompiledGram::build(gram);
    const int starts = std::max(1, cfg.starts);

    std::vector<detail::StartResult> results(static_cast<std::size_t>(starts));
    parallel_for(static_cast<std::size_t>(starts), cfg.workers, [&](std::size_t s) {
        Rng rng(substream_seed(cfg.seed, s));
        results[s] = detail::ascend_once(cg, rng, cfg);
    });

    std::size_t best = 0;
    for (std::size_t s = 1; s < results.size(); ++s)
        if (results[s].value > results[best].value) best = s;

    MaxReport rep;
    rep.best_value_sq = results[best].value;
    rep.starts = starts;
    rep.converged = results[best].converged;
    rep.grad_norm = results[best].grad_norm;
    rep.best.roots = gram.active;
    rep.best.z = results[best].z;
    rep.best.r.resize(gram.active.size());
    for (std::size_t i = 0; i < gram.active.size(); ++i)
        rep.best.r[i] = std::abs(rep.best.z[i]) * std::sqrt(cg.norm_sq[i]);

    // A value above the combinatorial bound would mean a defect somewhere.
    if (rep.best_value_sq > static_cast<double>(c_delta(ctx.rs())) + 1e-6)
        throw std::logic_error("maximize_sff: value exceeds the proven bound");
    return rep;
}

} // namespace focal

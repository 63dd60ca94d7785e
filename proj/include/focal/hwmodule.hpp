#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "focal/chevalley.hpp"
#include "focal/rootsys.hpp"

namespace focal {

/// Ordered product of lowering operators applied to the highest weight
/// vector: factors (i1, ..., id) stands for f_{i1} ... f_{id} v_lambda,
/// the leftmost factor acting last.
struct FMonomial {
    std::vector<int> factors;

    FMonomial() = default;
    explicit FMonomial(std::vector<int> f) : factors(std::move(f)) {}

    int degree() const { return static_cast<int>(factors.size()); }
    bool empty() const { return factors.empty(); }

    FMonomial tail() const {
        return FMonomial(std::vector<int>(factors.begin() + 1, factors.end()));
    }
    FMonomial prepend(int i) const {
        std::vector<int> f;
        f.reserve(factors.size() + 1);
        f.push_back(i);
        f.insert(f.end(), factors.begin(), factors.end());
        return FMonomial(std::move(f));
    }

    friend bool operator<(const FMonomial& a, const FMonomial& b) {
        return a.factors < b.factors;
    }
    friend bool operator==(const FMonomial& a, const FMonomial& b) {
        return a.factors == b.factors;
    }
};

/// Rational combination of monomials; no zero coefficients are stored.
struct LinComb {
    std::map<FMonomial, Rational> terms;

    void add(const FMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add_scaled(const LinComb& o, const Rational& c) {
        for (const auto& [m, v] : o.terms) add(m, c * v);
    }
    bool is_zero() const { return terms.empty(); }
};

/// Evaluation context for one (root system, Chevalley table, highest weight).
/// Immutable after construction apart from the guarded memo table; concurrent
/// calls with the same context return identical exact values.
class HWContext {
public:
    HWContext(ChevalleyTable tbl, Vec lambda, int degree_cap = 4)
        : tbl_(std::move(tbl)), lambda_(std::move(lambda)), degree_cap_(degree_cap) {
        for (const Vec& s : tbl_.rs.simple_roots) {
            Rational p = pairing(lambda_, s);
            if (!p.is_integer() || p.sign() < 0)
                throw FocalError("HWContext: weight is not dominant integral");
        }
        if (lambda_.is_zero()) throw ZeroWeight("HWContext: zero highest weight");
    }

    const RootSystem& rs() const { return tbl_.rs; }
    const ChevalleyTable& tbl() const { return tbl_; }
    const Vec& lambda() const { return lambda_; }
    int degree_cap() const { return degree_cap_; }

    /// <lambda, alpha^vee> for the positive root of the given index;
    /// the squared norm of f_alpha v_lambda.
    Rational lambda_pairing(int root_idx) const {
        return pairing(lambda_, tbl_.rs.positive_roots[static_cast<std::size_t>(root_idx)]);
    }

    Vec weight_of(const FMonomial& m) const {
        Vec w = lambda_;
        for (int i : m.factors) w -= tbl_.rs.positive_roots[static_cast<std::size_t>(i)];
        return w;
    }
    Vec root_sum(const FMonomial& m) const {
        Vec w(static_cast<std::size_t>(tbl_.rs.ambient_dim));
        for (int i : m.factors) w += tbl_.rs.positive_roots[static_cast<std::size_t>(i)];
        return w;
    }

    // memo for apply_e, keyed by (raising root, monomial)
    using MemoKey = std::pair<int, FMonomial>;
    bool memo_lookup(const MemoKey& k, LinComb& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(k);
        if (it == memo_.end()) return false;
        out = it->second;
        return true;
    }
    void memo_store(const MemoKey& k, const LinComb& v) const {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(k, v);
    }

private:
    ChevalleyTable tbl_;
    Vec lambda_;
    int degree_cap_;
    mutable std::map<MemoKey, LinComb> memo_;
    mutable std::mutex mu_;
};

/// Normal-ordered expansion of e_delta F v_lambda as a combination of
/// lowering monomials applied to v_lambda. Recursion: commute e past the
/// leading f, expand [e, f] through the Chevalley table, let h act by the
/// weight scalar, and use e v_lambda = 0.
inline LinComb apply_e(const HWContext& ctx, int delta, const FMonomial& mono) {
    if (mono.degree() > ctx.degree_cap())
        throw DegreeCapExceeded("apply_e: monomial degree " + std::to_string(mono.degree()) +
                                " exceeds cap " + std::to_string(ctx.degree_cap()));
    LinComb out;
    if (mono.empty()) return out; // e_delta v_lambda = 0

    HWContext::MemoKey key{delta, mono};
    if (ctx.memo_lookup(key, out)) return out;

    const RootSystem& rs = ctx.rs();
    const int head = mono.factors[0];
    const FMonomial rest = mono.tail();

    // f_head * (e_delta acting on the rest)
    LinComb inner_part = apply_e(ctx, delta, rest);
    for (const auto& [m, c] : inner_part.terms) out.add(m.prepend(head), c);

    if (delta == head) {
        // [e_a, f_a] = h_a acts on the weight of (rest)v_lambda
        out.add(rest, pairing(ctx.weight_of(rest),
                              rs.positive_roots[static_cast<std::size_t>(delta)]));
    } else {
        Rational c = ctx.tbl().n_signed(delta, +1, head, -1);
        if (!c.is_zero()) {
            Vec diff = rs.positive_roots[static_cast<std::size_t>(delta)] -
                       rs.positive_roots[static_cast<std::size_t>(head)];
            int d = rs.index_of(diff);
            if (d >= 0) {
                // [e_delta, f_head] = c e_{delta-head}: keep raising
                LinComb raised = apply_e(ctx, d, rest);
                out.add_scaled(raised, c);
            } else {
                d = rs.index_of(-diff);
                if (d >= 0) out.add(rest.prepend(d), c); // c f_{head-delta}
            }
        }
    }

    ctx.memo_store(key, out);
    return out;
}

/// Exact invariant-form inner product <F v_lambda, G v_lambda>, computed by
/// peeling the leading lowering operator of G and moving its adjoint e
/// across F. Zero whenever the two root sums differ.
inline Rational shapovalov_inner(const HWContext& ctx, const FMonomial& lhs, const FMonomial& rhs) {
    if (lhs.degree() > ctx.degree_cap() || rhs.degree() > ctx.degree_cap())
        throw DegreeCapExceeded("shapovalov_inner: degree exceeds cap " +
                                std::to_string(ctx.degree_cap()));
    if (ctx.root_sum(lhs) != ctx.root_sum(rhs)) return Rational(0);
    if (rhs.empty()) return lhs.empty() ? Rational(1) : Rational(0);

    const int head = rhs.factors[0];
    const FMonomial rest = rhs.tail();
    LinComb peeled = apply_e(ctx, head, lhs);
    Rational acc = 0;
    for (const auto& [m, c] : peeled.terms) acc += c * shapovalov_inner(ctx, m, rest);
    return acc;
}

/// ||f_alpha v_lambda||^2 = <lambda, alpha^vee>.
inline Rational lowering_norm_sq(const HWContext& ctx, int alpha_idx) {
    return ctx.lambda_pairing(alpha_idx);
}

} // namespace focal

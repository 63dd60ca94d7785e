#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "focal/curvature.hpp"
#include "focal/parallel.hpp"
#include "focal/rng.hpp"
#include "focal/rootsys.hpp"

namespace focal {

/// Curvature constant of one simple family, stored as its exact square.
struct BoundConstant {
    std::int64_t c_squared;
    double c_float;
};

/// Per-family constants: A -> 12, B/C/D -> 24, G2 -> 6, F4 -> 28,
/// E6 -> 40, E7 -> 64, E8 -> 112 (squares).
inline BoundConstant table1_constant(const CartanType& ct) {
    validate_cartan_type(ct);
    std::int64_t c_sq = 0;
    switch (ct.family) {
        case Family::A: c_sq = 12; break;
        case Family::B:
        case Family::C:
        case Family::D: c_sq = 24; break;
        case Family::G: c_sq = 6; break;
        case Family::F: c_sq = 28; break;
        case Family::E: c_sq = ct.rank == 6 ? 40 : (ct.rank == 7 ? 64 : 112); break;
    }
    return {c_sq, std::sqrt(static_cast<double>(c_sq))};
}

/// Combined constant for a product group: max over the simple factors,
/// floored at 2 (the sqrt(2)^2 floor; it also covers a pure torus).
inline std::int64_t combine_constants(std::span<const CartanType> types) {
    std::int64_t best = 2;
    for (const CartanType& ct : types) {
        std::int64_t c = table1_constant(ct).c_squared;
        if (c > best) best = c;
    }
    return best;
}

/// Focal-radius lower bound arccot(C) (complex case) or arccot(C*sqrt(2)).
struct FocalBound {
    std::int64_t c_squared;
    double c;
    bool real_form;
    double cot_value;     // C or C*sqrt(2)
    double bound_radians; // arccot of the above, in (0, pi/2]
};

inline FocalBound focal_lower_bound(std::span<const CartanType> types, bool is_complex) {
    FocalBound fb{};
    fb.c_squared = combine_constants(types);
    fb.c = std::sqrt(static_cast<double>(fb.c_squared));
    fb.real_form = !is_complex;
    fb.cot_value = is_complex ? fb.c : fb.c * 1.4142135623730950488;
    fb.bound_radians = std::atan(1.0 / fb.cot_value);
    return fb;
}

inline FocalBound focal_lower_bound(const std::vector<CartanType>& types, bool is_complex) {
    return focal_lower_bound(std::span<const CartanType>(types.data(), types.size()), is_complex);
}

struct ClassicalCheckReport {
    CartanType type;
    std::int64_t c_squared = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double max_observed = 0.0;
    bool pass = false;
};

/// Samples seeded uniform unit vectors r on the positive-root sphere and
/// checks estimate_sum against the family constant. Sample i draws from its
/// own substream, so the outcome is independent of the worker split.
inline ClassicalCheckReport classical_family_check(const CartanType& ct, std::uint64_t samples,
                                                   std::uint64_t seed = kDefaultSeed,
                                                   int workers = 0) {
    validate_cartan_type(ct);
    if (!ct.is_classical())
        throw NotClassical("classical_family_check: " + ct.to_string() + " is not classical");
    if (samples < 1) throw FocalError("classical_family_check: need at least one sample");

    RootSystem rs = build_root_system(ct);
    SGammaEvaluator ev = SGammaEvaluator::build(rs);
    const std::size_t n = static_cast<std::size_t>(rs.num_positive());

    const int w = worker_count(workers);
    std::vector<double> worker_max(static_cast<std::size_t>(w), 0.0);
    parallel_for(static_cast<std::size_t>(w), w, [&](std::size_t t) {
        std::vector<double> r(n);
        double local = 0.0;
        for (std::uint64_t i = t; i < samples; i += static_cast<std::uint64_t>(w)) {
            Rng rng(substream_seed(seed, i));
            double norm_sq = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double g = rng.gaussian();
                r[k] = std::abs(g);
                norm_sq += g * g;
            }
            double f = 1.0 / std::sqrt(norm_sq);
            for (std::size_t k = 0; k < n; ++k) r[k] *= f;
            double val = 2.0 + ev.total_s(r);
            if (val > local) local = val;
        }
        worker_max[t] = local;
    });

    ClassicalCheckReport rep;
    rep.type = ct;
    rep.c_squared = table1_constant(ct).c_squared;
    rep.samples = samples;
    rep.seed = seed;
    for (double v : worker_max)
        if (v > rep.max_observed) rep.max_observed = v;
    rep.pass = rep.max_observed <= static_cast<double>(rep.c_squared) + 1e-9;
    return rep;
}

} // namespace focal

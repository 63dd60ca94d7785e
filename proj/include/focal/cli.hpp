#pragma once

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "focal/bounds.hpp"
#include "focal/chevalley.hpp"
#include "focal/curvature.hpp"
#include "focal/json_writer.hpp"
#include "focal/rootsys.hpp"

namespace focal::cli {

namespace detail {

inline std::vector<long> parse_weight(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw WrongLength("empty weight coefficient");
        for (char c : item)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw WrongLength("weight coefficients must be nonnegative integers");
        out.push_back(std::stol(item));
    }
    if (out.empty()) throw WrongLength("empty weight list");
    return out;
}

inline std::vector<CartanType> parse_factors(const std::string& s) {
    std::vector<CartanType> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_cartan_type(item));
    }
    return out;
}

inline Json weight_json(const std::vector<long>& w) {
    Json arr = Json::array();
    for (long c : w) arr.push(Json::integer(c));
    return arr;
}

inline Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& c : v.coords) arr.push(Json::str(c.to_fraction_string()));
    return arr;
}

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct MabResult {
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    bool pass() const { return violations == 0; }
};

inline MabResult run_mab_certificate(const HWContext& ctx) {
    MabResult res;
    const RootSystem& rs = ctx.rs();
    std::vector<int> active;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (ctx.lambda_pairing(i).sign() > 0) active.push_back(i);
    for (int a : active)
        for (int b : active) {
            Rational lhs = sff_pair_norm_sq(ctx, a, b);
            Rational rhs = Rational(m_squared(rs, a, b)) * ctx.lambda_pairing(a) *
                           ctx.lambda_pairing(b);
            ++res.pairs_checked;
            if (lhs > rhs) ++res.violations;
        }
    return res;
}

} // namespace detail

/// Dispatches one invocation. Exit codes: 0 success / verified,
/// 1 verification failed, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"focalbound: exact root-system curvature bounds for highest-weight orbits"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit a single JSON object");

    std::string type_str, weight_str, factors_str;
    std::uint64_t samples = 10000, seed = kDefaultSeed;
    int starts = 64;
    bool real_flag = false;

    auto* cmd_table1 = app.add_subcommand("table1", "print the per-family curvature constants");

    auto* cmd_cdelta = app.add_subcommand("cdelta", "combinatorial bound over root sums");
    cmd_cdelta->add_option("--type", type_str, "Cartan type, e.g. A3")->required();

    auto* cmd_phi = app.add_subcommand("phi", "root sums with more than two or an obtuse decomposition");
    cmd_phi->add_option("--type", type_str, "Cartan type")->required();

    auto* cmd_bound = app.add_subcommand(
        "bound",
        "focal-radius lower bound for a product of simple factors "
        "(assumes the representation is irreducible; this is not checked)");
    cmd_bound->add_option("--factors", factors_str, "comma-separated Cartan types, e.g. A2,E8");
    cmd_bound->add_flag("--real", real_flag, "no invariant complex structure (adds a sqrt(2) factor)");

    auto* cmd_verify = app.add_subcommand("verify", "exact and sampled certificates");
    cmd_verify->require_subcommand(1);
    auto* cmd_mab = cmd_verify->add_subcommand("mab", "pairwise second-fundamental-form bound, exact");
    cmd_mab->add_option("--type", type_str, "Cartan type")->required();
    cmd_mab->add_option("--weight", weight_str, "fundamental coefficients c1,...,cn")->required();
    auto* cmd_classical = cmd_verify->add_subcommand("classical", "sampled family bound for A/B/C/D");
    cmd_classical->add_option("--type", type_str, "classical Cartan type")->required();
    cmd_classical->add_option("--samples", samples, "number of sampled unit vectors");
    cmd_classical->add_option("--seed", seed, "RNG seed");
    auto* cmd_jacobi = cmd_verify->add_subcommand("jacobi", "Jacobi identity on the Chevalley basis");
    cmd_jacobi->add_option("--type", type_str, "Cartan type")->required();
    cmd_jacobi->add_option("--samples", samples, "sampled triples for rank > 4");
    cmd_jacobi->add_option("--seed", seed, "RNG seed");

    auto* cmd_maximize = app.add_subcommand("maximize", "multi-start search for the largest norm");
    cmd_maximize->add_option("--type", type_str, "Cartan type")->required();
    cmd_maximize->add_option("--weight", weight_str, "fundamental coefficients c1,...,cn")->required();
    cmd_maximize->add_option("--starts", starts, "number of random starts");
    cmd_maximize->add_option("--seed", seed, "RNG seed");

    auto* cmd_isopar = app.add_subcommand("isopar", "highest-root angle check");
    cmd_isopar->add_option("--type", type_str, "Cartan type")->required();

    std::vector<const char*> argv;
    argv.push_back("focalbound");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err); // prints the contextual help, returns 0
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_table1) {
            static const char* kLabels[] = {"A_n", "B_n", "C_n", "D_n", "G2",
                                            "F4",  "E6",  "E7",  "E8"};
            static const CartanType kReps[] = {{Family::A, 1}, {Family::B, 2}, {Family::C, 3},
                                               {Family::D, 4}, {Family::G, 2}, {Family::F, 4},
                                               {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
            if (json) {
                Json entries = Json::array();
                for (int i = 0; i < 9; ++i) {
                    BoundConstant bc = table1_constant(kReps[i]);
                    Json e = Json::object();
                    e.set("type", Json::str(kLabels[i]));
                    e.set("c_squared", Json::integer(bc.c_squared));
                    e.set("c", Json::number(bc.c_float));
                    entries.push(std::move(e));
                }
                Json root = Json::object();
                root.set("command", Json::str("table1"));
                root.set("entries", std::move(entries));
                out << root.dump() << "\n";
            } else {
                for (int i = 0; i < 9; ++i) {
                    BoundConstant bc = table1_constant(kReps[i]);
                    out << kLabels[i] << "  c^2 = " << bc.c_squared
                        << "  c = " << detail::fmt_double(bc.c_float) << "\n";
                }
            }
            return 0;
        }

        if (*cmd_cdelta) {
            CartanType ct = parse_cartan_type(type_str);
            RootSystem rs = build_root_system(ct);
            std::int64_t cd = c_delta(rs);
            if (json) {
                Json root = Json::object();
                root.set("command", Json::str("cdelta"));
                root.set("type", Json::str(ct.to_string()));
                root.set("c_delta", Json::integer(cd));
                out << root.dump() << "\n";
            } else {
                out << cd << "\n";
            }
            return 0;
        }

        if (*cmd_phi) {
            CartanType ct = parse_cartan_type(type_str);
            RootSystem rs = build_root_system(ct);
            std::vector<Vec> phi = phi_set(rs);
            if (json) {
                Json arr = Json::array();
                for (const Vec& g : phi) arr.push(detail::vec_json(g));
                Json root = Json::object();
                root.set("command", Json::str("phi"));
                root.set("type", Json::str(ct.to_string()));
                root.set("count", Json::integer(static_cast<std::int64_t>(phi.size())));
                root.set("phi", std::move(arr));
                out << root.dump() << "\n";
            } else {
                out << "count = " << phi.size() << "\n";
                for (const Vec& g : phi) out << g.to_string() << "\n";
            }
            return 0;
        }

        if (*cmd_bound) {
            std::vector<CartanType> factors = detail::parse_factors(factors_str);
            if (factors.empty())
                err << "warning: no simple factors given; using the sqrt(2) floor\n";
            FocalBound fb = focal_lower_bound(factors, !real_flag);
            if (json) {
                Json facs = Json::array();
                for (const auto& f : factors) facs.push(Json::str(f.to_string()));
                Json root = Json::object();
                root.set("command", Json::str("bound"));
                root.set("factors", std::move(facs));
                root.set("real", Json::boolean(fb.real_form));
                root.set("c_squared", Json::integer(fb.c_squared));
                root.set("c", Json::number(fb.c));
                root.set("cot", Json::number(fb.cot_value));
                root.set("radians", Json::number(fb.bound_radians));
                out << root.dump() << "\n";
            } else {
                out << "C^2 = " << fb.c_squared << "  C = " << detail::fmt_double(fb.c)
                    << (fb.real_form ? "  (real form, cot = C*sqrt(2) = " : "  (cot = C = ")
                    << detail::fmt_double(fb.cot_value) << ")\n";
                out << "focal radius >= " << detail::fmt_double(fb.bound_radians) << " rad\n";
            }
            return 0;
        }

        if (*cmd_mab) {
            CartanType ct = parse_cartan_type(type_str);
            std::vector<long> coeffs = detail::parse_weight(weight_str);
            RootSystem rs = build_root_system(ct);
            ChevalleyTable tbl = build_chevalley(rs);
            HWContext ctx(tbl, weight_from_fundamental(rs, coeffs));
            detail::MabResult res = detail::run_mab_certificate(ctx);
            if (json) {
                Json root = Json::object();
                root.set("command", Json::str("verify_mab"));
                root.set("type", Json::str(ct.to_string()));
                root.set("weight", detail::weight_json(coeffs));
                root.set("pairs_checked", Json::integer(static_cast<std::int64_t>(res.pairs_checked)));
                root.set("violations", Json::integer(static_cast<std::int64_t>(res.violations)));
                root.set("pass", Json::boolean(res.pass()));
                out << root.dump() << "\n";
            } else {
                out << "checked " << res.pairs_checked << " ordered pairs, violations "
                    << res.violations << ": " << (res.pass() ? "PASS" : "FAIL") << "\n";
            }
            return res.pass() ? 0 : 1;
        }

        if (*cmd_classical) {
            CartanType ct = parse_cartan_type(type_str);
            ClassicalCheckReport rep = classical_family_check(ct, samples, seed);
            if (json) {
                Json root = Json::object();
                root.set("command", Json::str("verify_classical"));
                root.set("type", Json::str(ct.to_string()));
                root.set("samples", Json::integer(static_cast<std::int64_t>(rep.samples)));
                root.set("seed", Json::integer(static_cast<std::int64_t>(rep.seed)));
                root.set("c_squared", Json::integer(rep.c_squared));
                root.set("max_estimate", Json::number(rep.max_observed));
                root.set("pass", Json::boolean(rep.pass));
                out << root.dump() << "\n";
            } else {
                out << "max estimate " << detail::fmt_double(rep.max_observed) << " vs bound "
                    << rep.c_squared << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
            }
            return rep.pass ? 0 : 1;
        }

        if (*cmd_jacobi) {
            CartanType ct = parse_cartan_type(type_str);
            RootSystem rs = build_root_system(ct);
            ChevalleyTable tbl = build_chevalley(rs);
            JacobiReport rep = verify_jacobi(tbl, samples, seed);
            if (json) {
                Json root = Json::object();
                root.set("command", Json::str("verify_jacobi"));
                root.set("type", Json::str(ct.to_string()));
                root.set("mode", Json::str(rep.exhaustive ? "exhaustive" : "sampled"));
                root.set("triples", Json::integer(static_cast<std::int64_t>(rep.triples_checked)));
                root.set("pass", Json::boolean(rep.ok));
                out << root.dump() << "\n";
            } else {
                out << (rep.exhaustive ? "exhaustive" : "sampled") << " check of "
                    << rep.triples_checked << " triples: " << (rep.ok ? "PASS" : "FAIL") << "\n";
                if (!rep.ok) out << rep.failure << "\n";
            }
            return rep.ok ? 0 : 1;
        }

        if (*cmd_maximize) {
            CartanType ct = parse_cartan_type(type_str);
            std::vector<long> coeffs = detail::parse_weight(weight_str);
            RootSystem rs = build_root_system(ct);
            ChevalleyTable tbl = build_chevalley(rs);
            HWContext ctx(tbl, weight_from_fundamental(rs, coeffs));
            MaximizeConfig cfg;
            cfg.starts = starts;
            cfg.seed = seed;
            MaxReport rep = maximize_sff(ctx, cfg);
            std::int64_t bound = table1_constant(ct).c_squared;
            bool within = rep.best_value_sq <= static_cast<double>(bound) + 1e-6;
            if (json) {
                Json zre = Json::array(), zim = Json::array(), rv = Json::array(),
                     roots = Json::array();
                for (std::size_t i = 0; i < rep.best.z.size(); ++i) {
                    zre.push(Json::number(rep.best.z[i].real()));
                    zim.push(Json::number(rep.best.z[i].imag()));
                    rv.push(Json::number(rep.best.r[i]));
                    roots.push(Json::integer(rep.best.roots[i]));
                }
                Json root = Json::object();
                root.set("command", Json::str("maximize"));
                root.set("type", Json::str(ct.to_string()));
                root.set("weight", detail::weight_json(coeffs));
                root.set("starts", Json::integer(rep.starts));
                root.set("seed", Json::integer(static_cast<std::int64_t>(seed)));
                root.set("best_value_sq", Json::number(rep.best_value_sq));
                root.set("converged", Json::boolean(rep.converged));
                root.set("grad_norm", Json::number(rep.grad_norm));
                root.set("active_roots", std::move(roots));
                root.set("z_re", std::move(zre));
                root.set("z_im", std::move(zim));
                root.set("r", std::move(rv));
                root.set("bound_c_squared", Json::integer(bound));
                root.set("within_bound", Json::boolean(within));
                out << root.dump() << "\n";
            } else {
                out << "best ||II(fp,fp)||^2 = " << detail::fmt_double(rep.best_value_sq)
                    << " over " << rep.starts << " starts"
                    << (rep.converged ? " (converged)" : " (not converged)") << "\n";
                out << "grad norm " << detail::fmt_double(rep.grad_norm) << ", bound "
                    << bound << (within ? " respected" : " EXCEEDED") << "\n";
            }
            return within ? 0 : 1;
        }

        if (*cmd_isopar) {
            CartanType ct = parse_cartan_type(type_str);
            RootSystem rs = build_root_system(ct);
            Rational v = isoparametric_check(rs);
            bool ok = v <= Rational(4);
            if (json) {
                Json root = Json::object();
                root.set("command", Json::str("isopar"));
                root.set("type", Json::str(ct.to_string()));
                root.set("max_ratio_sq", Json::str(v.to_fraction_string()));
                root.set("max_ratio_sq_float", Json::number(v.to_double()));
                root.set("bound_ok", Json::boolean(ok));
                out << root.dump() << "\n";
            } else {
                out << "max |alpha|^2 |theta|^2 / <alpha,theta>^2 = " << v.to_string()
                    << (ok ? " (<= 4: OK)" : " (> 4: FAIL)") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const FocalError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace focal::cli

#include <doctest.h>

#include <string>
#include <vector>

#include "focal/chevalley.hpp"
#include "focal/curvature.hpp"
#include "focal/rootsys.hpp"

using namespace focal;

TEST_CASE("A1 table is empty") {
    ChevalleyTable tbl = build_chevalley(build_root_system("A1"));
    CHECK(tbl.n_const.empty());
}

TEST_CASE("A2 constants have magnitude 1") {
    RootSystem rs = build_root_system("A2");
    ChevalleyTable tbl = build_chevalley(rs);
    CHECK(tbl.n_const.size() == 2); // (a1,a2) and (a2,a1)
    for (const auto& [k, v] : tbl.n_const) CHECK(std::abs(v) == 1);
}

TEST_CASE("B2 constants have magnitudes 1 and 2") {
    RootSystem rs = build_root_system("B2");
    ChevalleyTable tbl = build_chevalley(rs);
    bool saw1 = false, saw2 = false;
    for (const auto& [k, v] : tbl.n_const) {
        CHECK((std::abs(v) == 1 || std::abs(v) == 2));
        if (std::abs(v) == 1) saw1 = true;
        if (std::abs(v) == 2) saw2 = true;
    }
    CHECK(saw1);
    CHECK(saw2);
}

TEST_CASE("|N| = p + 1 and antisymmetry") {
    for (const std::string t : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
        RootSystem rs = build_root_system(t);
        ChevalleyTable tbl = build_chevalley(rs);
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int b = 0; b < rs.num_positive(); ++b) {
                Vec s = rs.positive_roots[static_cast<std::size_t>(a)] +
                        rs.positive_roots[static_cast<std::size_t>(b)];
                long n = tbl.n_pp(a, b);
                if (!rs.is_positive_root(s)) {
                    CHECK(n == 0);
                    continue;
                }
                CHECK(std::abs(n) == tbl.string_down(a, b) + 1);
                CHECK(tbl.n_pp(b, a) == -n);
            }
    }
}

TEST_CASE("bracket: [e_a, f_a] = h_a and the weight action") {
    RootSystem rs = build_root_system("B2");
    ChevalleyTable tbl = build_chevalley(rs);
    for (int i = 0; i < rs.num_positive(); ++i) {
        LinCombBasis h = bracket(tbl, BasisElem::e(i), BasisElem::f(i));
        CHECK(h.ef.empty());
        CHECK(h.h == tbl.coroot(i));
        // [h_b, e_a] = <a, b^vee> e_a
        for (int j = 0; j < rs.num_positive(); ++j) {
            LinCombBasis r = bracket(tbl, BasisElem::h(tbl.coroot(j)), BasisElem::e(i));
            CHECK(r.h.dim() == 0);
            Rational expect = pairing(rs.positive_roots[static_cast<std::size_t>(i)],
                                      rs.positive_roots[static_cast<std::size_t>(j)]);
            if (expect.is_zero()) {
                CHECK(r.ef.empty());
            } else {
                REQUIRE(r.ef.size() == 1);
                CHECK(r.ef.begin()->first == std::make_pair('e', i));
                CHECK(r.ef.begin()->second == expect);
            }
        }
    }
}

TEST_CASE("bracket: orthogonal roots in A3 commute across e/f") {
    RootSystem rs = build_root_system("A3");
    ChevalleyTable tbl = build_chevalley(rs);
    Vec t12{Rational(1), Rational(-1), Rational(0), Rational(0)};
    Vec t34{Rational(0), Rational(0), Rational(1), Rational(-1)};
    int a = rs.index_of(t12), b = rs.index_of(t34);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    LinCombBasis r = bracket(tbl, BasisElem::e(a), BasisElem::f(b));
    CHECK(r.is_zero());
}

TEST_CASE("mixed-sign constants are integers") {
    for (const std::string t : {"B3", "G2", "F4"}) {
        RootSystem rs = build_root_system(t);
        ChevalleyTable tbl = build_chevalley(rs);
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int b = 0; b < rs.num_positive(); ++b) {
                if (a == b) continue;
                Rational c = tbl.n_signed(a, +1, b, -1);
                CHECK(c.is_integer());
                if (rs.is_root(rs.positive_roots[static_cast<std::size_t>(a)] -
                               rs.positive_roots[static_cast<std::size_t>(b)]))
                    CHECK(!c.is_zero());
            }
    }
}

TEST_CASE("jacobi holds exhaustively on small types") {
    for (const std::string t : {"A2", "B2", "G2"}) {
        JacobiReport rep = verify_jacobi(build_chevalley(build_root_system(t)));
        CHECK(rep.exhaustive);
        CHECK(rep.ok);
    }
}

TEST_CASE("jacobi full scan on F4") {
    JacobiReport rep = verify_jacobi(build_chevalley(build_root_system("F4")));
    CHECK(rep.exhaustive);
    CHECK(rep.triples_checked == 24804); // C(52 + 2, 3)
    CHECK(rep.ok);
}

TEST_CASE("a single corrupted sign breaks jacobi") {
    ChevalleyTable tbl = build_chevalley(build_root_system("B2"));
    REQUIRE(!tbl.n_const.empty());
    auto it = tbl.n_const.begin();
    it->second = -it->second; // flip one sign, leave the antisymmetric partner
    JacobiReport rep = verify_jacobi(tbl);
    CHECK(!rep.ok);
    CHECK(!rep.failure.empty());
}

TEST_CASE("sampled jacobi on E6 draws at least 1e4 triples") {
    JacobiReport rep = verify_jacobi(build_chevalley(build_root_system("E6")), 2000, 7);
    CHECK(!rep.exhaustive);
    CHECK(rep.triples_checked == 10000); // requested sizes below the floor are raised
    CHECK(rep.ok);
}

// The two sign conventions define bases related by e'_a = eps_a e_a for some
// eps: Delta+ -> {+-1}. Geometric quantities must agree: pair norms exactly,
// Gram matrices up to the induced diagonal sign congruence, maxima to float
// tolerance.
TEST_CASE("curvature outputs do not depend on the sign convention") {
    for (const std::string t : {"A2", "B2", "A3", "B3", "C3", "G2"}) {
        RootSystem rs = build_root_system(t);
        ChevalleyTable canon = build_chevalley(rs, SignConvention::canonical);
        ChevalleyTable alt = build_chevalley(rs, SignConvention::alternate);
        REQUIRE(verify_jacobi(alt).ok);
        bool tables_differ = false;
        for (const auto& [k, v] : canon.n_const)
            if (alt.n_const.at(k) != v) tables_differ = true;
        if (rs.num_positive() > 2) CHECK(tables_differ);

        // Recover eps root by root (height recursion), then check the full
        // relation N'_{a,b} = eps_a eps_b eps_{a+b} N_{a,b}.
        const int n = rs.num_positive();
        std::vector<int> eps(static_cast<std::size_t>(n), 0);
        std::vector<int> by_height(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) by_height[static_cast<std::size_t>(i)] = i;
        std::sort(by_height.begin(), by_height.end(),
                  [&](int a, int b) { return rs.height(a) < rs.height(b); });
        for (int g : by_height) {
            if (rs.height(g) == 1) {
                eps[static_cast<std::size_t>(g)] = 1;
                continue;
            }
            const Vec& gamma = rs.positive_roots[static_cast<std::size_t>(g)];
            for (int a = 0; a < n; ++a) {
                int b = rs.index_of(gamma - rs.positive_roots[static_cast<std::size_t>(a)]);
                if (b < 0) continue;
                eps[static_cast<std::size_t>(g)] =
                    eps[static_cast<std::size_t>(a)] * eps[static_cast<std::size_t>(b)] *
                    static_cast<int>(canon.n_pp(a, b) / alt.n_pp(a, b));
                break;
            }
            REQUIRE(eps[static_cast<std::size_t>(g)] != 0);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int g = rs.index_of(rs.positive_roots[static_cast<std::size_t>(a)] +
                                    rs.positive_roots[static_cast<std::size_t>(b)]);
                if (g < 0) continue;
                CHECK(alt.n_pp(a, b) == eps[static_cast<std::size_t>(a)] *
                                            eps[static_cast<std::size_t>(b)] *
                                            eps[static_cast<std::size_t>(g)] * canon.n_pp(a, b));
            }

        std::vector<long> coeffs(static_cast<std::size_t>(rs.rank()), 1);
        coeffs[0] = 2;
        Vec lambda = weight_from_fundamental(rs, coeffs);
        HWContext c1(canon, lambda), c2(alt, lambda);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                CHECK(sff_pair_norm_sq(c1, a, b) == sff_pair_norm_sq(c2, a, b));

        GramTable g1 = sff_gram(c1), g2 = sff_gram(c2);
        REQUIRE(g1.blocks.size() == g2.blocks.size());
        for (std::size_t i = 0; i < g1.blocks.size(); ++i) {
            const auto& b1 = g1.blocks[i];
            const auto& b2 = g2.blocks[i];
            CHECK(b1.gamma == b2.gamma);
            CHECK(b1.pairs == b2.pairs);
            for (std::size_t p = 0; p < b1.pairs.size(); ++p)
                for (std::size_t q = 0; q < b1.pairs.size(); ++q) {
                    int sp = eps[static_cast<std::size_t>(b1.pairs[p].first)] *
                             eps[static_cast<std::size_t>(b1.pairs[p].second)];
                    int sq = eps[static_cast<std::size_t>(b1.pairs[q].first)] *
                             eps[static_cast<std::size_t>(b1.pairs[q].second)];
                    CHECK(b2.g[p][q] == Rational(sp * sq) * b1.g[p][q]);
                }
        }

        MaximizeConfig cfg;
        cfg.starts = 16;
        MaxReport r1 = maximize_sff(c1, cfg), r2 = maximize_sff(c2, cfg);
        CHECK(r1.best_value_sq == doctest::Approx(r2.best_value_sq).epsilon(1e-6));
    }
}

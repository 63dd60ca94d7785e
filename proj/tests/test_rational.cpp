#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "focal/rational.hpp"
#include "focal/vec.hpp"

using namespace focal;

TEST_CASE("rational arithmetic is normalized and exact") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 7) * Rational(7, 3)) == Rational(1));
    CHECK((Rational(-1, 2)).den() == 2);
    CHECK((Rational(1, -2)) == Rational(-1, 2));
    CHECK(Rational(5, 1).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3, 2) > Rational(4, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow throws instead of wrapping") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational string forms") {
    CHECK(Rational(3, 4).to_fraction_string() == "3/4");
    CHECK(Rational(4).to_fraction_string() == "4/1");
    CHECK(Rational(4).to_string() == "4");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
}

TEST_CASE("quadratic extension ring ops") {
    QuadExt s2(Rational(0), Rational(1)); // sqrt(2)
    CHECK((s2 * s2) == QuadExt(Rational(2)));
    QuadExt x(Rational(1, 2), Rational(-1, 3));
    QuadExt y(Rational(2), Rational(5));
    CHECK((x + y - y) == x);
    // (1/2 - 1/3 s)(2 + 5 s) = 1 + 5/2 s - 2/3 s - 10/3 = -7/3 + 11/6 s
    QuadExt p = x * y;
    CHECK(p.rat_part() == Rational(-7, 3));
    CHECK(p.sqrt2_part() == Rational(11, 6));
    CHECK(!p.is_zero());
    CHECK((p - p).is_zero());
    CHECK(p.to_double() == doctest::Approx(-7.0 / 3 + 11.0 / 6 * std::sqrt(2.0)));
}

TEST_CASE("vec ops and inner products") {
    Vec u{Rational(1), Rational(-1), Rational(0)};
    Vec v{Rational(0), Rational(1), Rational(-1)};
    CHECK(inner(u, u) == Rational(2));
    CHECK(inner(u, v) == Rational(-1));
    CHECK((u + v) == Vec{Rational(1), Rational(0), Rational(-1)});
    CHECK(pairing(u, u) == Rational(2));
    Vec w{Rational(1), Rational(1)};
    CHECK_THROWS_AS(inner(u, w), DimensionMismatch);
    CHECK_THROWS_AS(pairing(u, Vec(3)), ZeroRoot);
    CHECK(u < Vec{Rational(1), Rational(0), Rational(-1)});
    CHECK(Vec{Rational(0), Rational(1), Rational(-1)} < u);
}

TEST_CASE("exact linear solve") {
    // [[2,-1],[-1,2]] x = [1,0]  =>  x = [2/3, 1/3]
    std::vector<std::vector<Rational>> m{{Rational(2), Rational(-1)},
                                         {Rational(-1), Rational(2)}};
    auto x = solve_linear(m, {Rational(1), Rational(0)});
    CHECK(x[0] == Rational(2, 3));
    CHECK(x[1] == Rational(1, 3));
    std::vector<std::vector<Rational>> sing{{Rational(1), Rational(2)},
                                            {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_linear(sing, {Rational(1), Rational(0)}), std::domain_error);
}

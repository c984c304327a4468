#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "trigvar/errors.hpp"
#include "trigvar/gcd.hpp"
#include "trigvar/poly_json.hpp"
#include "trigvar/print.hpp"

using namespace trigvar;
using testing_support::Ring;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_fraction_string(make_rational(-4, 6)) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("polynomial arithmetic") {
    Ring r({"x", "y"});
    auto x = r[0], y = r[1];
    CHECK((x + r.c(1)) * (x - r.c(1)) == x * x - r.c(1));
    auto p = x * y + r.c(3) * x.pow(2);
    CHECK(p + MultiPoly(r.reg) == p);
    CHECK(to_string(p) == "3*x^2+x*y");
    CHECK((x + y).pow(3) == x.pow(3) + r.c(3) * x.pow(2) * y + r.c(3) * x * y.pow(2) + y.pow(3));

    // Chebyshev recurrence checked against hand-expanded T4, T5, T6.
    auto T4 = r.c(8) * x.pow(4) - r.c(8) * x.pow(2) + r.c(1);
    auto T5 = r.c(16) * x.pow(5) - r.c(20) * x.pow(3) + r.c(5) * x;
    auto T6 = r.c(32) * x.pow(6) - r.c(48) * x.pow(4) + r.c(18) * x.pow(2) - r.c(1);
    CHECK(r.c(2) * x * T5 - T4 == T6);

    Ring other({"x", "y"});
    Ring different({"a"});
    CHECK_NOTHROW(x + other[0]);  // equal registries compare by value
    CHECK_THROWS_AS(x + different[0], Error);
}

TEST_CASE("exact division") {
    Ring r({"x", "y"});
    auto x = r[0], y = r[1];
    auto a = (x + y) * (x - r.c(2) * y + r.c(1));
    auto q = a.divide_exact(x + y);
    REQUIRE(q);
    CHECK(*q == x - r.c(2) * y + r.c(1));
    CHECK_FALSE(a.divide_exact(x + r.c(3)));
}

TEST_CASE("multivariate gcd examples") {
    Ring r({"x", "y"});
    auto x = r[0], y = r[1];
    CHECK(gcd_multivar(x * x - r.c(1), x * x + r.c(2) * x + r.c(1)) == x + r.c(1));
    auto p = r.c(4) * x * y + r.c(6) * x;
    CHECK(gcd_multivar(p, MultiPoly(r.reg)) == r.c(2) * x * y + r.c(3) * x);
    CHECK(gcd_multivar(x * y, x * x) == x);
    CHECK(gcd_multivar(MultiPoly(r.reg), MultiPoly(r.reg)).is_zero());
    CHECK(gcd_multivar(x + y, x - y) == r.c(1));
}

TEST_CASE("gcd property on random cofactors") {
    Ring r({"x", "y", "z"});
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testing_support::random_poly(r, rng, 3, 3);
        auto a = testing_support::random_poly(r, rng, 3, 3);
        auto b = testing_support::random_poly(r, rng, 3, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        auto ag = a * g, bg = b * g;
        auto d = gcd_multivar(ag, bg);
        CAPTURE(to_string(ag));
        CAPTURE(to_string(bg));
        CHECK(ag.divide_exact(d).has_value());
        CHECK(bg.divide_exact(d).has_value());
        CHECK(d.divide_exact(g.primitive()).has_value());
        CHECK(d.leading_coefficient() > 0);
        CHECK(d.content() == 1);
    }
}

TEST_CASE("canonical rational functions") {
    Ring r({"x", "y"});
    auto x = r[0], y = r[1];
    RatFunc f(x * x - r.c(1), r.c(-2) * x - r.c(2));
    CHECK(f.num() == -(x - r.c(1)));
    CHECK(f.den() == r.c(2));
    CHECK(f.canonical() == f);
    RatFunc g(r.c(3) * y, r.c(6) * x * y);
    CHECK(g.num() == r.c(1));
    CHECK(g.den() == r.c(2) * x);
    CHECK(to_string(g) == "1/(2*x)");
    CHECK(to_string(RatFunc(x + r.c(1), x.pow(2))) == "(x+1)/x^2");
    CHECK_THROWS_AS(RatFunc(x, MultiPoly(r.reg)), Error);

    auto sum = RatFunc(r.c(1), x - r.c(1)) + RatFunc(r.c(1), x + r.c(1));
    CHECK(sum == RatFunc(r.c(2) * x, x * x - r.c(1)));
    auto prod = RatFunc(x * x - r.c(1), y) * RatFunc(y * y, x + r.c(1));
    CHECK(prod == RatFunc((x - r.c(1)) * y));
}

TEST_CASE("substitution") {
    Ring src({"y12", "y21", "y22"});
    Ring tr({"t1", "t2"});
    auto t1 = tr[0], t2 = tr[1];
    auto one = tr.c(1);
    std::map<std::string, RatFunc> nu = {
        {"y12", RatFunc(t1 * t1 - one, t1 * t1 + one)},
        {"y21", RatFunc(t2 * t2 + one, tr.c(2) * t2)},
        {"y22", RatFunc(t2 * t2 - one, tr.c(2) * t2)},
    };
    RatFunc single(src[0]);
    CHECK(substitute(single, nu, tr.reg) == nu.at("y12"));

    RatFunc f(src[0], src.c(2) * src[1] * src[2]);
    RatFunc expected(tr.c(2) * (t1 * t1 - one) * t2 * t2, (t1 * t1 + one) * (t2.pow(4) - one));
    CHECK(substitute(f, nu, tr.reg) == expected);

    // identity bindings
    std::map<std::string, RatFunc> id;
    Ring same({"y12", "y21", "y22"});
    CHECK(substitute(RatFunc(src[0] + src[1], src[2]), id, same.reg) == RatFunc(same[0] + same[1], same[2]));

    Ring xr({"x"});
    Ring ur({"u"});
    std::map<std::string, RatFunc> zero = {{"x", RatFunc(MultiPoly(ur.reg))}};
    CHECK_THROWS_AS(substitute(RatFunc(xr.c(1), xr[0]), zero, ur.reg), Error);

    // numeric agreement with direct composition
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    RatFunc h(src[0] * src[0] + src[1] - src.c(3), src[2] + src.c(5));
    RatFunc hc = substitute(h, nu, tr.reg);
    for (int i = 0; i < 50; ++i) {
        double a = u(rng), b = u(rng);
        double y12 = (a * a - 1) / (a * a + 1), y21 = (b * b + 1) / (2 * b), y22 = (b * b - 1) / (2 * b);
        double direct = evaluate_numeric(h, std::vector<double>{y12, y21, y22});
        double composed = evaluate_numeric(hc, std::vector<double>{a, b});
        CHECK(std::fabs(direct - composed) <= 1e-9 * std::max(1.0, std::fabs(direct)));
    }
}

TEST_CASE("numeric evaluation") {
    Ring r({"x"});
    auto x = r[0];
    CHECK(evaluate_numeric(RatFunc(x * x - r.c(1), x * x + r.c(1)), std::vector<double>{1.0}) == 0.0);
    CHECK(evaluate_numeric(RatFunc(x * x - r.c(1), x * x + r.c(1)), std::vector<double>{3.0}) == doctest::Approx(0.8));
    CHECK_THROWS_AS(evaluate_numeric(RatFunc(r.c(1), x), std::vector<double>{0.0}), Error);
    try {
        evaluate_numeric(RatFunc(r.c(1), x), std::vector<double>{0.0});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
}

TEST_CASE("lcm of denominators") {
    Ring r({"x", "y"});
    auto x = r[0], y = r[1];
    auto p = x + y, q = x - r.c(2);
    CHECK(lcm_denominators({RatFunc(p, x), RatFunc(q, y)}) == x * y);
    CHECK(lcm_denominators({RatFunc(p), RatFunc(q)}) == r.c(1));
    CHECK(lcm_denominators({RatFunc(p, x * x - r.c(1)), RatFunc(q, x - r.c(1))}) == x * x - r.c(1));
}

TEST_CASE("split content") {
    Ring r({"t1", "t2"});
    auto t1 = r[0], t2 = r[1];
    auto u = t1.pow(3) - r.c(2) * t1 + r.c(5);
    auto [c, pp] = split_content((t2 * t2 + r.c(1)) * u, {0});
    CHECK(c == t2 * t2 + r.c(1));
    CHECK(pp == u);
    auto [c2, pp2] = split_content(r.c(3) * u, {0});
    CHECK(c2.is_constant());
    CHECK(c2 * pp2 == r.c(3) * u);
    auto [c3, pp3] = split_content(MultiPoly(r.reg), {0});
    CHECK(c3.is_zero());
    CHECK(pp3 == r.c(1));
}

TEST_CASE("polynomial JSON round trip") {
    Ring r({"x1", "x2"});
    auto p = r.c(3, 7) * r[0].pow(2) * r[1] - r.c(5) + r[1];
    auto j = to_json(p);
    CHECK(j["terms"][0]["coef"] == "3/7");
    CHECK(j["terms"].back()["coef"] == "-5/1");
    auto q = poly_from_json(j, r.reg);
    CHECK(q == p);
    CHECK(to_json(q).dump() == j.dump());
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"coef":"1/0","exps":[1]}]})")), Error);
}

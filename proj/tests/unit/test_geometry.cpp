#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"

#include "trigvar/errors.hpp"
#include "trigvar/geometry.hpp"
#include "trigvar/implicit.hpp"
#include "trigvar/print.hpp"

using namespace trigvar;
using testing_support::Ring;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(TRIGVAR_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

RatFunc pure_expr(const PureParam& p, const std::string& text) { return parse_rational_function(text, p.reg); }

bool proportional(const MultiPoly& p, const MultiPoly& q) {
    return !p.is_zero() && !q.is_zero() && p.primitive_positive() == q.primitive_positive();
}

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("epicycloid generator") {
    auto pure = convert_pure(epicycloid(5, 1));
    CHECK(pure.sig == Signature{2, 0, 0});
    CHECK(pure.scale == std::vector<Rational>{1, 1});
    CHECK(pure.components[0] == pure_expr(pure, "6*sin(t1)*cos(t2)-32*cos(t2)*sin(t1)*cos(t1)^5+32*cos(t2)*sin(t1)*cos(t1)^3"
                                                "-6*cos(t2)*sin(t1)*cos(t1)"));
    CHECK(pure.components[1] == pure_expr(pure, "6*sin(t1)*sin(t2)-32*sin(t2)*sin(t1)*cos(t1)^5+32*sin(t2)*sin(t1)*cos(t1)^3"
                                                "-6*sin(t2)*sin(t1)*cos(t1)"));
    CHECK(pure.components[2] == pure_expr(pure, "6*cos(t1)-32*cos(t1)^6+48*cos(t1)^4-18*cos(t1)^2+1"));

    // R = r = 1 is allowed; R = 5, r = 2 gives frequency 7/2, so the circular block is scaled by 2.
    CHECK(convert_pure(epicycloid(1, 1)).n() == 3);
    auto half = convert_pure(epicycloid(5, 2));
    CHECK(half.scale[0] == 2);
    CHECK(half.scale[1] == 2);
    CHECK(purity_violations(half).empty());
    // Direct formula check at a few points.
    auto h = epicycloid(5, 2);
    for (double t1 : {0.3, -1.1, 2.0}) {
        double t2 = 0.7;
        auto x = evaluate(h, {t1, t2});
        double k = 3.5;
        CHECK(x[0] == doctest::Approx(7 * std::sin(t1) * std::cos(t2) - 2 * std::sin(k * t1) * std::cos(t2)));
        CHECK(x[2] == doctest::Approx(7 * std::cos(t1) - 2 * std::cos(k * t1)));
    }

    CHECK(kind_of([] { epicycloid(0, 1); }) == ErrorKind::NonpositiveRadius);
    CHECK(kind_of([] { epicycloid(5, -1); }) == ErrorKind::NonpositiveRadius);
    CHECK(kind_of([] { epicycloid(1, 2); }) == ErrorKind::RadiusOrderViolated);
}

TEST_CASE("hypocycloid generator") {
    auto pure = convert_pure(hypocycloid(7, 1));
    CHECK(pure.components[0] == pure_expr(pure, "5*sin(t1)*cos(t2)+64*cos(t2)*sin(t1)*cos(t1)^6-80*cos(t2)*sin(t1)*cos(t1)^4"
                                                "+24*cos(t2)*sin(t1)*cos(t1)^2"));
    CHECK(pure.components[1] == pure_expr(pure, "5*sin(t1)*sin(t2)+64*sin(t2)*sin(t1)*cos(t1)^6-80*sin(t2)*sin(t1)*cos(t1)^4"
                                                "+24*sin(t2)*sin(t1)*cos(t1)^2"));
    CHECK(pure.components[2] == pure_expr(pure, "13*cos(t1)-64*cos(t1)^7+112*cos(t1)^5-56*cos(t1)^3"));
    CHECK(convert_pure(hypocycloid(3, 1)).n() == 3);
    CHECK(purity_violations(convert_pure(hypocycloid(7, 2))).empty());
    CHECK(kind_of([] { hypocycloid(1, 1); }) == ErrorKind::RadiusOrderViolated);
    CHECK(kind_of([] { hypocycloid(1, 3); }) == ErrorKind::RadiusOrderViolated);
    CHECK(kind_of([] { hypocycloid(-7, 1); }) == ErrorKind::NonpositiveRadius);
}

TEST_CASE("sampling the circle and a constant map") {
    auto xi = to_rational_param(parse_param(fixture("circle_rational.txt")));
    auto amb = ambient_registry(2);
    Ideal check(amb, {parse_polynomial("x1^2+x2^2-1", amb)});
    auto cloud = sample(xi, {{-10, 10, 1001}}, &check);
    CHECK(cloud.points.size() == 1001);
    CHECK(cloud.skipped == 0);
    CHECK(cloud.max_residual() < 1e-9);
    CHECK(cloud.params.front()[0] == -10);
    CHECK(cloud.params.back()[0] == 10);

    auto constant = sample([](const std::vector<double>&) { return std::vector<double>{1.5, -2.0}; }, {{0, 1, 5}, {0, 1, 4}});
    CHECK(constant.points.size() == 20);
    for (const auto& p : constant.points) CHECK(p == std::vector<double>{1.5, -2.0});

    CHECK(kind_of([&] { sample(xi, {{0, 1, 1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sampling skips poles and is deterministic across thread counts") {
    auto h = parse_param("signature (0,0,1) vars t\n(1/t, t)");
    auto cloud = sample(h, {{-1, 1, 5}});
    CHECK(cloud.points.size() == 4);
    CHECK(cloud.skipped == 1);

    auto epi = convert_pure(epicycloid(5, 1));
    auto a = sample(epi, {{0, 2 * kPi, 120}, {0, 2 * kPi, 90}}, nullptr, 1);
    auto b = sample(epi, {{0, 2 * kPi, 120}, {0, 2 * kPi, 90}}, nullptr, 7);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("plotting example: every sampled point lies on the curve") {
    auto h = parse_param(fixture("plot_curve.txt"));
    auto pure = convert_pure(h);
    Ideal curve = implicitize_trig(pure);
    REQUIRE(curve.generators.size() == 1);
    CHECK(curve.generators[0].total_degree() == 13);
    // Trigonometric form over [-2pi, 2pi] and the rational form over [-10, 10].
    auto trig_cloud = sample(h, {{-2 * kPi, 2 * kPi, 2000}}, &curve);
    CHECK(trig_cloud.points.size() + trig_cloud.skipped == 2000);
    CHECK(trig_cloud.max_residual() < 1e-7);
    auto rat = trig_to_rational(pure);
    auto rat_cloud = sample(rat, {{-10, 10, 2000}}, &curve);
    CHECK(rat_cloud.max_residual() < 1e-7);
    // Far points approach the asymptote y = 2 of the curve itself (t -> 0), as the residuals confirm.
    unsigned far = 0;
    for (const auto& p : trig_cloud.points)
        if (std::fabs(p[0]) > 50) {
            ++far;
            CHECK(std::fabs(p[1] - 2) < 0.1);
        }
    CHECK(far > 0);
}

TEST_CASE("CSV and JSON output") {
    PointCloud c;
    c.dim = 2;
    c.points = {{1, 0.5}, {-2, 3}};
    c.params = {{0}, {1}};
    c.residuals = {{0}, {1e-12}};
    c.skipped = 3;
    CHECK(to_csv(c) == "x1,x2,residual1\n1,0.5,0\n-2,3,9.9999999999999998e-13\n");
    auto j = to_json(c);
    CHECK(j["skipped"] == 3);
    CHECK(j["points"][1][1] == 3.0);
}

TEST_CASE("intersection workflow: epicycloid and sphere") {
    auto pure = convert_pure(epicycloid(5, 1));
    auto G = trig_to_rational(pure);
    auto amb = ambient_registry(3);
    auto sphere = parse_polynomial("x1^2+x2^2+x3^2-36", amb);

    auto cond = intersect_condition(G, sphere);
    auto [t1_part, rest] = split_content(cond, {1});
    auto expected = parse_polynomial(
        "t1^10-120*t1^9+5*t1^8+1440*t1^7+10*t1^6-3024*t1^5+10*t1^4+1440*t1^3+5*t1^2-120*t1+1", G.reg);
    CHECK(t1_part.primitive_positive() == expected);
    CHECK(rest.is_constant());

    auto roots = isolate_real_roots(t1_part, make_rational(1, 1LL << 40));
    std::vector<double> expected_roots{-2.992499717, -1.400811244, -0.7138720538, -0.3341687869, 0.008343202240,
                              0.3157206162, 0.739367548,  1.352507292,   3.167357305,   119.8580558};
    REQUIRE(roots.size() == expected_roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(std::fabs(roots[i].approx - expected_roots[i]) < 1e-6);

    // Substituting the roots back: on the sphere for every t2, and the expected_roots's circle level.
    for (const auto& r : roots)
        for (double t2 : {0.3, 1.7, -2.2}) {
            auto x = G.evaluate({r.approx, t2});
            CHECK(std::fabs(sphere.evaluate(x)) < 1e-5 * std::max(1.0, sphere.evaluate_magnitude(x)));
        }
    // The circle at height 5.94889339 with radius 0.7814521186 comes from the roots
    // 0.739367548 and 1.352507292 (the latter is cos/(1-sin) of the trig solution 0.297473248).
    for (std::size_t i : {6, 7}) {
        auto x = G.evaluate({roots[i].approx, 0.5});
        CHECK(std::fabs(x[2] - 5.94889339) < 1e-5);
        CHECK(std::fabs(std::hypot(x[0], x[1]) - 0.7814521186) < 1e-5);
    }
    double c = 2 * roots[7].approx / (roots[7].approx * roots[7].approx + 1);
    CHECK(std::fabs(c - std::cos(0.297473248)) < 1e-8);

    auto trig = intersect_condition_trig(pure, sphere);
    CHECK(proportional(trig, parse_polynomial("-192*cos(t1)^5+240*cos(t1)^3-60*cos(t1)+1", pure.reg)));
}

TEST_CASE("intersection conditions on the circle") {
    auto xi = to_rational_param(parse_param(fixture("circle_rational.txt")));
    auto amb = ambient_registry(2);
    CHECK(intersect_condition(xi, parse_polynomial("x1^2+x2^2-1", amb)).is_zero());
    CHECK(proportional(intersect_condition(xi, parse_polynomial("x1", amb)), parse_polynomial("2*t1", xi.reg)));
    auto cs = convert_pure(parse_param("signature (1,0,0) vars t\n(cos(t), sin(t))"));
    CHECK(intersect_condition_trig(cs, parse_polynomial("x1^2+x2^2-1", amb)).is_zero());
    CHECK(intersect_condition_trig(cs, parse_polynomial("x2", amb)) == parse_polynomial("sin(t)", cs.reg));
}

TEST_CASE("real root isolation basics") {
    Ring r({"x"});
    CHECK(isolate_real_roots(r[0] * r[0] + r.c(1), make_rational(1, 1000)).empty());
    auto two = isolate_real_roots(r[0] * r[0] - r.c(2), make_rational(1, 1000000000));
    REQUIRE(two.size() == 2);
    CHECK(two[0].approx == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
    CHECK(two[1].approx == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(two[1].width() <= make_rational(1, 1000000000));

    // Exact rational roots and multiplicities.
    auto p = (r[0] - r.c(1)).pow(3) * (r[0] + r.c(2)) * r[0];
    auto roots = isolate_real_roots(p, make_rational(1, 1 << 20));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].lo == 0);
    CHECK(roots[1].hi == 0);
    CHECK(roots[2].multiplicity == 3);
    CHECK(roots[2].approx == doctest::Approx(1.0));
    CHECK(count_real_roots(p) == 3);
    CHECK(to_json(roots)[1]["lo"] == "0");

    CHECK(kind_of([&] { isolate_real_roots(MultiPoly(r.reg), make_rational(1, 2)); }) == ErrorKind::InvalidArgument);
    Ring two_vars({"x", "y"});
    CHECK(kind_of([&] { isolate_real_roots(two_vars[0] * two_vars[1], make_rational(1, 2)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Sturm counts agree with fine-grid sign scanning on random polynomials") {
    std::mt19937 rng(4242);
    Ring r({"x"});
    for (int trial = 0; trial < 50; ++trial) {
        // Distinct real roots on a 1/8 lattice in [-4, 4] (spaced >= 1/8), times root-free quadratics.
        std::uniform_int_distribution<int> nroots(0, 8), lattice(-32, 32), quad(0, 2), coef(-3, 3);
        int k = nroots(rng);
        std::set<int> picks;
        while (static_cast<int>(picks.size()) < k) picks.insert(lattice(rng));
        MultiPoly p = r.c(1);
        for (int v : picks) p = p * (r[0] * Rational(8) - r.c(v));
        int nq = std::min(quad(rng), (12 - k) / 2);
        for (int q = 0; q < nq; ++q) {
            int a = coef(rng);
            int b = a * a / 4 + 1 + std::abs(coef(rng));  // a^2 < 4b
            p = p * (r[0] * r[0] + r[0] * Rational(a) + r.c(b));
        }
        if (p.is_constant()) p = r[0] * r[0] + r.c(1);
        CAPTURE(trial);
        auto roots = isolate_real_roots(p, make_rational(1, 1 << 16));
        CHECK(roots.size() == count_real_roots(p));
        CHECK(roots.size() == picks.size());
        // Oracle: sign changes on a fine grid (step 1/256, offset so no grid point is a root).
        unsigned changes = 0;
        double prev = p.evaluate(std::vector<double>{-5.0 - 1.0 / 512});
        for (int i = 1; i <= 10 * 256; ++i) {
            double x = -5.0 - 1.0 / 512 + i / 256.0;
            double v = p.evaluate(std::vector<double>{x});
            if ((v < 0) != (prev < 0)) ++changes;
            prev = v;
        }
        CHECK(changes == roots.size());
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
    }
}

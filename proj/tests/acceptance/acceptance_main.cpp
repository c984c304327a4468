// One line per acceptance criterion: [PASS] or [FAIL], the criterion, and its runtime.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trigvar/geometry.hpp"
#include "trigvar/implicit.hpp"
#include "trigvar/print.hpp"

using namespace trigvar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(TRIGVAR_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out += line;
    return out;
}

// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)}); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    return a.primitive_positive() == b.primitive_positive();
}

// Every generator set of an elimination is itself a reduced basis for the order restricted
// to x; normalize the sign of the leading coefficient under that order and run the exhaustive check.
bool basis_checks(const Ideal& I, const MonomialOrder& order) {
    GroebnerBasis g;
    g.order = order;
    g.reg = I.reg;
    g.basis = I.generators;
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        Monomial lm = g.leading_monomial(i);
        for (const auto& [m, c] : g.basis[i].terms())
            if (m == lm && c < 0) g.basis[i] = -g.basis[i];
    }
    return verify_groebner(g);
}

// ----------------------------------------------------------------- criterion 1

void criterion1(Check& check) {
    auto t0 = Clock::now();
    auto p = convert_pure(parse_param(fixture_text("ex_surface.txt")));
    double s = seconds_since(t0);
    check(to_string(p.components) == "(cos(t1)^2*sin(t1), sin(t1)/(2*cosh(t2)*sinh(t2)), sin(t1)^3)",
          "printed pure form: " + to_string(p.components));
    check(p.components.size() == 3 && p.components[1].den() == parse_polynomial("2*sinh(t2)*cosh(t2)", p.reg),
          "denominator is not 2*sinh(t2)*cosh(t2)");
    check(p.components.size() == 3 && p.components[0] == parse_rational_function("cos(t1)^2*sin(t1)", p.reg) &&
              p.components[2] == parse_rational_function("sin(t1)^3", p.reg),
          "first/third components");
    check(p.scale == std::vector<Rational>{1, 2}, "reparametrization is not t2 -> 2*t2");
    check(s < 1, "runtime " + std::to_string(s) + " s");
}

// ----------------------------------------------------------------- criterion 2

void criterion2(Check& check) {
    auto t0 = Clock::now();
    auto g = trig_to_rational(convert_pure(parse_param(fixture_text("ex_surface.txt"))));
    double s1 = seconds_since(t0);
    check(g.components.size() == 3, "cubic surface: component count");
    if (g.components.size() == 3) {
        check(g.components[0] == parse_rational_function("4*t1^2*(t1^2-1)/(t1^2+1)^3", g.reg), "cubic surface: G1");
        check(g.components[1] == parse_rational_function("2*(t1^2-1)*t2^2/((t1^2+1)*(t2^4-1))", g.reg), "cubic surface: G2");
        check(g.components[2] == parse_rational_function("(t1^2-1)^3/(t1^2+1)^3", g.reg), "cubic surface: G3");
    }
    check(s1 < 5, "cubic surface runtime " + std::to_string(s1) + " s");

    t0 = Clock::now();
    auto e = trig_to_rational(convert_pure(epicycloid(5, 1)));
    double s2 = seconds_since(t0);
    const std::string g1 = "(3*t1^10-6*t1^9+15*t1^8+104*t1^7+30*t1^6-292*t1^5+30*t1^4+104*t1^3+15*t1^2-6*t1+3)";
    const std::string g2 =
        "(t1^12+12*t1^11-66*t1^10+60*t1^9+495*t1^8+120*t1^7-924*t1^6+120*t1^5+495*t1^4+60*t1^3-66*t1^2+12*t1+1)";
    check(e.components.size() == 3, "epicycloid: component count");
    if (e.components.size() == 3) {
        check(e.components[0] == parse_rational_function("4*(t1^2-1)*t2*" + g1 + "/((t2^2+1)*(t1^2+1)^6)", e.reg),
              "epicycloid: g1 in the first component");
        check(e.components[1] ==
                  parse_rational_function("2*(t1^2-1)*(t2^2-1)*" + g1 + "/((t2^2+1)*(t1^2+1)^6)", e.reg),
              "epicycloid: g1 in the second component");
        check(e.components[2] == parse_rational_function(g2 + "/(t1^2+1)^6", e.reg), "epicycloid: g2");
    }
    check(s2 < 5, "epicycloid runtime " + std::to_string(s2) + " s");
}

// ----------------------------------------------------------------- criterion 3

void criterion3(Check& check) {
    auto t0 = Clock::now();
    auto xi = to_rational_param(parse_param(fixture_text("circle_rational.txt")));
    auto circ = rational_to_trig(xi, parse_signature("(1,0,0)"));
    auto hyp = rational_to_trig(xi, parse_signature("(0,1,0)"));
    double s = seconds_since(t0);
    check(to_string(circ.components) == "(cos(t1), sin(t1))", "circular: " + to_string(circ.components));
    check(to_string(hyp.components) == "(1/cosh(t1), sinh(t1)/cosh(t1))", "hyperbolic: " + to_string(hyp.components));
    check(s < 1, "runtime " + std::to_string(s) + " s");
}

// ----------------------------------------------------------------- criterion 4

std::vector<Ideal> criterion4_bases;  // emitted bases, re-checked in criterion 7(d)

void criterion4(Check& check) {
    struct Case {
        const char* file;
        std::vector<const char*> expected;
    };
    std::vector<Case> cases = {
        {"ex_surface.txt", {"x1^3+3*x1^2*x3+3*x1*x3^2+x3^3-x3"}},
        {"surface4.txt", {"x1^2*x3^2-x1^2-x3^2", "x2^2*x4^2-x3^2*x4^2+x2^2"}},
        {"quartic.txt", {"x1^2*x2^2-x1^2+1"}},
        {"cone.txt", {"x1^2+x2^2-x3^2"}},
    };
    for (const auto& c : cases) {
        std::string name = c.file;
        auto pure = convert_pure(parse_param(fixture_text(c.file)));
        auto rat = trig_to_rational(pure);
        auto t0 = Clock::now();
        Ideal one = implicitize_rational(rat);
        double s1 = seconds_since(t0);
        t0 = Clock::now();
        Ideal two = implicitize_trig(pure);
        double s2 = seconds_since(t0);
        check(s1 < 30 && s2 < 30, name + ": runtime " + std::to_string(s1) + " / " + std::to_string(s2) + " s");
        for (const Ideal* I : {&one, &two}) {
            const char* opt = I == &one ? " option 1" : " option 2";
            check(I->generators.size() == c.expected.size(), name + opt + ": generator count");
            for (const char* e : c.expected) {
                auto want = parse_polynomial(e, I->reg);
                bool found = false;
                for (const auto& g : I->generators) found = found || proportional(g, want);
                check(found, name + opt + ": missing " + e);
            }
        }
        check(same_ideal(one, two), name + ": options disagree");
        criterion4_bases.push_back(one);
        criterion4_bases.push_back(two);
    }
}

// ----------------------------------------------------------------- criterion 5

void criterion5(Check& check) {
    auto amb = ambient_registry(3);
    struct Case {
        const char* what;
        HybridParam param;
        const char* file;
        unsigned degree;
    };
    std::vector<Case> cases{{"epicycloid", epicycloid(5, 1), "epicycloid_R5_r1.poly", 12},
                            {"hypocycloid", hypocycloid(7, 1), "hypocycloid_R7_r1.poly", 14}};
    for (const auto& c : cases) {
        auto poly = parse_polynomial(strip_comments(fixture_text(c.file)), amb);
        check(poly.total_degree() == c.degree, std::string(c.what) + ": degree");
        auto t0 = Clock::now();
        auto ok = verify_implicit(convert_pure(c.param), Ideal(amb, {poly}));
        double s = seconds_since(t0);
        check(ok.size() == 1 && ok[0], std::string(c.what) + ": polynomial does not vanish");
        check(s < 60, std::string(c.what) + ": runtime " + std::to_string(s) + " s");
        // Control: a perturbed polynomial must be rejected.
        auto bad = verify_implicit(convert_pure(c.param), Ideal(amb, {poly + MultiPoly::constant(amb, 1)}));
        check(bad.size() == 1 && !bad[0], std::string(c.what) + ": perturbed polynomial accepted");
    }
}

// ----------------------------------------------------------------- criterion 6

GroebnerBasis lex_intersection_basis;

void criterion6(Check& check) {
    auto t0 = Clock::now();
    auto pure = convert_pure(epicycloid(5, 1));
    auto G = trig_to_rational(pure);
    auto amb = ambient_registry(3);
    auto sphere = parse_polynomial("x1^2+x2^2+x3^2-36", amb);

    auto cond = intersect_condition(G, sphere);
    auto t1_part = split_content(cond, {1}).first.primitive_positive();
    auto expected = parse_polynomial(
        "t1^10-120*t1^9+5*t1^8+1440*t1^7+10*t1^6-3024*t1^5+10*t1^4+1440*t1^3+5*t1^2-120*t1+1", G.reg);
    check(t1_part == expected, "t1-factor: " + to_string(t1_part));

    auto roots = isolate_real_roots(t1_part, make_rational(1, 1LL << 40));
    const std::vector<double> expected_roots{-2.99249971668, -1.40081124439, -0.713872053785, -0.334168786859,
                                    0.00834320224036, 0.315720616213, 0.739367548040, 1.35250729174,
                                    3.16735730468, 119.858055839};
    check(roots.size() == expected_roots.size(), "root count " + std::to_string(roots.size()));
    for (std::size_t i = 0; i < std::min(roots.size(), expected_roots.size()); ++i)
        check(std::fabs(roots[i].approx - expected_roots[i]) < 1e-6, "root " + std::to_string(i));

    auto E = parse_polynomial(strip_comments(fixture_text("epicycloid_R5_r1.poly")), amb);
    lex_intersection_basis = buchberger(Ideal(amb, {E, sphere}), MonomialOrder::lex(3));
    const auto& b = lex_intersection_basis.basis;
    auto quintic = parse_polynomial("1492992*x3^5-67184640*x3^3+604661760*x3-576284939", amb);
    check(b.size() == 2, "lex basis size " + std::to_string(b.size()));
    bool has_sphere = false, has_quintic = false;
    for (const auto& g : b) {
        has_sphere = has_sphere || proportional(g, sphere);
        has_quintic = has_quintic || proportional(g, quintic);
    }
    check(has_sphere, "lex basis lacks the sphere");
    check(has_quintic, "lex basis lacks the quintic");

    auto trig = intersect_condition_trig(pure, sphere);
    check(proportional(trig, parse_polynomial("-192*cos(t1)^5+240*cos(t1)^3-60*cos(t1)+1", pure.reg)),
          "trig condition: " + to_string(trig));
    double s = seconds_since(t0);
    check(s < 120, "runtime " + std::to_string(s) + " s");
}

// ----------------------------------------------------------------- criterion 7

// (a) Chebyshev: exact recurrences, and exact values at the rational angles with
// cos = 3/5 and cos = 5/13 from powers of the Gaussian integers 3+4i and 5+12i.
void chebyshev_suite(Check& check) {
    const unsigned N = 32;
    auto reg = chebyshev_T(1).registry();
    auto x = MultiPoly::variable(reg, 0);
    std::vector<MultiPoly> T{MultiPoly::constant(reg, 1)}, U{MultiPoly::constant(reg, 1)};
    for (unsigned n = 1; n <= N; ++n) {
        T.push_back(chebyshev_T(n).transfer(reg));
        U.push_back(chebyshev_U(n).transfer(reg));
    }
    auto t_table = chebyshev_T_table(N, reg, 0), u_table = chebyshev_U_table(N, reg, 0);
    check(t_table == T && u_table == U, "tables disagree with single polynomials");
    check(T[1] == x, "T1");
    check(U[1] == x * Rational(2), "U1");
    for (unsigned n = 1; n < N; ++n) {
        check(T[n + 1] == x * T[n] * Rational(2) - T[n - 1], "T recurrence at " + std::to_string(n));
        check(U[n + 1] == x * U[n] * Rational(2) - U[n - 1], "U recurrence at " + std::to_string(n));
    }
    for (auto [a, b, h] : {std::tuple<long, long, long>{3, 4, 5}, {5, 12, 13}}) {
        Integer re = 1, im = 0, scale = 1;
        for (unsigned n = 0; n <= N; ++n) {
            // (a + b i)^n = re + im i; cos(n th) = re / h^n, sin(n th) = im / h^n.
            Rational c(a, h), s(b, h);
            Rational cn(re, scale), sn(im, scale);
            check(T[n].evaluate(std::vector<Rational>{c}) == cn, "T" + std::to_string(n) + " value");
            if (n >= 1) check(U[n - 1].evaluate(std::vector<Rational>{c}) * s == sn, "U" + std::to_string(n - 1) + " value");
            Integer nre = re * a - im * b, nim = re * b + im * a;
            re = nre;
            im = nim;
            scale *= h;
        }
    }
}

std::vector<Signature> signatures_up_to(unsigned m) {
    std::vector<Signature> out;
    for (unsigned t = 1; t <= m; ++t)
        for (unsigned a = 0; a <= t; ++a)
            for (unsigned b = 0; a + b <= t; ++b) out.push_back({a, b, t - a - b});
    return out;
}

// (b) L(M(t)) = t for every signature with m <= 4, evaluated at random points.
void torus_maps_suite(Check& check) {
    auto sigs = signatures_up_to(4);
    check(sigs.size() == 34, "signature count");
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (const auto& sig : sigs) {
        auto maps = build_torus_maps(sig);
        for (int k = 0; k < 20; ++k) {
            std::vector<double> t(sig.m());
            for (auto& v : t) {
                v = u(rng);
                if (std::fabs(v) < 0.1) v += 0.5;
            }
            std::vector<double> x;
            for (const auto& f : maps.M) x.push_back(evaluate_numeric(f, t));
            for (unsigned i = 0; i < sig.m(); ++i)
                check(close(evaluate_numeric(maps.L[i], x), t[i], 1e-9), "L(M(t)) at " + to_string(sig));
        }
    }
}

// Parameter values on the torus for a rational parameter u (the inverse of the M maps).
std::vector<double> angles_from_rational(const Signature& sig, const std::vector<double>& u) {
    std::vector<double> t(u.size());
    for (unsigned i = 0; i < sig.m(); ++i) {
        switch (sig.block(i)) {
            case Block::Circular: {
                double d = u[i] * u[i] + 1;
                t[i] = std::atan2((u[i] * u[i] - 1) / d, 2 * u[i] / d);
                break;
            }
            case Block::Hyperbolic: t[i] = std::log(u[i]); break;
            case Block::Monomial: t[i] = u[i]; break;
        }
    }
    return t;
}

// (c) 100-point image equality for each conversion of each corpus parametrization.
void image_suite(Check& check) {
    std::vector<std::pair<std::string, HybridParam>> corpus;
    for (const char* f : {"ex_surface.txt", "surface4.txt", "quartic.txt", "cone.txt", "plot_curve.txt",
                          "pure_circle.txt", "phases.txt", "circle_rational.txt"})
        corpus.emplace_back(f, parse_param(fixture_text(f)));
    corpus.emplace_back("epicycloid(5,1)", epicycloid(5, 1));
    corpus.emplace_back("hypocycloid(7,1)", hypocycloid(7, 1));
    corpus.emplace_back("epicycloid(5,2)", epicycloid(5, 2));
    const std::map<std::string, double> constants{{"a1", 0.7}, {"a2", 0.3}};

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> sym(-3, 3), pos(0.2, 3);
    auto agree = [](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::fabs(a[i]) > 1e6 || std::fabs(b[i]) > 1e6) continue;  // too close to a pole to compare
            if (!close(a[i], b[i], 1e-9)) return false;
        }
        return true;
    };
    // Runs f until 100 points evaluated without hitting a pole.
    auto hundred = [&](const std::string& what, const std::function<bool()>& f) {
        unsigned done = 0, tries = 0;
        while (done < 100 && tries < 1000) {
            ++tries;
            try {
                check(f(), what);
                ++done;
            } catch (const Error&) {
            }
        }
        check(done == 100, what + ": too many pole points");
    };

    for (const auto& [name, h] : corpus) {
        auto pure = convert_pure(h);
        const Signature sig = pure.sig;
        auto draw_t = [&] {
            std::vector<double> t(sig.m());
            for (auto& v : t) v = sym(rng);
            return t;
        };
        auto draw_u = [&] {
            std::vector<double> u(sig.m());
            for (unsigned i = 0; i < sig.m(); ++i) u[i] = sig.block(i) == Block::Hyperbolic ? pos(rng) : sym(rng);
            return u;
        };
        // Hybrid -> pure: the input at scale * t equals the pure form at t.
        hundred(name + ": pure form", [&] {
            auto t = draw_t();
            std::vector<double> st(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) st[i] = pure.scale[i].get_d() * t[i];
            return agree(evaluate(h, st, constants), pure.evaluate(t, constants));
        });
        // Pure -> rational: G(u) equals the pure form at the torus point of u.
        auto rat = trig_to_rational(pure);
        hundred(name + ": rational form", [&] {
            auto u = draw_u();
            return agree(rat.evaluate(u, constants), pure.evaluate(angles_from_rational(sig, u), constants));
        });
        // Rational -> trig, for rational inputs and every target signature.
        if (sig.m1 == 0 && sig.m2 == 0 && !pure.has_named_constants()) {
            auto r = to_rational_param(h);
            for (const auto& target : signatures_up_to(sig.m())) {
                if (target.m() != sig.m()) continue;
                auto trig = rational_to_trig(r, target);
                hundred(name + ": trig form " + to_string(target), [&] {
                    std::vector<double> t(target.m()), u(target.m());
                    for (unsigned i = 0; i < target.m(); ++i) {
                        t[i] = sym(rng);
                        switch (target.block(i)) {
                            case Block::Circular: u[i] = std::cos(t[i]) / (1 - std::sin(t[i])); break;
                            case Block::Hyperbolic: u[i] = std::exp(t[i]); break;
                            case Block::Monomial: u[i] = t[i]; break;
                        }
                    }
                    return agree(trig.evaluate(t), r.evaluate(u));
                });
            }
        }
    }
}

// (d) Exhaustive S-polynomial check for every basis emitted above.
void basis_suite(Check& check) {
    for (const auto& I : criterion4_bases)
        check(basis_checks(I, MonomialOrder::grevlex(I.reg->size())), "implicitization basis");
    for (const char* f : {"ex_surface.txt", "cone.txt"}) {
        auto I = implicitize_trig(convert_pure(parse_param(fixture_text(f))), {ElimOrder::Lex, default_pair_budget()});
        check(basis_checks(I, MonomialOrder::lex(I.reg->size())), std::string(f) + ": lex implicitization basis");
    }
    check(!lex_intersection_basis.basis.empty() && verify_groebner(lex_intersection_basis), "lex intersection basis");
}

// Fraction-free determinant; entries are polynomials.
std::optional<MultiPoly> bareiss_det(std::vector<std::vector<MultiPoly>> a, const RegistryPtr& reg) {
    const std::size_t n = a.size();
    MultiPoly prev = MultiPoly::constant(reg, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly(reg);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
                if (!q) return std::nullopt;
                a[i][j] = *q;
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Res_t(f, g) over (t, x, y) through the Sylvester matrix.
std::optional<MultiPoly> resultant_t(const MultiPoly& f, const MultiPoly& g) {
    const auto& reg = f.registry();
    auto fc = f.coefficients_in(0), gc = g.coefficients_in(0);
    std::size_t m = fc.size() - 1, n = gc.size() - 1, N = m + n;
    std::vector<std::vector<MultiPoly>> s(N, std::vector<MultiPoly>(N, MultiPoly(reg)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = fc[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = gc[n - k];
    return bareiss_det(s, reg);
}

// (e) Plane curves of degree <= 4: the implicit equation is the primitive resultant (or its
// root, for parametrizations that trace the curve several times).
void resultant_suite(Check& check) {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coef(-4, 4), deg(1, 4);
    auto preg = make_parameter_registry({"t"}, {});
    auto tri = make_registry(std::vector<std::string>{"t", "x", "y"}, VarKind::Ambient);
    auto amb = ambient_registry(2);
    auto rand_uni = [&](int d) {
        MultiPoly p(preg);
        for (int k = 0; k <= d; ++k) p += MultiPoly::variable(preg, 0, k) * Rational(coef(rng));
        return p;
    };
    unsigned checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        MultiPoly p1 = rand_uni(deg(rng)), q1 = rand_uni(deg(rng)), p2 = rand_uni(deg(rng)), q2 = rand_uni(deg(rng));
        if (p1.is_zero() || q1.is_zero() || p2.is_zero() || q2.is_zero()) continue;
        RationalParam P;
        P.params = {"t"};
        P.reg = preg;
        P.components = {RatFunc(p1, q1), RatFunc(p2, q2)};
        if (!P.components[0].uses(0) || !P.components[1].uses(0)) continue;
        unsigned d = 0;
        for (const auto& c : P.components) d = std::max({d, c.num().total_degree(), c.den().total_degree()});
        if (d > 4) continue;
        Ideal I = implicitize_rational(P);
        auto lift = [&](const MultiPoly& u) { return u.transfer(tri); };
        const auto& A = P.components[0];
        const auto& B = P.components[1];
        auto x = MultiPoly::variable(tri, 1), y = MultiPoly::variable(tri, 2);
        auto res = resultant_t(lift(A.den()) * x - lift(A.num()), lift(B.den()) * y - lift(B.num()));
        check(res && !res->is_zero(), "resultant computation");
        if (!res || res->is_zero()) continue;
        std::vector<MultiPoly::Term> ts;
        for (const auto& [m, c] : res->terms()) {
            Monomial mm;
            mm.set(0, m[1]);
            mm.set(1, m[2]);
            ts.emplace_back(mm, c);
        }
        MultiPoly oracle = MultiPoly::from_terms(amb, ts).primitive_positive();
        check(I.generators.size() == 1, "plane curve: one generator");
        if (I.generators.size() != 1) continue;
        MultiPoly acc = I.generators[0];
        bool matched = false;
        for (int k = 1; k <= 4 && !matched; ++k, acc = acc * I.generators[0]) matched = acc.primitive_positive() == oracle;
        check(matched, "plane curve: resultant mismatch for " + to_string(P.components));
        ++checked;
    }
    check(checked == 30, "only " + std::to_string(checked) + " plane curves checked");
}

// (f) Sturm counts equal sign changes on an exhaustive fine grid.
void sturm_suite(Check& check) {
    std::mt19937 rng(31337);
    auto reg = make_registry(std::vector<std::string>{"x"}, VarKind::Ambient);
    auto x = MultiPoly::variable(reg, 0);
    auto cst = [&](long v) { return MultiPoly::constant(reg, Rational(v)); };
    std::uniform_int_distribution<int> nroots(0, 10), lattice(-40, 40), coef(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        // Distinct rational roots on a 1/8 lattice, times root-free quadratics; degree <= 12.
        int k = nroots(rng);
        std::set<int> picks;
        while (static_cast<int>(picks.size()) < k) picks.insert(lattice(rng));
        MultiPoly p = cst(1);
        for (int v : picks) p = p * (x * Rational(8) - cst(v));
        for (int q = 0; q < (12 - k) / 2 && q < 1 + trial % 2; ++q) {
            int a = coef(rng);
            int b = a * a / 4 + 1 + std::abs(coef(rng));
            p = p * (x * x + x * Rational(a) + cst(b));
        }
        if (p.is_constant()) p = x * x + cst(1);
        auto roots = isolate_real_roots(p, make_rational(1, 1 << 16));
        unsigned changes = 0;
        const double lo = -6 - 1.0 / 512;
        double prev = p.evaluate(std::vector<double>{lo});
        for (int i = 1; i <= 12 * 256; ++i) {
            double v = p.evaluate(std::vector<double>{lo + i / 256.0});
            if ((v < 0) != (prev < 0)) ++changes;
            prev = v;
        }
        check(roots.size() == count_real_roots(p), "trial " + std::to_string(trial) + ": isolate vs count");
        check(changes == roots.size(), "trial " + std::to_string(trial) + ": grid scan disagrees");
    }
}

void criterion7(Check& check) {
    std::vector<std::pair<const char*, void (*)(Check&)>> suites{
        {"(a) Chebyshev", chebyshev_suite},     {"(b) torus maps", torus_maps_suite}, {"(c) images", image_suite},
        {"(d) bases", basis_suite},             {"(e) resultants", resultant_suite},  {"(f) Sturm", sturm_suite},
    };
    for (const auto& [name, suite] : suites) {
        Check sub;
        try {
            suite(sub);
        } catch (const std::exception& e) {
            sub.failures.push_back(std::string("exception: ") + e.what());
        }
        for (const auto& f : sub.failures) check(false, std::string(name) + ": " + f);
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        void (*body)(Check&);
    };
    const std::vector<Criterion> criteria{
        {1, "pure-form fidelity", criterion1},
        {2, "trig-to-rational fidelity", criterion2},
        {3, "rational-to-trig fidelity", criterion3},
        {4, "implicitization of the small cases by both options", criterion4},
        {5, "large-polynomial verification", criterion5},
        {6, "intersection workflow", criterion6},
        {7, "property suites", criterion7},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        auto t0 = Clock::now();
        try {
            c.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double s = seconds_since(t0);
        bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, s);
        std::size_t shown = 0;
        for (const auto& f : check.failures) {
            if (++shown > 10) {
                std::printf("    ... %zu more\n", check.failures.size() - 10);
                break;
            }
            std::printf("    %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

#include "trigvar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "trigvar/errors.hpp"
#include "trigvar/gcd.hpp"
#include "trigvar/print.hpp"

namespace trigvar {

// ---------------------------------------------------------------- generators

namespace {

std::string q(const Rational& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : "(" + to_fraction_string(v) + ")";
}

// v*e, dropping a unit coefficient.
std::string times(const Rational& v, const std::string& e) { return v == 1 ? e : q(v) + "*" + e; }

}  // namespace

HybridParam epicycloid(const Rational& R, const Rational& r) {
    if (R <= 0 || r <= 0) throw Error(ErrorKind::NonpositiveRadius, "epicycloid radii must be positive");
    if (r > R) throw Error(ErrorKind::RadiusOrderViolated, "epicycloid needs r <= R");
    Rational k = 1 + R / r, a = R + r;
    std::string sk = "sin(" + times(k, "t1") + ")", ck = "cos(" + times(k, "t1") + ")";
    std::string text = "signature (2,0,0) vars t1 t2\n(" +
                       times(a, "sin(t1)*cos(t2)") + "-" + times(r, sk + "*cos(t2)") + ", " +
                       times(a, "sin(t1)*sin(t2)") + "-" + times(r, sk + "*sin(t2)") + ", " +
                       times(a, "cos(t1)") + "-" + times(r, ck) + ")";
    return parse_param(text);
}

HybridParam hypocycloid(const Rational& R, const Rational& r) {
    if (R <= 0 || r <= 0) throw Error(ErrorKind::NonpositiveRadius, "hypocycloid radii must be positive");
    if (r >= R) throw Error(ErrorKind::RadiusOrderViolated, "hypocycloid needs r < R");
    Rational k = R / r, a = R - r;
    std::string sk = "sin(" + times(k, "t1") + ")", ck = "cos(" + times(k, "t1") + ")";
    std::string text = "signature (2,0,0) vars t1 t2\n(" +
                       times(a, "sin(t1)*cos(t2)") + "+" + times(r, sk + "*cos(t2)") + ", " +
                       times(a, "sin(t1)*sin(t2)") + "+" + times(r, sk + "*sin(t2)") + ", " +
                       times(a, "cos(t1)") + "-" + times(r, ck) + ")";
    return parse_param(text);
}

// ---------------------------------------------------------------- sampling

double PointCloud::max_residual() const {
    double m = 0;
    for (const auto& row : residuals)
        for (double v : row) m = std::max(m, v);
    return m;
}

double relative_residual(const MultiPoly& h, const std::vector<double>& x) {
    return std::fabs(h.evaluate(x)) / std::max(1.0, h.evaluate_magnitude(x));
}

namespace {

unsigned worker_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("TRIGVAR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

PointCloud sample(const Evaluator& f, const std::vector<ParamRange>& ranges, const Ideal* check, unsigned threads) {
    if (ranges.empty()) throw Error(ErrorKind::InvalidArgument, "sampling needs at least one parameter range");
    std::size_t total = 1;
    for (const auto& r : ranges) {
        if (r.count < 2) throw Error(ErrorKind::InvalidArgument, "each parameter needs at least 2 grid points");
        if (!(r.lo <= r.hi)) throw Error(ErrorKind::InvalidArgument, "empty parameter range");
        total *= r.count;
        if (total > 50'000'000) throw Error(ErrorKind::InvalidArgument, "sampling grid too large");
    }
    struct Slot {
        bool ok = false;
        std::vector<double> t, x, res;
    };
    std::vector<Slot> slots(total);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            Slot& s = slots[idx];
            s.t.resize(ranges.size());
            std::size_t rest = idx;
            for (std::size_t k = ranges.size(); k-- > 0;) {
                const auto& r = ranges[k];
                std::size_t j = rest % r.count;
                rest /= r.count;
                s.t[k] = j + 1 == r.count ? r.hi : r.lo + (r.hi - r.lo) * static_cast<double>(j) / (r.count - 1);
            }
            try {
                s.x = f(s.t);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::PoleAtPoint) throw;
                continue;
            }
            if (!std::all_of(s.x.begin(), s.x.end(), [](double v) { return std::isfinite(v); })) continue;
            if (check)
                for (const auto& h : check->generators) s.res.push_back(relative_residual(h, s.x));
            s.ok = true;
        }
    };
    unsigned nt = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(1, total / 256));
    if (nt <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nt);
        std::size_t chunk = (total + nt - 1) / nt;
        for (unsigned w = 0; w < nt; ++w) {
            pool.emplace_back([&, w] {
                try {
                    work(std::min(total, w * chunk), std::min(total, (w + 1) * chunk));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    PointCloud out;
    for (auto& s : slots) {
        if (!s.ok) {
            ++out.skipped;
            continue;
        }
        out.dim = static_cast<unsigned>(s.x.size());
        out.params.push_back(std::move(s.t));
        out.points.push_back(std::move(s.x));
        if (check) out.residuals.push_back(std::move(s.res));
    }
    return out;
}

PointCloud sample(const HybridParam& p, const std::vector<ParamRange>& ranges, const Ideal* check, unsigned threads) {
    if (p.has_named_constants()) throw Error(ErrorKind::NamedConstantUnsupported, "sampling needs numeric constants");
    if (ranges.size() != p.sig.m()) throw Error(ErrorKind::InvalidArgument, "one range per parameter is required");
    return sample([&](const std::vector<double>& t) { return evaluate(p, t); }, ranges, check, threads);
}

PointCloud sample(const PureParam& p, const std::vector<ParamRange>& ranges, const Ideal* check, unsigned threads) {
    if (p.has_named_constants()) throw Error(ErrorKind::NamedConstantUnsupported, "sampling needs numeric constants");
    if (ranges.size() != p.sig.m()) throw Error(ErrorKind::InvalidArgument, "one range per parameter is required");
    return sample([&](const std::vector<double>& t) { return p.evaluate(t); }, ranges, check, threads);
}

PointCloud sample(const RationalParam& p, const std::vector<ParamRange>& ranges, const Ideal* check, unsigned threads) {
    if (p.has_named_constants()) throw Error(ErrorKind::NamedConstantUnsupported, "sampling needs numeric constants");
    if (ranges.size() != p.m()) throw Error(ErrorKind::InvalidArgument, "one range per parameter is required");
    return sample([&](const std::vector<double>& t) { return p.evaluate(t); }, ranges, check, threads);
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_csv(const PointCloud& cloud) {
    std::ostringstream out;
    for (unsigned i = 1; i <= cloud.dim; ++i) out << (i > 1 ? "," : "") << "x" << i;
    std::size_t nres = cloud.residuals.empty() ? 0 : cloud.residuals.front().size();
    for (std::size_t k = 1; k <= nres; ++k) out << ",residual" << k;
    out << "\n";
    for (std::size_t p = 0; p < cloud.points.size(); ++p) {
        for (std::size_t i = 0; i < cloud.points[p].size(); ++i) out << (i ? "," : "") << fmt(cloud.points[p][i]);
        if (nres)
            for (double r : cloud.residuals[p]) out << "," << fmt(r);
        out << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const PointCloud& cloud) {
    nlohmann::json j;
    j["dimension"] = cloud.dim;
    j["points"] = cloud.points;
    j["parameters"] = cloud.params;
    if (!cloud.residuals.empty()) {
        j["residuals"] = cloud.residuals;
        j["max_residual"] = cloud.max_residual();
    }
    j["skipped"] = cloud.skipped;
    return j;
}

// ---------------------------------------------------------------- intersections

MultiPoly intersect_condition(const RationalParam& p, const MultiPoly& h) {
    if (h.registry()->size() != p.n())
        throw Error(ErrorKind::RegistryMismatch, "h must live in as many variables as the parametrization has components");
    std::map<std::string, RatFunc> bind;
    for (std::size_t i = 0; i < p.n(); ++i) bind.emplace(h.registry()->name(static_cast<VarIndex>(i)), p.components[i]);
    RatFunc c = substitute(RatFunc(h), bind, p.reg);
    return c.num().primitive_positive();
}

MultiPoly intersect_condition_trig(const PureParam& p, const MultiPoly& h) {
    if (p.has_named_constants())
        throw Error(ErrorKind::NamedConstantUnsupported, "the trigonometric condition needs rational coefficients");
    if (h.registry()->size() != p.n())
        throw Error(ErrorKind::RegistryMismatch, "h must live in as many variables as the parametrization has components");
    auto pairs = torus_pairs(p);
    MultiPoly n = torus_reduce(compose_numerator(h, p.components, torus_reducer(pairs)), pairs);
    return n.primitive_positive();
}

// ---------------------------------------------------------------- real roots

namespace {

// Dense univariate polynomial, index = degree.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_upoly(const MultiPoly& p, VarIndex v) {
    UPoly out(p.degree(v) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) out[m[v]] += c;
    trim(out);
    return out;
}

Rational eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quo[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        a.pop_back();
        trim(a);
    }
    trim(quo);
    return {quo, a};
}

UPoly monic(UPoly p) {
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Yun's squarefree factorization: p = c * prod a_i^i.
std::vector<UPoly> yun(const UPoly& p) {
    std::vector<UPoly> out;
    UPoly d = derivative(p);
    UPoly a0 = ugcd(p, d);
    UPoly b = divmod(p, a0).first;
    UPoly c = divmod(d, a0).first;
    UPoly dd = c;
    {
        UPoly db = derivative(b);
        dd.resize(std::max(c.size(), db.size()), Rational(0));
        for (std::size_t k = 0; k < db.size(); ++k) dd[k] -= db[k];
        trim(dd);
    }
    while (b.size() > 1) {
        UPoly a = ugcd(b, dd);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(dd, a).first;
        UPoly db = derivative(b);
        dd = c;
        dd.resize(std::max(c.size(), db.size()), Rational(0));
        for (std::size_t k = 0; k < db.size(); ++k) dd[k] -= db[k];
        trim(dd);
    }
    return out;
}

class Sturm {
public:
    explicit Sturm(const UPoly& p) {
        seq_.push_back(p);
        seq_.push_back(derivative(p));
        while (!seq_.back().empty() && seq_.back().size() > 1) {
            auto r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            // Positive rescaling keeps signs and tames coefficient growth.
            Rational s(0);
            for (const auto& c : r) s = std::max(s, Rational(abs(c)));
            for (auto& c : r) c /= s;
            seq_.push_back(r);
        }
        if (seq_.back().empty()) seq_.pop_back();
    }

    // Sign variations at x, zeros dropped.
    unsigned variations(const Rational& x) const {
        unsigned v = 0;
        int prev = 0;
        for (const auto& p : seq_) {
            int s = sgn(eval(p, x));
            if (s == 0) continue;
            if (prev && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    unsigned variations_at_infinity(bool positive) const {
        unsigned v = 0;
        int prev = 0;
        for (const auto& p : seq_) {
            int s = sgn(p.back());
            if (!positive && (p.size() - 1) % 2 == 1) s = -s;
            if (prev && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Distinct roots in (a, b].
    unsigned count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<UPoly> seq_;
};

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

std::size_t count_real_roots(const MultiPoly& p) {
    auto vars = p.variables();
    if (vars.size() > 1) throw Error(ErrorKind::InvalidArgument, "root isolation needs a univariate polynomial");
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no isolated roots");
    if (vars.empty()) return 0;
    UPoly u = to_upoly(p, vars[0]);
    UPoly sqf = divmod(u, ugcd(u, derivative(u))).first;
    if (sqf.size() < 2) return 0;
    Sturm st(sqf);
    return st.variations_at_infinity(false) - st.variations_at_infinity(true);
}

std::vector<IsolatedRoot> isolate_real_roots(const MultiPoly& p, const Rational& width) {
    if (width <= 0) throw Error(ErrorKind::InvalidArgument, "root width must be positive");
    auto vars = p.variables();
    if (vars.size() > 1) throw Error(ErrorKind::InvalidArgument, "root isolation needs a univariate polynomial");
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no isolated roots");
    if (vars.empty()) return {};
    UPoly u = to_upoly(p, vars[0]);
    UPoly sqf = monic(divmod(u, ugcd(u, derivative(u))).first);
    if (sqf.size() < 2) return {};
    auto factors = yun(u);
    std::vector<Sturm> factor_sturm;
    for (const auto& f : factors) factor_sturm.emplace_back(f.size() > 1 ? f : UPoly{Rational(1)});
    Sturm st(sqf);

    // Cauchy bound, strictly above every |root|.
    Rational bound(0);
    for (std::size_t k = 0; k + 1 < sqf.size(); ++k) bound = std::max(bound, Rational(abs(sqf[k] / sqf.back())));
    bound += 1;

    std::vector<IsolatedRoot> out;
    auto finish = [&](Rational lo, Rational hi, bool exact) {
        IsolatedRoot r;
        r.lo = lo;
        r.hi = hi;
        if (exact) {
            r.approx = to_double(lo);
        } else {
            Rational mid = (lo + hi) / 2;
            r.approx = to_double(mid);
        }
        r.multiplicity = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].size() < 2) continue;
            bool has = exact ? eval(factors[i], lo) == 0 : factor_sturm[i].count(lo, hi) == 1;
            if (has) {
                r.multiplicity = static_cast<unsigned>(i + 1);
                break;
            }
        }
        // Certificate: exact root, or a sign change across the interval.
        if (exact ? eval(sqf, lo) != 0 : sgn(eval(sqf, lo)) * sgn(eval(sqf, hi)) >= 0)
            throw Error(ErrorKind::InvalidArgument, "internal: root interval without a sign change");
        out.push_back(r);
    };

    // Work list of (lo, hi] with known root counts; lo and hi are never roots.
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        unsigned n = st.count(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            while (hi - lo > width) {
                Rational mid = (lo + hi) / 2;
                if (eval(sqf, mid) == 0) {
                    lo = hi = mid;
                    break;
                }
                if (st.count(lo, mid) == 1) hi = mid;
                else lo = mid;
            }
            finish(lo, hi, lo == hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        if (eval(sqf, mid) == 0) {
            // Exact root: shrink a guard interval around it until it holds only this root.
            Rational d = (hi - lo) / 4;
            while (st.count(mid - d, mid + d) != 1 || eval(sqf, mid - d) == 0 || eval(sqf, mid + d) == 0) d /= 2;
            finish(mid, mid, true);
            work.emplace_back(lo, mid - d);
            work.emplace_back(mid + d, hi);
        } else {
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    return out;
}

nlohmann::json to_json(const std::vector<IsolatedRoot>& roots) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : roots) {
        arr.push_back({{"lo", to_string(r.lo)},
                       {"hi", to_string(r.hi)},
                       {"approx", r.approx},
                       {"width", r.width().get_d()},
                       {"multiplicity", r.multiplicity}});
    }
    return arr;
}

}  // namespace trigvar

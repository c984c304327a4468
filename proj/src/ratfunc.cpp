#include "trigvar/ratfunc.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "trigvar/errors.hpp"
#include "trigvar/gcd.hpp"

namespace trigvar {

RatFunc::RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(p.registry(), 1)) {
    normalize_scalars();
}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den, Reduction mode) : num_(num), den_(den) {
    require_same_registry(num.registry(), den.registry());
    if (den_.is_zero())
        throw Error(ErrorKind::SubstitutionDenominatorVanishes, "denominator is identically zero");
    if (mode == Reduction::Full && !num_.is_zero() && !den_.is_constant() && !num_.is_constant()) {
        MultiPoly g = gcd_multivar(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_or_throw(num_, g);
            den_ = divide_or_throw(den_, g);
        }
    }
    normalize_scalars();
}

void RatFunc::normalize_scalars() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.registry(), 1);
        return;
    }
    Rational cn = num_.content(), cd = den_.content();
    Rational ratio = cn / cd;
    Rational sn = Rational(ratio.get_num()) / cn;
    Rational sd = Rational(ratio.get_den()) / cd;
    if (den_.leading_coefficient() < 0) {
        sn = -sn;
        sd = -sd;
    }
    if (sn != 1) num_ *= sn;
    if (sd != 1) den_ *= sd;
}

RatFunc RatFunc::constant(RegistryPtr reg, const Rational& c) {
    return RatFunc(MultiPoly::constant(std::move(reg), c));
}

RatFunc RatFunc::variable(RegistryPtr reg, VarIndex v) {
    return RatFunc(MultiPoly::variable(std::move(reg), v));
}

RatFunc RatFunc::operator-() const {
    return RatFunc(-num_, den_, Raw{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Reduction::ContentOnly);
    MultiPoly g = gcd_multivar(a.den_, b.den_);
    MultiPoly da = divide_or_throw(a.den_, g), db = divide_or_throw(b.den_, g);
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    require_same_registry(a.registry(), b.registry());
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    MultiPoly g1 = gcd_multivar(an, bd);
    if (!g1.is_constant()) {
        an = divide_or_throw(an, g1);
        bd = divide_or_throw(bd, g1);
    }
    MultiPoly g2 = gcd_multivar(bn, ad);
    if (!g2.is_constant()) {
        bn = divide_or_throw(bn, g2);
        ad = divide_or_throw(ad, g2);
    }
    RatFunc r(an * bn, ad * bd, RatFunc::Raw{});
    r.normalize_scalars();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::SubstitutionDenominatorVanishes, "division by an identically zero expression");
    RatFunc inv(b.den_, b.num_, RatFunc::Raw{});
    inv.normalize_scalars();
    return a * inv;
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) {
        if (is_zero()) throw Error(ErrorKind::SubstitutionDenominatorVanishes, "negative power of zero");
        RatFunc inv(den_, num_, Raw{});
        inv.normalize_scalars();
        return inv.pow(-k);
    }
    RatFunc r(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
    r.normalize_scalars();
    return r;
}

RatFunc RatFunc::transfer(const RegistryPtr& target) const {
    return RatFunc(num_.transfer(target), den_.transfer(target), Raw{});
}

bool is_pole(double num, double den) {
    return !(std::fabs(den) >= 1e-12 * (1.0 + std::fabs(num)));
}

double evaluate_numeric(const RatFunc& f, const std::vector<double>& point) {
    double n = f.num().evaluate(point), d = f.den().evaluate(point);
    if (is_pole(n, d)) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at the evaluation point");
    return n / d;
}

double evaluate_numeric(const RatFunc& f, const std::map<std::string, double>& point) {
    const auto& reg = *f.registry();
    std::vector<double> v(reg.size(), 0.0);
    for (VarIndex i = 0; i < reg.size(); ++i) {
        if (!f.uses(i)) continue;
        auto it = point.find(reg.name(i));
        if (it == point.end()) throw Error(ErrorKind::InvalidArgument, "no value bound for variable '" + reg.name(i) + "'");
        v[i] = it->second;
    }
    return evaluate_numeric(f, v);
}

namespace {

// Shared machinery for substitute and compose_numerator.
struct Composer {
    const std::vector<const RatFunc*>& comps;  // per source variable (nullptr = unused)
    const Reducer& reduce;
    RegistryPtr target;
    std::vector<int> group_of;                  // source var -> group index or -1
    std::vector<const MultiPoly*> group_den;
    std::vector<unsigned> group_deg;
    std::vector<std::vector<MultiPoly>> num_pows, den_pows;

    Composer(const std::vector<const RatFunc*>& c, const Reducer& r, RegistryPtr t)
        : comps(c), reduce(r), target(std::move(t)) {
        group_of.assign(comps.size(), -1);
        for (std::size_t v = 0; v < comps.size(); ++v) {
            if (!comps[v] || (comps[v]->den().is_constant() && comps[v]->den().constant_value() == 1)) continue;
            const MultiPoly& d = comps[v]->den();
            int g = -1;
            for (std::size_t k = 0; k < group_den.size(); ++k)
                if (*group_den[k] == d) g = static_cast<int>(k);
            if (g < 0) {
                g = static_cast<int>(group_den.size());
                group_den.push_back(&d);
            }
            group_of[v] = g;
        }
        group_deg.assign(group_den.size(), 0);
        num_pows.resize(comps.size());
        den_pows.resize(group_den.size());
    }

    void account(const MultiPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            std::vector<unsigned> d(group_den.size(), 0);
            for (std::size_t v = 0; v < comps.size(); ++v)
                if (group_of[v] >= 0) d[group_of[v]] += m[v];
            for (std::size_t g = 0; g < d.size(); ++g) group_deg[g] = std::max(group_deg[g], d[g]);
        }
    }

    const MultiPoly& power(std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned k) {
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
        while (cache.size() <= k) cache.push_back(reduce ? reduce(cache.back() * base) : cache.back() * base);
        return cache[k];
    }

    MultiPoly compose(const MultiPoly& p) {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& [m, c] : p.terms()) {
            MultiPoly prod = MultiPoly::constant(target, c);
            std::vector<unsigned> d(group_den.size(), 0);
            for (std::size_t v = 0; v < comps.size(); ++v) {
                if (!m[v]) continue;
                if (!comps[v]) throw Error(ErrorKind::RegistryMismatch, "unbound variable in composition");
                prod = prod * power(num_pows[v], comps[v]->num(), m[v]);
                if (group_of[v] >= 0) d[group_of[v]] += m[v];
            }
            for (std::size_t g = 0; g < d.size(); ++g)
                if (group_deg[g] > d[g]) prod = prod * power(den_pows[g], *group_den[g], group_deg[g] - d[g]);
            if (reduce) prod = reduce(prod);
            for (const auto& [pm, pc] : prod.terms()) {
                auto [it, inserted] = acc.try_emplace(pm, pc);
                if (!inserted) it->second += pc;
            }
        }
        std::vector<MultiPoly::Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) terms.emplace_back(m, std::move(c));
        MultiPoly out = MultiPoly::from_terms(target, std::move(terms));
        return reduce ? reduce(out) : out;
    }
};

}  // namespace

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings, const RegistryPtr& target,
                   Reduction mode) {
    const auto& src = *f.registry();
    std::vector<RatFunc> owned;
    owned.reserve(src.size());
    std::vector<const RatFunc*> comps(src.size(), nullptr);
    std::vector<std::size_t> owned_index(src.size(), static_cast<std::size_t>(-1));
    for (VarIndex v = 0; v < src.size(); ++v) {
        if (!f.uses(v)) continue;
        auto it = bindings.find(src.name(v));
        if (it != bindings.end()) {
            require_same_registry(it->second.registry(), target);
            comps[v] = &it->second;
        } else {
            auto t = target->find(src.name(v));
            if (!t) throw Error(ErrorKind::RegistryMismatch, "unbound variable '" + src.name(v) + "' is missing in the target registry");
            owned.push_back(RatFunc::variable(target, *t));
            owned_index[v] = owned.size() - 1;
        }
    }
    for (VarIndex v = 0; v < src.size(); ++v)
        if (owned_index[v] != static_cast<std::size_t>(-1)) comps[v] = &owned[owned_index[v]];
    Reducer none;
    Composer c(comps, none, target);
    c.account(f.num());
    c.account(f.den());
    MultiPoly n = c.compose(f.num());
    MultiPoly d = c.compose(f.den());
    if (d.is_zero())
        throw Error(ErrorKind::SubstitutionDenominatorVanishes, "composed denominator is identically zero");
    return RatFunc(n, d, mode);
}

MultiPoly compose_numerator(const MultiPoly& h, const std::vector<RatFunc>& comps, const Reducer& reduce) {
    if (comps.empty()) throw Error(ErrorKind::InvalidArgument, "composition needs at least one component");
    RegistryPtr target = comps.front().registry();
    std::vector<const RatFunc*> ptrs(h.registry()->size(), nullptr);
    for (std::size_t i = 0; i < comps.size() && i < ptrs.size(); ++i) {
        require_same_registry(comps[i].registry(), target);
        ptrs[i] = &comps[i];
    }
    Composer c(ptrs, reduce, target);
    c.account(h);
    return c.compose(h);
}

MultiPoly lcm_denominators(const std::vector<RatFunc>& fs) {
    if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "lcm of an empty list");
    MultiPoly l = MultiPoly::constant(fs.front().registry(), 1);
    for (const auto& f : fs) l = lcm_multivar(l, f.den());
    return l.primitive_positive();
}

std::pair<MultiPoly, MultiPoly> split_content(const MultiPoly& p, const std::vector<VarIndex>& block) {
    const RegistryPtr& reg = p.registry();
    if (p.is_zero()) return {MultiPoly(reg), MultiPoly::constant(reg, 1)};
    std::vector<std::pair<Monomial, std::vector<MultiPoly::Term>>> groups;
    for (const auto& [m, c] : p.terms()) {
        Monomial key, rest = m;
        for (VarIndex v : block) {
            key.set(v, m[v]);
            rest.set(v, 0);
        }
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {}});
            it = groups.end() - 1;
        }
        it->second.emplace_back(rest, c);
    }
    std::vector<MultiPoly> coeffs;
    for (auto& g : groups) coeffs.push_back(MultiPoly::from_terms(reg, std::move(g.second)));
    std::sort(coeffs.begin(), coeffs.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.size() < b.size(); });
    MultiPoly content(reg);
    for (const auto& c : coeffs) {
        content = gcd_multivar(content, c);
        if (content.is_constant()) break;
    }
    return {content, divide_or_throw(p, content)};
}

}  // namespace trigvar

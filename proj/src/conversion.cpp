#include "trigvar/conversion.hpp"

#include <functional>

#include "trigvar/errors.hpp"

namespace trigvar {

RegistryPtr make_parameter_registry(const std::vector<std::string>& params, const std::vector<ConstSymbol>& consts) {
    std::vector<VarSpec> vars;
    for (const auto& p : params) vars.push_back({p, VarKind::Parameter});
    for (const auto& c : consts) vars.push_back({c.name(), VarKind::NamedConstant});
    return make_registry(std::move(vars));
}

std::vector<double> RationalParam::evaluate(const std::vector<double>& t, const std::map<std::string, double>& constants) const {
    if (t.size() != m()) throw Error(ErrorKind::InvalidArgument, "parameter point has the wrong dimension");
    std::vector<double> pt(reg->size(), 0.0);
    for (unsigned i = 0; i < m(); ++i) pt[i] = t[i];
    for (std::size_t k = 0; k < consts.size(); ++k) {
        auto it = constants.find(consts[k].constant);
        if (it == constants.end())
            throw Error(ErrorKind::InvalidArgument, "no numeric value for named constant '" + consts[k].constant + "'");
        pt[m() + k] = consts[k].value(it->second);
    }
    std::vector<double> out;
    for (const auto& c : components) out.push_back(evaluate_numeric(c, pt));
    return out;
}

RationalParam to_rational_param(const HybridParam& h) {
    if (h.sig.m1 || h.sig.m2)
        throw Error(ErrorKind::InvalidSignature, "a rational parametrization needs signature (0,0,m), got " + to_string(h.sig));
    PureParam p = convert_pure(h);
    RationalParam r;
    r.params = p.params;
    r.consts = p.consts;
    r.reg = p.reg;
    r.components = p.components;
    return r;
}

std::vector<TorusPair> torus_pairs(const Signature& sig) {
    std::vector<TorusPair> out;
    for (unsigned i = 0; i < sig.m1 + sig.m2; ++i) out.push_back({2 * i, 2 * i + 1, sig.block(i) == Block::Circular});
    return out;
}

std::vector<TorusPair> torus_pairs(const PureParam& p) {
    std::vector<TorusPair> out;
    for (unsigned i = 0; i < p.sig.m1 + p.sig.m2; ++i)
        out.push_back({p.first_index(i), p.second_index(i), p.sig.block(i) == Block::Circular});
    return out;
}

MultiPoly torus_reduce(const MultiPoly& p, const std::vector<TorusPair>& pairs) {
    MultiPoly r = p;
    const auto& reg = p.registry();
    for (const auto& tp : pairs) {
        if (r.degree(tp.y) < 2) continue;
        MultiPoly x2 = MultiPoly::variable(reg, tp.x, 2), one = MultiPoly::constant(reg, 1);
        MultiPoly sq = tp.circular ? one - x2 : x2 - one;
        // r = sum_k c_k y^k = E(sq) + y * O(sq), with E, O evaluated by Horner.
        auto c = r.coefficients_in(tp.y);
        MultiPoly even(reg), odd(reg);
        for (std::size_t k = c.size(); k-- > 0;) {
            if (k % 2 == 0) even = even * sq + c[k];
            else odd = odd * sq + c[k];
        }
        r = even + MultiPoly::variable(reg, tp.y) * odd;
    }
    return r;
}

Reducer torus_reducer(const std::vector<TorusPair>& pairs) {
    return [pairs](const MultiPoly& p) { return torus_reduce(p, pairs); };
}

TorusMaps build_torus_maps(const Signature& sig, const std::vector<std::string>& names) {
    std::vector<std::string> params = names;
    if (params.empty())
        for (unsigned i = 1; i <= sig.m(); ++i) params.push_back("t" + std::to_string(i));
    if (params.size() != sig.m()) throw Error(ErrorKind::InvalidSignature, "parameter count does not match the signature");
    TorusMaps tm;
    tm.sig = sig;
    tm.t_reg = make_parameter_registry(params, {});
    unsigned nx = 2 * (sig.m1 + sig.m2) + sig.m3;
    std::vector<std::string> xs;
    for (unsigned i = 1; i <= nx; ++i) xs.push_back("x" + std::to_string(i));
    tm.x_reg = make_registry(xs, VarKind::TorusCoordinate);

    auto one_t = MultiPoly::constant(tm.t_reg, 1);
    auto one_x = MultiPoly::constant(tm.x_reg, 1);
    for (unsigned i = 0; i < sig.m(); ++i) {
        auto t = MultiPoly::variable(tm.t_reg, i);
        auto tt = t * t;
        switch (sig.block(i)) {
            case Block::Circular: {
                tm.M.emplace_back(t * Rational(2), tt + one_t);
                tm.M.emplace_back(tt - one_t, tt + one_t);
                unsigned k = static_cast<unsigned>(tm.M.size());
                tm.L.emplace_back(MultiPoly::variable(tm.x_reg, k - 2), one_x - MultiPoly::variable(tm.x_reg, k - 1));
                tm.psi.push_back(params[i] + " -> (cos(" + params[i] + "), sin(" + params[i] + "))");
                auto a = MultiPoly::variable(tm.x_reg, k - 2), b = MultiPoly::variable(tm.x_reg, k - 1);
                tm.equations.push_back(a * a + b * b - one_x);
                break;
            }
            case Block::Hyperbolic: {
                tm.M.emplace_back(tt + one_t, t * Rational(2));
                tm.M.emplace_back(tt - one_t, t * Rational(2));
                unsigned k = static_cast<unsigned>(tm.M.size());
                auto a = MultiPoly::variable(tm.x_reg, k - 2), b = MultiPoly::variable(tm.x_reg, k - 1);
                tm.L.emplace_back(one_x, a - b);
                tm.psi.push_back(params[i] + " -> (cosh(" + params[i] + "), sinh(" + params[i] + "))");
                tm.equations.push_back(a * a - b * b - one_x);
                break;
            }
            case Block::Monomial: {
                tm.M.emplace_back(t);
                tm.L.emplace_back(MultiPoly::variable(tm.x_reg, tm.M.size() - 1));
                tm.psi.push_back(params[i] + " -> " + params[i]);
                break;
            }
        }
    }

    std::map<std::string, RatFunc> bind;
    for (std::size_t k = 0; k < tm.M.size(); ++k) bind.emplace(xs[k], tm.M[k]);
    for (unsigned i = 0; i < sig.m(); ++i)
        if (substitute(tm.L[i], bind, tm.t_reg) != RatFunc::variable(tm.t_reg, i))
            throw Error(ErrorKind::InvalidArgument, "internal: L(M(t)) is not the identity");
    for (const auto& eq : tm.equations)
        if (!substitute(RatFunc(eq), bind, tm.t_reg).is_zero())
            throw Error(ErrorKind::InvalidArgument, "internal: M does not land on the torus");
    return tm;
}

RationalParam trig_to_rational(const PureParam& p) {
    RationalParam r;
    r.params = p.params;
    r.consts = p.consts;
    r.reg = make_parameter_registry(p.params, p.consts);
    auto one = MultiPoly::constant(r.reg, 1);
    std::map<std::string, RatFunc> bind;
    for (unsigned i = 0; i < p.sig.m1 + p.sig.m2; ++i) {
        auto t = MultiPoly::variable(r.reg, i);
        auto tt = t * t;
        if (p.sig.block(i) == Block::Circular) {
            bind.emplace(p.reg->name(p.first_index(i)), RatFunc(t * Rational(2), tt + one));
            bind.emplace(p.reg->name(p.second_index(i)), RatFunc(tt - one, tt + one));
        } else {
            bind.emplace(p.reg->name(p.first_index(i)), RatFunc(tt + one, t * Rational(2)));
            bind.emplace(p.reg->name(p.second_index(i)), RatFunc(tt - one, t * Rational(2)));
        }
    }
    for (const auto& c : p.components) r.components.push_back(substitute(c, bind, r.reg));
    return r;
}

namespace {

RatFunc torus_canonical(const RatFunc& f, const std::vector<TorusPair>& pairs) {
    MultiPoly n = torus_reduce(f.num(), pairs);
    MultiPoly d = torus_reduce(f.den(), pairs);
    if (d.is_zero()) throw Error(ErrorKind::IdenticallyUndefined, "denominator vanishes identically on the torus");
    for (const auto& tp : pairs) {
        if (!d.uses(tp.y)) continue;
        auto cf = d.coefficients_in(tp.y);  // d = a + b*y
        MultiPoly conj = cf[0] - cf[1] * MultiPoly::variable(d.registry(), tp.y);
        n = torus_reduce(n * conj, pairs);
        d = torus_reduce(d * conj, pairs);
        if (d.is_zero()) throw Error(ErrorKind::IdenticallyUndefined, "denominator vanishes identically on the torus");
    }
    if (n.is_zero()) return RatFunc(n);
    return RatFunc(n, d);
}

}  // namespace

PureParam rational_to_trig(const RationalParam& p, const Signature& target) {
    if (target.m() != p.m())
        throw Error(ErrorKind::InvalidSignature, "target signature " + to_string(target) + " does not have " +
                                                     std::to_string(p.m()) + " parameters");
    PureParam out;
    out.sig = target;
    out.params = p.params;
    out.consts = p.consts;
    out.reg = make_pure_registry(target, p.params, p.consts);
    out.scale.assign(target.m(), Rational(1));
    auto one = MultiPoly::constant(out.reg, 1);
    std::map<std::string, RatFunc> bind;
    for (unsigned i = 0; i < target.m1 + target.m2; ++i) {
        auto x = MultiPoly::variable(out.reg, out.first_index(i));
        auto y = MultiPoly::variable(out.reg, out.second_index(i));
        if (target.block(i) == Block::Circular) bind.emplace(p.params[i], RatFunc(x, one - y));
        else bind.emplace(p.params[i], RatFunc(x + y));
    }
    auto pairs = torus_pairs(target);
    for (const auto& c : p.components) {
        RatFunc q;
        try {
            q = substitute(c, bind, out.reg);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SubstitutionDenominatorVanishes)
                throw Error(ErrorKind::IdenticallyUndefined, e.what());
            throw;
        }
        out.components.push_back(torus_canonical(q, pairs));
    }
    return out;
}

}  // namespace trigvar

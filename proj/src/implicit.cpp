#include "trigvar/implicit.hpp"

#include <numeric>

namespace trigvar {

RegistryPtr ambient_registry(unsigned n) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_registry(names, VarKind::Ambient);
}

namespace {

// Registry W, middle..., x1..xn and the elimination of {W, middle}.
struct Elimination {
    RegistryPtr reg;
    std::vector<VarIndex> middle;
    std::vector<VarIndex> xs;
    VarIndex w = 0;
};

Elimination make_elimination(const std::vector<std::string>& middle, VarKind middle_kind, unsigned n) {
    if (1 + middle.size() + n > kMaxVars)
        throw Error(ErrorKind::InvalidArgument, "too many variables for elimination (limit " + std::to_string(kMaxVars) + ")");
    std::vector<VarSpec> vars{{"W", VarKind::Rabinowitsch}};
    for (const auto& m : middle) vars.push_back({m, middle_kind});
    for (unsigned i = 1; i <= n; ++i) vars.push_back({"x" + std::to_string(i), VarKind::Ambient});
    for (const auto& m : middle)
        if (m == "W" || (m.size() > 1 && m[0] == 'x' && m.find_first_not_of("0123456789", 1) == std::string::npos))
            throw Error(ErrorKind::RegistryMismatch, "parameter name '" + m + "' collides with an elimination variable");
    Elimination e;
    e.reg = make_registry(std::move(vars));
    for (VarIndex k = 0; k < middle.size(); ++k) e.middle.push_back(1 + k);
    for (VarIndex k = 0; k < n; ++k) e.xs.push_back(static_cast<VarIndex>(1 + middle.size() + k));
    return e;
}

Ideal run_elimination(const Elimination& e, std::vector<MultiPoly> gens, unsigned n, const ImplicitOptions& opt) {
    std::vector<VarIndex> front{e.w};
    front.insert(front.end(), e.middle.begin(), e.middle.end());
    MonomialOrder order = opt.order == ElimOrder::Lex ? MonomialOrder::lex(e.reg->size())
                                                      : MonomialOrder::blocks({{e.w}, e.middle, e.xs});
    Ideal big(e.reg, std::move(gens));
    Ideal elim = eliminate(big, front, order, opt.budget);
    auto amb = ambient_registry(n);
    std::vector<MultiPoly> out;
    for (const auto& g : elim.generators) out.push_back(g.transfer(amb).primitive_positive());
    return Ideal(amb, std::move(out));
}

std::vector<MultiPoly> graph_generators(const std::vector<RatFunc>& comps, const Elimination& e, VarIndex offset) {
    // comps live over a registry whose variable k maps to e.reg variable offset + k.
    std::vector<MultiPoly> gens;
    const auto& src = comps.front().registry();
    auto move_in = [&](const MultiPoly& p) {
        std::vector<MultiPoly::Term> ts;
        for (const auto& [m, c] : p.terms()) {
            Monomial mm;
            for (VarIndex k = 0; k < src->size(); ++k) mm.set(offset + k, m[k]);
            ts.emplace_back(mm, c);
        }
        return MultiPoly::from_terms(e.reg, std::move(ts));
    };
    for (std::size_t i = 0; i < comps.size(); ++i)
        gens.push_back(move_in(comps[i].den()) * MultiPoly::variable(e.reg, e.xs[i]) - move_in(comps[i].num()));
    MultiPoly l = lcm_denominators(comps);
    if (!l.is_constant()) gens.push_back(MultiPoly::variable(e.reg, e.w) * move_in(l) - MultiPoly::constant(e.reg, 1));
    return gens;
}

// The last generator is W*l - 1. When 1 is in J + <l> (no point of V(J) has a vanishing
// denominator), J : l^inf = J and the Rabinowitsch generator only slows the elimination.
void drop_redundant_rabinowitsch(const Elimination& e, std::vector<MultiPoly>& gens, std::size_t budget) {
    const auto& last = gens.back();
    if (!last.uses(e.w)) return;
    std::vector<MultiPoly> probe(gens.begin(), gens.end() - 1);
    MultiPoly l(e.reg);
    for (const auto& [m, c] : last.terms())
        if (m[e.w] == 1) {
            Monomial mm = m;
            mm.set(e.w, 0);
            l += MultiPoly::monomial(e.reg, mm, c);
        }
    probe.push_back(l);
    try {
        auto g = buchberger(Ideal(e.reg, std::move(probe)), MonomialOrder::grevlex(e.reg->size()), std::min<std::size_t>(budget, 500));
        if (g.basis.size() == 1 && g.basis[0].is_constant()) gens.pop_back();
    } catch (const BudgetExceeded&) {
    }
}

}  // namespace

Ideal implicitize_rational(const RationalParam& p, const ImplicitOptions& opt) {
    if (p.has_named_constants())
        throw Error(ErrorKind::NamedConstantUnsupported, "implicitization needs rational coefficients; named constants present");
    if (p.components.empty()) throw Error(ErrorKind::InvalidArgument, "empty parametrization");
    auto e = make_elimination(p.params, VarKind::Parameter, p.n());
    auto gens = graph_generators(p.components, e, 1);
    drop_redundant_rabinowitsch(e, gens, opt.budget);
    return run_elimination(e, std::move(gens), p.n(), opt);
}

Ideal implicitize_trig(const PureParam& p, const ImplicitOptions& opt) {
    if (p.has_named_constants())
        throw Error(ErrorKind::NamedConstantUnsupported, "implicitization needs rational coefficients; named constants present");
    if (p.components.empty()) throw Error(ErrorKind::InvalidArgument, "empty parametrization");
    auto treg = torus_registry(p.sig);
    std::vector<std::string> ys;
    for (VarIndex k = 0; k < treg->size(); ++k) ys.push_back(treg->name(k));
    auto e = make_elimination(ys, VarKind::TorusCoordinate, p.n());
    auto gens = graph_generators(p.components, e, 1);
    auto torus = torus_ideal(p.sig, e.reg, e.middle);
    gens.insert(gens.end(), torus.generators.begin(), torus.generators.end());
    return run_elimination(e, std::move(gens), p.n(), opt);
}

namespace {

std::vector<bool> verify_with(const std::vector<RatFunc>& comps, const Ideal& candidates, const Reducer& reduce) {
    if (candidates.reg && candidates.reg->size() != comps.size())
        throw Error(ErrorKind::RegistryMismatch, "candidate polynomials live in " + std::to_string(candidates.reg->size()) +
                                                     " variables, the parametrization has " +
                                                     std::to_string(comps.size()) + " components");
    std::vector<bool> out;
    for (const auto& h : candidates.generators) {
        MultiPoly n = compose_numerator(h, comps, reduce);
        if (reduce) n = reduce(n);
        out.push_back(n.is_zero());
    }
    return out;
}

}  // namespace

std::vector<bool> verify_implicit(const RationalParam& p, const Ideal& candidates) {
    return verify_with(p.components, candidates, nullptr);
}

std::vector<bool> verify_implicit(const PureParam& p, const Ideal& candidates) {
    return verify_with(p.components, candidates, torus_reducer(torus_pairs(p)));
}

bool same_ideal(const Ideal& a, const Ideal& b, std::size_t budget) {
    if (!same_registry(a.reg, b.reg)) throw Error(ErrorKind::RegistryMismatch, "ideals over different registries");
    auto order = MonomialOrder::grevlex(a.reg->size());
    auto ga = buchberger(a, order, budget);
    auto gb = buchberger(b, order, budget);
    for (const auto& g : b.generators)
        if (!ideal_contains(ga, g)) return false;
    for (const auto& g : a.generators)
        if (!ideal_contains(gb, g)) return false;
    return true;
}

}  // namespace trigvar

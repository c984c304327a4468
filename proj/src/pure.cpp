#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "trigvar/errors.hpp"
#include "trigvar/trig_model.hpp"

namespace trigvar {

std::vector<MultiPoly> chebyshev_T_table(unsigned n_max, const RegistryPtr& reg, VarIndex x) {
    std::vector<MultiPoly> t{MultiPoly::constant(reg, 1), MultiPoly::variable(reg, x)};
    MultiPoly two_x = MultiPoly::variable(reg, x) * Rational(2);
    while (t.size() <= n_max) t.push_back(two_x * t[t.size() - 1] - t[t.size() - 2]);
    t.resize(n_max + 1);
    return t;
}

std::vector<MultiPoly> chebyshev_U_table(unsigned n_max, const RegistryPtr& reg, VarIndex x) {
    MultiPoly two_x = MultiPoly::variable(reg, x) * Rational(2);
    std::vector<MultiPoly> u{MultiPoly::constant(reg, 1), two_x};
    while (u.size() <= n_max) u.push_back(two_x * u[u.size() - 1] - u[u.size() - 2]);
    u.resize(n_max + 1);
    return u;
}

MultiPoly chebyshev_T(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "chebyshev_T needs n >= 1");
    auto reg = make_registry({"x"}, VarKind::Ambient);
    return chebyshev_T_table(n, reg, 0)[n];
}

MultiPoly chebyshev_U(unsigned n) {
    auto reg = make_registry({"x"}, VarKind::Ambient);
    return chebyshev_U_table(n, reg, 0)[n];
}

std::string ConstSymbol::name() const {
    switch (form) {
        case Form::Plain: return constant;
        case Form::Cos: return "cos(" + constant + ")";
        case Form::Sin: return "sin(" + constant + ")";
        case Form::Cosh: return "cosh(" + constant + ")";
        case Form::Sinh: return "sinh(" + constant + ")";
    }
    return constant;
}

double ConstSymbol::value(double a) const {
    switch (form) {
        case Form::Plain: return a;
        case Form::Cos: return std::cos(a);
        case Form::Sin: return std::sin(a);
        case Form::Cosh: return std::cosh(a);
        case Form::Sinh: return std::sinh(a);
    }
    return a;
}

RegistryPtr make_pure_registry(const Signature& sig, const std::vector<std::string>& params,
                               const std::vector<ConstSymbol>& consts) {
    std::vector<VarSpec> vars;
    for (unsigned i = 0; i < sig.m(); ++i) {
        switch (sig.block(i)) {
            case Block::Circular:
                vars.push_back({"cos(" + params[i] + ")", VarKind::TorusCoordinate});
                vars.push_back({"sin(" + params[i] + ")", VarKind::TorusCoordinate});
                break;
            case Block::Hyperbolic:
                vars.push_back({"cosh(" + params[i] + ")", VarKind::TorusCoordinate});
                vars.push_back({"sinh(" + params[i] + ")", VarKind::TorusCoordinate});
                break;
            case Block::Monomial: vars.push_back({params[i], VarKind::Parameter}); break;
        }
    }
    for (const auto& c : consts) vars.push_back({c.name(), VarKind::NamedConstant});
    return make_registry(std::move(vars));
}

VarIndex PureParam::first_index(unsigned i) const {
    if (i < sig.m1 + sig.m2) return 2 * i;
    return 2 * (sig.m1 + sig.m2) + (i - sig.m1 - sig.m2);
}

VarIndex PureParam::second_index(unsigned i) const {
    if (i >= sig.m1 + sig.m2) throw Error(ErrorKind::InvalidArgument, "monomial parameters have a single slot");
    return 2 * i + 1;
}

std::vector<double> PureParam::registry_point(const std::vector<double>& t,
                                              const std::map<std::string, double>& constants) const {
    if (t.size() != sig.m()) throw Error(ErrorKind::InvalidArgument, "parameter point has the wrong dimension");
    std::vector<double> v(reg->size(), 0.0);
    for (unsigned i = 0; i < sig.m(); ++i) {
        switch (sig.block(i)) {
            case Block::Circular:
                v[first_index(i)] = std::cos(t[i]);
                v[second_index(i)] = std::sin(t[i]);
                break;
            case Block::Hyperbolic:
                v[first_index(i)] = std::cosh(t[i]);
                v[second_index(i)] = std::sinh(t[i]);
                break;
            case Block::Monomial: v[first_index(i)] = t[i]; break;
        }
    }
    VarIndex base = 2 * (sig.m1 + sig.m2) + sig.m3;
    for (std::size_t k = 0; k < consts.size(); ++k) {
        auto it = constants.find(consts[k].constant);
        if (it == constants.end())
            throw Error(ErrorKind::InvalidArgument, "no numeric value for named constant '" + consts[k].constant + "'");
        v[base + k] = consts[k].value(it->second);
    }
    return v;
}

std::vector<double> PureParam::evaluate(const std::vector<double>& t, const std::map<std::string, double>& constants) const {
    auto pt = registry_point(t, constants);
    std::vector<double> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(evaluate_numeric(c, pt));
    return out;
}

namespace {

void collect_consts(const ExprPtr& e, std::map<std::string, std::set<ConstSymbol::Form>>& used) {
    using F = ConstSymbol::Form;
    switch (e->op) {
        case Expr::Op::NamedConst: used[e->name].insert(F::Plain); break;
        case Expr::Op::ConstFunc:
            used[e->name].insert(e->func == TrigFunc::Cos ? F::Cos
                                 : e->func == TrigFunc::Sin ? F::Sin
                                 : e->func == TrigFunc::Cosh ? F::Cosh
                                                             : F::Sinh);
            break;
        case Expr::Op::Trig:
            if (e->arg.phase.kind == Phase::Kind::Named) {
                auto& s = used[e->arg.phase.name];
                if (is_circular(e->func)) {
                    s.insert(F::Cos);
                    s.insert(F::Sin);
                } else {
                    s.insert(F::Cosh);
                    s.insert(F::Sinh);
                }
            }
            break;
        default: break;
    }
    for (const auto& k : e->kids) collect_consts(k, used);
}

Integer alpha_denominator_lcm(const HybridParam& p, Block block) {
    Integer l = 1;
    std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& e) {
        if (e->op == Expr::Op::Trig && p.sig.block(e->arg.var) == block) l = lcm(l, e->arg.alpha.get_den());
        for (const auto& k : e->kids) walk(k);
    };
    for (const auto& c : p.components) walk(c);
    return l;
}

class Flattener {
public:
    Flattener(const HybridParam& p, RegistryPtr reg, const std::vector<ConstSymbol>& consts, const Integer& l1,
              const Integer& l2)
        : p_(p), reg_(std::move(reg)), consts_(consts), l1_(l1), l2_(l2) {}

    RatFunc operator()(const ExprPtr& e) {
        switch (e->op) {
            case Expr::Op::Const: return RatFunc::constant(reg_, e->value);
            case Expr::Op::Param: return RatFunc::variable(reg_, slot(e->index));
            case Expr::Op::NamedConst: return RatFunc::variable(reg_, const_slot(e->name, ConstSymbol::Form::Plain));
            case Expr::Op::ConstFunc: return RatFunc::variable(reg_, const_slot(e->name, form_of(e->func)));
            case Expr::Op::Trig: return RatFunc(trig(*e));
            case Expr::Op::Add: return (*this)(e->kids[0]) + (*this)(e->kids[1]);
            case Expr::Op::Sub: return (*this)(e->kids[0]) - (*this)(e->kids[1]);
            case Expr::Op::Mul: return (*this)(e->kids[0]) * (*this)(e->kids[1]);
            case Expr::Op::Div: return (*this)(e->kids[0]) / (*this)(e->kids[1]);
            case Expr::Op::Neg: return -(*this)(e->kids[0]);
            case Expr::Op::Pow: return (*this)(e->kids[0]).pow(e->exponent);
        }
        throw Error(ErrorKind::InvalidArgument, "unknown expression node");
    }

private:
    static ConstSymbol::Form form_of(TrigFunc f) {
        switch (f) {
            case TrigFunc::Cos: return ConstSymbol::Form::Cos;
            case TrigFunc::Sin: return ConstSymbol::Form::Sin;
            case TrigFunc::Cosh: return ConstSymbol::Form::Cosh;
            case TrigFunc::Sinh: return ConstSymbol::Form::Sinh;
        }
        return ConstSymbol::Form::Plain;
    }

    VarIndex slot(unsigned param) const {
        const Signature& s = p_.sig;
        if (param < s.m1 + s.m2) return 2 * param;
        return 2 * (s.m1 + s.m2) + (param - s.m1 - s.m2);
    }

    VarIndex const_slot(const std::string& name, ConstSymbol::Form f) const {
        VarIndex base = 2 * (p_.sig.m1 + p_.sig.m2) + p_.sig.m3;
        for (std::size_t k = 0; k < consts_.size(); ++k)
            if (consts_[k].constant == name && consts_[k].form == f) return base + k;
        throw Error(ErrorKind::InvalidArgument, "internal: constant symbol not registered");
    }

    const std::vector<MultiPoly>& table(std::map<VarIndex, std::vector<MultiPoly>>& cache, bool is_t, VarIndex x,
                                        unsigned n) {
        auto& tab = cache[x];
        if (tab.size() <= n) tab = is_t ? chebyshev_T_table(std::max(n, 8u), reg_, x) : chebyshev_U_table(std::max(n, 8u), reg_, x);
        return tab;
    }

    MultiPoly trig(const Expr& e) {
        const bool circ = is_circular(e.func);
        const Integer& l = circ ? l1_ : l2_;
        Rational scaled = e.arg.alpha * l;
        if (scaled.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "internal: frequency not integral after scaling");
        long n = scaled.get_num().get_si();
        unsigned an = static_cast<unsigned>(n < 0 ? -n : n);
        VarIndex x = 2 * e.arg.var, y = x + 1;
        MultiPoly C = table(t_cache_, true, x, an)[an];
        MultiPoly S = table(u_cache_, false, x, an - 1)[an - 1] * MultiPoly::variable(reg_, y);
        if (n < 0) S = -S;

        const bool wants_cos = e.func == TrigFunc::Cos || e.func == TrigFunc::Cosh;
        const Phase& ph = e.arg.phase;
        if (ph.kind == Phase::Kind::Zero) return wants_cos ? C : S;
        MultiPoly pc(reg_), ps(reg_);
        if (ph.kind == Phase::Kind::ExactPair) {
            pc = MultiPoly::constant(reg_, ph.c);
            ps = MultiPoly::constant(reg_, ph.s);
        } else {
            pc = MultiPoly::variable(reg_, const_slot(ph.name, circ ? ConstSymbol::Form::Cos : ConstSymbol::Form::Cosh));
            ps = MultiPoly::variable(reg_, const_slot(ph.name, circ ? ConstSymbol::Form::Sin : ConstSymbol::Form::Sinh));
            if (ph.sign < 0) ps = -ps;
        }
        if (wants_cos) return circ ? C * pc - S * ps : C * pc + S * ps;
        return S * pc + C * ps;
    }

    const HybridParam& p_;
    RegistryPtr reg_;
    const std::vector<ConstSymbol>& consts_;
    Integer l1_, l2_;
    std::map<VarIndex, std::vector<MultiPoly>> t_cache_, u_cache_;
};

bool any_uses(const std::vector<RatFunc>& comps, VarIndex v) {
    return std::any_of(comps.begin(), comps.end(), [v](const RatFunc& f) { return f.uses(v); });
}

}  // namespace

std::vector<std::string> purity_violations(const PureParam& p) {
    std::vector<std::string> out;
    for (unsigned i = 0; i < p.sig.m1 + p.sig.m2; ++i) {
        bool a = any_uses(p.components, p.first_index(i)), b = any_uses(p.components, p.second_index(i));
        if (!a) out.push_back(p.reg->name(p.first_index(i)) + " does not appear");
        if (!b) out.push_back(p.reg->name(p.second_index(i)) + " does not appear");
    }
    return out;
}

PureParam convert_pure(const HybridParam& p) {
    using F = ConstSymbol::Form;
    std::map<std::string, std::set<F>> used;
    for (const auto& c : p.components) collect_consts(c, used);
    std::vector<ConstSymbol> consts;
    for (const auto& name : p.constants) {
        auto it = used.find(name);
        if (it == used.end()) continue;
        for (F f : {F::Plain, F::Cos, F::Sin, F::Cosh, F::Sinh})
            if (it->second.count(f)) consts.push_back({name, f});
    }

    PureParam out;
    out.sig = p.sig;
    out.params = p.params;
    out.consts = consts;
    out.reg = make_pure_registry(p.sig, p.params, consts);
    out.warnings = p.warnings;

    const Integer l1 = alpha_denominator_lcm(p, Block::Circular);
    const Integer l2 = alpha_denominator_lcm(p, Block::Hyperbolic);
    Flattener flat(p, out.reg, consts, l1, l2);
    for (const auto& c : p.components) out.components.push_back(flat(c));

    out.scale.assign(p.sig.m(), Rational(1));
    std::map<std::string, RatFunc> doubling;
    for (unsigned i = 0; i < p.sig.m1 + p.sig.m2; ++i) {
        const bool circ = p.sig.block(i) == Block::Circular;
        out.scale[i] = Rational(circ ? l1 : l2);
        VarIndex x = out.first_index(i), y = out.second_index(i);
        bool has_x = any_uses(out.components, x), has_y = any_uses(out.components, y);
        if (has_x && has_y) continue;
        if (!has_x && !has_y)
            throw Error(ErrorKind::AbsentParameter, "parameter '" + p.params[i] + "' cancels out of every component");
        MultiPoly X = MultiPoly::variable(out.reg, x), Y = MultiPoly::variable(out.reg, y);
        // cos 2t = c^2 - s^2 and cosh 2t = ch^2 + sh^2 keep both symbols present.
        doubling.emplace(out.reg->name(x), RatFunc(circ ? X * X - Y * Y : X * X + Y * Y));
        doubling.emplace(out.reg->name(y), RatFunc(X * Y * Rational(2)));
        out.scale[i] *= 2;
    }
    if (!doubling.empty())
        for (auto& c : out.components) c = substitute(c, doubling, out.reg);
    return out;
}

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr poly_expr(const MultiPoly& poly, const PureParam& p) {
    const Signature& sig = p.sig;
    auto leaf = [&](VarIndex v) {
        Expr e;
        unsigned torus = 2 * (sig.m1 + sig.m2);
        if (v < torus) {
            unsigned i = v / 2;
            bool first = v % 2 == 0;
            bool circ = sig.block(i) == Block::Circular;
            e.op = Expr::Op::Trig;
            e.func = circ ? (first ? TrigFunc::Cos : TrigFunc::Sin) : (first ? TrigFunc::Cosh : TrigFunc::Sinh);
            e.arg.alpha = 1;
            e.arg.var = i;
        } else if (v < torus + sig.m3) {
            e.op = Expr::Op::Param;
            e.index = sig.m1 + sig.m2 + (v - torus);
        } else {
            const ConstSymbol& cs = p.consts[v - torus - sig.m3];
            e.name = cs.constant;
            switch (cs.form) {
                case ConstSymbol::Form::Plain: e.op = Expr::Op::NamedConst; break;
                case ConstSymbol::Form::Cos: e.op = Expr::Op::ConstFunc; e.func = TrigFunc::Cos; break;
                case ConstSymbol::Form::Sin: e.op = Expr::Op::ConstFunc; e.func = TrigFunc::Sin; break;
                case ConstSymbol::Form::Cosh: e.op = Expr::Op::ConstFunc; e.func = TrigFunc::Cosh; break;
                case ConstSymbol::Form::Sinh: e.op = Expr::Op::ConstFunc; e.func = TrigFunc::Sinh; break;
            }
        }
        return node(std::move(e));
    };
    auto combine = [](Expr::Op op, ExprPtr a, ExprPtr b) {
        if (!a) return b;
        Expr e;
        e.op = op;
        e.kids = {std::move(a), std::move(b)};
        return node(std::move(e));
    };
    ExprPtr sum;
    for (const auto& [m, c] : poly.terms()) {
        ExprPtr prod;
        Rational a = abs(c);
        if (a != 1 || m.is_one()) {
            Expr k;
            k.op = Expr::Op::Const;
            k.value = a;
            prod = node(std::move(k));
        }
        for (VarIndex v = 0; v < p.reg->size(); ++v) {
            if (!m[v]) continue;
            ExprPtr f = leaf(v);
            if (m[v] > 1) {
                Expr pw;
                pw.op = Expr::Op::Pow;
                pw.exponent = m[v];
                pw.kids = {f};
                f = node(std::move(pw));
            }
            prod = combine(Expr::Op::Mul, prod, f);
        }
        if (!sum) {
            if (c < 0) {
                Expr n;
                n.op = Expr::Op::Neg;
                n.kids = {prod};
                prod = node(std::move(n));
            }
            sum = prod;
        } else {
            sum = combine(c < 0 ? Expr::Op::Sub : Expr::Op::Add, sum, prod);
        }
    }
    if (!sum) {
        Expr z;
        z.op = Expr::Op::Const;
        z.value = 0;
        sum = node(std::move(z));
    }
    return sum;
}

}  // namespace

HybridParam to_hybrid(const PureParam& p) {
    HybridParam h;
    h.sig = p.sig;
    h.params = p.params;
    for (const auto& c : p.consts)
        if (std::find(h.constants.begin(), h.constants.end(), c.constant) == h.constants.end()) h.constants.push_back(c.constant);
    for (const auto& c : p.components) {
        ExprPtr e = poly_expr(c.num(), p);
        if (!(c.den().is_constant() && c.den().constant_value() == 1)) {
            Expr d;
            d.op = Expr::Op::Div;
            d.kids = {e, poly_expr(c.den(), p)};
            e = node(std::move(d));
        }
        h.components.push_back(e);
    }
    return h;
}

double evaluate(const ExprPtr& e, const std::vector<double>& t, const std::map<std::string, double>& constants) {
    auto constant = [&](const std::string& n) {
        auto it = constants.find(n);
        if (it == constants.end()) throw Error(ErrorKind::InvalidArgument, "no numeric value for named constant '" + n + "'");
        return it->second;
    };
    switch (e->op) {
        case Expr::Op::Const: return e->value.get_d();
        case Expr::Op::Param: return t.at(e->index);
        case Expr::Op::NamedConst: return constant(e->name);
        case Expr::Op::ConstFunc: {
            double a = constant(e->name);
            switch (e->func) {
                case TrigFunc::Cos: return std::cos(a);
                case TrigFunc::Sin: return std::sin(a);
                case TrigFunc::Cosh: return std::cosh(a);
                case TrigFunc::Sinh: return std::sinh(a);
            }
            return 0;
        }
        case Expr::Op::Trig: {
            double x = e->arg.alpha.get_d() * t.at(e->arg.var);
            const Phase& ph = e->arg.phase;
            double w = 0;
            if (ph.kind == Phase::Kind::Named) w = ph.sign * constant(ph.name);
            bool circ = is_circular(e->func);
            double C = circ ? std::cos(x + w) : std::cosh(x + w), S = circ ? std::sin(x + w) : std::sinh(x + w);
            if (ph.kind == Phase::Kind::ExactPair) {
                double pc = ph.c.get_d(), ps = ph.s.get_d();
                double c0 = C, s0 = S;
                C = circ ? c0 * pc - s0 * ps : c0 * pc + s0 * ps;
                S = s0 * pc + c0 * ps;
            }
            return (e->func == TrigFunc::Cos || e->func == TrigFunc::Cosh) ? C : S;
        }
        case Expr::Op::Add: return evaluate(e->kids[0], t, constants) + evaluate(e->kids[1], t, constants);
        case Expr::Op::Sub: return evaluate(e->kids[0], t, constants) - evaluate(e->kids[1], t, constants);
        case Expr::Op::Mul: return evaluate(e->kids[0], t, constants) * evaluate(e->kids[1], t, constants);
        case Expr::Op::Div: {
            double a = evaluate(e->kids[0], t, constants), b = evaluate(e->kids[1], t, constants);
            if (is_pole(a, b)) throw Error(ErrorKind::PoleAtPoint, "division by a vanishing subexpression");
            return a / b;
        }
        case Expr::Op::Neg: return -evaluate(e->kids[0], t, constants);
        case Expr::Op::Pow: {
            double b = evaluate(e->kids[0], t, constants);
            if (e->exponent < 0 && is_pole(1.0, b)) throw Error(ErrorKind::PoleAtPoint, "negative power of a vanishing subexpression");
            return std::pow(b, e->exponent);
        }
    }
    return 0;
}

std::vector<double> evaluate(const HybridParam& p, const std::vector<double>& t, const std::map<std::string, double>& constants) {
    std::vector<double> out;
    for (const auto& c : p.components) out.push_back(evaluate(c, t, constants));
    return out;
}

namespace {

int precedence(const ExprPtr& e) {
    switch (e->op) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 1;
        case Expr::Op::Mul:
        case Expr::Op::Div: return 2;
        case Expr::Op::Neg: return 3;
        case Expr::Op::Pow: return 4;
        case Expr::Op::Const:
            if (e->value < 0) return 3;
            return e->value.get_den() == 1 ? 5 : 2;
        default: return 5;
    }
}

}  // namespace

std::string to_string(const ExprPtr& e, const std::vector<std::string>& params) {
    auto wrap = [&](const ExprPtr& k, int need) {
        std::string s = to_string(k, params);
        return precedence(k) >= need ? s : "(" + s + ")";
    };
    switch (e->op) {
        case Expr::Op::Const: {
            std::string s = e->value.get_den() == 1 ? e->value.get_num().get_str() : e->value.get_str();
            return s;
        }
        case Expr::Op::Param: return params.at(e->index);
        case Expr::Op::NamedConst: return e->name;
        case Expr::Op::ConstFunc: return std::string(func_name(e->func)) + "(" + e->name + ")";
        case Expr::Op::Trig: {
            std::string arg;
            const Rational& a = e->arg.alpha;
            if (a == 1) arg = params.at(e->arg.var);
            else if (a == -1) arg = "-" + params.at(e->arg.var);
            else arg = (a.get_den() == 1 ? a.get_num().get_str() : a.get_str()) + "*" + params.at(e->arg.var);
            const Phase& ph = e->arg.phase;
            if (ph.kind == Phase::Kind::Named) arg += (ph.sign > 0 ? "+" : "-") + ph.name;
            if (ph.kind == Phase::Kind::ExactPair) arg += "+pair(" + ph.c.get_str() + "," + ph.s.get_str() + ")";
            return std::string(func_name(e->func)) + "(" + arg + ")";
        }
        case Expr::Op::Add: return wrap(e->kids[0], 1) + "+" + wrap(e->kids[1], 2);
        case Expr::Op::Sub: return wrap(e->kids[0], 1) + "-" + wrap(e->kids[1], 2);
        case Expr::Op::Mul: return wrap(e->kids[0], 2) + "*" + wrap(e->kids[1], 3);
        case Expr::Op::Div: return wrap(e->kids[0], 2) + "/" + wrap(e->kids[1], 3);
        case Expr::Op::Neg: return "-" + wrap(e->kids[0], 3);
        case Expr::Op::Pow: return wrap(e->kids[0], 5) + "^" + std::to_string(e->exponent);
    }
    return "";
}

}  // namespace trigvar

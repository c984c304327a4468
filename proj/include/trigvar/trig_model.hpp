#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "trigvar/ratfunc.hpp"

namespace trigvar {

enum class Block { Circular, Hyperbolic, Monomial };

// m1 circular, m2 hyperbolic, m3 monomial parameters, in contiguous blocks in that order.
struct Signature {
    unsigned m1 = 0, m2 = 0, m3 = 0;

    unsigned m() const { return m1 + m2 + m3; }
    Block block(unsigned i) const { return i < m1 ? Block::Circular : i < m1 + m2 ? Block::Hyperbolic : Block::Monomial; }
    bool operator==(const Signature&) const = default;
};

// Accepts "m1,m2,m3" or "(m1,m2,m3)"; throws InvalidSignature.
Signature parse_signature(std::string_view text);
std::string to_string(const Signature& s);

enum class TrigFunc { Cos, Sin, Cosh, Sinh };
std::string_view func_name(TrigFunc f);
inline bool is_circular(TrigFunc f) { return f == TrigFunc::Cos || f == TrigFunc::Sin; }

struct Phase {
    enum class Kind { Zero, ExactPair, Named };
    Kind kind = Kind::Zero;
    Rational c = 1, s = 0;  // ExactPair: (cos w, sin w) or (cosh w, sinh w)
    std::string name;       // Named: the constant a, standing for w = a
    int sign = 1;           // Named: w = sign * a

    bool operator==(const Phase& o) const {
        return kind == o.kind && c == o.c && s == o.s && name == o.name && sign == o.sign;
    }
};

struct TrigArg {
    Rational alpha;  // nonzero
    unsigned var = 0;
    Phase phase;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op {
        Const,       // value
        Param,       // monomial parameter `index`
        NamedConst,  // plain named constant `name`
        ConstFunc,   // func(name): the symbol cos(a), sin(a), ...
        Trig,        // func(arg)
        Add, Sub, Mul, Div, Neg,
        Pow,         // kids[0]^exponent
    };
    Op op = Op::Const;
    Rational value;
    unsigned index = 0;
    std::string name;
    TrigFunc func = TrigFunc::Cos;
    TrigArg arg;
    int exponent = 1;
    std::vector<ExprPtr> kids;
};

std::string to_string(const ExprPtr& e, const std::vector<std::string>& params);

struct HybridParam {
    Signature sig;
    std::vector<std::string> params;     // size m, block order
    std::vector<std::string> constants;  // declared named constants
    std::vector<ExprPtr> components;
    std::vector<std::string> warnings;   // non-fatal validation notes

    unsigned n() const { return static_cast<unsigned>(components.size()); }
    bool has_named_constants() const;
};

// Input file text: optional '#' comment lines, a header
//   signature (m1,m2,m3) vars t1 t2 ... [constants a b ...]
// ("vars t1..t3" is shorthand for t1 t2 t3), then the tuple.
HybridParam parse_param(std::string_view text);
// Tuple text only, header data supplied by the caller.
HybridParam parse_param(std::string_view tuple, const Signature& sig, const std::vector<std::string>& params,
                        const std::vector<std::string>& constants = {});

// Expression over registry variable names (identifiers only), e.g. "x1^2+x2^2-36".
RatFunc parse_rational_function(std::string_view text, const RegistryPtr& reg);
MultiPoly parse_polynomial(std::string_view text, const RegistryPtr& reg);

std::vector<MultiPoly> chebyshev_T_table(unsigned n_max, const RegistryPtr& reg, VarIndex x);
std::vector<MultiPoly> chebyshev_U_table(unsigned n_max, const RegistryPtr& reg, VarIndex x);
// Univariate in a fresh registry {"x"}; T_n(cos t) = cos(nt), U_{n-1}(cos t) sin t = sin(nt).
MultiPoly chebyshev_T(unsigned n);
MultiPoly chebyshev_U(unsigned n);

// Named-constant symbol carried in a pure registry.
struct ConstSymbol {
    std::string constant;
    enum class Form { Plain, Cos, Sin, Cosh, Sinh } form = Form::Plain;
    std::string name() const;
    double value(double a) const;
};

// Registry layout of a pure parametrization: cos(ti), sin(ti) per circular index,
// cosh(tj), sinh(tj) per hyperbolic index, tk per monomial index, then constants.
RegistryPtr make_pure_registry(const Signature& sig, const std::vector<std::string>& params,
                               const std::vector<ConstSymbol>& consts);

struct PureParam {
    Signature sig;
    std::vector<std::string> params;
    std::vector<ConstSymbol> consts;
    RegistryPtr reg;
    std::vector<RatFunc> components;
    // Composed linear reparametrization: the input evaluated at (scale_i * t_i) equals
    // this parametrization at t.
    std::vector<Rational> scale;
    std::vector<std::string> warnings;

    unsigned n() const { return static_cast<unsigned>(components.size()); }
    VarIndex first_index(unsigned param) const;   // cos/cosh slot, or the monomial slot
    VarIndex second_index(unsigned param) const;  // sin/sinh slot
    bool has_named_constants() const { return !consts.empty(); }
    // Registry values at parameter point t (constant values by constant name).
    std::vector<double> registry_point(const std::vector<double>& t,
                                       const std::map<std::string, double>& constants = {}) const;
    std::vector<double> evaluate(const std::vector<double>& t, const std::map<std::string, double>& constants = {}) const;
};

// Algorithm 1: phase expansion, per-block lcm scaling, Chebyshev expansion, doubling.
PureParam convert_pure(const HybridParam& p);
// Re-express a pure parametrization as an expression tree.
HybridParam to_hybrid(const PureParam& p);
// Violations of the pure-form occurrence property (empty when pure).
std::vector<std::string> purity_violations(const PureParam& p);

// Numeric evaluation of the expression tree; throws PoleAtPoint near a vanishing divisor.
double evaluate(const ExprPtr& e, const std::vector<double>& t, const std::map<std::string, double>& constants = {});
std::vector<double> evaluate(const HybridParam& p, const std::vector<double>& t,
                             const std::map<std::string, double>& constants = {});

}  // namespace trigvar

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trigvar/poly.hpp"

namespace trigvar {

enum class Reduction {
    Full,         // cancel the polynomial gcd of numerator and denominator
    ContentOnly,  // only normalize scalar content; cheaper, not canonical
};

// num/den in canonical form: gcd(num, den) constant, both sides integer polynomials whose
// contents are coprime, and the grevlex leading coefficient of den positive.
// (Keeping the scalar factor on whichever side it naturally lands lets outputs such as
// s/(2*sh*ch) keep their printed shape.)
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const MultiPoly& p);
    // Throws SubstitutionDenominatorVanishes when den is zero.
    RatFunc(const MultiPoly& num, const MultiPoly& den, Reduction mode = Reduction::Full);

    static RatFunc constant(RegistryPtr reg, const Rational& c);
    static RatFunc variable(RegistryPtr reg, VarIndex v);

    const MultiPoly& num() const noexcept { return num_; }
    const MultiPoly& den() const noexcept { return den_; }
    const RegistryPtr& registry() const noexcept { return num_.registry(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool uses(VarIndex v) const { return num_.uses(v) || den_.uses(v); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc pow(int k) const;  // negative k inverts

    // Recompute the canonical form (idempotent).
    RatFunc canonical() const { return RatFunc(num_, den_, Reduction::Full); }

    RatFunc transfer(const RegistryPtr& target) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    struct Raw {};
    RatFunc(MultiPoly num, MultiPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_scalars();

    MultiPoly num_;
    MultiPoly den_;
};

// Evaluate at a point given per registry variable (index order). Throws PoleAtPoint when
// |den| < 1e-12 * (1 + |num|).
double evaluate_numeric(const RatFunc& f, const std::vector<double>& point);
double evaluate_numeric(const RatFunc& f, const std::map<std::string, double>& point);
bool is_pole(double num, double den);

// Compose f with var -> RatFunc bindings. Bindings and pass-through variables live over
// `target`; variables of f that are not bound must exist in `target` by name.
// Throws SubstitutionDenominatorVanishes when the composed denominator is zero.
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings, const RegistryPtr& target,
                   Reduction mode = Reduction::Full);

// Optional hook applied to every intermediate product of compose_numerator (used to
// reduce modulo the torus relations).
using Reducer = std::function<MultiPoly(const MultiPoly&)>;

// Numerator of h(comps) after clearing the common denominators: the polynomial
//   sum_e c_e * prod_i p_i^{e_i} * q_i^{d_G - ...}
// where variables sharing a denominator are grouped (homogenized jointly). comps[i]
// binds variable i of h's registry; all comps share one registry.
MultiPoly compose_numerator(const MultiPoly& h, const std::vector<RatFunc>& comps, const Reducer& reduce = nullptr);

// Least common multiple of the (canonical) denominators; primitive, positive.
MultiPoly lcm_denominators(const std::vector<RatFunc>& fs);

// p = content * primitive, content free of block variables, primitive with trivial
// content as a polynomial in the block variables. Zero maps to (0, 1).
std::pair<MultiPoly, MultiPoly> split_content(const MultiPoly& p, const std::vector<VarIndex>& block);

}  // namespace trigvar

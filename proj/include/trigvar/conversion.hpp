#pragma once

#include <string>
#include <vector>

#include "trigvar/trig_model.hpp"

namespace trigvar {

// A rational parametrization in parameters t1..tm (plus pass-through named constants).
struct RationalParam {
    std::vector<std::string> params;
    std::vector<ConstSymbol> consts;
    RegistryPtr reg;  // params (kind Parameter) then constant symbols
    std::vector<RatFunc> components;

    unsigned m() const { return static_cast<unsigned>(params.size()); }
    unsigned n() const { return static_cast<unsigned>(components.size()); }
    bool has_named_constants() const { return !consts.empty(); }
    std::vector<double> evaluate(const std::vector<double>& t, const std::map<std::string, double>& constants = {}) const;
};

RegistryPtr make_parameter_registry(const std::vector<std::string>& params, const std::vector<ConstSymbol>& consts);

// Flatten a (0,0,m) parametrization.
RationalParam to_rational_param(const HybridParam& p);

struct TorusMaps {
    Signature sig;
    RegistryPtr t_reg;             // t1..tm
    RegistryPtr x_reg;             // x1..x_{2 m1 + 2 m2 + m3}
    std::vector<RatFunc> M;        // over t_reg, one per x coordinate
    std::vector<RatFunc> L;        // over x_reg, one per parameter (inverse of M)
    std::vector<std::string> psi;  // textual Psi: "t1 -> (cos(t1), sin(t1))"
    std::vector<MultiPoly> equations;  // torus equations over x_reg
};

// Throws InvalidArgument if the internal identities L(M(t)) = t or the torus equations fail.
TorusMaps build_torus_maps(const Signature& sig, const std::vector<std::string>& params = {});

// (cos, sin) / (cosh, sinh) coordinate pairs of a pure registry.
struct TorusPair {
    VarIndex x, y;  // cos-like, sin-like
    bool circular;
};
std::vector<TorusPair> torus_pairs(const PureParam& p);
std::vector<TorusPair> torus_pairs(const Signature& sig);

// Normal form modulo the torus relations with each sin-like coordinate above its partner:
// y^2 -> 1 - x^2 (circular), y^2 -> x^2 - 1 (hyperbolic).
MultiPoly torus_reduce(const MultiPoly& p, const std::vector<TorusPair>& pairs);
Reducer torus_reducer(const std::vector<TorusPair>& pairs);

// Algorithm 2: c -> 2t/(t^2+1), s -> (t^2-1)/(t^2+1), ch -> (t^2+1)/(2t), sh -> (t^2-1)/(2t).
RationalParam trig_to_rational(const PureParam& p);

// Algorithm 3: t -> c/(1-s) on circular slots, t -> ch+sh on hyperbolic slots, then a
// canonical form modulo the torus relations (reduce, rationalize the denominator, cancel).
PureParam rational_to_trig(const RationalParam& p, const Signature& target);

}  // namespace trigvar

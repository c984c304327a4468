#pragma once

#include <vector>

#include "trigvar/conversion.hpp"
#include "trigvar/groebner.hpp"

namespace trigvar {

enum class ElimOrder {
    BlockGrevlex,  // {W} > {t or y} > {x}, grevlex inside each block
    Lex,           // W > t (or y) > x, registry order
};

struct ImplicitOptions {
    ElimOrder order = ElimOrder::BlockGrevlex;
    std::size_t budget = default_pair_budget();
};

// Ambient registry x1..xn.
RegistryPtr ambient_registry(unsigned n);

// Option 1: eliminate {W, t} from {q_i x_i - p_i} + {W lcm(q) - 1}.
Ideal implicitize_rational(const RationalParam& p, const ImplicitOptions& opt = {});
// Option 2: eliminate {W, y} from {g_i x_i - f_i} + {W lcm(g) - 1} + torus relations.
Ideal implicitize_trig(const PureParam& p, const ImplicitOptions& opt = {});

// Per generator: does it vanish on the parametrization? Rational: the numerator of h(P)
// is zero. Pure: that numerator reduces to zero modulo the torus relations.
std::vector<bool> verify_implicit(const RationalParam& p, const Ideal& candidates);
std::vector<bool> verify_implicit(const PureParam& p, const Ideal& candidates);

// Mutual membership of generators (each side's grevlex basis contains the other's generators).
bool same_ideal(const Ideal& a, const Ideal& b, std::size_t budget = default_pair_budget());

}  // namespace trigvar

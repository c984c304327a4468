#pragma once

#include "trigvar/poly.hpp"

namespace trigvar {

// Greatest common divisor over Q[x]: primitive with integer coefficients and positive
// leading coefficient (grevlex). gcd(0, 0) = 0; gcd(p, 0) = primitive part of p.
MultiPoly gcd_multivar(const MultiPoly& a, const MultiPoly& b);

// Primitive, positive least common multiple.
MultiPoly lcm_multivar(const MultiPoly& a, const MultiPoly& b);

// Content with respect to variable v: gcd of the coefficients of p viewed in Q[others][v].
MultiPoly content_in(const MultiPoly& p, VarIndex v);

// Pseudo-remainder of a by b as polynomials in v (b must use v).
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, VarIndex v);

// Exact division that must succeed; throws InvalidArgument otherwise.
MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b);

}  // namespace trigvar

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trigvar {

// Exact coefficient domain. mpq_class keeps the value canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

// Accepts "n", "-n", "n/d". Throws Error(SyntaxError) on malformed input.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace trigvar

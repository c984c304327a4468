#pragma once

#include <string>
#include <vector>

#include "trigvar/ratfunc.hpp"

namespace trigvar {

// Human-readable forms, terms grevlex-descending: "x1^3+3*x1^2*x3-x3".
std::string to_string(const Rational& q);
std::string to_string(const MultiPoly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const std::vector<RatFunc>& tuple);

}  // namespace trigvar

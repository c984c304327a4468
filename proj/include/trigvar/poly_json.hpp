#pragma once

#include <json.hpp>

#include "trigvar/ratfunc.hpp"

namespace trigvar {

// {"vars": [...], "terms": [{"coef": "num/den", "exps": [...]}]}, terms grevlex-descending.
nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const RatFunc& f);  // {"num": poly, "den": poly}

// Builds a fresh registry from "vars" (kind Ambient) unless one is supplied, in which
// case the names must match it exactly.
MultiPoly poly_from_json(const nlohmann::json& j, RegistryPtr reg = nullptr);

}  // namespace trigvar

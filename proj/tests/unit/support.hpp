#pragma once

#include <random>
#include <string>
#include <vector>

#include "trigvar/poly.hpp"
#include "trigvar/ratfunc.hpp"

namespace testing_support {

using namespace trigvar;

// Registry plus one polynomial handle per variable, for writing test polynomials inline.
struct Ring {
    RegistryPtr reg;
    std::vector<MultiPoly> v;

    explicit Ring(const std::vector<std::string>& names, VarKind kind = VarKind::Ambient)
        : reg(make_registry(names, kind)) {
        for (VarIndex i = 0; i < names.size(); ++i) v.push_back(MultiPoly::variable(reg, i));
    }
    MultiPoly c(long num, long den = 1) const { return MultiPoly::constant(reg, make_rational(num, den)); }
    MultiPoly operator[](std::size_t i) const { return v.at(i); }
};

inline MultiPoly random_poly(const Ring& r, std::mt19937& rng, unsigned max_deg, unsigned terms, int coef = 5) {
    std::uniform_int_distribution<int> cd(-coef, coef);
    std::uniform_int_distribution<unsigned> ed(0, max_deg);
    std::vector<MultiPoly::Term> ts;
    for (unsigned k = 0; k < terms; ++k) {
        Monomial m;
        unsigned budget = max_deg;
        for (VarIndex i = 0; i < r.reg->size(); ++i) {
            unsigned e = std::min(budget, ed(rng) / 2);
            m.set(i, static_cast<std::uint16_t>(e));
            budget -= e;
        }
        int c = cd(rng);
        if (c == 0) c = 1;
        ts.emplace_back(m, Rational(c));
    }
    return MultiPoly::from_terms(r.reg, ts);
}

}  // namespace testing_support

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trigvar/errors.hpp"
#include "trigvar/poly.hpp"
#include "trigvar/trig_model.hpp"

namespace trigvar {

// Product of grevlex orders on consecutive blocks: monomials compare on the first block
// (grevlex restricted to it), ties go to the next block. Lex is the all-singleton case;
// a two-block order is an elimination order for its first block.
class MonomialOrder {
public:
    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);                       // x0 > x1 > ...
    static MonomialOrder lex(const std::vector<VarIndex>& permutation);  // permutation[0] largest
    static MonomialOrder blocks(std::vector<std::vector<VarIndex>> blocks);
    static MonomialOrder block_elim(const std::vector<VarIndex>& front, const std::vector<VarIndex>& back);

    int compare(const Monomial& a, const Monomial& b) const;
    const std::vector<std::vector<VarIndex>>& block_list() const { return blocks_; }
    bool is_lex() const;
    // True when every monomial containing a front variable exceeds all monomials free of them.
    bool eliminates(const std::vector<VarIndex>& front) const;
    std::string describe() const;  // "grevlex", "lex", "block[[0],[1,2],[3,4]]"

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<std::vector<VarIndex>> blocks_;
};

// Generators over one registry; zero generators are dropped on construction.
struct Ideal {
    RegistryPtr reg;
    std::vector<MultiPoly> generators;

    Ideal() = default;
    Ideal(RegistryPtr r, std::vector<MultiPoly> gens);
    bool empty() const { return generators.empty(); }
};

struct GroebnerBasis {
    MonomialOrder order;
    RegistryPtr reg;
    std::vector<MultiPoly> basis;  // reduced, primitive, positive lc, leading monomials descending
    BuchbergerStats stats;

    // Leading monomial / coefficient of basis[i] under `order` (MultiPoly stores grevlex).
    Monomial leading_monomial(std::size_t i) const;
};

// Pair budget: TRIGVAR_PAIR_BUDGET when set to a positive integer, else 200000.
std::size_t default_pair_budget();

// Normal: smallest lcm total degree first. Sugar: smallest sugar degree first.
// GrevlexFirst: a grevlex basis, then the target order started from it (normal strategy).
// Auto runs all three concurrently and returns the first result (the reduced basis is unique).
enum class PairStrategy { Auto, Normal, Sugar, GrevlexFirst };

// Buchberger with the Gebauer-Moeller criteria. Throws BudgetExceeded after `budget`
// S-pair reductions (under Auto: only when every strategy exhausts it).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, std::size_t budget = default_pair_budget(),
                         PairStrategy strategy = PairStrategy::Auto);

// Remainder of p on division by the basis (exact rational coefficients).
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g);
bool ideal_contains(const GroebnerBasis& g, const MultiPoly& p);

// Every S-polynomial reduces to zero and the basis is reduced.
bool verify_groebner(const GroebnerBasis& g);

// Basis elements free of `front`, computed under `order` (must eliminate `front`);
// by default the two-block grevlex order front > rest.
Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& front, std::size_t budget = default_pair_budget());
Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& front, const MonomialOrder& order,
                std::size_t budget = default_pair_budget());

// Torus coordinates y11, y12 (per circular / hyperbolic index i) and y_k (monomial index k).
RegistryPtr torus_registry(const Signature& sig);
// m1 circle relations y_i1^2 + y_i2^2 - 1 and m2 hyperbola relations y_j1^2 - y_j2^2 - 1.
Ideal torus_ideal(const Signature& sig);
Ideal torus_ideal(const Signature& sig, const RegistryPtr& reg, const std::vector<VarIndex>& coords);

}  // namespace trigvar

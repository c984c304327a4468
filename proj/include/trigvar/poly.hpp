#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigvar/monomial.hpp"
#include "trigvar/rational.hpp"
#include "trigvar/registry.hpp"

namespace trigvar {

// Sparse multivariate polynomial over Q. Terms are kept sorted grevlex-descending with
// no zero coefficients; the zero polynomial has no terms.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static MultiPoly constant(RegistryPtr reg, const Rational& c);
    static MultiPoly variable(RegistryPtr reg, VarIndex i, unsigned power = 1);
    static MultiPoly variable(RegistryPtr reg, std::string_view name, unsigned power = 1);
    static MultiPoly monomial(RegistryPtr reg, const Monomial& m, const Rational& c);
    // Combines duplicate monomials and drops zeros; input order is irrelevant.
    static MultiPoly from_terms(RegistryPtr reg, std::vector<Term> terms);
    // Terms already sorted grevlex-descending, distinct and nonzero.
    static MultiPoly from_sorted_terms(RegistryPtr reg, std::vector<Term> terms);

    const RegistryPtr& registry() const noexcept { return reg_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Rational constant_value() const;  // value when is_constant(), else the degree-0 coefficient

    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Rational& leading_coefficient() const { return terms_.front().second; }

    unsigned total_degree() const;
    unsigned degree(VarIndex v) const;
    unsigned min_degree(VarIndex v) const;
    bool uses(VarIndex v) const { return degree(v) > 0; }
    std::vector<VarIndex> variables() const;
    // Smallest exponent vector dividing every term.
    Monomial monomial_content() const;

    // Coefficients c_k with p = sum_k c_k * v^k; c_k never contains v.
    std::vector<MultiPoly> coefficients_in(VarIndex v) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& b);
    MultiPoly& operator-=(const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& b);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned k) const;
    MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
    MultiPoly div_monomial(const Monomial& m) const;  // every term must be divisible
    MultiPoly derivative(VarIndex v) const;

    // Exact quotient a / b, or nullopt when b does not divide a.
    std::optional<MultiPoly> divide_exact(const MultiPoly& b) const;

    // Positive rational c with p / c integer-primitive; zero for the zero polynomial.
    Rational content() const;
    MultiPoly primitive() const;             // p / content(p), sign kept
    MultiPoly primitive_positive() const;    // additionally leading coefficient > 0

    double evaluate(const std::vector<double>& point) const;
    // Sum of |c * x^e|, the scale used for relative residuals.
    double evaluate_magnitude(const std::vector<double>& point) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Same polynomial re-expressed over another registry (variables matched by name).
    MultiPoly transfer(const RegistryPtr& target) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void check_same(const MultiPoly& b) const;
    static MultiPoly add_scaled(const MultiPoly& a, const MultiPoly& b, int sign);

    RegistryPtr reg_;
    std::vector<Term> terms_;
};

void require_same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace trigvar

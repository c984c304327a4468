#include "trigvar/poly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "trigvar/errors.hpp"

namespace trigvar {

namespace {

bool term_desc(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    return grevlex_cmp(a.first, b.first) > 0;
}

}  // namespace

void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    if (!same_registry(a, b)) throw Error(ErrorKind::RegistryMismatch, "operands live over different variable registries");
}

MultiPoly MultiPoly::constant(RegistryPtr reg, const Rational& c) {
    MultiPoly p(std::move(reg));
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(RegistryPtr reg, VarIndex i, unsigned power) {
    if (i >= reg->size()) throw Error(ErrorKind::RegistryMismatch, "variable index out of range");
    MultiPoly p(std::move(reg));
    p.terms_.emplace_back(Monomial::var(i, static_cast<std::uint16_t>(power)), Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(RegistryPtr reg, std::string_view name, unsigned power) {
    VarIndex i = reg->index(name);
    return variable(std::move(reg), i, power);
}

MultiPoly MultiPoly::monomial(RegistryPtr reg, const Monomial& m, const Rational& c) {
    MultiPoly p(std::move(reg));
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

MultiPoly MultiPoly::from_terms(RegistryPtr reg, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_desc);
    MultiPoly p(std::move(reg));
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
        if (sum != 0) p.terms_.emplace_back(terms[i].first, std::move(sum));
        i = j;
    }
    return p;
}

MultiPoly MultiPoly::from_sorted_terms(RegistryPtr reg, std::vector<Term> terms) {
    MultiPoly p(std::move(reg));
    p.terms_ = std::move(terms);
    return p;
}

Rational MultiPoly::constant_value() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return 0;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.front().first.deg;
}

unsigned MultiPoly::degree(VarIndex v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[v]);
    return d;
}

unsigned MultiPoly::min_degree(VarIndex v) const {
    if (terms_.empty()) return 0;
    unsigned d = terms_.front().first[v];
    for (const auto& t : terms_) d = std::min<unsigned>(d, t.first[v]);
    return d;
}

std::vector<VarIndex> MultiPoly::variables() const {
    std::vector<VarIndex> out;
    if (!reg_) return out;
    for (VarIndex v = 0; v < reg_->size(); ++v)
        if (uses(v)) out.push_back(v);
    return out;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.front().first;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.first);
    return g;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarIndex v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) {
        Monomial m = t.first;
        unsigned k = m[v];
        m.set(v, 0);
        buckets[k].emplace_back(m, t.second);
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(reg_, std::move(b)));
    return out;
}

void MultiPoly::check_same(const MultiPoly& b) const {
    if (reg_ && b.reg_) require_same_registry(reg_, b.reg_);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly MultiPoly::add_scaled(const MultiPoly& a, const MultiPoly& b, int sign) {
    a.check_same(b);
    MultiPoly r(a.reg_ ? a.reg_ : b.reg_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c;
        if (i == a.terms_.size()) c = -1;
        else if (j == b.terms_.size()) c = 1;
        else c = grevlex_cmp(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            const auto& t = b.terms_[j++];
            r.terms_.emplace_back(t.first, sign > 0 ? t.second : Rational(-t.second));
        } else {
            Rational s = sign > 0 ? Rational(a.terms_[i].second + b.terms_[j].second) : Rational(a.terms_[i].second - b.terms_[j].second);
            if (s != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
    *this = add_scaled(*this, b, 1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
    *this = add_scaled(*this, b, -1);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    RegistryPtr reg = a.reg_ ? a.reg_ : b.reg_;
    if (a.is_zero() || b.is_zero()) return MultiPoly(reg);
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Rational prod;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.first * tb.first;
            mpq_mul(prod.get_mpq_t(), ta.second.get_mpq_t(), tb.second.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(m, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::vector<MultiPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(), term_desc);
    return MultiPoly::from_sorted_terms(reg, std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& b) {
    *this = *this * b;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(reg_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
    MultiPoly r(reg_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
    MultiPoly r(reg_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first / m, t.second);
    return r;
}

MultiPoly MultiPoly::derivative(VarIndex v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned k = t.first[v];
        if (k == 0) continue;
        Monomial m = t.first;
        m.set(v, static_cast<std::uint16_t>(k - 1));
        out.emplace_back(m, t.second * k);
    }
    return from_terms(reg_, std::move(out));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& b) const {
    check_same(b);
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    if (is_zero()) return MultiPoly(reg_ ? reg_ : b.reg_);
    if (b.terms_.size() == 1) {
        const auto& [m, c] = b.terms_[0];
        if (!m.divides(monomial_content())) return std::nullopt;
        MultiPoly q = div_monomial(m);
        q *= Rational(1 / c);
        return q;
    }
    const Monomial& lm = b.leading_monomial();
    const Rational lc_inv = 1 / b.leading_coefficient();
    // If b | a then every quotient term has deg_v <= deg_v(a) - deg_v(b); this bound lets
    // non-divisible inputs fail early.
    Monomial bound;
    for (VarIndex v = 0; v < kMaxVars; ++v) {
        unsigned da = degree(v), db = b.degree(v);
        if (da < db) return std::nullopt;
        bound.set(v, static_cast<std::uint16_t>(da - db));
    }
    MultiPoly r = *this;
    std::vector<Term> quot;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.terms_.front();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial qm = rm / lm;
        if (!qm.divides(bound)) return std::nullopt;
        Rational qc = rc * lc_inv;
        r -= b.mul_monomial(qm, qc);
        quot.emplace_back(qm, std::move(qc));
    }
    return from_terms(reg_, std::move(quot));
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    return c;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    MultiPoly r = *this;
    if (c != 1) r *= Rational(1 / c);
    return r;
}

MultiPoly MultiPoly::primitive_positive() const {
    MultiPoly r = primitive();
    if (!r.is_zero() && r.leading_coefficient() < 0) r = -r;
    return r;
}

double MultiPoly::evaluate(const std::vector<double>& point) const {
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double v = c.get_d();
        for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i)
            if (m[i]) v *= std::pow(point[i], m[i]);
        sum += v;
    }
    return sum;
}

double MultiPoly::evaluate_magnitude(const std::vector<double>& point) const {
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double v = std::fabs(c.get_d());
        for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i)
            if (m[i]) v *= std::pow(std::fabs(point[i]), m[i]);
        sum += v;
    }
    return sum;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i) {
            if (!m[i]) continue;
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
            v *= p;
        }
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::transfer(const RegistryPtr& target) const {
    if (same_registry(reg_, target)) {
        MultiPoly r = *this;
        r.reg_ = target;
        return r;
    }
    std::vector<VarIndex> map(reg_ ? reg_->size() : 0);
    for (VarIndex v = 0; v < map.size(); ++v) map[v] = static_cast<VarIndex>(-1);
    for (VarIndex v : variables()) {
        auto idx = target->find(reg_->name(v));
        if (!idx) throw Error(ErrorKind::RegistryMismatch, "variable '" + reg_->name(v) + "' is missing in the target registry");
        map[v] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial n;
        for (VarIndex v = 0; v < map.size(); ++v)
            if (m[v]) n.set(map[v], m[v]);
        out.emplace_back(n, c);
    }
    return from_terms(target, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.reg_ && b.reg_ && !same_registry(a.reg_, b.reg_)) return false;
    return a.terms_ == b.terms_;
}

}  // namespace trigvar

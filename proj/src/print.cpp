#include "trigvar/print.hpp"

#include <sstream>

namespace trigvar {

namespace {

std::string monomial_string(const Monomial& m, const VarRegistry& reg) {
    std::string out;
    for (VarIndex v = 0; v < reg.size(); ++v) {
        if (!m[v]) continue;
        if (!out.empty()) out += '*';
        out += reg.name(v);
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out;
}

bool is_plain_power(const MultiPoly& p) {
    if (p.size() != 1 || p.leading_coefficient() != 1) return false;
    return p.variables().size() <= 1;
}

}  // namespace

std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (c < 0) out += '-';
        else if (!first) out += '+';
        first = false;
        if (m.is_one()) {
            out += to_string(a);
            continue;
        }
        if (a != 1) out += to_string(a) + '*';
        out += monomial_string(m, *p.registry());
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    const MultiPoly& d = f.den();
    if (d.is_constant() && d.constant_value() == 1) return to_string(f.num());
    std::string n = to_string(f.num());
    if (f.num().size() > 1) n = '(' + n + ')';
    std::string ds = to_string(d);
    if (!(is_plain_power(d) || (d.is_constant()))) ds = '(' + ds + ')';
    return n + '/' + ds;
}

std::string to_string(const std::vector<RatFunc>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += to_string(tuple[i]);
    }
    return out + ')';
}

}  // namespace trigvar

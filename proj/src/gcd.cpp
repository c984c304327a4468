#include "trigvar/gcd.hpp"

#include <algorithm>

#include "trigvar/errors.hpp"

namespace trigvar {

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.registry(), 1); }

MultiPoly gcd_core(MultiPoly a, MultiPoly b);

// Primitive part with respect to v, also made integer-primitive.
MultiPoly pp_in(const MultiPoly& p, VarIndex v) {
    MultiPoly c = content_in(p, v);
    if (c.is_constant()) return p.primitive();
    return divide_or_throw(p, c).primitive();
}

MultiPoly prs_gcd(MultiPoly a, MultiPoly b, VarIndex v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree(v) == 0) return one_like(a);
        MultiPoly r = pseudo_remainder(a, b, v);
        a = std::move(b);
        b = r.is_zero() ? r : pp_in(r, v);
    }
    return a;
}

// Inputs have trivial monomial content.
MultiPoly gcd_core(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    if (a.is_constant() || b.is_constant()) return one_like(a);

    // A variable used by only one side cannot occur in the gcd: replace that side by its
    // content with respect to the variable.
    for (;;) {
        auto va = a.variables(), vb = b.variables();
        bool changed = false;
        for (VarIndex v : va)
            if (!std::binary_search(vb.begin(), vb.end(), v)) {
                a = content_in(a, v);
                changed = true;
                break;
            }
        if (!changed)
            for (VarIndex v : vb)
                if (!std::binary_search(va.begin(), va.end(), v)) {
                    b = content_in(b, v);
                    changed = true;
                    break;
                }
        if (!changed) break;
        if (a.is_constant() || b.is_constant()) return one_like(a);
    }

    MultiPoly pa = a.primitive_positive(), pb = b.primitive_positive();
    if (pa == pb) return pa;
    if (pb.size() <= pa.size()) {
        if (pa.divide_exact(pb)) return pb;
    } else if (pb.divide_exact(pa)) {
        return pa;
    }

    auto vars = pa.variables();
    VarIndex v = vars.front();
    unsigned best = ~0u;
    for (VarIndex w : vars) {
        unsigned d = std::max(pa.degree(w), pb.degree(w));
        if (d < best) {
            best = d;
            v = w;
        }
    }
    MultiPoly ca = content_in(pa, v), cb = content_in(pb, v);
    MultiPoly ga = ca.is_constant() ? pa : divide_or_throw(pa, ca);
    MultiPoly gb = cb.is_constant() ? pb : divide_or_throw(pb, cb);
    MultiPoly gc = (ca.is_constant() || cb.is_constant()) ? one_like(pa) : gcd_core(ca, cb);
    MultiPoly g = prs_gcd(ga.primitive(), gb.primitive(), v);
    return (gc * g).primitive_positive();
}

}  // namespace

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return std::move(*q);
}

MultiPoly content_in(const MultiPoly& p, VarIndex v) {
    if (p.degree(v) == 0) return p.primitive_positive();
    auto coeffs = p.coefficients_in(v);
    // Smallest coefficients first keeps the running gcd cheap.
    std::sort(coeffs.begin(), coeffs.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
    MultiPoly g(p.registry());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd_multivar(g, c);
        if (g.is_constant()) return g;
    }
    return g;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, VarIndex v) {
    const unsigned db = b.degree(v);
    const MultiPoly lcb = b.coefficients_in(v).back();
    MultiPoly r = a;
    while (!r.is_zero()) {
        unsigned d = r.degree(v);
        if (d < db) break;
        MultiPoly lcr = r.coefficients_in(v).back();
        r = lcb * r - (lcr * b).mul_monomial(Monomial::var(v, static_cast<std::uint16_t>(d - db)), 1);
        r = r.primitive();
    }
    return r;
}

MultiPoly gcd_multivar(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg = Monomial::gcd(ma, mb);
    MultiPoly g = gcd_core(a.div_monomial(ma), b.div_monomial(mb));
    if (!mg.is_one()) g = g.mul_monomial(mg, 1);
    return g.primitive_positive();
}

MultiPoly lcm_multivar(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.registry());
    MultiPoly g = gcd_multivar(a, b);
    return (divide_or_throw(a, g) * b).primitive_positive();
}

}  // namespace trigvar

#include "trigvar/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <cstdlib>
#include <numeric>
#include <set>

namespace trigvar {

// ---------------------------------------------------------------- orders

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    std::vector<VarIndex> all(nvars);
    std::iota(all.begin(), all.end(), VarIndex{0});
    return blocks({all});
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<VarIndex> all(nvars);
    std::iota(all.begin(), all.end(), VarIndex{0});
    return lex(all);
}

MonomialOrder MonomialOrder::lex(const std::vector<VarIndex>& permutation) {
    std::vector<std::vector<VarIndex>> b;
    for (auto v : permutation) b.push_back({v});
    return blocks(std::move(b));
}

MonomialOrder MonomialOrder::blocks(std::vector<std::vector<VarIndex>> blocks) {
    std::vector<bool> seen(kMaxVars, false);
    MonomialOrder o;
    for (auto& blk : blocks) {
        if (blk.empty()) continue;
        for (auto v : blk) {
            if (v >= kMaxVars || seen[v]) throw Error(ErrorKind::InvalidArgument, "monomial order blocks must partition the variables");
            seen[v] = true;
        }
        o.blocks_.push_back(std::move(blk));
    }
    return o;
}

MonomialOrder MonomialOrder::block_elim(const std::vector<VarIndex>& front, const std::vector<VarIndex>& back) {
    return blocks({front, back});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        unsigned da = 0, db = 0;
        for (auto v : blk) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t k = blk.size(); k-- > 1;) {
            auto v = blk[k];
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
        }
    }
    return 0;
}

bool MonomialOrder::is_lex() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 1; });
}

bool MonomialOrder::eliminates(const std::vector<VarIndex>& front) const {
    // Holds iff the front variables fill a prefix of the block list.
    std::set<VarIndex> f(front.begin(), front.end());
    std::size_t covered = 0;
    for (const auto& blk : blocks_) {
        if (covered == f.size()) return true;
        for (auto v : blk)
            if (!f.count(v)) return false;
        covered += blk.size();
    }
    return covered == f.size();
}

std::string MonomialOrder::describe() const {
    if (blocks_.size() == 1) {
        bool natural = true;
        for (std::size_t i = 0; i < blocks_[0].size(); ++i) natural &= blocks_[0][i] == i;
        if (natural) return "grevlex";
    }
    if (is_lex()) {
        bool natural = true;
        for (std::size_t i = 0; i < blocks_.size(); ++i) natural &= blocks_[i][0] == i;
        if (natural) return "lex";
    }
    std::string s = "block[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t k = 0; k < blocks_[i].size(); ++k) s += (k ? "," : "") + std::to_string(blocks_[i][k]);
        s += "]";
    }
    return s + "]";
}

Ideal::Ideal(RegistryPtr r, std::vector<MultiPoly> gens) : reg(std::move(r)) {
    for (auto& g : gens) {
        require_same_registry(g.registry(), reg);
        if (!g.is_zero()) generators.push_back(std::move(g));
    }
}

std::size_t default_pair_budget() {
    if (const char* env = std::getenv("TRIGVAR_PAIR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

// ---------------------------------------------------------------- integer engine

namespace {

struct ITerm {
    Monomial m;
    Integer c;
};

// Terms ascending under the order, so the leading term is back().
using IPoly = std::vector<ITerm>;

std::uint32_t divmask(const Monomial& m) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) mask |= 1u << i;
    return mask;
}

struct Cancelled {};

class Engine {
public:
    explicit Engine(const MonomialOrder& order, const std::atomic<bool>* stop = nullptr) : ord_(order), stop_(stop) {}

    void check_stop() const {
        if (stop_ && stop_->load(std::memory_order_relaxed)) throw Cancelled{};
    }

    bool less(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b) < 0; }

    // Clears denominators; result is integer-primitive.
    IPoly from_poly(const MultiPoly& p, Rational* scale = nullptr) const {
        Integer den = 1;
        for (const auto& [m, c] : p.terms()) den = lcm(den, Integer(c.get_den()));
        IPoly out;
        out.reserve(p.size());
        for (const auto& [m, c] : p.terms()) out.push_back({m, Integer(c.get_num() * (den / c.get_den()))});
        std::sort(out.begin(), out.end(), [this](const ITerm& a, const ITerm& b) { return less(a.m, b.m); });
        Integer g = content(out);
        if (g != 0 && g != 1)
            for (auto& t : out) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        if (scale) *scale = g == 0 ? Rational(1) : Rational(den) / Rational(g);  // out = p * scale
        return out;
    }

    MultiPoly to_poly(const IPoly& p, const RegistryPtr& reg, const Rational& divisor = Rational(1)) const {
        std::vector<MultiPoly::Term> ts;
        ts.reserve(p.size());
        for (const auto& t : p) ts.emplace_back(t.m, Rational(t.c) / divisor);
        return MultiPoly::from_terms(reg, std::move(ts));
    }

    static Integer content(const IPoly& p) {
        Integer g = 0;
        for (const auto& t : p) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    static void make_primitive(IPoly& p) {
        if (p.empty()) return;
        Integer g = content(p);
        if (p.back().c < 0) g = -g;
        if (g != 1)
            for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }

    // a*f[0..fn) - b*mult*g[0..gn), both ascending.
    IPoly combine(const IPoly& f, std::size_t fn, const Integer& a, const IPoly& g, std::size_t gn, const Integer& b,
                  const Monomial& mult) const {
        IPoly out;
        out.reserve(fn + gn);
        std::size_t i = 0, j = 0;
        Integer tmp;
        while (i < fn || j < gn) {
            if (j == gn) {
                out.push_back({f[i].m, f[i].c * a});
                ++i;
                continue;
            }
            Monomial gm = g[j].m * mult;
            if (i == fn) {
                out.push_back({gm, -(g[j].c * b)});
                ++j;
                continue;
            }
            int c = ord_.compare(f[i].m, gm);
            if (c < 0) {
                out.push_back({f[i].m, f[i].c * a});
                ++i;
            } else if (c > 0) {
                out.push_back({gm, -(g[j].c * b)});
                ++j;
            } else {
                tmp = f[i].c * a - g[j].c * b;
                if (tmp != 0) out.push_back({gm, tmp});
                ++i;
                ++j;
            }
        }
        return out;
    }

    struct Reducer {
        const IPoly* p;
        Monomial lm;
        std::uint32_t mask;
        unsigned sugar = 0;
    };

    const Reducer* find_reducer(const std::vector<Reducer>& rs, const Monomial& m) const {
        std::uint32_t mm = divmask(m);
        const Reducer* best = nullptr;
        for (const auto& r : rs) {
            if ((r.mask & ~mm) != 0 || !r.lm.divides(m)) continue;
            if (!best || r.p->size() < best->p->size()) best = &r;
        }
        return best;
    }

    // Full reduction. Returns r with mu * f = r + (combination of reducers), mu > 0 rational.
    // If sugar is given it is raised to cover every reducer multiple used.
    IPoly reduce(IPoly f, const std::vector<Reducer>& rs, bool full, Rational* mu = nullptr,
                 unsigned* sugar = nullptr) const {
        IPoly rem;  // descending while collected
        Rational scale(1);
        unsigned steps = 0;
        while (!f.empty()) {
            const ITerm& lt = f.back();
            const Reducer* r = find_reducer(rs, lt.m);
            if (!r) {
                if (!full) break;
                rem.push_back(std::move(f.back()));
                f.pop_back();
                continue;
            }
            const ITerm& glt = r->p->back();
            Integer g;
            mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), glt.c.get_mpz_t());
            Integer a = glt.c / g, b = lt.c / g;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            Monomial mult = lt.m / glt.m;
            if (sugar) *sugar = std::max(*sugar, r->sugar + mult.deg);
            if (steps % 16 == 0) check_stop();
            f = combine(f, f.size() - 1, a, *r->p, r->p->size() - 1, b, mult);
            if (a != 1) {
                for (auto& t : rem) t.c *= a;
                scale *= Rational(a);
            }
            if (++steps % 8 == 0) {
                Integer c = 0;
                for (const auto& t : f) {
                    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
                    if (c == 1) break;
                }
                for (const auto& t : rem) {
                    if (c == 1) break;
                    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
                }
                if (c > 1) {
                    for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    scale /= Rational(c);
                }
            }
        }
        if (!full) {
            if (mu) *mu = scale;
            return f;
        }
        std::reverse(rem.begin(), rem.end());
        if (mu) *mu = scale;
        return rem;
    }

    IPoly spoly(const IPoly& f, const IPoly& g) const {
        const ITerm& a = f.back();
        const ITerm& b = g.back();
        Monomial L = Monomial::lcm(a.m, b.m);
        Integer d;
        mpz_gcd(d.get_mpz_t(), a.c.get_mpz_t(), b.c.get_mpz_t());
        Integer ca = b.c / d, cb = a.c / d;
        // ca * (L/a.m) * f - cb * (L/b.m) * g
        IPoly fm;
        fm.reserve(f.size() - 1);
        Monomial ma = L / a.m;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) fm.push_back({f[i].m * ma, f[i].c});
        return combine(fm, fm.size(), ca, g, g.size() - 1, cb, L / b.m);
    }

private:
    const MonomialOrder& ord_;
    const std::atomic<bool>* stop_;
};

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    unsigned sugar;
};

unsigned max_degree(const IPoly& p) {
    unsigned d = 0;
    for (const auto& t : p) d = std::max<unsigned>(d, t.m.deg);
    return d;
}

}  // namespace

Monomial GroebnerBasis::leading_monomial(std::size_t i) const {
    const auto& ts = basis.at(i).terms();
    Monomial best = ts.front().first;
    for (const auto& [m, c] : ts)
        if (order.compare(m, best) > 0) best = m;
    return best;
}

namespace {

std::vector<Engine::Reducer> reducers_of(const std::vector<IPoly>& polys, const std::vector<std::size_t>& idx,
                                         const std::vector<unsigned>* sugar = nullptr) {
    std::vector<Engine::Reducer> rs;
    for (auto k : idx)
        rs.push_back({&polys[k], polys[k].back().m, divmask(polys[k].back().m), sugar ? (*sugar)[k] : 0u});
    return rs;
}

std::vector<IPoly> basis_to_ipolys(const Engine& eng, const GroebnerBasis& g) {
    std::vector<IPoly> out;
    for (const auto& b : g.basis) out.push_back(eng.from_poly(b));
    return out;
}

}  // namespace

namespace {

GroebnerBasis run_buchberger(const Ideal& ideal, const MonomialOrder& order, std::size_t budget,
                             PairStrategy strategy, const std::atomic<bool>* stop) {
    GroebnerBasis out;
    out.order = order;
    out.reg = ideal.reg;
    Engine eng(out.order, stop);

    std::vector<IPoly> polys;        // every basis element ever added
    std::vector<std::size_t> active;  // indices of the current minimal basis
    std::vector<unsigned> sugar;     // sugar degree per element
    std::vector<Pair> pairs;

    // Element k with its tail fully reduced by `others`; the leading term is unchanged.
    auto tail_reduced = [&](std::size_t k, const std::vector<std::size_t>& others) {
        IPoly lead{polys[k].back()};
        IPoly tail(polys[k].begin(), polys[k].end() - 1);
        Rational mu;
        IPoly r = eng.reduce(std::move(tail), reducers_of(polys, others), true, &mu);
        // mu * tail = r + ..., so the reduced element is mu*lead + r.
        Integer a = mu.get_num();
        Integer d = mu.get_den();
        for (auto& t : r) t.c *= d;
        lead[0].c *= a;
        r.push_back(lead[0]);
        Engine::make_primitive(r);
        return r;
    };

    auto update = [&](IPoly h, unsigned sug) {
        Engine::make_primitive(h);
        std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        sugar.push_back(sug);
        const Monomial lh = polys[hi].back().m;

        // Gebauer-Moeller: new pairs (g, h).
        std::vector<Pair> C;
        for (auto g : active) {
            Monomial L = Monomial::lcm(polys[g].back().m, lh);
            unsigned s = std::max(sugar[g] + L.deg - polys[g].back().m.deg, sug + L.deg - lh.deg);
            C.push_back({g, hi, L, s});
        }
        std::vector<Pair> D;
        for (std::size_t k = 0; k < C.size(); ++k) {
            const Pair& p = C[k];
            bool coprime = Monomial::coprime(polys[p.i].back().m, lh);
            bool keep = coprime;
            if (!keep) {
                keep = true;
                for (std::size_t q = k + 1; q < C.size() && keep; ++q)
                    if (C[q].lcm.divides(p.lcm)) keep = false;
                for (std::size_t q = 0; q < D.size() && keep; ++q)
                    if (D[q].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> E;
        for (const auto& p : D)
            if (!Monomial::coprime(polys[p.i].back().m, lh)) E.push_back(p);
        // Old pairs killed by the chain criterion.
        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            bool kill = lh.divides(p.lcm) && Monomial::lcm(polys[p.i].back().m, lh) != p.lcm &&
                        Monomial::lcm(polys[p.j].back().m, lh) != p.lcm;
            if (!kill) kept.push_back(p);
        }
        for (auto& p : E) kept.push_back(p);
        pairs = std::move(kept);
        std::vector<std::size_t> next;
        for (auto g : active)
            if (!lh.divides(polys[g].back().m)) next.push_back(g);
        next.push_back(hi);
        active = std::move(next);
        // Keep the active tails reduced by the new element: stale tails make later
        // reductions swell even when the final basis has small coefficients.
        for (auto g : active) {
            if (g == hi) continue;
            const auto& pg = polys[g];
            bool hit = false;
            for (std::size_t k = 0; k + 1 < pg.size() && !hit; ++k) hit = lh.divides(pg[k].m);
            if (!hit) continue;
            std::vector<std::size_t> others;
            for (auto q : active)
                if (q != g) others.push_back(q);
            polys[g] = tail_reduced(g, others);
        }
    };

    std::vector<IPoly> inputs;
    for (const auto& g : ideal.generators) inputs.push_back(eng.from_poly(g));
    std::sort(inputs.begin(), inputs.end(),
              [&](const IPoly& a, const IPoly& b) { return eng.less(a.back().m, b.back().m); });
    for (auto& f : inputs) {
        unsigned sug = max_degree(f);
        IPoly h = eng.reduce(std::move(f), reducers_of(polys, active, &sugar), true, nullptr, &sug);
        if (!h.empty()) update(std::move(h), sug);
    }

    // Sugar strategy ranks by sugar first; ties fall back to the normal strategy.
    const bool by_sugar = strategy == PairStrategy::Sugar;
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (by_sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
        int c = out.order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    while (!pairs.empty()) {
        if (out.stats.pairs_reduced >= budget) {
            out.stats.basis_size = active.size();
            out.stats.pairs_pending = pairs.size();
            throw BudgetExceeded(budget, out.stats);
        }
        eng.check_stop();
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        ++out.stats.pairs_reduced;
        IPoly s = eng.spoly(polys[p.i], polys[p.j]);
        unsigned sug = p.sugar;
        IPoly h = eng.reduce(std::move(s), reducers_of(polys, active, &sugar), true, nullptr, &sug);
        if (h.empty()) {
            ++out.stats.zero_reductions;
            continue;
        }
        update(std::move(h), sug);
    }

    // Interreduce the minimal basis.
    std::sort(active.begin(), active.end(),
              [&](std::size_t a, std::size_t b) { return eng.less(polys[b].back().m, polys[a].back().m); });
    std::vector<IPoly> reduced;
    for (std::size_t k = 0; k < active.size(); ++k) {
        eng.check_stop();
        std::vector<std::size_t> others;
        for (std::size_t q = 0; q < active.size(); ++q)
            if (q != k) others.push_back(active[q]);
        reduced.push_back(tail_reduced(active[k], others));
    }
    for (const auto& r : reduced) out.basis.push_back(eng.to_poly(r, out.reg));
    out.stats.basis_size = out.basis.size();
    return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, std::size_t budget, PairStrategy strategy) {
    if (order.block_list().empty() && ideal.reg && ideal.reg->size() > 0)
        throw Error(ErrorKind::InvalidArgument, "empty monomial order");
    std::size_t covered = 0;
    for (const auto& b : order.block_list()) covered += b.size();
    if (ideal.reg && covered != ideal.reg->size())
        throw Error(ErrorKind::InvalidArgument, "monomial order does not cover the registry");
    const bool plain_grevlex = order.describe() == "grevlex";
    // Grevlex basis first, then the target order started from it; elimination orders
    // often avoid the intermediate coefficient swell of a direct run this way.
    auto staged = [&](const std::atomic<bool>* stop) {
        if (plain_grevlex) return run_buchberger(ideal, order, budget, PairStrategy::Normal, stop);
        auto g = run_buchberger(ideal, MonomialOrder::grevlex(ideal.reg ? ideal.reg->size() : 0), budget,
                                PairStrategy::Normal, stop);
        return run_buchberger(Ideal(ideal.reg, g.basis), order, budget, PairStrategy::Normal, stop);
    };
    if (strategy == PairStrategy::GrevlexFirst) return staged(nullptr);
    if (strategy != PairStrategy::Auto) return run_buchberger(ideal, order, budget, strategy, nullptr);

    // Race the strategies; the reduced basis is unique, so the first finisher's
    // basis is the answer. Budget failure is reported only when all run out.
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::optional<GroebnerBasis> result;
    std::exception_ptr errors[3];
    auto worker = [&](int k, PairStrategy s) {
        std::optional<GroebnerBasis> g;
        std::exception_ptr err;
        try {
            g = s == PairStrategy::GrevlexFirst ? staged(&stop) : run_buchberger(ideal, order, budget, s, &stop);
        } catch (const Cancelled&) {
        } catch (...) {
            err = std::current_exception();
        }
        std::lock_guard<std::mutex> lock(mu);
        if (g && !result) {
            result = std::move(g);
            stop = true;
        }
        errors[k] = err;
    };
    std::thread normal(worker, 0, PairStrategy::Normal);
    std::thread sugar(worker, 1, PairStrategy::Sugar);
    std::optional<std::thread> grevlex_first;
    if (!plain_grevlex) grevlex_first.emplace(worker, 2, PairStrategy::GrevlexFirst);
    normal.join();
    sugar.join();
    if (grevlex_first) grevlex_first->join();
    if (result) return std::move(*result);
    // Prefer a non-budget error (a genuine failure) over budget exhaustion.
    for (auto& e : errors) {
        if (!e) continue;
        try {
            std::rethrow_exception(e);
        } catch (const BudgetExceeded&) {
        } catch (...) {
            throw;
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    throw Error(ErrorKind::InvalidArgument, "no Groebner strategy finished");
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g) {
    require_same_registry(p.registry(), g.reg);
    if (p.is_zero()) return p;
    Engine eng(g.order);
    auto polys = basis_to_ipolys(eng, g);
    std::vector<std::size_t> idx(polys.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rational scale;
    IPoly f = eng.from_poly(p, &scale);
    Rational mu;
    IPoly r = eng.reduce(std::move(f), reducers_of(polys, idx), true, &mu);
    // mu * (p * scale) = r + ...
    return eng.to_poly(r, g.reg, mu * scale);
}

bool ideal_contains(const GroebnerBasis& g, const MultiPoly& p) { return normal_form(p, g).is_zero(); }

bool verify_groebner(const GroebnerBasis& g) {
    Engine eng(g.order);
    auto polys = basis_to_ipolys(eng, g);
    std::vector<std::size_t> idx(polys.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto rs = reducers_of(polys, idx);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        // Reduced: no term of basis[i] divisible by another leading monomial.
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : polys[i])
                if (polys[j].back().m.divides(t.m)) return false;
        }
        if (polys[i].back().c <= 0 || Engine::content(polys[i]) != 1) return false;
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (Monomial::coprime(polys[i].back().m, polys[j].back().m)) continue;
            if (!eng.reduce(eng.spoly(polys[i], polys[j]), rs, false).empty()) return false;
        }
    }
    return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& front, std::size_t budget) {
    std::set<VarIndex> f(front.begin(), front.end());
    std::vector<VarIndex> back;
    for (VarIndex v = 0; v < ideal.reg->size(); ++v)
        if (!f.count(v)) back.push_back(v);
    std::vector<VarIndex> fr(f.begin(), f.end());
    return eliminate(ideal, front, fr.empty() ? MonomialOrder::grevlex(ideal.reg->size())
                                              : MonomialOrder::block_elim(fr, back),
                     budget);
}

Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& front, const MonomialOrder& order, std::size_t budget) {
    if (!order.eliminates(front)) throw Error(ErrorKind::InvalidArgument, "order is not an elimination order for the front variables");
    for (auto v : front)
        if (v >= ideal.reg->size()) throw Error(ErrorKind::InvalidArgument, "front variable outside the registry");
    GroebnerBasis g = buchberger(ideal, order, budget);
    std::vector<MultiPoly> keep;
    for (const auto& b : g.basis) {
        bool free = std::none_of(front.begin(), front.end(), [&](VarIndex v) { return b.uses(v); });
        if (free) keep.push_back(b.primitive_positive());
    }
    for (const auto& k : keep)
        for (auto v : front)
            if (k.uses(v)) throw Error(ErrorKind::InvalidArgument, "internal: elimination left a front variable");
    return Ideal(ideal.reg, std::move(keep));
}

RegistryPtr torus_registry(const Signature& sig) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= sig.m(); ++i) {
        if (sig.block(i - 1) == Block::Monomial) {
            names.push_back("y" + std::to_string(i));
        } else {
            names.push_back("y" + std::to_string(i) + "1");
            names.push_back("y" + std::to_string(i) + "2");
        }
    }
    return make_registry(names, VarKind::TorusCoordinate);
}

Ideal torus_ideal(const Signature& sig, const RegistryPtr& reg, const std::vector<VarIndex>& coords) {
    std::vector<MultiPoly> gens;
    auto one = MultiPoly::constant(reg, 1);
    std::size_t k = 0;
    for (unsigned i = 0; i < sig.m(); ++i) {
        if (sig.block(i) == Block::Monomial) {
            ++k;
            continue;
        }
        auto a = MultiPoly::variable(reg, coords.at(k), 2);
        auto b = MultiPoly::variable(reg, coords.at(k + 1), 2);
        gens.push_back(sig.block(i) == Block::Circular ? a + b - one : a - b - one);
        k += 2;
    }
    return Ideal(reg, std::move(gens));
}

Ideal torus_ideal(const Signature& sig) {
    auto reg = torus_registry(sig);
    std::vector<VarIndex> coords(reg->size());
    std::iota(coords.begin(), coords.end(), VarIndex{0});
    return torus_ideal(sig, reg, coords);
}

}  // namespace trigvar

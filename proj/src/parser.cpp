#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "trigvar/errors.hpp"
#include "trigvar/trig_model.hpp"

namespace trigvar {

namespace {

struct Token {
    enum class Kind { Number, Ident, Punct, End } kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    Lexer(std::string_view src, std::size_t base) : src_(src), base_(base) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept(char c) {
        if (tok_.kind == Token::Kind::Punct && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_punct(char c) const { return tok_.kind == Token::Kind::Punct && tok_.text[0] == c; }
    [[noreturn]] void fail(const std::string& what) const {
        std::string found = tok_.kind == Token::Kind::End ? "end of input" : "'" + tok_.text + "'";
        throw Error(ErrorKind::SyntaxError, what + ", found " + found, tok_.pos);
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_ = Token{};
        tok_.pos = base_ + i_;
        if (i_ >= src_.size()) return;
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            if (j < src_.size() && src_[j] == '.')
                throw Error(ErrorKind::SyntaxError, "decimal literals are not exact; write a fraction", base_ + j);
            tok_.kind = Token::Kind::Number;
            tok_.text = std::string(src_.substr(i_, j - i_));
            i_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
            tok_.kind = Token::Kind::Ident;
            tok_.text = std::string(src_.substr(i_, j - i_));
            i_ = j;
        } else if (std::string_view("()+-*/^,").find(c) != std::string_view::npos) {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            ++i_;
        } else {
            throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", base_ + i_);
        }
    }

    std::string_view src_;
    std::size_t base_;
    std::size_t i_ = 0;
    Token tok_;
};

bool parse_func(const std::string& s, TrigFunc& f) {
    if (s == "cos") f = TrigFunc::Cos;
    else if (s == "sin") f = TrigFunc::Sin;
    else if (s == "cosh") f = TrigFunc::Cosh;
    else if (s == "sinh") f = TrigFunc::Sinh;
    else return false;
    return true;
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(Expr::Op op, ExprPtr a, ExprPtr b) {
    Expr e;
    e.op = op;
    e.kids = {std::move(a), std::move(b)};
    return make(std::move(e));
}

// Linear form of a trig argument: sum coef_i * t_i + constant + sum mult * phase.
struct Linear {
    std::map<unsigned, Rational> coef;
    Rational constant = 0;
    std::vector<std::pair<Phase, Rational>> phases;

    bool is_number() const {
        return phases.empty() && std::all_of(coef.begin(), coef.end(), [](const auto& kv) { return kv.second == 0; });
    }
    void scale(const Rational& q) {
        for (auto& kv : coef) kv.second *= q;
        constant *= q;
        for (auto& ph : phases) ph.second *= q;
    }
    void add(const Linear& o, int sign) {
        for (const auto& [k, v] : o.coef) coef[k] += sign * v;
        constant += sign * o.constant;
        for (const auto& ph : o.phases) phases.emplace_back(ph.first, sign * ph.second);
    }
};

struct Context {
    // Parameter mode (param list set) or registry mode (reg set).
    const Signature* sig = nullptr;
    const std::vector<std::string>* params = nullptr;
    const std::vector<std::string>* constants = nullptr;
    const VarRegistry* reg = nullptr;
};

class Parser {
public:
    Parser(std::string_view src, std::size_t base, const Context& ctx) : lex_(src, base), ctx_(ctx) {}

    std::vector<ExprPtr> tuple() {
        std::vector<ExprPtr> out;
        lex_.expect('(');
        out.push_back(expr());
        while (lex_.accept(',')) out.push_back(expr());
        lex_.expect(')');
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("unexpected trailing input");
        return out;
    }

    ExprPtr single() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("unexpected trailing input");
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (lex_.accept('+')) e = binary(Expr::Op::Add, e, term());
            else if (lex_.accept('-')) e = binary(Expr::Op::Sub, e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (lex_.accept('*')) e = binary(Expr::Op::Mul, e, unary());
            else if (lex_.accept('/')) e = binary(Expr::Op::Div, e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        if (lex_.accept('-')) {
            Expr e;
            e.op = Expr::Op::Neg;
            e.kids = {unary()};
            return make(std::move(e));
        }
        if (lex_.accept('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr b = base();
        if (lex_.accept('^')) {
            bool neg = lex_.accept('-');
            if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected an integer exponent");
            Token t = lex_.take();
            if (t.text.size() > 6) throw Error(ErrorKind::SyntaxError, "exponent too large", t.pos);
            Expr e;
            e.op = Expr::Op::Pow;
            e.exponent = std::stoi(t.text) * (neg ? -1 : 1);
            e.kids = {b};
            return make(std::move(e));
        }
        return b;
    }

    ExprPtr base() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Expr e;
            e.op = Expr::Op::Const;
            e.value = Rational(Integer(lex_.take().text, 10));
            return make(std::move(e));
        }
        if (lex_.accept('(')) {
            ExprPtr e = expr();
            lex_.expect(')');
            return e;
        }
        if (t.kind == Token::Kind::Ident) return identifier();
        lex_.fail("expected a number, name or '('");
    }

    ExprPtr identifier() {
        Token t = lex_.take();
        if (ctx_.reg) {
            std::string name = t.text;
            // Pure-registry coordinates are named like "cos(t1)".
            if (!ctx_.reg->find(name) && lex_.accept('(')) {
                if (lex_.peek().kind != Token::Kind::Ident) lex_.fail("expected a name");
                name += "(" + lex_.take().text + ")";
                lex_.expect(')');
            }
            auto idx = ctx_.reg->find(name);
            if (!idx) throw Error(ErrorKind::SyntaxError, "unknown variable '" + name + "'", t.pos);
            Expr e;
            e.op = Expr::Op::Param;
            e.index = static_cast<unsigned>(*idx);
            return make(std::move(e));
        }
        TrigFunc f;
        if (parse_func(t.text, f)) {
            if (!lex_.at_punct('(')) throw Error(ErrorKind::SyntaxError, "function '" + t.text + "' needs an argument", t.pos);
            return trig(f, t.pos);
        }
        if (auto p = param_index(t.text)) {
            if (ctx_.sig->block(*p) != Block::Monomial)
                throw Error(ErrorKind::KindClash,
                            "parameter '" + t.text + "' is " +
                                (ctx_.sig->block(*p) == Block::Circular ? "circular" : "hyperbolic") +
                                " and may only appear inside matching trigonometric functions",
                            t.pos);
            Expr e;
            e.op = Expr::Op::Param;
            e.index = *p;
            return make(std::move(e));
        }
        if (is_constant(t.text)) {
            Expr e;
            e.op = Expr::Op::NamedConst;
            e.name = t.text;
            return make(std::move(e));
        }
        if (t.text == "pair") throw Error(ErrorKind::SyntaxError, "pair(c,s) is only allowed as a trigonometric phase", t.pos);
        throw Error(ErrorKind::SyntaxError, "unknown symbol '" + t.text + "'", t.pos);
    }

    std::optional<unsigned> param_index(const std::string& s) const {
        const auto& ps = *ctx_.params;
        auto it = std::find(ps.begin(), ps.end(), s);
        if (it == ps.end()) return std::nullopt;
        return static_cast<unsigned>(it - ps.begin());
    }

    bool is_constant(const std::string& s) const {
        const auto& cs = *ctx_.constants;
        return std::find(cs.begin(), cs.end(), s) != cs.end();
    }

    // ---- trigonometric arguments ----

    ExprPtr trig(TrigFunc f, std::size_t pos) {
        lex_.expect('(');
        std::size_t arg_pos = lex_.peek().pos;
        Linear lin = lin_sum(f);
        lex_.expect(')');

        std::vector<unsigned> vars;
        for (const auto& [k, v] : lin.coef)
            if (v != 0) vars.push_back(k);
        if (vars.size() > 1)
            throw Error(ErrorKind::NonlinearTrigArgument, "trigonometric argument mixes several parameters", arg_pos);

        // Merge phases.
        std::vector<std::pair<Phase, Rational>> phases;
        for (const auto& ph : lin.phases)
            if (ph.second != 0) phases.push_back(ph);
        if (phases.size() > 1)
            throw Error(ErrorKind::InvalidPhase, "at most one phase per trigonometric argument", arg_pos);
        if (lin.constant != 0)
            throw Error(ErrorKind::InvalidPhase,
                        "a numeric offset is not an exact phase; write pair(c,s) or use a named constant", arg_pos);

        Phase phase;
        if (!phases.empty()) {
            const auto& [ph, mult] = phases.front();
            if (mult != 1 && mult != -1)
                throw Error(ErrorKind::InvalidPhase, "phases must enter with coefficient +1 or -1", arg_pos);
            phase = ph;
            if (mult == -1) {
                if (phase.kind == Phase::Kind::Named) phase.sign = -phase.sign;
                else phase.s = -phase.s;
            }
            if (phase.kind == Phase::Kind::ExactPair) validate_pair(f, phase, arg_pos);
        }

        if (vars.empty()) {
            Expr e;
            if (phase.kind == Phase::Kind::Named && phase.sign == 1) {
                e.op = Expr::Op::ConstFunc;
                e.func = f;
                e.name = phase.name;
                return make(std::move(e));
            }
            if (phase.kind == Phase::Kind::ExactPair) {
                e.op = Expr::Op::Const;
                e.value = (f == TrigFunc::Cos || f == TrigFunc::Cosh) ? phase.c : phase.s;
                return make(std::move(e));
            }
            throw Error(ErrorKind::NonlinearTrigArgument, "trigonometric argument has no parameter", arg_pos);
        }

        unsigned v = vars.front();
        Block b = ctx_.sig->block(v);
        if (b == Block::Monomial || (b == Block::Circular) != is_circular(f))
            throw Error(ErrorKind::KindClash,
                        "parameter '" + (*ctx_.params)[v] + "' cannot appear inside " + std::string(func_name(f)), pos);
        Expr e;
        e.op = Expr::Op::Trig;
        e.func = f;
        e.arg.alpha = lin.coef[v];
        e.arg.var = v;
        e.arg.phase = phase;
        return make(std::move(e));
    }

    void validate_pair(TrigFunc f, const Phase& p, std::size_t pos) {
        if (is_circular(f)) {
            if (p.c * p.c + p.s * p.s != 1)
                throw Error(ErrorKind::InvalidPhase, "circular phase pair must satisfy c^2+s^2=1", pos);
        } else if (p.c * p.c - p.s * p.s != 1 || p.c < 1) {
            throw Error(ErrorKind::InvalidPhase, "hyperbolic phase pair must satisfy c^2-s^2=1 with c>=1", pos);
        }
    }

    Linear lin_sum(TrigFunc f) {
        Linear acc = lin_term(f);
        for (;;) {
            if (lex_.accept('+')) acc.add(lin_term(f), 1);
            else if (lex_.accept('-')) acc.add(lin_term(f), -1);
            else return acc;
        }
    }

    Linear lin_term(TrigFunc f) {
        Linear acc = lin_unary(f);
        for (;;) {
            std::size_t pos = lex_.peek().pos;
            if (lex_.accept('*')) {
                Linear rhs = lin_unary(f);
                if (rhs.is_number()) acc.scale(rhs.constant);
                else if (acc.is_number()) {
                    rhs.scale(acc.constant);
                    acc = rhs;
                } else {
                    throw Error(ErrorKind::NonlinearTrigArgument, "product of parameters inside a trigonometric argument", pos);
                }
            } else if (lex_.accept('/')) {
                Linear rhs = lin_unary(f);
                if (!rhs.is_number())
                    throw Error(ErrorKind::NonlinearTrigArgument, "division by a parameter inside a trigonometric argument", pos);
                if (rhs.constant == 0) throw Error(ErrorKind::SyntaxError, "division by zero", pos);
                acc.scale(1 / rhs.constant);
            } else {
                return acc;
            }
        }
    }

    Linear lin_unary(TrigFunc f) {
        if (lex_.accept('-')) {
            Linear l = lin_unary(f);
            l.scale(-1);
            return l;
        }
        if (lex_.accept('+')) return lin_unary(f);
        Linear l = lin_base(f);
        if (lex_.at_punct('^'))
            throw Error(ErrorKind::NonlinearTrigArgument, "powers are not allowed inside a trigonometric argument", lex_.peek().pos);
        return l;
    }

    Linear lin_base(TrigFunc f) {
        Token t = lex_.peek();
        Linear l;
        if (t.kind == Token::Kind::Number) {
            lex_.take();
            l.constant = Rational(Integer(t.text, 10));
            return l;
        }
        if (lex_.accept('(')) {
            l = lin_sum(f);
            lex_.expect(')');
            return l;
        }
        if (t.kind != Token::Kind::Ident) lex_.fail("expected a linear argument");
        lex_.take();
        TrigFunc g;
        if (parse_func(t.text, g))
            throw Error(ErrorKind::NonlinearTrigArgument, "nested functions inside a trigonometric argument", t.pos);
        if (t.text == "pair") {
            lex_.expect('(');
            Linear c = lin_sum(f);
            lex_.expect(',');
            Linear s = lin_sum(f);
            lex_.expect(')');
            if (!c.is_number() || !s.is_number())
                throw Error(ErrorKind::InvalidPhase, "pair(c,s) needs rational entries", t.pos);
            Phase p;
            p.kind = Phase::Kind::ExactPair;
            p.c = c.constant;
            p.s = s.constant;
            l.phases.emplace_back(p, 1);
            return l;
        }
        if (auto p = param_index(t.text)) {
            l.coef[*p] = 1;
            return l;
        }
        if (is_constant(t.text)) {
            Phase p;
            p.kind = Phase::Kind::Named;
            p.name = t.text;
            l.phases.emplace_back(p, 1);
            return l;
        }
        throw Error(ErrorKind::SyntaxError, "unknown symbol '" + t.text + "'", t.pos);
    }

    Lexer lex_;
    const Context& ctx_;
};

void collect(const ExprPtr& e, std::set<unsigned>& used, std::map<unsigned, std::vector<Phase>>& phases) {
    if (e->op == Expr::Op::Param) used.insert(e->index);
    if (e->op == Expr::Op::Trig) {
        used.insert(e->arg.var);
        auto& v = phases[e->arg.var];
        if (std::find(v.begin(), v.end(), e->arg.phase) == v.end()) v.push_back(e->arg.phase);
    }
    for (const auto& k : e->kids) collect(k, used, phases);
}

std::vector<std::string> expand_names(const std::vector<std::string>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) {
        auto dots = w.find("..");
        if (dots == std::string::npos) {
            out.push_back(w);
            continue;
        }
        std::string a = w.substr(0, dots), b = w.substr(dots + 2);
        auto split = [](const std::string& s) {
            std::size_t k = s.size();
            while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
            return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
        };
        auto [pa, na] = split(a);
        auto [pb, nb] = split(b);
        if (pa != pb || na.empty() || nb.empty() || na.size() > 4 || nb.size() > 4)
            throw Error(ErrorKind::SyntaxError, "malformed variable range '" + w + "'");
        int lo = std::stoi(na), hi = std::stoi(nb);
        if (hi < lo) throw Error(ErrorKind::SyntaxError, "empty variable range '" + w + "'");
        for (int k = lo; k <= hi; ++k) out.push_back(pa + std::to_string(k));
    }
    return out;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::string_view func_name(TrigFunc f) {
    switch (f) {
        case TrigFunc::Cos: return "cos";
        case TrigFunc::Sin: return "sin";
        case TrigFunc::Cosh: return "cosh";
        case TrigFunc::Sinh: return "sinh";
    }
    return "?";
}

Signature parse_signature(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    std::vector<unsigned> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 2 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw Error(ErrorKind::InvalidSignature, "signature must be three non-negative integers, got '" + std::string(text) + "'");
        vals.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (vals.size() != 3)
        throw Error(ErrorKind::InvalidSignature, "signature must be three non-negative integers, got '" + std::string(text) + "'");
    Signature sig{vals[0], vals[1], vals[2]};
    if (sig.m() == 0) throw Error(ErrorKind::InvalidSignature, "signature declares no parameters");
    return sig;
}

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s.m1) + "," + std::to_string(s.m2) + "," + std::to_string(s.m3) + ")";
}

bool HybridParam::has_named_constants() const {
    std::function<bool(const ExprPtr&)> walk = [&](const ExprPtr& e) {
        if (e->op == Expr::Op::NamedConst || e->op == Expr::Op::ConstFunc) return true;
        if (e->op == Expr::Op::Trig && e->arg.phase.kind == Phase::Kind::Named) return true;
        return std::any_of(e->kids.begin(), e->kids.end(), walk);
    };
    return std::any_of(components.begin(), components.end(), walk);
}

HybridParam parse_param_at(std::string_view tuple, std::size_t base, const Signature& sig,
                           const std::vector<std::string>& params, const std::vector<std::string>& constants);

HybridParam parse_param(std::string_view tuple, const Signature& sig, const std::vector<std::string>& params,
                        const std::vector<std::string>& constants) {
    return parse_param_at(tuple, 0, sig, params, constants);
}

HybridParam parse_param_at(std::string_view tuple, std::size_t base, const Signature& sig,
                           const std::vector<std::string>& params, const std::vector<std::string>& constants) {
    if (params.size() != sig.m())
        throw Error(ErrorKind::InvalidSignature, "signature " + to_string(sig) + " needs " + std::to_string(sig.m()) +
                                                     " parameters, " + std::to_string(params.size()) + " declared");
    std::set<std::string> seen;
    for (const auto& n : params) {
        TrigFunc f;
        if (!valid_identifier(n) || parse_func(n, f) || n == "pair")
            throw Error(ErrorKind::SyntaxError, "invalid parameter name '" + n + "'");
        if (!seen.insert(n).second) throw Error(ErrorKind::SyntaxError, "duplicate name '" + n + "'");
    }
    for (const auto& n : constants) {
        TrigFunc f;
        if (!valid_identifier(n) || parse_func(n, f) || n == "pair")
            throw Error(ErrorKind::SyntaxError, "invalid constant name '" + n + "'");
        if (!seen.insert(n).second) throw Error(ErrorKind::SyntaxError, "duplicate name '" + n + "'");
    }
    Context ctx;
    ctx.sig = &sig;
    ctx.params = &params;
    ctx.constants = &constants;
    Parser parser(tuple, base, ctx);
    HybridParam out;
    out.sig = sig;
    out.params = params;
    out.constants = constants;
    out.components = parser.tuple();

    std::set<unsigned> used;
    std::map<unsigned, std::vector<Phase>> phases;
    for (const auto& c : out.components) collect(c, used, phases);
    for (unsigned i = 0; i < sig.m(); ++i)
        if (!used.count(i)) throw Error(ErrorKind::AbsentParameter, "declared parameter '" + params[i] + "' never appears");
    for (const auto& [v, list] : phases)
        if (list.size() > 1)
            out.warnings.push_back("parameter '" + params[v] + "' appears with " + std::to_string(list.size()) +
                                   " different phases");
    return out;
}

HybridParam parse_param(std::string_view text) {
    std::size_t offset = 0;
    std::optional<std::string> header;
    std::size_t body_start = 0;
    while (offset < text.size()) {
        std::size_t eol = text.find('\n', offset);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(offset, eol - offset);
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string_view::npos || line[k] == '#') {
            offset = eol + 1;
            continue;
        }
        if (line.substr(k).rfind("signature", 0) == 0) {
            header = std::string(line.substr(k));
            body_start = std::min(eol + 1, text.size());
        } else {
            body_start = offset;
        }
        break;
    }
    if (!header) throw Error(ErrorKind::SyntaxError, "missing header line 'signature (m1,m2,m3) vars ...'", body_start);

    std::string h = *header;
    if (auto cr = h.find('\r'); cr != std::string::npos) h.erase(cr);
    auto vars_at = h.find(" vars ");
    if (vars_at == std::string::npos) throw Error(ErrorKind::SyntaxError, "header needs 'vars'", offset);
    Signature sig = parse_signature(h.substr(std::string("signature").size(), vars_at - 9));
    std::string tail = h.substr(vars_at + 6);
    std::string consts_text;
    if (auto c = tail.find("constants"); c != std::string::npos) {
        consts_text = tail.substr(c + 9);
        tail = tail.substr(0, c);
    }
    auto words = [](const std::string& s) {
        std::vector<std::string> w;
        std::stringstream ss(s);
        std::string x;
        while (ss >> x) {
            // tolerate comma separated lists
            std::stringstream parts(x);
            std::string p;
            while (std::getline(parts, p, ','))
                if (!p.empty()) w.push_back(p);
        }
        return w;
    };
    std::vector<std::string> params = expand_names(words(tail));
    std::vector<std::string> constants = expand_names(words(consts_text));

    // Strip comment lines from the body while keeping byte offsets meaningful.
    std::string body(text.substr(body_start));
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eol = body.find('\n', pos);
        if (eol == std::string::npos) eol = body.size();
        std::size_t k = body.find_first_not_of(" \t\r", pos);
        if (k < eol && body[k] == '#')
            for (std::size_t j = k; j < eol; ++j) body[j] = ' ';
        pos = eol + 1;
    }
    return parse_param_at(body, body_start, sig, params, constants);
}

RatFunc parse_rational_function(std::string_view text, const RegistryPtr& reg) {
    Context ctx;
    ctx.reg = reg.get();
    Parser parser(text, 0, ctx);
    ExprPtr e = parser.single();
    std::function<RatFunc(const ExprPtr&)> flat = [&](const ExprPtr& n) -> RatFunc {
        switch (n->op) {
            case Expr::Op::Const: return RatFunc::constant(reg, n->value);
            case Expr::Op::Param: return RatFunc::variable(reg, n->index);
            case Expr::Op::Add: return flat(n->kids[0]) + flat(n->kids[1]);
            case Expr::Op::Sub: return flat(n->kids[0]) - flat(n->kids[1]);
            case Expr::Op::Mul: return flat(n->kids[0]) * flat(n->kids[1]);
            case Expr::Op::Div: return flat(n->kids[0]) / flat(n->kids[1]);
            case Expr::Op::Neg: return -flat(n->kids[0]);
            case Expr::Op::Pow: return flat(n->kids[0]).pow(n->exponent);
            default: throw Error(ErrorKind::SyntaxError, "unsupported construct in polynomial expression");
        }
    };
    return flat(e);
}

MultiPoly parse_polynomial(std::string_view text, const RegistryPtr& reg) {
    RatFunc f = parse_rational_function(text, reg);
    if (!f.is_polynomial()) throw Error(ErrorKind::SyntaxError, "expected a polynomial, got a rational function");
    MultiPoly p = f.num();
    p *= Rational(1 / f.den().constant_value());
    return p;
}

}  // namespace trigvar

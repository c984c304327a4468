#include "trigvar/cli.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigvar/poly_json.hpp"
#include "trigvar/print.hpp"

namespace trigvar::cli {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return 10;
        case ErrorKind::NonlinearTrigArgument: return 11;
        case ErrorKind::KindClash: return 12;
        case ErrorKind::AbsentParameter: return 13;
        case ErrorKind::RegistryMismatch: return 14;
        case ErrorKind::SubstitutionDenominatorVanishes: return 15;
        case ErrorKind::PoleAtPoint: return 16;
        case ErrorKind::IdenticallyUndefined: return 17;
        case ErrorKind::NamedConstantUnsupported: return 18;
        case ErrorKind::InvalidPhase: return 19;
        case ErrorKind::ResourceBudgetExceeded: return 20;
        case ErrorKind::NonpositiveRadius: return 21;
        case ErrorKind::RadiusOrderViolated: return 22;
        case ErrorKind::InvalidArgument: return 23;
        case ErrorKind::InvalidSignature: return 24;
    }
    return 23;
}

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HybridParam load_param(const JobConfig& c) {
    if (c.input.empty()) throw Error(ErrorKind::InvalidArgument, "no input parametrization");
    return parse_param(c.inline_input ? c.input : read_file(c.input));
}

// Polynomial file: '#' lines are comments; polynomials are separated by ';', or one per
// line when the file has no ';'.
std::vector<std::string> poly_texts(const std::string& text) {
    std::string body;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p != std::string::npos && line[p] == '#') continue;
        body += line;
        body += '\n';
    }
    char sep = body.find(';') != std::string::npos ? ';' : '\n';
    std::vector<std::string> out;
    std::string cur;
    std::istringstream parts(body);
    while (std::getline(parts, cur, sep)) {
        if (cur.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        out.push_back(cur);
    }
    return out;
}

unsigned ambient_dimension(const std::string& text) {
    static const std::regex var(R"(\bx([0-9]+)\b)");
    unsigned n = 0;
    for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it)
        n = std::max(n, static_cast<unsigned>(std::stoul((*it)[1].str())));
    return n;
}

Ideal load_polys(const std::string& path, unsigned n) {
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "no polynomial file given");
    auto amb = ambient_registry(n);
    std::vector<MultiPoly> gens;
    for (const auto& t : poly_texts(read_file(path))) gens.push_back(parse_polynomial(t, amb));
    if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "'" + path + "' contains no polynomial");
    return Ideal(amb, std::move(gens));
}

std::size_t budget_of(const JobConfig& c) { return c.budget ? c.budget : default_pair_budget(); }

json ratfunc_json(const RatFunc& f) {
    return json{{"text", to_string(f)}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json tuple_json(const std::vector<RatFunc>& comps, const RegistryPtr& reg) {
    json j;
    std::vector<std::string> vars;
    for (VarIndex k = 0; k < reg->size(); ++k) vars.push_back(reg->name(k));
    j["registry"] = vars;
    j["text"] = to_string(comps);
    j["components"] = json::array();
    for (const auto& f : comps) j["components"].push_back(ratfunc_json(f));
    return j;
}

json ideal_json(const Ideal& I) {
    json j;
    j["generators"] = json::array();
    for (const auto& g : I.generators) j["generators"].push_back(to_json(g));
    std::vector<std::string> text;
    for (const auto& g : I.generators) text.push_back(to_string(g));
    j["text"] = text;
    return j;
}

void print_ideal(const Ideal& I, std::ostream& out) {
    for (const auto& g : I.generators) out << to_string(g) << '\n';
}

std::string hybrid_text(const HybridParam& h) {
    std::string s = "signature " + to_string(h.sig) + " vars";
    for (const auto& p : h.params) s += " " + p;
    if (!h.constants.empty()) {
        s += " constants";
        for (const auto& a : h.constants) s += " " + a;
    }
    s += "\n(";
    for (std::size_t i = 0; i < h.components.size(); ++i) {
        if (i) s += ", ";
        s += to_string(h.components[i], h.params);
    }
    return s + ")";
}

void warn(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

std::vector<std::string> scale_notes(const PureParam& p) {
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < p.scale.size(); ++i)
        if (p.scale[i] != 1) notes.push_back(p.params[i] + " -> " + to_string(p.scale[i]) + "*" + p.params[i]);
    return notes;
}

PureParam load_pure(const JobConfig& c, std::ostream& err) {
    auto h = load_param(c);
    warn(h.warnings, err);
    auto pure = convert_pure(h);
    for (const auto& n : scale_notes(pure)) err << "note: reparametrized " << n << '\n';
    return pure;
}

// Rational form of any input: (0,0,m) files are taken as they are.
RationalParam load_rational(const JobConfig& c, std::ostream& err) {
    auto h = load_param(c);
    warn(h.warnings, err);
    if (h.sig.m1 == 0 && h.sig.m2 == 0) return to_rational_param(h);
    auto pure = convert_pure(h);
    for (const auto& n : scale_notes(pure)) err << "note: reparametrized " << n << '\n';
    return trig_to_rational(pure);
}

int cmd_pure(const JobConfig& c, std::ostream& out, std::ostream& err) {
    auto p = load_pure(c, err);
    if (c.format == Format::Json) {
        json j = tuple_json(p.components, p.reg);
        j["signature"] = to_string(p.sig);
        std::vector<std::string> scale;
        for (const auto& s : p.scale) scale.push_back(to_string(s));
        j["scale"] = scale;
        out << j.dump(2) << '\n';
    } else {
        out << to_string(p.components) << '\n';
    }
    return 0;
}

int cmd_to_rational(const JobConfig& c, std::ostream& out, std::ostream& err) {
    auto r = load_rational(c, err);
    if (c.format == Format::Json)
        out << tuple_json(r.components, r.reg).dump(2) << '\n';
    else
        out << to_string(r.components) << '\n';
    return 0;
}

int cmd_to_trig(const JobConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.signature) throw Error(ErrorKind::InvalidSignature, "to-trig needs --signature m1,m2,m3");
    auto h = load_param(c);
    warn(h.warnings, err);
    auto r = to_rational_param(h);
    auto p = rational_to_trig(r, *c.signature);
    if (c.format == Format::Json) {
        json j = tuple_json(p.components, p.reg);
        j["signature"] = to_string(p.sig);
        j["psi"] = build_torus_maps(p.sig, p.params).psi;
        out << j.dump(2) << '\n';
    } else {
        out << to_string(p.components) << '\n';
    }
    return 0;
}

int cmd_implicitize(const JobConfig& c, std::ostream& out, std::ostream& err) {
    if (c.option != 1 && c.option != 2) throw Error(ErrorKind::InvalidArgument, "--option must be 1 or 2");
    ImplicitOptions opt{c.order, budget_of(c)};
    Ideal I = c.option == 1 ? implicitize_rational(load_rational(c, err), opt) : implicitize_trig(load_pure(c, err), opt);
    if (c.format == Format::Json) {
        json j = ideal_json(I);
        j["option"] = c.option;
        j["order"] = c.order == ElimOrder::Lex ? "lex" : "block-grevlex";
        out << j.dump(2) << '\n';
    } else {
        print_ideal(I, out);
    }
    return 0;
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& err) {
    auto p = load_pure(c, err);
    Ideal cand = load_polys(c.polys, p.n());
    auto ok = verify_implicit(p, cand);
    bool all = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
    if (c.format == Format::Json) {
        out << json{{"vanishes", ok}, {"all", all}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < ok.size(); ++i)
            out << "candidate " << i + 1 << ": " << (ok[i] ? "vanishes" : "does not vanish") << '\n';
    }
    return all ? 0 : 1;
}

int cmd_cycloid(const JobConfig& c, std::ostream& out, std::ostream&) {
    auto h = c.subcommand == "epicycloid" ? epicycloid(c.R, c.r) : hypocycloid(c.R, c.r);
    if (c.format == Format::Json) {
        auto p = convert_pure(h);
        json j{{"input", hybrid_text(h)}, {"pure", tuple_json(p.components, p.reg)}};
        out << j.dump(2) << '\n';
    } else {
        out << hybrid_text(h) << '\n';
    }
    return 0;
}

int cmd_sample(const JobConfig& c, std::ostream& out, std::ostream& err) {
    auto h = load_param(c);
    warn(h.warnings, err);
    if (c.ranges.size() != h.sig.m())
        throw Error(ErrorKind::InvalidArgument, "sample needs one --range per parameter (" +
                                                    std::to_string(h.sig.m()) + ")");
    for (const auto& r : c.ranges)
        if (r.count < 2) throw Error(ErrorKind::InvalidArgument, "grid counts must be at least 2");
    std::optional<Ideal> check;
    if (!c.polys.empty()) check = load_polys(c.polys, h.n());
    const Ideal* chk = check ? &*check : nullptr;
    PointCloud cloud = c.rational ? sample(load_rational(c, err), c.ranges, chk) : sample(h, c.ranges, chk);
    if (c.format == Format::Json)
        out << to_json(cloud).dump(2) << '\n';
    else
        out << to_csv(cloud);
    if (cloud.skipped) err << "note: skipped " << cloud.skipped << " pole points\n";
    return 0;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_intersect(const JobConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.implicit.empty()) {
        // Two implicit equations: Groebner basis of the combined ideal.
        std::string a = read_file(c.implicit), b = read_file(c.polys.empty() ? c.implicit : c.polys);
        unsigned n = std::max(ambient_dimension(a), ambient_dimension(b));
        Ideal A = load_polys(c.implicit, n), B = load_polys(c.polys, n);
        auto gens = A.generators;
        gens.insert(gens.end(), B.generators.begin(), B.generators.end());
        auto order = c.order == ElimOrder::Lex ? MonomialOrder::lex(n) : MonomialOrder::grevlex(n);
        auto g = buchberger(Ideal(A.reg, gens), order, budget_of(c));
        Ideal basis(g.reg, g.basis);
        if (c.format == Format::Json) {
            json j = ideal_json(basis);
            j["order"] = order.describe();
            out << j.dump(2) << '\n';
        } else {
            print_ideal(basis, out);
        }
        return 0;
    }
    if (c.trig) {
        auto p = load_pure(c, err);
        Ideal h = load_polys(c.polys, p.n());
        MultiPoly cond = intersect_condition_trig(p, h.generators.front());
        if (c.format == Format::Json)
            out << json{{"condition", to_json(cond)}, {"text", to_string(cond)}}.dump(2) << '\n';
        else
            out << "condition: " << to_string(cond) << '\n';
        return 0;
    }
    auto p = load_rational(c, err);
    Ideal h = load_polys(c.polys, p.n());
    MultiPoly cond = intersect_condition(p, h.generators.front());
    json j{{"condition", to_json(cond)}, {"text", to_string(cond)}, {"factors", json::array()}};
    std::ostringstream text;
    text << "condition: " << to_string(cond) << '\n';
    if (!cond.is_zero()) {
        for (VarIndex i = 0; i < p.m(); ++i) {
            std::vector<VarIndex> others;
            for (VarIndex k = 0; k < p.reg->size(); ++k)
                if (k != i) others.push_back(k);
            MultiPoly factor = split_content(cond, others).first.primitive_positive();
            if (factor.is_constant()) continue;
            auto roots = isolate_real_roots(factor, c.root_width);
            const std::string& name = p.params[i];
            text << "factor " << name << ": " << to_string(factor) << '\n';
            for (const auto& r : roots) {
                text << "root " << name << " = " << fmt(r.approx) << " in [" << to_string(r.lo) << ", "
                     << to_string(r.hi) << "]";
                if (r.multiplicity > 1) text << " multiplicity " << r.multiplicity;
                text << '\n';
            }
            j["factors"].push_back(
                json{{"parameter", name}, {"factor", to_json(factor)}, {"text", to_string(factor)}, {"roots", to_json(roots)}});
        }
    }
    if (c.format == Format::Json)
        out << j.dump(2) << '\n';
    else
        out << text.str();
    return 0;
}

}  // namespace

int run(const JobConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (!c.ranges.empty() && c.subcommand != "sample")
            throw Error(ErrorKind::InvalidArgument, "ranges are only meaningful for sample");
        if (c.format == Format::Csv && c.subcommand != "sample")
            throw Error(ErrorKind::InvalidArgument, "csv output is only available for sample");
        if (c.subcommand == "pure") return cmd_pure(c, out, err);
        if (c.subcommand == "to-rational") return cmd_to_rational(c, out, err);
        if (c.subcommand == "to-trig") return cmd_to_trig(c, out, err);
        if (c.subcommand == "implicitize") return cmd_implicitize(c, out, err);
        if (c.subcommand == "verify") return cmd_verify(c, out, err);
        if (c.subcommand == "epicycloid" || c.subcommand == "hypocycloid") return cmd_cycloid(c, out, err);
        if (c.subcommand == "sample") return cmd_sample(c, out, err);
        if (c.subcommand == "intersect") return cmd_intersect(c, out, err);
        throw Error(ErrorKind::InvalidArgument, "unknown subcommand '" + c.subcommand + "'");
    } catch (const BudgetExceeded& e) {
        const auto& s = e.stats();
        err << e.name() << '\n' << e.what() << '\n';
        err << "pairs_reduced=" << s.pairs_reduced << " zero_reductions=" << s.zero_reductions
            << " basis_size=" << s.basis_size << " pairs_pending=" << s.pairs_pending << '\n';
        return exit_code(e.kind());
    } catch (const Error& e) {
        err << e.name() << '\n' << e.what() << '\n';
        return exit_code(e.kind());
    }
}

namespace {

Rational parse_radius(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw CLI::ValidationError("radius", "'" + s + "' is not a rational number");
    }
}

ParamRange parse_range(const std::string& s) {
    // lo:hi:count
    auto a = s.find(':'), b = s.rfind(':');
    if (a == std::string::npos || a == b) throw CLI::ValidationError("--range", "expected lo:hi:count, got '" + s + "'");
    try {
        std::size_t used = 0;
        ParamRange r;
        r.lo = std::stod(s.substr(0, a));
        r.hi = std::stod(s.substr(a + 1, b - a - 1));
        long count = std::stol(s.substr(b + 1), &used);
        if (used != s.size() - b - 1 || count < 2) throw std::invalid_argument("count");
        r.count = static_cast<unsigned>(count);
        return r;
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--range", "expected lo:hi:count with count >= 2, got '" + s + "'");
    }
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid trigonometric parametrizations: conversion, implicitization and geometry"};
    app.require_subcommand(1, 1);
    JobConfig c;
    std::string format = "text", order = "block", signature, expr, R, r, width;
    std::vector<std::string> ranges;

    auto add_input = [&](CLI::App* sub) {
        auto* file = sub->add_option("file", c.input, "parametrization file");
        auto* e = sub->add_option("-e,--expr", expr, "parametrization text instead of a file");
        file->excludes(e);
        e->excludes(file);
    };
    auto add_format = [&](CLI::App* sub, bool csv) {
        std::vector<std::string> allowed{"text", "json"};
        if (csv) allowed.push_back("csv");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", c.budget, "Groebner pair budget (default TRIGVAR_PAIR_BUDGET or 200000)")
            ->check(CLI::PositiveNumber);
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", order, "monomial order")->check(CLI::IsMember({"block", "lex"}));
    };

    auto* pure = app.add_subcommand("pure", "rewrite in pure form");
    add_input(pure);
    add_format(pure, false);
    auto* to_rat = app.add_subcommand("to-rational", "rational parametrization of the pure form");
    add_input(to_rat);
    add_format(to_rat, false);
    auto* to_trig = app.add_subcommand("to-trig", "trigonometric form of a rational parametrization");
    add_input(to_trig);
    add_format(to_trig, false);
    to_trig->add_option("--signature", signature, "target signature m1,m2,m3")->required();
    auto* impl = app.add_subcommand("implicitize", "implicit equations by elimination");
    add_input(impl);
    add_format(impl, false);
    add_budget(impl);
    add_order(impl);
    impl->add_option("--option", c.option, "1: rational parametrization, 2: trigonometric")->check(CLI::IsMember({1, 2}));
    auto* verify = app.add_subcommand("verify", "check that candidate polynomials vanish on the parametrization");
    add_input(verify);
    add_format(verify, false);
    verify->add_option("--candidates", c.polys, "polynomial file in x1..xn")->required();
    auto* epi = app.add_subcommand("epicycloid", "generalized epicycloid surface");
    auto* hypo = app.add_subcommand("hypocycloid", "generalized hypocycloid surface");
    for (auto* sub : {epi, hypo}) {
        sub->add_option("R", R, "fixed radius")->required();
        sub->add_option("r", r, "rolling radius")->required();
        add_format(sub, false);
    }
    auto* smp = app.add_subcommand("sample", "evaluate on a uniform parameter grid");
    add_input(smp);
    add_format(smp, true);
    smp->add_option("--range", ranges, "lo:hi:count, one per parameter")->required();
    smp->add_option("--check", c.polys, "polynomial file; residuals are reported per point");
    smp->add_flag("--rational", c.rational, "evaluate the rational form (parameters are then rational)");
    auto* inter = app.add_subcommand("intersect", "intersect a parametrization with an implicit surface");
    add_input(inter);
    add_format(inter, false);
    add_budget(inter);
    add_order(inter);
    inter->add_option("--surface", c.polys, "implicit surface file in x1..xn")->required();
    inter->add_option("--implicit", c.implicit, "implicit equation file; computes a Groebner basis of both");
    inter->add_option("--width", width, "root isolation width (rational)");
    inter->add_flag("--trig", c.trig, "trigonometric condition modulo the torus relations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    if (!expr.empty()) {
        c.input = expr;
        c.inline_input = true;
    }
    c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    if (c.subcommand == "sample" && format == "text") c.format = Format::Csv;
    c.order = order == "lex" ? ElimOrder::Lex : ElimOrder::BlockGrevlex;
    try {
        for (const auto& s : ranges) c.ranges.push_back(parse_range(s));
        if (!R.empty()) c.R = parse_radius(R);
        if (!r.empty()) c.r = parse_radius(r);
        if (!width.empty()) {
            c.root_width = parse_radius(width);
            if (c.root_width <= 0) throw CLI::ValidationError("--width", "must be positive");
        }
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    if (!signature.empty()) {
        try {
            c.signature = parse_signature(signature.front() == '(' ? signature : "(" + signature + ")");
        } catch (const Error& e) {
            err << e.name() << '\n' << e.what() << '\n';
            return exit_code(e.kind());
        }
    }
    if (c.input.empty() && c.subcommand != "epicycloid" && c.subcommand != "hypocycloid" &&
        !(c.subcommand == "intersect" && !c.implicit.empty())) {
        err << "a parametrization file or --expr is required\n";
        return 2;
    }
    return run(c, out, err);
}

}  // namespace trigvar::cli

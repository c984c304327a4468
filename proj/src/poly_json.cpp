#include "trigvar/poly_json.hpp"

#include "trigvar/errors.hpp"

namespace trigvar {

nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json vars = nlohmann::json::array();
    const auto& reg = *p.registry();
    for (VarIndex v = 0; v < reg.size(); ++v) vars.push_back(reg.name(v));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (VarIndex v = 0; v < reg.size(); ++v) exps.push_back(m[v]);
        terms.push_back({{"coef", to_fraction_string(c)}, {"exps", exps}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

nlohmann::json to_json(const RatFunc& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

MultiPoly poly_from_json(const nlohmann::json& j, RegistryPtr reg) {
    try {
        std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
        if (!reg) {
            reg = make_registry(names, VarKind::Ambient);
        } else {
            if (names.size() != reg->size())
                throw Error(ErrorKind::RegistryMismatch, "JSON variable list does not match the registry");
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] != reg->name(i))
                    throw Error(ErrorKind::RegistryMismatch, "JSON variable list does not match the registry");
        }
        std::vector<MultiPoly::Term> terms;
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exps").get<std::vector<int>>();
            if (exps.size() != names.size())
                throw Error(ErrorKind::SyntaxError, "exponent vector length differs from the variable count");
            Monomial m;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] < 0 || exps[i] > 65535) throw Error(ErrorKind::SyntaxError, "exponent out of range");
                m.set(i, static_cast<std::uint16_t>(exps[i]));
            }
            terms.emplace_back(m, parse_rational(t.at("coef").get<std::string>()));
        }
        return MultiPoly::from_terms(reg, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SyntaxError, std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace trigvar

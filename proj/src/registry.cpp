#include "trigvar/registry.hpp"

#include "trigvar/errors.hpp"
#include "trigvar/monomial.hpp"

namespace trigvar {

VarRegistry::VarRegistry(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars)
        throw Error(ErrorKind::InvalidArgument,
                    "registry holds " + std::to_string(vars_.size()) + " variables; the limit is " +
                        std::to_string(kMaxVars));
    for (VarIndex i = 0; i < vars_.size(); ++i) {
        auto [it, inserted] = lookup_.emplace(vars_[i].name, i);
        if (!inserted)
            throw Error(ErrorKind::RegistryMismatch, "duplicate variable name '" + vars_[i].name + "'");
    }
}

std::optional<VarIndex> VarRegistry::find(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

VarIndex VarRegistry::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(ErrorKind::RegistryMismatch, "unknown variable '" + std::string(name) + "'");
}

bool VarRegistry::operator==(const VarRegistry& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].kind != other.vars_[i].kind) return false;
    return true;
}

RegistryPtr make_registry(std::vector<VarSpec> vars) {
    return std::make_shared<const VarRegistry>(std::move(vars));
}

RegistryPtr make_registry(const std::vector<std::string>& names, VarKind kind) {
    std::vector<VarSpec> vars;
    vars.reserve(names.size());
    for (const auto& n : names) vars.push_back({n, kind});
    return make_registry(std::move(vars));
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace trigvar

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trigvar {

enum class VarKind {
    Parameter,        // t_i
    TorusCoordinate,  // cos(t_i), sin(t_i), cosh(t_j), sinh(t_j) and the x of the torus maps
    Ambient,          // x_i of the implicit equations
    Rabinowitsch,     // W
    NamedConstant,    // symbolic real constants, e.g. cos(a1)
};

using VarIndex = std::size_t;

struct VarSpec {
    std::string name;
    VarKind kind;
};

// Ordered, immutable list of variable names. Position fixes the exponent slot and the
// variable precedence (index 0 is the largest variable).
class VarRegistry {
public:
    explicit VarRegistry(std::vector<VarSpec> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    const std::string& name(VarIndex i) const { return vars_.at(i).name; }
    VarKind kind(VarIndex i) const { return vars_.at(i).kind; }
    const std::vector<VarSpec>& vars() const noexcept { return vars_; }

    std::optional<VarIndex> find(std::string_view name) const;
    VarIndex index(std::string_view name) const;  // throws RegistryMismatch when absent

    bool operator==(const VarRegistry& other) const;

private:
    std::vector<VarSpec> vars_;
    std::unordered_map<std::string, VarIndex> lookup_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<VarSpec> vars);
RegistryPtr make_registry(const std::vector<std::string>& names, VarKind kind);

bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace trigvar

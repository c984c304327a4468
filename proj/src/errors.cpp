#include "trigvar/errors.hpp"

namespace trigvar {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NonlinearTrigArgument: return "NonlinearTrigArgument";
        case ErrorKind::KindClash: return "KindClash";
        case ErrorKind::AbsentParameter: return "AbsentParameter";
        case ErrorKind::InvalidPhase: return "InvalidPhase";
        case ErrorKind::InvalidSignature: return "InvalidSignature";
        case ErrorKind::RegistryMismatch: return "RegistryMismatch";
        case ErrorKind::SubstitutionDenominatorVanishes: return "SubstitutionDenominatorVanishes";
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::IdenticallyUndefined: return "IdenticallyUndefined";
        case ErrorKind::NamedConstantUnsupported: return "NamedConstantUnsupported";
        case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
        case ErrorKind::NonpositiveRadius: return "NonpositiveRadius";
        case ErrorKind::RadiusOrderViolated: return "RadiusOrderViolated";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, std::optional<std::size_t> pos) {
    std::string out(error_name(kind));
    out += ": ";
    out += message;
    if (pos) out += " (at offset " + std::to_string(*pos) + ")";
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(decorate(kind, message, position)), kind_(kind), position_(position) {}

BudgetExceeded::BudgetExceeded(std::size_t budget, BuchbergerStats stats)
    : Error(ErrorKind::ResourceBudgetExceeded,
            "pair budget of " + std::to_string(budget) + " exhausted after " +
                std::to_string(stats.pairs_reduced) + " reductions (basis size " +
                std::to_string(stats.basis_size) + ", " + std::to_string(stats.pairs_pending) +
                " pairs pending)"),
      budget_(budget),
      stats_(stats) {}

}  // namespace trigvar

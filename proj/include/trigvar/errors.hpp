#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trigvar {

enum class ErrorKind {
    SyntaxError,
    NonlinearTrigArgument,
    KindClash,
    AbsentParameter,
    InvalidPhase,
    InvalidSignature,
    RegistryMismatch,
    SubstitutionDenominatorVanishes,
    PoleAtPoint,
    IdenticallyUndefined,
    NamedConstantUnsupported,
    ResourceBudgetExceeded,
    NonpositiveRadius,
    RadiusOrderViolated,
    InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every typed failure of the library is an Error; the kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> position = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    // Byte offset into the parsed text, for syntax-level errors.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

struct BuchbergerStats {
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size = 0;
    std::size_t pairs_pending = 0;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t budget, BuchbergerStats stats);
    const BuchbergerStats& stats() const noexcept { return stats_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
    BuchbergerStats stats_;
};

}  // namespace trigvar

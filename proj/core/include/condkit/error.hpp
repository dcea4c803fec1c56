#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace condkit {

enum class ErrorCode {
    InvalidInput,
    SingularMatrix,
    InvalidPlan,
    DegeneratePoint,
    EmptyCloud,
    BudgetExceeded,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::InvalidPlan: return "InvalidPlan";
        case ErrorCode::DegeneratePoint: return "DegeneratePoint";
        case ErrorCode::EmptyCloud: return "EmptyCloud";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it survives a plain `what()`.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace condkit

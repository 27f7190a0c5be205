#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankgini {

enum class ErrorKind {
    EmptyOrSingleton,
    NonPositiveWeight,
    NonFiniteValue,
    NegativeResponse,
    ZeroTotalResponse,
    UnequalWeights,
    OutOfRange,
    DegenerateResponses,
    LengthMismatch,
    BadParams,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyOrSingleton: return "EmptyOrSingleton";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::NegativeResponse: return "NegativeResponse";
    case ErrorKind::ZeroTotalResponse: return "ZeroTotalResponse";
    case ErrorKind::UnequalWeights: return "UnequalWeights";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateResponses: return "DegenerateResponses";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadParams: return "BadParams";
    }
    return "Unknown";
}

/// Library error. Carries a machine-readable kind and, when the failure is
/// tied to one input record, its zero-based position.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> record = std::nullopt)
        : std::runtime_error(message), kind_(kind), record_(record) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> record() const noexcept { return record_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> record_;
};

} // namespace rankgini

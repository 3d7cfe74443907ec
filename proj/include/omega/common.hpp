#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

/// Index of a carrier element. The additive identity is always 0.
using Element = std::uint32_t;

enum class ErrorKind {
    NotAGroup,
    OmegaZeroViolation,
    MalformedTable,
    ArityMismatch,
    UnknownOperation,
    SignatureMismatch,
    LawViolation,
    UnboundVariable,
    NotASubgroup,
    NotContained,
    TooLarge,
    NotARing,
    OracleDisagreement,
    ParseError,
    GuardExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and testable,
/// the message carries witnesses and locations.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace omega

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

enum class ErrorKind {
    NotPrime,
    NotPrimePower,
    SizeLimitExceeded,
    DivisionByZero,
    FieldMismatch,
    InvalidSubfield,
    OrderDoesNotDivide,
    OutOfRange,
    ZeroPair,
    MalformedFile,
    HeaderMismatch,
    BadArity,
    BudgetExceeded,
    HypothesisViolated,
    Io,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; `kind()`
// lets callers (and the CLI exit-code mapping) tell them apart.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace turan

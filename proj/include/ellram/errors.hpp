#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellram {

// Failure taxonomy shared by the library and the CLI. Every library error
// carries one of these codes; the CLI maps codes to stable exit statuses.
enum class ErrorCode {
    ParseError,            // bad expression syntax, bad exponent, non-polynomial input
    DegenerateInput,       // zero polynomial / zero function where nonzero is required
    PreconditionViolation, // caller broke a documented precondition
    ValidationError,       // invalid request or Weierstrass data (p = 0, q = 0, p = q)
    UnsupportedSurface,    // additive (unstable) fiber present
    InapplicableModel,     // max(deg p, deg q) odd: no even reversal model at infinity
    InvariantViolation,    // internal consistency check failed
};

constexpr std::string_view error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::DegenerateInput: return "degenerate_input";
        case ErrorCode::PreconditionViolation: return "precondition_violation";
        case ErrorCode::ValidationError: return "validation_error";
        case ErrorCode::UnsupportedSurface: return "unsupported_surface";
        case ErrorCode::InapplicableModel: return "inapplicable_model";
        case ErrorCode::InvariantViolation: return "invariant_violation";
    }
    return "unknown_error";
}

// Exit statuses are part of the CLI contract; do not renumber.
constexpr int error_exit_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::DegenerateInput: return 3;
        case ErrorCode::PreconditionViolation: return 3;
        case ErrorCode::ValidationError: return 3;
        case ErrorCode::UnsupportedSurface: return 4;
        case ErrorCode::InapplicableModel: return 5;
        case ErrorCode::InvariantViolation: return 6;
    }
    return 6;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    int exit_status() const noexcept { return error_exit_status(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ellram

#pragma once

#include <stdexcept>
#include <string>

namespace kfl {

enum class ErrorCode {
    DivisionByZero,
    RadicandMismatch,
    BadIndex,
    ZeroK,
    BadP,
    ExceptionalK,
    BadSlope,
    BadShape,
    ZeroPolynomial,
    NotFactorable,
    ConstructionFailure,
    BadSequence,
    InternalInconsistency,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::RadicandMismatch: return "RADICAND_MISMATCH";
    case ErrorCode::BadIndex: return "BAD_INDEX";
    case ErrorCode::ZeroK: return "ZERO_K";
    case ErrorCode::BadP: return "BAD_P";
    case ErrorCode::ExceptionalK: return "EXCEPTIONAL_K";
    case ErrorCode::BadSlope: return "BAD_SLOPE";
    case ErrorCode::BadShape: return "BAD_SHAPE";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::NotFactorable: return "NOT_FACTORABLE";
    case ErrorCode::ConstructionFailure: return "CONSTRUCTION_FAILURE";
    case ErrorCode::BadSequence: return "BAD_SEQUENCE";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    }
    return "UNKNOWN";
}

/// Domain error with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace kfl

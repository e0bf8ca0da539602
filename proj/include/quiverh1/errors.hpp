#pragma once

#include <stdexcept>
#include <string>

namespace qh1 {

enum class ErrorKind {
    // input-level (CLI exit code 1)
    InputSyntax,
    UnknownVertex,
    UnknownArrow,
    NonComposable,
    NotPrime,
    RelationTooShort,
    NonMinimal,
    DuplicateName,
    NotParallel,
    BadSpec,
    CapExceeded,
    WrongCharacteristic,
    Inapplicable,
    // structural (CLI exit code 2)
    InfiniteDimensional,
    // internal invariant sentinels (CLI exit code 3); never expected to fire
    NotSubspace,
    ComplexBroken,
    DimensionMismatch,
    NotEBimodule,
    OracleMismatch,
    Internal,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::InfiniteDimensional:
            return 2;
        case ErrorKind::NotSubspace:
        case ErrorKind::ComplexBroken:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotEBimodule:
        case ErrorKind::OracleMismatch:
        case ErrorKind::Internal:
            return 3;
        default:
            return 1;
    }
}

} // namespace qh1

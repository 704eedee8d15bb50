#pragma once

#include <stdexcept>
#include <string>

namespace hocolim {

/// Every failure raised by the engine carries one of these kinds so that
/// front ends can map it onto an exit status without parsing messages.
enum class ErrorKind {
    Syntax,
    Resolution,
    Shape,
    Functoriality,
    RingMismatch,
    NonFreeHomology,
    TruncationExceeded,
    IndexOutOfRange,
    InvalidDiagram,
    InsufficientTruncation,
    InfiniteAntidiagonal,
    UnboundedValues,
    LoopsInIndexCategory,
    Invariant,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Resolution: return "ResolutionError";
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Functoriality: return "FunctorialityError";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonFreeHomology: return "NonFreeHomology";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorKind::InfiniteAntidiagonal: return "InfiniteAntidiagonal";
    case ErrorKind::UnboundedValues: return "UnboundedValues";
    case ErrorKind::LoopsInIndexCategory: return "LoopsInIndexCategory";
    case ErrorKind::Invariant: return "InvariantViolation";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

/// Internal consistency check; a failure here means a bug, not bad input.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::Invariant, what);
}

} // namespace hocolim

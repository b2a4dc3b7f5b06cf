#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

// Failure categories surfaced by the library. The CLI maps these to exit
// code 2; everything else is treated as an internal error.
enum class ErrorKind {
    InvalidInvariant,
    InvalidInput,
    ParseError,
    GeometryNotApplicable,
    NotZHS,
    WrongB0,
    PoincareExcluded,
    SphereExcluded,
    ConstructionMismatch,
    IoError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInvariant: return "InvalidInvariant";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GeometryNotApplicable: return "GeometryNotApplicable";
    case ErrorKind::NotZHS: return "NotZHS";
    case ErrorKind::WrongB0: return "WrongB0";
    case ErrorKind::PoincareExcluded: return "PoincareExcluded";
    case ErrorKind::SphereExcluded: return "SphereExcluded";
    case ErrorKind::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace seifert

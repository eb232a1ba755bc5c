#pragma once

#include <stdexcept>
#include <string>

namespace pframe {

enum class ErrorKind {
    DimensionMismatch,
    NonFinite,
    InvalidArgument,
    Singular,
    NotAnASF,
    NotAFrame,
    AlphaBetaOutOfRange,
    USingular,
    NonpositiveBounds,
    GenerationFailed,
    MissingField,
    Parse,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotAnASF: return "NotAnASF";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::AlphaBetaOutOfRange: return "AlphaBetaOutOfRange";
    case ErrorKind::USingular: return "USingular";
    case ErrorKind::NonpositiveBounds: return "NonpositiveBounds";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pframe

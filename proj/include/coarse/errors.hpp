/**
 * Error codes and the exception type shared by every module.
 */

#ifndef COARSE_ERRORS_HPP
#define COARSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coarse {

enum class ErrorCode {
    InvalidParameter,
    ParamOutOfRange,
    UnsupportedKind,
    WindowTooSmall,
    DomainMismatch,
    TableIncomplete,
    IterateEscapesWindow,
    EmptyFamilyOnUnbounded,
    DisagreeingCharacterizations,
    NotNested,
    AmbiguousAssignment,
    EndsNotFinite,
    CoverNotVerified,
    InfiniteEndsInIntersection,
    AmbiguousEndRestriction,
    InfiniteEnds,
    NotARefinement,
    SyntaxError,
    UnknownName,
    DuplicateName,
    UnknownCommand,
};

const char* error_code_name(ErrorCode code);

class CoarseError : public std::runtime_error {
public:
    CoarseError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorCode::UnsupportedKind: return "UnsupportedKind";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::TableIncomplete: return "TableIncomplete";
        case ErrorCode::IterateEscapesWindow: return "IterateEscapesWindow";
        case ErrorCode::EmptyFamilyOnUnbounded: return "EmptyFamilyOnUnbounded";
        case ErrorCode::DisagreeingCharacterizations: return "DisagreeingCharacterizations";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::AmbiguousAssignment: return "AmbiguousAssignment";
        case ErrorCode::EndsNotFinite: return "EndsNotFinite";
        case ErrorCode::CoverNotVerified: return "CoverNotVerified";
        case ErrorCode::InfiniteEndsInIntersection: return "InfiniteEndsInIntersection";
        case ErrorCode::AmbiguousEndRestriction: return "AmbiguousEndRestriction";
        case ErrorCode::InfiniteEnds: return "InfiniteEnds";
        case ErrorCode::NotARefinement: return "NotARefinement";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
    }
    return "UnknownError";
}

}  // namespace coarse

#endif  // COARSE_ERRORS_HPP

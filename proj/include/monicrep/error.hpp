#pragma once

#include <stdexcept>
#include <string>

namespace monicrep {

enum class ErrorCode {
    BadField,
    DimensionMismatch,
    CyclicQuiver,
    NotAssociative,
    BadUnit,
    BadIdempotents,
    BadRadical,
    NotAdmissible,
    MissingIdempotents,
    BadBimodule,
    HypothesisViolated,
    LiftFailed,
    WindowTooShort,
    NotMonic,
    PreconditionUnknown,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace monicrep

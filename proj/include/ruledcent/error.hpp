#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruledcent {

enum class ErrorCode {
    ParseError,
    BelowNormalization,
    InvalidLambda,
    TrivialGroup,
    NotEffective,
    ParityMismatch,
    NotInvertible,
    NotHamiltonian,
    NotApplicable,
    NoSolution,
    InvalidDomain,
    OutOfRegime,
    UnresolvedClass,
    Overflow,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ruledcent

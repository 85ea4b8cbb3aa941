#include "ruledcent/error.hpp"

namespace ruledcent {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BelowNormalization: return "BelowNormalization";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::OutOfRegime: return "OutOfRegime";
    case ErrorCode::UnresolvedClass: return "UnresolvedClass";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace ruledcent

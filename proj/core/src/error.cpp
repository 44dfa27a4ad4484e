#include "twotype/error.hpp"

namespace tt {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::CochainMismatch: return "CochainMismatch";
    case ErrorKind::NotPeiffer: return "NotPeiffer";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::SectionMismatch: return "SectionMismatch";
    case ErrorKind::IncompatibleTypes: return "IncompatibleTypes";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::QuotientNotAssociative: return "QuotientNotAssociative";
    case ErrorKind::BadSignature: return "BadSignature";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind k, const std::string& msg)
    : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k), msg_(msg) {}

void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace tt

#pragma once

#include <stdexcept>
#include <string>

namespace tt {

enum class ErrorKind {
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAHomomorphism,
    GroupTooLarge,
    TooLarge,
    NotNormalized,
    NotACocycle,
    CochainMismatch,
    NotPeiffer,
    NotEquivariant,
    SectionMismatch,
    IncompatibleTypes,
    InvalidAction,
    QuotientNotAssociative,
    BadSignature,
    BadDegree,
    ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg);
    ErrorKind kind() const noexcept { return kind_; }
    // without the kind prefix
    const std::string& message() const noexcept { return msg_; }

private:
    ErrorKind kind_;
    std::string msg_;
};

[[noreturn]] void raise(ErrorKind k, const std::string& msg);

} // namespace tt

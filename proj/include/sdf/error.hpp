#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdf {

enum class ErrorKind {
    EvenModulus,
    NotSquarefree,
    UnitModulus,
    ModulusOverflow,
    DuplicatePrime,
    TooLarge,
    InvalidPart,
    NonCoprime,
    WrongResidueClass,
    NoCollision,
    DomainError,
    SubsetBlowup,
    NotCovering,
    InvalidSet,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EvenModulus: return "EvenModulus";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::UnitModulus: return "UnitModulus";
    case ErrorKind::ModulusOverflow: return "ModulusOverflow";
    case ErrorKind::DuplicatePrime: return "DuplicatePrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidPart: return "InvalidPart";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::NoCollision: return "NoCollision";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SubsetBlowup: return "SubsetBlowup";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sdf

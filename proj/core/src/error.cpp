#include "cliff/error.hpp"

namespace cliff {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InversionOfZero: return "InversionOfZero";
    case ErrorKind::MixedFieldSpec: return "MixedFieldSpec";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::UnorderedField: return "UnorderedField";
    case ErrorKind::MismatchedForm: return "MismatchedForm";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::SingularT: return "SingularT";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotInLieAlgebra: return "NotInLieAlgebra";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotDefiniteForm: return "NotDefiniteForm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::WrongForm: return "WrongForm";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace cliff

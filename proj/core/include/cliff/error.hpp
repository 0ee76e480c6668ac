#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliff {

/// Domain error categories. Each name is what the CLI prints ahead of the message.
enum class ErrorKind {
  InversionOfZero,
  MixedFieldSpec,
  NonPrimeModulus,
  EvenCharacteristic,
  UnorderedField,
  MismatchedForm,
  DegenerateForm,
  DimensionOutOfRange,
  SyntaxError,
  IndexOutOfRange,
  ZeroElement,
  NotInvertible,
  NotEquivalent,
  SingularT,
  CapExceeded,
  OddDimension,
  NotInLieAlgebra,
  NotInvariant,
  NotDefiniteForm,
  DimensionMismatch,
  SingularBasis,
  WrongForm,
  InternalInconsistency,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace cliff

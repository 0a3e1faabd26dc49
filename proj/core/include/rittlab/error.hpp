#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace rittlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RITTLAB_DEFINE_ERROR(Name)             \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

/// A caller broke a documented precondition.
RITTLAB_DEFINE_ERROR(InvalidArgument);
RITTLAB_DEFINE_ERROR(ParseError);
/// An enumeration would exceed a configured size limit.
RITTLAB_DEFINE_ERROR(CapExceeded);
RITTLAB_DEFINE_ERROR(InvalidContext);
RITTLAB_DEFINE_ERROR(NotPermutable);
RITTLAB_DEFINE_ERROR(NotMaximal);
RITTLAB_DEFINE_ERROR(NotIndecomposable);
/// The hypothesis of a theorem verifier does not hold for its input.
RITTLAB_DEFINE_ERROR(HypothesisFailed);
RITTLAB_DEFINE_ERROR(FieldMismatch);
/// The field characteristic divides a degree that must be invertible.
RITTLAB_DEFINE_ERROR(WildCharacteristic);
RITTLAB_DEFINE_ERROR(NotAdditive);
RITTLAB_DEFINE_ERROR(BadLeadingCoefficient);
RITTLAB_DEFINE_ERROR(DegenerateResult);
RITTLAB_DEFINE_ERROR(NotAPolynomialComposite);
RITTLAB_DEFINE_ERROR(BadPrime);
/// An internal identity failed. Indicates a bug, never bad input.
RITTLAB_DEFINE_ERROR(InternalInconsistency);

#undef RITTLAB_DEFINE_ERROR

/// A verified theorem failed on a concrete input. The witness describes the
/// counterexample. Seeing this outside of deliberately broken inputs is a bug.
class TheoremViolated : public Error {
 public:
  TheoremViolated(const std::string& what, nlohmann::json witness)
      : Error(what), witness_(std::move(witness)) {}

  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  nlohmann::json witness_;
};

}  // namespace rittlab

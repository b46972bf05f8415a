#pragma once

#include <stdexcept>
#include <string>

namespace pbosc {

/// Base class for all pbosc errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible matrix dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// A scalar or integer argument lies outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// Input required to be Hermitian is not, within tolerance.
struct HermiticityError : Error {
  HermiticityError(const std::string& what, double asymmetry)
      : Error(what), max_asymmetry(asymmetry) {}
  double max_asymmetry;
};

/// Input required to be traceless has a nonzero trace.
struct TraceError : Error {
  using Error::Error;
};

/// Non-finite entries or a numerically inconsistent result.
struct NumericError : Error {
  using Error::Error;
};

/// State vector is not unit-norm.
struct NormalizationError : Error {
  using Error::Error;
};

/// The s=1 family has no derived ladder; the algebra closes on {a, a_dag, A}.
struct LadderNotApplicable : Error {
  using Error::Error;
};

/// Lie closure did not terminate within max_rounds, or a basis handed to a
/// downstream operation is not closed under the commutator.
struct ClosureNotReached : Error {
  ClosureNotReached(const std::string& what, int dimension)
      : Error(what), dimension_reached(dimension) {}
  int dimension_reached;
};

/// An su(n) certification clause failed; `clause` names it.
struct CertificationFailure : Error {
  CertificationFailure(const std::string& what, std::string failed_clause)
      : Error(what), clause(std::move(failed_clause)) {}
  std::string clause;
};

}  // namespace pbosc

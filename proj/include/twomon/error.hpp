#pragma once

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twomon {

enum class ErrorKind {
  // fincat
  MissingComposite,
  NonAssociative,
  BadIdentity,
  BadComposite,
  NotFunctorial,
  NotNatural,
  // twocat
  InterchangeViolation,
  NonAssociativeHComp,
  NotClosedUnderComposition,
  MissingIdentity,
  HostMismatch,
  // transform
  UnitAxiom,
  CompositionAxiom,
  TwoCellNaturality,
  TypeMismatch,
  ModificationAxiom,
  // limits / elements
  RestrictionFailure,
  // monad
  NaturalityViolation,
  MonadLaw,
  FunctorLaw,
  AlgebraLaw,
  CoherenceUnit,
  CoherenceMult,
  NotInOmega,
  AlgebraCellAxiom,
  // lifting
  NotInvertible,
  NotCompatible,
  MediatorMissing,
  EquifyFailure,
  PreconditionFailure,
  VerificationFailure,
  SubsetFailure,
  // dsl
  SyntaxError,
  UnresolvedReference,
  DuplicateName,
  InvalidDeclaration,
  // infrastructure
  ResourceBound,
};

std::string_view to_string(ErrorKind kind);

/// One violated law, with the cells that witness it.
struct Violation {
  ErrorKind kind;
  std::string message;
  std::vector<std::string> witnesses;
};

std::string describe(const Violation& v);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witnesses = {});
  explicit Error(std::vector<Violation> violations);

  ErrorKind kind() const { return violations_.front().kind; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws Error carrying every violation when the list is non-empty.
void raise_if_any(std::vector<Violation> violations);

/// Upper bound on the number of cells of any category the engine constructs
/// by enumeration. Exceeding it raises ResourceBound.
std::size_t cell_budget();
void set_cell_budget(std::size_t n);

/// Throws ResourceBound when `count` exceeds the budget.
void charge(std::size_t count, std::string_view what);

}  // namespace twomon

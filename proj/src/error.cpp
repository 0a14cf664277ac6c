#include "twomon/error.hpp"

#include <sstream>

namespace twomon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::BadComposite: return "BadComposite";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::InterchangeViolation: return "InterchangeViolation";
    case ErrorKind::NonAssociativeHComp: return "NonAssociativeHComp";
    case ErrorKind::NotClosedUnderComposition: return "NotClosedUnderComposition";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::UnitAxiom: return "UnitAxiom";
    case ErrorKind::CompositionAxiom: return "CompositionAxiom";
    case ErrorKind::TwoCellNaturality: return "TwoCellNaturality";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ModificationAxiom: return "ModificationAxiom";
    case ErrorKind::RestrictionFailure: return "RestrictionFailure";
    case ErrorKind::NaturalityViolation: return "NaturalityViolation";
    case ErrorKind::MonadLaw: return "MonadLaw";
    case ErrorKind::FunctorLaw: return "FunctorLaw";
    case ErrorKind::AlgebraLaw: return "AlgebraLaw";
    case ErrorKind::CoherenceUnit: return "CoherenceUnit";
    case ErrorKind::CoherenceMult: return "CoherenceMult";
    case ErrorKind::NotInOmega: return "NotInOmega";
    case ErrorKind::AlgebraCellAxiom: return "AlgebraCellAxiom";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::MediatorMissing: return "MediatorMissing";
    case ErrorKind::EquifyFailure: return "EquifyFailure";
    case ErrorKind::PreconditionFailure: return "PreconditionFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SubsetFailure: return "SubsetFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::InvalidDeclaration: return "InvalidDeclaration";
    case ErrorKind::ResourceBound: return "ResourceBound";
  }
  return "Unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.kind) << ": " << v.message;
  if (!v.witnesses.empty()) {
    os << " [";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) os << (i ? ", " : "") << v.witnesses[i];
    os << "]";
  }
  return os.str();
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
  if (vs.empty()) return "no violations";
  std::string s = describe(vs.front());
  if (vs.size() > 1) s += " (+" + std::to_string(vs.size() - 1) + " more)";
  return s;
}

std::atomic<std::size_t> g_budget{10000};

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> witnesses)
    : Error(std::vector<Violation>{Violation{kind, std::move(message), std::move(witnesses)}}) {}

Error::Error(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {
  if (violations_.empty()) violations_.push_back({ErrorKind::InvalidDeclaration, "unspecified", {}});
}

void raise_if_any(std::vector<Violation> violations) {
  if (!violations.empty()) throw Error(std::move(violations));
}

std::size_t cell_budget() { return g_budget.load(); }
void set_cell_budget(std::size_t n) { g_budget.store(n); }

void charge(std::size_t count, std::string_view what) {
  if (count > cell_budget()) {
    throw Error(ErrorKind::ResourceBound,
                std::string(what) + " exceeds the cell budget of " + std::to_string(cell_budget()),
                {std::to_string(count)});
  }
}

}  // namespace twomon

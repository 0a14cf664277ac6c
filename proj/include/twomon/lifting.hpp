#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twomon/elements.hpp"
#include "twomon/limits.hpp"
#include "twomon/monad.hpp"

namespace twomon {

enum class CheckStatus { pass, fail, not_applicable };
std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> witnesses;
};

using NamedFamilies = std::vector<std::pair<std::string, CellFamily>>;
using AlgPtr = std::shared_ptr<const AlgebraTwoCategory>;

/// A lifted limit in T-Alg together with its verification transcript.
struct LiftResult {
  AlgPtr alg;
  StrictAlgebra algebra;
  int algebra_index = -1;
  /// Lifted cone in alg->two. Conical: projections then 2-cells. Weighted:
  /// the flat weighted layout. Special limits: projections (then λ).
  std::vector<int> cone;
  std::vector<int> projections;  // 1-cells of alg->two out of the vertex
  std::optional<LimitCertificate> base;
  std::vector<CheckEntry> transcript;

  bool ok() const;
  const CheckEntry* find(const std::string& name) const;
  /// Names of failed entries.
  std::vector<std::string> failures() const;
};

/// The first candidate (vertices by name, then enumeration order) passing
/// special_limit_check.
std::optional<SpecialCandidate> find_special_limit(const TwoCategory& k, const SpecialData& d);

/// Products of algebras (indices into alg->algebras).
LiftResult lift_product(const AlgPtr& alg, const std::vector<int>& algebras, const SpecialCandidate& base,
                        const NamedFamilies& omega_primes = {});
/// Inserter of two T-Alg 1-cells with a common source and target. With
/// `iso`, the base and the lift are iso-inserters and ḡ must be invertible.
LiftResult lift_inserter(const AlgPtr& alg, int f, int g, const SpecialCandidate& base,
                         const NamedFamilies& omega_primes = {}, bool iso = false);
/// Equifier of two parallel T-Alg 2-cells.
LiftResult lift_equifier(const AlgPtr& alg, int alpha, int beta, const SpecialCandidate& base,
                         const NamedFamilies& omega_primes = {});

/// μ is an algebra 2-cell iff (λhd)(f q̄) = (g q̄)(λ a Th), checked on every
/// weak morphism q into the source of f and every 2-cell μ: fq ⇒ gq
/// (invertible μ only for iso-inserters).
struct KeyEquationReport {
  int candidates = 0;
  int mismatches = 0;
  std::vector<std::string> witnesses;
  bool holds() const { return mismatches == 0; }
};
KeyEquationReport inserter_key_equation(const AlgebraTwoCategory& alg, int f, int g, const SpecialCandidate& base,
                                        int structure, bool iso = false);

/// Conical σ-ωop-limit of F̄: 𝒜 → alg->two (alg of variant ω), lifted from
/// the σ-ωop-limit of U∘F̄. With a coω alg the lax (σ-ω) dual is lifted by
/// transport through the co-duals.
LiftResult lift_conical_limit(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega,
                              const TwoFunctor& diagram, const NamedFamilies& omega_seconds = {});
/// Weighted version through the 2-category of elements; requires Ω' ⊆ Ω.
LiftResult lift_weighted_limit(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega,
                               const Weight& w, const TwoFunctor& diagram, const NamedFamilies& omega_seconds = {});

/// The isomorphism T-Alg_ω^Ω' → T-Alg_coω^Ω' reversing structural cells,
/// defined when Ω' has only invertible 2-cells.
TwoFunctor reversal_functor(const AlgebraTwoCategory& from, const AlgebraTwoCategory& to);

enum class CorollaryKind { oplax, sigma, strict };
std::string to_string(CorollaryKind k);

struct CorollaryInput {
  CorollaryKind kind = CorollaryKind::strict;
  AlgPtr alg;               // build_talg(T, Ω_γ, ω); γ is read off Ω_γ
  Weight weight;
  ArrowFamily sigma;        // used by the sigma kind
  TwoFunctor diagram;       // weight.shape → alg->two
  bool lax_reading = false; // σ-ω reading through reversal, γ ≠ ℓ
};
/// Picks (Σ, Ω, Ω', Ω'') for the kind and delegates to lift_weighted_limit.
LiftResult corollary_runner(const CorollaryInput& in);

/// Both ways of lifting the inserter of (f,f̄), (g,ḡ) as a σ-ωop-limit.
struct InserterGap {
  std::optional<LiftResult> proposition;   // elementary lift
  std::optional<LiftResult> conical;       // Σ = {u, id_a, id_b}, Ω_s
  std::optional<LiftResult> elements;      // inserter weight through El_W
  std::vector<std::string> proposition_error, conical_error, elements_error;
  /// Non-identity structural cells among f̄, ḡ.
  std::vector<std::string> non_identity;
};
InserterGap inserter_gap(const AlgPtr& alg, int f, int g, const NamedFamilies& omega_primes = {});

}  // namespace twomon

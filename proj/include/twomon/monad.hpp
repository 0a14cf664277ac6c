#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twomon/twocat.hpp"

namespace twomon {

/// Every strict 2-functor 𝒜 → ℬ, in enumeration order.
std::vector<TwoFunctor> enumerate_two_functors(const TwoCatPtr& a, const TwoCatPtr& b);

struct TwoMonad {
  TwoCatPtr base;
  TwoFunctor t;
  std::vector<int> m, i;  // m_A: TTA → TA, i_A: A → TA

  int mult(int a) const { return m[static_cast<std::size_t>(a)]; }
  int unit(int a) const { return i[static_cast<std::size_t>(a)]; }
  bool operator==(const TwoMonad& other) const { return t == other.t && m == other.m && i == other.i; }
};

std::vector<Violation> check_monad(const TwoMonad& t);

struct RawMonad {
  RawTwoFunctor endo;
  std::map<std::string, std::string> mult, unit;  // object -> 1-cell
};
TwoMonad validate_monad(const RawMonad& raw, const TwoCatPtr& base);
TwoMonad identity_monad(const TwoCatPtr& base);
std::vector<TwoMonad> enumerate_monads(const TwoCatPtr& base);

/// T(Ω) ⊆ Ω; the first offending 2-cell is stored in `witness`.
bool monad_preserves_family(const TwoMonad& t, const CellFamily& omega, int* witness = nullptr);

struct StrictAlgebra {
  int carrier = -1, structure = -1;
  auto operator<=>(const StrictAlgebra&) const = default;
};
std::vector<Violation> check_algebra(const TwoMonad& t, const StrictAlgebra& a);
std::vector<StrictAlgebra> enumerate_algebras(const TwoMonad& t);

/// ω: f̄: b∘Tf ⇒ f∘a. coω: f̄: f∘a ⇒ b∘Tf.
enum class Variant { omega, co_omega };
std::string to_string(Variant v);

struct WeakMorphism {
  StrictAlgebra source, target;
  int f = -1, cell = -1;
  Variant variant = Variant::omega;
  bool operator==(const WeakMorphism&) const = default;
};

/// Expected boundary of f̄.
std::pair<int, int> weak_boundary(const TwoMonad& t, const StrictAlgebra& a, const StrictAlgebra& b, int f, Variant v);
std::vector<Violation> check_weak_morphism(const TwoMonad& t, const WeakMorphism& w, const CellFamily& omega);
std::vector<WeakMorphism> enumerate_weak_morphisms(const TwoMonad& t, const StrictAlgebra& a, const StrictAlgebra& b,
                                                   const CellFamily& omega, Variant v);
WeakMorphism identity_weak_morphism(const TwoMonad& t, const StrictAlgebra& a, Variant v);
/// (g∘f, (g f̄)∘(ḡ Tf)) for ω; mirrored for coω.
WeakMorphism compose_weak_morphisms(const TwoMonad& t, const WeakMorphism& g, const WeakMorphism& f);
/// The coω-morphism with the inverse structural cell, if f̄ is invertible.
std::optional<WeakMorphism> reverse(const TwoMonad& t, const WeakMorphism& w);

struct AlgebraTwoCell {
  WeakMorphism source, target;
  int cell = -1;
};
std::vector<Violation> check_algebra_two_cell(const TwoMonad& t, const AlgebraTwoCell& c);

/// T-Alg_ω^Ω (or coω) with its forgetful 2-functor.
struct AlgebraTwoCategory {
  TwoMonad monad;
  CellFamily omega;
  Variant variant = Variant::omega;
  TwoCatPtr two;
  TwoFunctor forget;
  std::vector<StrictAlgebra> algebras;
  std::vector<WeakMorphism> morphisms;
  std::vector<AlgebraTwoCell> cells;

  std::optional<int> find_algebra(const StrictAlgebra& a) const;
  std::optional<int> find_morphism(const WeakMorphism& w) const;
  /// Ω-morphisms for a family on the base: those with f̄ in it.
  bool is_in(int morphism, const CellFamily& omega_prime) const;
};
AlgebraTwoCategory build_talg(const TwoMonad& t, const CellFamily& omega, Variant v);

/// Ω̄: algebra 2-cells whose underlying 2-cell lies in Ω.
CellFamily omega_bar(const AlgebraTwoCategory& alg, const CellFamily& omega);
/// Σ̄ for a family Σ of T-Alg 1-cells given by a predicate on the base.
ArrowFamily arrows_in(const AlgebraTwoCategory& alg, const CellFamily& omega_prime);

TwoMonad co_dual(const TwoMonad& t, const TwoCatPtr& co_base);

/// Whether the projections (1-cells of T-Alg out of one algebra) jointly
/// detect Ω'-ness. `witness` receives an offending z.
bool detects_omega_prime(const AlgebraTwoCategory& alg, const std::vector<int>& projections, int source,
                         const CellFamily& omega_prime, int* witness = nullptr);

}  // namespace twomon

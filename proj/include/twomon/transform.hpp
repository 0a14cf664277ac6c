#pragma once

#include <map>
#include <string>
#include <vector>

#include "twomon/twocat.hpp"

namespace twomon {

enum class Orientation { lax, oplax };
std::string to_string(Orientation o);
Orientation flip(Orientation o);

/// θ: F ⇒ G. Lax: θ_f: Gf∘θ_A ⇒ θ_B∘Ff. Oplax: θ_f: θ_B∘Ff ⇒ Gf∘θ_A.
struct LaxTransformation {
  TwoFunctor source, target;
  Orientation orientation = Orientation::lax;
  std::vector<int> components;  // per object of the domain
  std::vector<int> cells;       // per 1-cell of the domain

  int at(int x) const { return components[static_cast<std::size_t>(x)]; }
  int cell(int f) const { return cells[static_cast<std::size_t>(f)]; }
  bool operator==(const LaxTransformation& other) const = default;
};

/// Expected boundary (dom, cod) of θ_f given the components; -1 entries if
/// some composite is missing.
std::pair<int, int> structural_boundary(const TwoFunctor& f, const TwoFunctor& g, Orientation o,
                                        int theta_a, int theta_b, int arrow);

std::vector<Violation> check_lax_transformation(const LaxTransformation& t);

struct RawLaxTransformation {
  std::map<std::string, std::string> components;  // object -> 1-cell
  std::map<std::string, std::string> cells;       // 1-cell -> 2-cell
};
/// Identity 1-cells of the domain default to identity structural cells.
LaxTransformation validate_lax_transformation(const RawLaxTransformation& raw, const TwoFunctor& f,
                                              const TwoFunctor& g, Orientation o);

LaxTransformation identity_transformation(const TwoFunctor& f, Orientation o);
/// ψ∘θ for θ: F ⇒ G and ψ: G ⇒ H.
LaxTransformation vertical(const LaxTransformation& psi, const LaxTransformation& theta);

/// θ_f ∈ Ω for every f ∈ Σ. Throws HostMismatch.
bool is_sigma_omega(const LaxTransformation& t, const ArrowFamily& sigma, const CellFamily& omega);

/// ρ: θ ⇛ θ'.
struct Modification {
  LaxTransformation source, target;
  std::vector<int> components;  // ρ_A: θ_A ⇒ θ'_A

  int at(int x) const { return components[static_cast<std::size_t>(x)]; }
  bool operator==(const Modification& other) const = default;
};

std::vector<Violation> check_modification(const Modification& m);
Modification validate_modification(const std::map<std::string, std::string>& raw, const LaxTransformation& s,
                                   const LaxTransformation& t);
bool is_omega_modification(const Modification& m, const CellFamily& omega_prime);
Modification identity_modification(const LaxTransformation& t);
Modification vertical(const Modification& b, const Modification& a);

/// All σ-ω-transformations F ⇒ G of the given orientation.
std::vector<LaxTransformation> enumerate_transformations(const TwoFunctor& f, const TwoFunctor& g,
                                                         Orientation o, const ArrowFamily& sigma,
                                                         const CellFamily& omega);
/// All modifications θ ⇛ θ', restricted to components in Ω' when given.
std::vector<Modification> enumerate_modifications(const LaxTransformation& s, const LaxTransformation& t,
                                                  const CellFamily* omega_prime = nullptr);

/// Hom_{σ,ω}(𝒜,ℬ)^{Ω'} restricted to the listed 2-functors.
struct HomTwoCategory {
  TwoCatPtr two;
  std::vector<TwoFunctor> functors;
  std::vector<LaxTransformation> transformations;  // per 1-cell
  std::vector<Modification> modifications;         // per 2-cell
};
HomTwoCategory hom_sigma_omega(const std::vector<TwoFunctor>& functors, const std::vector<std::string>& names,
                               Orientation o, const ArrowFamily& sigma, const CellFamily& omega,
                               const CellFamily& omega_prime);

/// Transport to the co-dual: an oplax transformation in ℬ is a lax one in
/// co(ℬ) with the same data, and conversely.
LaxTransformation co_dual(const LaxTransformation& t, const TwoFunctor& co_source, const TwoFunctor& co_target);

}  // namespace twomon

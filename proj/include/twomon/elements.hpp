#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "twomon/cones.hpp"

namespace twomon {

/// El_W with its projection ◇_W and the family id_Σ.
/// lax: (f,φ): (x,A) → (y,B) has φ: Wf(x) → y; composite (gf, ψ∘Wg(φ)).
/// oplax: φ: y → Wf(x); composite (gf, Wg(φ)∘ψ).
struct ElementsTwoCategory {
  TwoCatPtr two;
  TwoFunctor projection;
  ArrowFamily id_sigma;
  Orientation orientation = Orientation::lax;
  std::vector<std::pair<int, int>> objects;  // (x, A)
  struct One {
    int f, phi;
  };
  std::vector<One> ones;

  int find_object(int a, int x) const { return object_index.at({a, x}); }
  int find_one(int source, int f, int phi) const;

  std::map<std::pair<int, int>, int> object_index;
  std::map<std::tuple<int, int, int>, int> one_index;  // (source object, f, φ)
};

ElementsTwoCategory build_elements(const Weight& w, const ArrowFamily& sigma, Orientation o = Orientation::lax);

/// The conical diagram F∘◇_W with family id_Σ.
ConicalDiagram conical_expression(const WeightedDiagram& d, const ElementsTwoCategory& el);

/// Weighted cone → conical cone over F∘◇_W and back, on flat encodings.
std::vector<int> weighted_to_conical(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& cone);
std::vector<int> conical_to_weighted(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& cone);
/// Morphism components: α_A(x) = β_(x,A) and back.
std::vector<int> weighted_to_conical_cell(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& comps);
std::vector<int> conical_to_weighted_cell(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& comps);

struct ConeCorrespondence {
  ConeCategory weighted, conical;
  std::optional<FinFunctor> forward, backward;  // empty if some image is missing
  bool inverse = false;        // both composites are identities
  bool isomorphism = false;    // forward bijective
};

/// The isomorphism Cones^W(E,F)^Ω' ≅ Cones(E, F∘◇_W)^Ω', verified.
ConeCorrespondence cone_correspondence(const WeightedDiagram& d, const ElementsTwoCategory& el, int vertex,
                                       const CellFamily* omega_prime = nullptr);

}  // namespace twomon

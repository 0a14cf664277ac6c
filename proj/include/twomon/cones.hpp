#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twomon/transform.hpp"
#include "twomon/weight.hpp"

namespace twomon {

/// F: 𝒜 → ℬ with a label (Σ on 𝒜, Ω on ℬ) and an orientation.
/// lax: θ_f: Ff∘θ_A ⇒ θ_B (ω); oplax: θ_f: θ_B ⇒ Ff∘θ_A (ωop).
struct ConicalDiagram {
  TwoFunctor diagram;
  ArrowFamily sigma;
  CellFamily omega;
  Orientation orientation = Orientation::lax;
};

struct WeightedDiagram {
  Weight weight;
  TwoFunctor diagram;
  ArrowFamily sigma;
  CellFamily omega;
  Orientation orientation = Orientation::lax;
};

/// Positions of the cells of a weighted cone inside its flat encoding:
/// θ_A(x) (1-cells), then θ_A(φ), then (θ_f)_x (2-cells).
struct WeightedLayout {
  std::vector<int> object_offset, arrow_offset, cell_offset;
  int ones = 0, size = 0;
  explicit WeightedLayout(const Weight& w);
  int object(int a, int x) const { return object_offset[static_cast<std::size_t>(a)] + x; }
  int arrow(int a, int phi) const { return arrow_offset[static_cast<std::size_t>(a)] + phi; }
  int cell(int f, int x) const { return cell_offset[static_cast<std::size_t>(f)] + x; }
};

/// A cone category with fixed vertex. Cones are flat vectors of cells whose
/// first `ones` entries are 1-cells out of the vertex and the rest 2-cells;
/// a morphism has one 2-cell component per 1-cell entry.
struct ConeCategory {
  TwoCatPtr base;
  int vertex = -1;
  int ones = 0;
  std::vector<std::vector<int>> cones;
  struct Arrow {
    int source, target;
    std::vector<int> components;
    bool operator==(const Arrow&) const = default;
  };
  std::vector<Arrow> arrows;
  CatPtr category;

  std::optional<int> find_cone(const std::vector<int>& c) const;
  std::optional<int> find_arrow(int source, int target, const std::vector<int>& comps) const;
  bool arrow_in(int m, const CellFamily& omega_prime) const;

  /// Finishes the index and the category; called by the builders.
  void seal(const std::string& name);

 private:
  std::map<std::vector<int>, int> cone_index_;
  std::map<std::tuple<int, int, std::vector<int>>, int> arrow_index_;
};

/// Cones_{σ,ω}(E,F), restricted to Ω'-morphisms when given.
ConeCategory cone_category(const ConicalDiagram& d, int vertex, const CellFamily* omega_prime = nullptr);
/// Cones^W_{σ,ω}(E,F), restricted to Ω'-morphisms when given.
ConeCategory cone_category(const WeightedDiagram& d, int vertex, const CellFamily* omega_prime = nullptr);

/// Flat conical cone ↔ LaxTransformation ΔE ⇒ F.
std::vector<int> flatten(const LaxTransformation& t);
LaxTransformation conical_cone(const ConicalDiagram& d, int vertex, const std::vector<int>& flat);

/// Every violated weighted-cone axiom for a flat candidate.
std::vector<Violation> check_weighted_cone(const WeightedDiagram& d, int vertex, const std::vector<int>& flat);
/// Violated weighted cone morphism axioms.
std::vector<Violation> check_weighted_cone_morphism(const WeightedDiagram& d, const std::vector<int>& source,
                                                    const std::vector<int>& target, const std::vector<int>& comps);

/// The cone θ∘h for h: B → vertex (every entry precomposed with h).
std::vector<int> precompose(const TwoCategory& k, int ones, const std::vector<int>& cone, int h);
/// Components θ_i∘β of the induced morphism for β: h ⇒ h'.
std::vector<int> precompose_cell(const TwoCategory& k, int ones, const std::vector<int>& cone, int beta);

/// The functor hom(B, L) → Cones(B, F) induced by a cone with vertex L.
/// Empty when some image is missing from the cone category.
std::optional<FinFunctor> postcompose_functor(const TwoCategory& k, const ConeCategory& at_b,
                                              const std::vector<int>& cone, int b, int l);

}  // namespace twomon

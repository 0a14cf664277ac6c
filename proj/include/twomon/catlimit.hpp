#pragma once

#include <string>
#include <vector>

#include "twomon/limits.hpp"

namespace twomon {

/// {W,F}_{σ,ω} for a weight W and a diagram F, both 𝒜 → Cat_fin. L is the
/// category of σ-ω-transformations W ⇒ F and all modifications, and ξ is
/// evaluation. Ω on Cat_fin is one of the canonical families.
struct CatLimit {
  Weight weight, diagram;
  ArrowFamily sigma;
  Tag omega = Tag::l;
  Orientation orientation = Orientation::lax;
  CatFull host;  // on the categories WA and FA
  std::vector<LaxTransformation> objects;
  std::vector<Modification> arrows;
  CatPtr limit;

  /// ξ_A(x): L → FA and friends, by evaluation.
  FinFunctor eval(int a, int x) const;
  NatTransformation eval_arrow(int a, int phi) const;  // ξ_A(φ)
  NatTransformation eval_cell(int f, int x) const;     // (ξ_f)_x
};

CatLimit cat_limit_construct(const Weight& w, const Weight& f, const ArrowFamily& sigma, Tag omega,
                             Orientation o = Orientation::lax);

/// Probe categories by name: empty, one, two, parallel, iso, discrete2, chain3.
CatPtr probe_category(const std::string& name);
std::vector<std::string> default_probes();

struct ProbeResult {
  std::string probe;
  int functors = 0, transformations = 0, cones = 0, cone_morphisms = 0;
  bool isomorphism = false;
};
/// ξ*: [B, L] → Cones^W(B, F) checked bijective for every probe B.
std::vector<ProbeResult> verify_cat_limit(const CatLimit& l, const std::vector<std::string>& probes);

enum class DirectKind { lax, pseudo, strict };
std::string to_string(DirectKind k);

/// The lax, pseudo or strict limit built by nested loops over functors and
/// natural transformations, without any 2-categorical machinery.
struct DirectLimit {
  struct Object {
    std::vector<FinFunctor> components;           // per object of the shape
    std::vector<NatTransformation> cells;         // per 1-cell
  };
  std::vector<Object> objects;
  struct Arrow {
    int source, target;
    std::vector<NatTransformation> components;
  };
  std::vector<Arrow> arrows;
  CatPtr limit;
};
DirectLimit direct_cat_limit(const Weight& w, const Weight& f, DirectKind kind, Orientation o = Orientation::lax);

/// The comparison functor L → L_direct matching equal data, if total.
std::optional<FinFunctor> compare_cat_limits(const CatLimit& l, const DirectLimit& d);

}  // namespace twomon

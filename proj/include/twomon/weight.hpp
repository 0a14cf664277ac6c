#pragma once

#include <map>
#include <string>
#include <vector>

#include "twomon/twocat.hpp"

namespace twomon {

/// A 2-functor 𝒜 → Cat_fin: a weight W, or a diagram of finite categories.
struct Weight {
  TwoCatPtr shape;
  std::vector<CatPtr> objects;                  // WA
  std::vector<FinFunctor> ones;                 // Wf
  std::vector<NatTransformation> twos;          // Wα

  const FinCategory& at(int a) const { return *objects[static_cast<std::size_t>(a)]; }
  const FinFunctor& one(int f) const { return ones[static_cast<std::size_t>(f)]; }
  const NatTransformation& two(int a) const { return twos[static_cast<std::size_t>(a)]; }
};

std::vector<Violation> check_weight(const Weight& w);

struct RawFunctorData {
  std::map<std::string, std::string> objects, arrows;  // identities default
};
struct RawWeight {
  std::map<std::string, CatPtr> objects;
  std::map<std::string, RawFunctorData> ones;                     // identities default
  std::map<std::string, std::map<std::string, std::string>> twos;  // object of WA -> arrow
};
FinFunctor resolve_functor(const RawFunctorData& raw, const CatPtr& c, const CatPtr& d);
Weight validate_weight(const RawWeight& raw, const TwoCatPtr& shape);

/// Δ1: every object to the terminal category.
Weight terminal_weight(const TwoCatPtr& shape);

/// Every category of a Cat-valued 2-functor, deduplicated.
std::vector<CatPtr> categories_of(const std::vector<const Weight*>& ws);
/// The 2-functor as a map into a CatFull containing all of its categories.
TwoFunctor into_cat_full(const Weight& w, const CatFull& cf);

namespace weights {
/// Shape a ⇉ b (u, v); W a = 1, W b = 2, W u = 0, W v = 1.
Weight inserter();
/// Shape a ⇉ b with α, β: u ⇒ v; as above with W α = W β = φ.
Weight equifier();
}  // namespace weights

}  // namespace twomon

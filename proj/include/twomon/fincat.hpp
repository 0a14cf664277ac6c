#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twomon/error.hpp"
#include "twomon/table.hpp"

namespace twomon {

/// Category tables as written by hand or parsed from input, keyed by name.
struct RawCategory {
  struct Arrow {
    std::string name, source, target;
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> identity;  // object -> arrow
  /// (g, f) -> g∘f, i.e. f then g.
  std::map<std::pair<std::string, std::string>, std::string> composites;
};

/// Adds identity arrows `id_X` for objects without one, and every composite
/// with an identity factor.
void complete_identity_composites(RawCategory& raw);

/// A finite category given by explicit tables. Immutable once built.
class FinCategory {
 public:
  FinCategory() = default;

  using ComposeFn = std::function<int(int second, int first)>;

  /// Unchecked construction from index data; `compose` is called for every
  /// composable pair and may return -1 for a missing composite.
  static FinCategory build(std::string name, std::vector<std::string> objects,
                           std::vector<std::string> arrows, std::vector<int> source,
                           std::vector<int> target, std::vector<int> identity,
                           const ComposeFn& compose);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  const std::string& arrow_name(int f) const { return arrows_[static_cast<std::size_t>(f)]; }
  int source(int f) const { return table_.source(f); }
  int target(int f) const { return table_.target(f); }
  int identity(int x) const { return identity_[static_cast<std::size_t>(x)]; }
  bool is_identity(int f) const { return identity(source(f)) == f; }
  bool composable(int g, int f) const { return table_.composable(g, f); }
  /// g∘f, or -1 when undefined.
  int compose(int g, int f) const { return table_.at(g, f); }
  const std::vector<int>& arrows_from(int x) const { return table_.out_of(x); }
  const std::vector<int>& arrows_into(int x) const { return table_.into(x); }
  std::vector<int> arrows_between(int x, int y) const;

  std::optional<int> find_object(const std::string& n) const;
  std::optional<int> find_arrow(const std::string& n) const;

  /// Inverse of f if one exists.
  std::optional<int> inverse(int f) const;

  bool operator==(const FinCategory& other) const = default;

 private:
  std::string name_;
  std::vector<std::string> objects_, arrows_;
  std::vector<int> identity_;
  CompositionTable table_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Every violated category law, each with its witnessing cells.
std::vector<Violation> check_category(const FinCategory& c);

/// Resolves names, builds the tables and checks every law. Throws Error.
FinCategory validate_category(const RawCategory& raw);

RawCategory to_raw(const FinCategory& c);

struct FinFunctor {
  CatPtr source, target;
  std::vector<int> objects;  // object map
  std::vector<int> arrows;   // arrow map

  int on_object(int x) const { return objects[static_cast<std::size_t>(x)]; }
  int on_arrow(int f) const { return arrows[static_cast<std::size_t>(f)]; }
  bool operator==(const FinFunctor& other) const;
};

std::vector<Violation> check_functor(const FinFunctor& f);
/// Readable identifier `<images of objects;images of non-identity arrows>`.
std::string functor_label(const FinFunctor& f);
FinFunctor identity_functor(const CatPtr& c);
/// g∘f.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

struct NatTransformation {
  FinFunctor source, target;
  std::vector<int> components;  // per object of the domain

  int at(int x) const { return components[static_cast<std::size_t>(x)]; }
  bool operator==(const NatTransformation& other) const = default;
};

std::vector<Violation> check_nat_transformation(const NatTransformation& t);
NatTransformation identity_nat(const FinFunctor& f);
/// b∘a (a then b), componentwise.
NatTransformation vertical(const NatTransformation& b, const NatTransformation& a);
/// Horizontal composite b∘a of a: F⇒F' (C→D) and b: G⇒G' (D→E).
NatTransformation horizontal(const NatTransformation& b, const NatTransformation& a);
bool is_invertible(const NatTransformation& t);

bool same_category(const CatPtr& a, const CatPtr& b);

/// Functor category [C, D] together with the enumerated functors and
/// natural transformations indexing its objects and arrows.
struct FunctorCategory {
  CatPtr category;
  std::vector<FinFunctor> functors;
  std::vector<NatTransformation> transformations;

  std::optional<int> find_functor(const FinFunctor& f) const;
  std::optional<int> find_transformation(const NatTransformation& t) const;

 private:
  friend FunctorCategory functor_category(const CatPtr&, const CatPtr&);
  std::map<std::vector<int>, int> functor_index_, transformation_index_;
};

std::vector<FinFunctor> enumerate_functors(const CatPtr& c, const CatPtr& d);
std::vector<NatTransformation> enumerate_nat_transformations(const FinFunctor& f,
                                                             const FinFunctor& g);
FunctorCategory functor_category(const CatPtr& c, const CatPtr& d);

/// True iff f is bijective on objects and on arrows.
bool is_isomorphism_of_categories(const FinFunctor& f);

struct ProductCategory {
  CatPtr category;
  FinFunctor first, second;  // projections
};
ProductCategory product_category(const CatPtr& c, const CatPtr& d);

namespace cats {
CatPtr empty();
/// 1 = {*}
CatPtr one();
/// 2 = {0 --phi--> 1}
CatPtr two();
/// Two parallel arrows s, t: 0 -> 1.
CatPtr parallel();
/// Free-standing isomorphism u: 0 -> 1, v: 1 -> 0.
CatPtr iso();
/// Two objects, no non-identity arrows.
CatPtr discrete2();
/// 0 -> 1 -> 2 with composite.
CatPtr chain3();
}  // namespace cats

}  // namespace twomon

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twomon/error.hpp"
#include "twomon/fincat.hpp"
#include "twomon/table.hpp"

namespace twomon {

/// Name-keyed 2-category tables, as parsed or written by hand.
struct RawTwoCategory {
  struct Cell {
    std::string name, source, target;
  };
  using Key = std::pair<std::string, std::string>;
  std::string name;
  std::vector<std::string> objects;
  std::vector<Cell> ones;  // source/target are objects
  std::vector<Cell> twos;  // source/target are 1-cells
  std::map<std::string, std::string> id1;  // object -> 1-cell
  std::map<std::string, std::string> id2;  // 1-cell -> 2-cell
  std::map<Key, std::string> comp1;        // (g, f) -> g∘f
  std::map<Key, std::string> vcomp;        // (b, a) -> b∘a, a first
  std::map<Key, std::string> hcomp;        // (b, a) -> b∘a, a first
};

/// Adds missing identity 1-cells (`id_X`) and identity 2-cells (`1_f`), and
/// every composite whose value is forced by an identity. Entries already
/// present are left alone.
void complete_identities(RawTwoCategory& raw);

/// A finite strict 2-category with integer-indexed cells.
class TwoCategory {
 public:
  struct CellSpec {
    std::string name;
    int source, target;
  };
  using Compose = std::function<int(int second, int first)>;

  TwoCategory() = default;

  /// Unchecked construction from index data. Each composition callback is
  /// called once per composable pair and may return -1.
  static TwoCategory build(std::string name, std::vector<std::string> objects,
                           std::vector<CellSpec> ones, std::vector<CellSpec> twos,
                           std::vector<int> id1, std::vector<int> id2, const Compose& comp1,
                           const Compose& vcomp, const Compose& hcomp);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int one_count() const { return static_cast<int>(ones_.size()); }
  int two_count() const { return static_cast<int>(twos_.size()); }

  const std::string& object_name(int a) const { return objects_[idx(a)]; }
  const std::string& one_name(int f) const { return ones_[idx(f)]; }
  const std::string& two_name(int a) const { return twos_[idx(a)]; }
  /// Fully qualified identifier `K.hom(A,B).alpha`.
  std::string qualified_two(int a) const;
  std::string qualified_one(int f) const;

  int src(int f) const { return comp1_.source(f); }
  int tgt(int f) const { return comp1_.target(f); }
  /// Source and target 1-cells of a 2-cell.
  int dom(int a) const { return vcomp_.source(a); }
  int cod(int a) const { return vcomp_.target(a); }
  int src2(int a) const { return src(dom(a)); }
  int tgt2(int a) const { return tgt(dom(a)); }

  int id1(int x) const { return id1_[idx(x)]; }
  int id2(int f) const { return id2_[idx(f)]; }
  bool is_id1(int f) const { return id1(src(f)) == f; }
  bool is_id2(int a) const { return dom(a) == cod(a) && id2(dom(a)) == a; }

  /// g∘f for 1-cells, b∘a vertically, b∘a horizontally; -1 when undefined.
  int comp1(int g, int f) const { return comp1_.at(g, f); }
  int vcomp(int b, int a) const { return vcomp_.at(b, a); }
  int hcomp(int b, int a) const { return hcomp_.at(b, a); }
  /// g∘α and α∘f.
  int lwhisker(int g, int a) const { return hcomp(id2(g), a); }
  int rwhisker(int a, int f) const { return hcomp(a, id2(f)); }

  const std::vector<int>& ones_from(int x) const { return comp1_.out_of(x); }
  const std::vector<int>& ones_into(int x) const { return comp1_.into(x); }
  std::vector<int> ones_between(int x, int y) const;
  const std::vector<int>& twos_from(int f) const { return vcomp_.out_of(f); }
  const std::vector<int>& twos_into(int f) const { return vcomp_.into(f); }
  std::vector<int> twos_between(int f, int g) const;

  /// Vertical inverse, or -1.
  int inverse(int a) const { return inverse_[idx(a)]; }
  bool is_invertible(int a) const { return inverse(a) >= 0; }

  std::optional<int> find_object(const std::string& n) const;
  std::optional<int> find_one(const std::string& n) const;
  std::optional<int> find_two(const std::string& n) const;

  /// Hom-category hom(A,B) together with the global indices of its cells.
  struct Hom {
    CatPtr category;
    std::vector<int> ones, twos;  // local index -> global index
  };
  Hom hom(int x, int y) const;

  /// The underlying 1-category (objects, 1-cells).
  FinCategory underlying() const;

  const CompositionTable& comp1_table() const { return comp1_; }
  const CompositionTable& vcomp_table() const { return vcomp_; }
  const CompositionTable& hcomp_table() const { return hcomp_; }

  bool operator==(const TwoCategory& other) const = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  std::string name_;
  std::vector<std::string> objects_, ones_, twos_;
  std::vector<int> id1_, id2_;
  CompositionTable comp1_, vcomp_, hcomp_;
  std::vector<int> inverse_;
};

using TwoCatPtr = std::shared_ptr<const TwoCategory>;

/// Every violated 2-category law with witnesses.
std::vector<Violation> check_two_category(const TwoCategory& k);
TwoCategory validate_two_category(RawTwoCategory raw);
RawTwoCategory to_raw(const TwoCategory& k);

/// Strict 2-functor.
struct TwoFunctor {
  TwoCatPtr source, target;
  std::vector<int> objects, ones, twos;

  int obj(int x) const { return objects[static_cast<std::size_t>(x)]; }
  int one(int f) const { return ones[static_cast<std::size_t>(f)]; }
  int two(int a) const { return twos[static_cast<std::size_t>(a)]; }
  bool operator==(const TwoFunctor& other) const;
};

std::vector<Violation> check_two_functor(const TwoFunctor& f);

/// Maps are name-keyed: object/1-cell/2-cell name of the source to name in
/// the target. Missing identity entries are filled in.
struct RawTwoFunctor {
  std::map<std::string, std::string> objects, ones, twos;
};
TwoFunctor validate_two_functor(const RawTwoFunctor& raw, const TwoCatPtr& source,
                                const TwoCatPtr& target);

TwoFunctor identity_two_functor(const TwoCatPtr& k);
/// Constant 2-functor at object x of the target.
TwoFunctor constant_two_functor(const TwoCatPtr& source, const TwoCatPtr& target, int x);
/// g∘f.
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);
bool same_two_category(const TwoCatPtr& a, const TwoCatPtr& b);

/// Distinguished 1-cells Σ.
struct ArrowFamily {
  TwoCatPtr host;
  std::vector<char> member;

  bool contains(int f) const { return member[static_cast<std::size_t>(f)] != 0; }
  std::vector<int> cells() const;
  bool operator==(const ArrowFamily& other) const;
};

/// Distinguished 2-cells Ω.
struct CellFamily {
  TwoCatPtr host;
  std::vector<char> member;

  bool contains(int a) const { return member[static_cast<std::size_t>(a)] != 0; }
  std::vector<int> cells() const;
  bool subset_of(const CellFamily& other) const;
  bool operator==(const CellFamily& other) const;
};

std::vector<Violation> check_arrow_family(const ArrowFamily& s);
std::vector<Violation> check_cell_family(const CellFamily& o);
ArrowFamily validate_arrow_family(const TwoCatPtr& host, const std::vector<std::string>& names);
CellFamily validate_cell_family(const TwoCatPtr& host, const std::vector<std::string>& names);

/// Smallest family containing the given cells (closure under composition).
ArrowFamily generated_arrow_family(const TwoCatPtr& host, const std::vector<int>& cells);
CellFamily generated_cell_family(const TwoCatPtr& host, const std::vector<int>& cells);

enum class Tag { s, p, l };
std::string to_string(Tag t);

ArrowFamily all_arrows(const TwoCatPtr& host);       // 𝒜₀
ArrowFamily identity_arrows(const TwoCatPtr& host);  // 𝒜_id
CellFamily omega(const TwoCatPtr& host, Tag t);      // Ω_s, Ω_p, Ω_ℓ

struct Label {
  ArrowFamily sigma;
  CellFamily omega;
};
/// s = (𝒜₀, Ω_s), p = (𝒜₀, Ω_p), ℓ = (𝒜_id, Ω_ℓ).
Label canonical_families(const TwoCatPtr& host, Tag t);

enum class LabelOrder { Less, Greater, Equal, Incomparable };
std::string to_string(LabelOrder o);
/// ε ≤ ε' iff Σ' ⊆ Σ and Ω ⊆ Ω'. Throws HostMismatch.
LabelOrder compare_labels(const Label& a, const Label& b);

/// 2-cells reversed, horizontal composition kept. The name toggles a `^co`
/// suffix so that co_dual is an involution.
TwoCategory co_dual(const TwoCategory& k);
TwoCatPtr co_dual(const TwoCatPtr& k);
/// Transports a 2-functor to the co-duals (supply them to share pointers).
TwoFunctor co_dual(const TwoFunctor& f, const TwoCatPtr& co_source, const TwoCatPtr& co_target);
CellFamily co_dual(const CellFamily& o, const TwoCatPtr& co_host);
ArrowFamily co_dual(const ArrowFamily& s, const TwoCatPtr& co_host);

/// Cartesian product of 2-categories, cells named `(x,y)`.
TwoCategory product_two_category(const TwoCategory& k, const TwoCategory& l);
/// A category viewed as a 2-category with identity 2-cells only.
TwoCategory locally_discrete(const FinCategory& c);

/// Two-category with one object for each category in a list of finite
/// categories, functors as 1-cells and natural transformations as 2-cells.
struct CatFull {
  TwoCatPtr two;
  std::vector<CatPtr> categories;          // per object
  std::vector<FinFunctor> functors;        // per 1-cell
  std::vector<NatTransformation> transformations;  // per 2-cell

  std::optional<int> find_functor(const FinFunctor& f) const;
  std::optional<int> find_transformation(const NatTransformation& t) const;

 private:
  friend CatFull build_cat_full(const std::string&, const std::vector<CatPtr>&);
  std::map<std::tuple<int, int, std::vector<int>>, int> functor_index_;
  std::map<std::tuple<int, int, std::vector<int>>, int> transformation_index_;
};
CatFull build_cat_full(const std::string& name, const std::vector<CatPtr>& categories);

/// Bijective on objects, 1-cells and 2-cells.
bool is_isomorphism(const TwoFunctor& f);
/// Equal up to the name of the 2-category itself.
bool same_structure(const TwoCategory& a, const TwoCategory& b);

}  // namespace twomon

#include "doctest.h"

#include "twomon/elements.hpp"
#include "twomon/fixtures.hpp"

using namespace twomon;

namespace {

TwoFunctor pair_into(const TwoCatPtr& k, const std::string& x, const std::string& y, const std::string& u,
                     const std::string& v) {
  return validate_two_functor(RawTwoFunctor{{{"a", x}, {"b", y}}, {{"u", u}, {"v", v}}, {}}, fixtures::k_pair(), k);
}

}  // namespace

TEST_CASE("elements of the inserter weight") {
  auto w = weights::inserter();
  auto el = build_elements(w, all_arrows(w.shape));
  const auto& k = *el.two;
  REQUIRE(k.object_count() == 3);
  CHECK(k.find_object("(*,a)").has_value());
  CHECK(k.find_object("(0,b)").has_value());
  CHECK(k.find_object("(1,b)").has_value());
  CHECK(k.one_count() == 7);
  const auto& a = *w.shape;
  int u = *a.find_one("u"), v = *a.find_one("v"), ida = a.id1(*a.find_object("a")), idb = a.id1(*a.find_object("b"));
  int star = el.find_object(0, 0), zero = el.find_object(1, 0);
  const auto& two = w.at(1);
  int gu = el.find_one(star, u, two.identity(0));
  int gv = el.find_one(star, v, two.identity(1));
  int gphi = el.find_one(zero, idb, *two.find_arrow("phi"));
  REQUIRE(gu >= 0);
  REQUIRE(gv >= 0);
  REQUIRE(gphi >= 0);
  CHECK(el.projection.one(gu) == u);
  CHECK(el.projection.one(gv) == v);
  CHECK(el.projection.one(gphi) == idb);
  CHECK(el.projection.one(k.comp1(gphi, gu)) == u);
  CHECK(check_arrow_family(el.id_sigma).empty());
  CHECK(el.id_sigma.contains(gu));
  CHECK_FALSE(el.id_sigma.contains(gphi));
  (void)ida;
}

TEST_CASE("elements of the terminal weight are the shape") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    if (k->one_count() > 20) continue;
    auto el = build_elements(terminal_weight(k), all_arrows(k));
    CHECK(el.two->object_count() == k->object_count());
    CHECK(el.two->one_count() == k->one_count());
    CHECK(el.two->two_count() == k->two_count());
    CHECK(el.id_sigma.cells().size() == static_cast<std::size_t>(k->one_count()));
    std::vector<int> seen(static_cast<std::size_t>(k->two_count()), 0);
    for (int t : el.projection.twos) ++seen[static_cast<std::size_t>(t)];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST_CASE("elements in the oplax reading") {
  auto w = weights::inserter();
  auto el = build_elements(w, all_arrows(w.shape), Orientation::oplax);
  CHECK(el.two->object_count() == 3);
  // (id, φ) now runs from (1,b) to (0,b); (u, ·) lands in (0,b) only via id,
  // and (v, ·) reaches both (0,b) (with φ) and (1,b).
  CHECK(el.two->one_count() == 7);
  int one = el.find_object(1, 1);
  CHECK(el.find_one(one, w.shape->id1(1), *w.at(1).find_arrow("phi")) >= 0);
}

TEST_CASE("cone correspondence is an isomorphism") {
  auto cell = fixtures::k_cell();
  auto iso = fixtures::k_iso();
  std::vector<TwoFunctor> diagrams{pair_into(cell, "X", "Y", "f", "g"), pair_into(cell, "X", "Y", "f", "f"),
                                   pair_into(iso, "X", "X'", "i", "i")};
  for (const auto& F : diagrams) {
    for (auto o : {Orientation::lax, Orientation::oplax}) {
      for (auto t : {Tag::s, Tag::p, Tag::l}) {
        auto lab = canonical_families(F.source, t);
        for (const auto& w : {weights::inserter(), terminal_weight(F.source)}) {
          WeightedDiagram d{w, F, lab.sigma, omega(F.target, t), o};
          auto el = build_elements(w, lab.sigma, o);
          for (auto tp : {Tag::s, Tag::l}) {
            auto op = omega(F.target, tp);
            for (int e = 0; e < F.target->object_count(); ++e) {
              auto c = cone_correspondence(d, el, e, &op);
              CHECK(c.forward.has_value());
              CHECK(c.backward.has_value());
              CHECK(c.inverse);
              CHECK(c.isomorphism);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("cone correspondence over Cat") {
  const auto& cf = fixtures::k_cat12();
  auto k = cf.two;
  // both parallel functors 1 -> 2
  std::vector<int> fs;
  for (int f = 0; f < k->one_count(); ++f) {
    if (k->object_name(k->src(f)) != k->object_name(k->tgt(f)) && cf.categories[static_cast<std::size_t>(k->src(f))]->object_count() == 1)
      fs.push_back(f);
  }
  REQUIRE(fs.size() == 2);
  TwoFunctor F{fixtures::k_pair(), k, {k->src(fs[0]), k->tgt(fs[0])}, {}, {}};
  F.ones.resize(4);
  const auto& pa = *F.source;
  F.ones[static_cast<std::size_t>(*pa.find_one("u"))] = fs[0];
  F.ones[static_cast<std::size_t>(*pa.find_one("v"))] = fs[1];
  F.ones[static_cast<std::size_t>(pa.id1(0))] = k->id1(F.obj(0));
  F.ones[static_cast<std::size_t>(pa.id1(1))] = k->id1(F.obj(1));
  for (int t = 0; t < pa.two_count(); ++t) F.twos.push_back(k->id2(F.one(pa.dom(t))));
  REQUIRE(check_two_functor(F).empty());
  auto w = weights::inserter();
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    for (auto t : {Tag::s, Tag::l}) {
      auto lab = canonical_families(F.source, t);
      WeightedDiagram d{w, F, lab.sigma, omega(k, t), o};
      auto el = build_elements(w, lab.sigma, o);
      for (int e = 0; e < k->object_count(); ++e) {
        auto c = cone_correspondence(d, el, e);
        CHECK(c.inverse);
        CHECK(c.isomorphism);
      }
    }
  }
}

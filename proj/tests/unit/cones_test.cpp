#include "doctest.h"

#include "twomon/cones.hpp"
#include "twomon/fixtures.hpp"

using namespace twomon;

namespace {

TwoFunctor pair_to_cell() {
  return validate_two_functor(RawTwoFunctor{{{"a", "X"}, {"b", "Y"}}, {{"u", "f"}, {"v", "g"}}, {}}, fixtures::k_pair(),
                              fixtures::k_cell());
}

TwoFunctor eq_to_cell() {
  return validate_two_functor(
      RawTwoFunctor{{{"a", "X"}, {"b", "Y"}}, {{"u", "f"}, {"v", "g"}}, {{"alpha", "alpha"}, {"beta", "alpha"}}},
      fixtures::k_parallel_cells(), fixtures::k_cell());
}

Label strict_label(const TwoCatPtr& shape, const TwoCatPtr& base) {
  return {all_arrows(shape), omega(base, Tag::s)};
}

// Conical cones over K_PAIR (no composable non-identity pairs, no
// non-identity 2-cells) by direct nested loops.
int pair_cone_oracle(const TwoFunctor& F, int e, bool lax, const CellFamily* om) {
  const auto& k = *F.target;
  int count = 0;
  int fu = F.one(*F.source->find_one("u")), fv = F.one(*F.source->find_one("v"));
  for (int qa : k.ones_between(e, F.obj(0)))
    for (int qb : k.ones_between(e, F.obj(1)))
      for (int cu = 0; cu < k.two_count(); ++cu)
        for (int cv = 0; cv < k.two_count(); ++cv) {
          auto ok = [&](int c, int f) {
            int from = k.comp1(f, qa), to = qb;
            if (!lax) std::swap(from, to);
            return k.dom(c) == from && k.cod(c) == to && (!om || om->contains(c));
          };
          if (ok(cu, fu) && ok(cv, fv)) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("conical cones over a constant diagram are 1-cells into it") {
  auto k = fixtures::k_cell();
  auto term = fixtures::k_term();
  for (int x = 0; x < k->object_count(); ++x) {
    ConicalDiagram d{constant_two_functor(term, k, x), all_arrows(term), omega(k, Tag::s), Orientation::lax};
    for (int e = 0; e < k->object_count(); ++e) {
      auto cc = cone_category(d, e);
      auto hom = k->hom(e, x);
      CHECK(cc.category->object_count() == hom.category->object_count());
      CHECK(cc.category->arrow_count() == hom.category->arrow_count());
      CHECK(check_category(*cc.category).empty());
    }
  }
}

TEST_CASE("conical cone counts match a nested-loop oracle") {
  auto F = pair_to_cell();
  auto k = F.target;
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    for (auto t : {Tag::s, Tag::p, Tag::l}) {
      auto om = omega(k, t);
      ConicalDiagram d{F, all_arrows(F.source), om, o};
      for (int e = 0; e < k->object_count(); ++e) {
        CHECK(cone_category(d, e).category->object_count() == pair_cone_oracle(F, e, o == Orientation::lax, &om));
      }
      ConicalDiagram free{F, identity_arrows(F.source), om, o};
      for (int e = 0; e < k->object_count(); ++e) {
        CHECK(cone_category(free, e).category->object_count() == pair_cone_oracle(F, e, o == Orientation::lax, nullptr));
      }
    }
  }
}

TEST_CASE("omega prime restriction with all cells is vacuous") {
  auto F = pair_to_cell();
  ConicalDiagram d{F, identity_arrows(F.source), omega(F.target, Tag::l), Orientation::lax};
  auto all = omega(F.target, Tag::l);
  for (int e = 0; e < F.target->object_count(); ++e) {
    auto a = cone_category(d, e);
    auto b = cone_category(d, e, &all);
    CHECK(a.cones == b.cones);
    CHECK(a.arrows == b.arrows);
  }
}

TEST_CASE("terminal weight reproduces conical cones") {
  auto F = pair_to_cell();
  auto k = F.target;
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    for (auto t : {Tag::s, Tag::l}) {
      auto lab = canonical_families(F.source, t);
      ConicalDiagram cd{F, lab.sigma, omega(k, t), o};
      WeightedDiagram wd{terminal_weight(F.source), F, lab.sigma, omega(k, t), o};
      for (int e = 0; e < k->object_count(); ++e) {
        auto c = cone_category(cd, e);
        auto w = cone_category(wd, e);
        REQUIRE(c.cones.size() == w.cones.size());
        CHECK(c.arrows.size() == w.arrows.size());
        // η_A = θ_A(*), η_f = (θ_f)_*: with one element per WA the flat
        // layouts differ only by the identity entries θ_A(id_*).
        for (const auto& wc : w.cones) {
          std::vector<int> flat;
          int n = F.source->object_count();
          flat.insert(flat.end(), wc.begin(), wc.begin() + n);
          flat.insert(flat.end(), wc.begin() + 2 * n, wc.end());
          CHECK(c.find_cone(flat).has_value());
        }
      }
    }
  }
}

TEST_CASE("inserter weight cones are pairs (q, mu)") {
  auto F = pair_to_cell();
  auto k = F.target;
  auto lab = strict_label(F.source, k);
  WeightedDiagram d{weights::inserter(), F, lab.sigma, lab.omega, Orientation::lax};
  int f = *k->find_one("f"), g = *k->find_one("g");
  for (int e = 0; e < k->object_count(); ++e) {
    int pairs = 0;
    for (int q : k->ones_between(e, *k->find_object("X"))) pairs += static_cast<int>(k->twos_between(k->comp1(f, q), k->comp1(g, q)).size());
    auto cc = cone_category(d, e);
    CHECK(static_cast<int>(cc.cones.size()) == pairs);
    for (const auto& c : cc.cones) CHECK(check_weighted_cone(d, e, c).empty());
  }
}

TEST_CASE("equifier weight cones are equifying arrows") {
  auto F = eq_to_cell();
  auto k = F.target;
  auto lab = strict_label(F.source, k);
  WeightedDiagram d{weights::equifier(), F, lab.sigma, lab.omega, Orientation::lax};
  int a = F.two(*F.source->find_two("alpha")), b = F.two(*F.source->find_two("beta"));
  for (int e = 0; e < k->object_count(); ++e) {
    std::vector<int> qs;
    for (int q : k->ones_between(e, F.obj(0))) {
      if (k->rwhisker(a, q) == k->rwhisker(b, q)) qs.push_back(q);
    }
    auto cc = cone_category(d, e);
    CHECK(cc.cones.size() == qs.size());
    std::size_t cells = 0;
    for (int q : qs)
      for (int q2 : qs) cells += k->twos_between(q, q2).size();
    CHECK(cc.arrows.size() == cells);
  }
}

TEST_CASE("corrupted weighted cones are rejected") {
  auto F = pair_to_cell();
  auto k = F.target;
  auto lab = strict_label(F.source, k);
  WeightedDiagram d{weights::inserter(), F, lab.sigma, lab.omega, Orientation::lax};
  int x = *k->find_object("X");
  auto cc = cone_category(d, x);
  REQUIRE(cc.cones.size() == 1);
  auto bad = cc.cones[0];
  WeightedLayout lay(d.weight);
  bad[static_cast<std::size_t>(lay.arrow(1, *d.weight.at(1).find_arrow("phi")))] = k->id2(k->comp1(*k->find_one("f"), k->id1(x)));
  CHECK_FALSE(check_weighted_cone(d, x, bad).empty());
}

TEST_CASE("precomposition sends the identity to the cone itself") {
  auto F = pair_to_cell();
  auto k = F.target;
  ConicalDiagram d{F, identity_arrows(F.source), omega(k, Tag::l), Orientation::lax};
  for (int e = 0; e < k->object_count(); ++e) {
    auto cc = cone_category(d, e);
    for (const auto& c : cc.cones) CHECK(precompose(*k, cc.ones, c, k->id1(e)) == c);
    for (const auto& c : cc.cones) {
      auto fn = postcompose_functor(*k, cc, c, e, e);
      REQUIRE(fn.has_value());
      CHECK(check_functor(*fn).empty());
    }
  }
}

#include "doctest.h"

#include "twomon/catlimit.hpp"
#include "twomon/elements.hpp"
#include "twomon/fixtures.hpp"
#include "twomon/limits.hpp"

using namespace twomon;

namespace {

TwoFunctor pick(const TwoCatPtr& k, const std::string& x) {
  return constant_two_functor(fixtures::k_term(), k, *k->find_object(x));
}

ConicalDiagram conical(const TwoFunctor& F, Tag t, Orientation o = Orientation::lax) {
  auto lab = canonical_families(F.source, t);
  return {F, lab.sigma, omega(F.target, t), o};
}

TwoFunctor discrete_pair(const TwoCatPtr& k, const std::string& x, const std::string& y) {
  auto d = fixtures::shape("discrete2");
  return TwoFunctor{d, k, {*k->find_object(x), *k->find_object(y)}, {k->id1(*k->find_object(x)), k->id1(*k->find_object(y))},
                    {k->id2(k->id1(*k->find_object(x))), k->id2(k->id1(*k->find_object(y)))}};
}

std::vector<ConicalDiagram> sweep() {
  std::vector<ConicalDiagram> out;
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    if (k->one_count() > 12) continue;
    for (int x = 0; x < k->object_count(); ++x) {
      for (auto t : {Tag::s, Tag::p, Tag::l}) {
        for (auto o : {Orientation::lax, Orientation::oplax}) {
          out.push_back(conical(pick(k, k->object_name(x)), t, o));
          if (k->object_count() == 2) out.push_back(conical(discrete_pair(k, k->object_name(0), k->object_name(1)), t, o));
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("limit of a single object is the object itself") {
  auto k = fixtures::k_cell();
  auto c = find_conical_limit(conical(pick(k, "X"), Tag::s));
  REQUIRE(c.has_value());
  CHECK(k->object_name(c->vertex) == "X");
  CHECK(c->cone == std::vector<int>{k->id1(*k->find_object("X")), k->id2(k->id1(*k->find_object("X")))});
  CHECK(verify_limit(*c).ok());
}

TEST_CASE("K_PAIR has no product of its two objects") {
  auto k = fixtures::k_pair();
  for (auto t : {Tag::s, Tag::l}) CHECK_FALSE(find_conical_limit(conical(discrete_pair(k, "a", "b"), t)).has_value());
}

TEST_CASE("the empty diagram has the terminal object as limit") {
  auto e = fixtures::shape("empty");
  auto k = fixtures::k_term();
  auto c = find_conical_limit(ConicalDiagram{TwoFunctor{e, k, {}, {}, {}}, all_arrows(e), omega(k, Tag::s), Orientation::lax});
  REQUIRE(c.has_value());
  CHECK(c->cone.empty());
}

TEST_CASE("limit vertices are unique up to isomorphism") {
  for (const auto& d : sweep()) {
    auto c = find_conical_limit(d);
    if (!c) continue;
    const auto& k = *d.diagram.target;
    for (std::size_t i = 0; i < c->successful_vertices.size(); ++i) {
      for (std::size_t j = 0; j < c->successful_vertices.size(); ++j) {
        auto ci = certify(c->problem, c->successful_vertices[i], c->successful_cones[i]);
        auto cj = certify(c->problem, c->successful_vertices[j], c->successful_cones[j]);
        auto hij = mediator(cj, ci.vertex, ci.cone);
        auto hji = mediator(ci, cj.vertex, cj.cone);
        REQUIRE(hij.has_value());
        REQUIRE(hji.has_value());
        CHECK(k.comp1(*hji, *hij) == k.id1(ci.vertex));
        CHECK(k.comp1(*hij, *hji) == k.id1(cj.vertex));
      }
    }
  }
}

TEST_CASE("every conical limit is compatible with the canonical families") {
  int found = 0;
  for (const auto& d : sweep()) {
    auto c = find_conical_limit(d);
    if (!c) continue;
    ++found;
    CHECK(verify_limit(*c).ok());
    for (auto t : {Tag::s, Tag::p, Tag::l}) {
      auto r = check_compatibility(*c, omega(d.diagram.target, t), to_string(t));
      CHECK(r.holds());
      CHECK(r.agree());
    }
  }
  CHECK(found > 10);
}

TEST_CASE("an artificial family breaks compatibility") {
  auto k = fixtures::k_iso();
  auto p = std::make_shared<const LimitProblem>(conical(pick(k, "X"), Tag::s));
  int j = *k->find_one("j");
  auto c = certify(p, *k->find_object("X'"), {j, k->id2(j)});
  REQUIRE(verify_limit(c).ok());
  CellFamily odd{k, std::vector<char>(static_cast<std::size_t>(k->two_count()), 0)};
  for (int a = 0; a < k->two_count(); ++a) odd.member[static_cast<std::size_t>(a)] = k->is_id2(a) ? 1 : 0;
  odd.member[static_cast<std::size_t>(*k->find_two("s_id_X"))] = 1;
  CHECK_FALSE(check_cell_family(odd).empty());
  auto r = check_compatibility(c, odd, "odd");
  CHECK_FALSE(r.direct);
  CHECK_FALSE(r.preimage);
  CHECK(r.agree());
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("oplax limits are lax limits in the co-dual") {
  for (const auto& d : sweep()) {
    if (d.orientation != Orientation::oplax) continue;
    auto co = co_dual(d.diagram.target);
    ConicalDiagram cd{co_dual(d.diagram, d.diagram.source, co), d.sigma, co_dual(d.omega, co), Orientation::lax};
    auto a = find_conical_limit(d);
    auto b = find_conical_limit(cd);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    CHECK(a->vertex == b->vertex);
    CHECK(a->cone == b->cone);
    CHECK(a->successful_vertices == b->successful_vertices);
  }
}

TEST_CASE("cone categories grow with omega") {
  for (const auto& d : sweep()) {
    auto strict = d;
    strict.omega = omega(d.diagram.target, Tag::s);
    auto lax = d;
    lax.omega = omega(d.diagram.target, Tag::l);
    for (int e = 0; e < d.diagram.target->object_count(); ++e) {
      auto small = cone_category(strict, e);
      auto big = cone_category(lax, e);
      for (const auto& c : small.cones) CHECK(big.find_cone(c).has_value());
    }
  }
}

TEST_CASE("mediators are read off the bijection tables") {
  for (const auto& d : sweep()) {
    auto c = find_conical_limit(d);
    if (!c) continue;
    const auto& k = *d.diagram.target;
    for (int b = 0; b < k.object_count(); ++b) {
      for (const auto& cone : c->problem->cones_at(b).cones) {
        auto h = mediator(*c, b, cone);
        REQUIRE(h.has_value());
        CHECK(precompose(k, c->problem->ones(), c->cone, *h) == cone);
      }
    }
  }
}

TEST_CASE("inserter in K_CELL") {
  auto k = fixtures::k_cell();
  auto F = validate_two_functor(RawTwoFunctor{{{"a", "X"}, {"b", "Y"}}, {{"u", "f"}, {"v", "g"}}, {}}, fixtures::k_pair(), k);
  auto lab = canonical_families(F.source, Tag::s);
  WeightedDiagram d{weights::inserter(), F, lab.sigma, omega(k, Tag::s), Orientation::lax};
  auto c = find_weighted_limit(d);
  REQUIRE(c.has_value());
  CHECK(k->object_name(c->vertex) == "X");
  int x = *k->find_object("X");
  SpecialData sd{SpecialKind::inserter, {}, *k->find_one("f"), *k->find_one("g"), -1, -1};
  SpecialCandidate cand{x, {k->id1(x)}, *k->find_two("alpha")};
  auto r = special_limit_check(*k, sd, cand, {{"s", omega(k, Tag::s)}, {"l", omega(k, Tag::l)}});
  CHECK(r.ok());
  for (const auto& [n, ok] : r.compatible) CHECK(ok);
  // the weighted certificate's projection is p = θ_a(*)
  WeightedLayout lay(d.weight);
  CHECK(c->cone[static_cast<std::size_t>(lay.object(0, 0))] == k->id1(x));
  // not an iso-inserter: alpha is not invertible
  sd.kind = SpecialKind::iso_inserter;
  CHECK_FALSE(special_limit_check(*k, sd, cand).ok());
}

TEST_CASE("equifier of equal 2-cells is the identity") {
  auto k = fixtures::k_cell();
  int x = *k->find_object("X");
  int a = *k->find_two("alpha");
  SpecialData sd{SpecialKind::equifier, {}, -1, -1, a, a};
  CHECK(special_limit_check(*k, sd, SpecialCandidate{x, {k->id1(x)}, -1}).ok());
  // the equifier of α and 1_f does not exist at X with p = id
  SpecialData bad{SpecialKind::equifier, {}, -1, -1, a, a};
  bad.beta = k->id2(*k->find_one("f"));
  CHECK_FALSE(special_limit_check(*k, bad, SpecialCandidate{x, {k->id1(x)}, -1}).cone_valid);
}

TEST_CASE("empty product is a terminal object") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    if (k->one_count() > 12) continue;
    for (int x = 0; x < k->object_count(); ++x) {
      bool terminal = true;
      for (int e = 0; e < k->object_count(); ++e) {
        auto hom = k->hom(e, x);
        terminal = terminal && hom.ones.size() == 1 && hom.twos.size() == 1;
      }
      SpecialData sd{SpecialKind::product, {}, -1, -1, -1, -1};
      CHECK(special_limit_check(*k, sd, SpecialCandidate{x, {}, -1}).ok() == terminal);
    }
  }
}

TEST_CASE("Cat inserter of two functors") {
  auto w = weights::inserter();
  auto F = weights::inserter();  // u, v: 1 -> 2 pick 0 and 1
  auto lim = cat_limit_construct(w, F, all_arrows(w.shape), Tag::s);
  CHECK(lim.limit->object_count() == 1);
  for (const auto& r : verify_cat_limit(lim, default_probes())) CHECK(r.isomorphism);
  auto direct = direct_cat_limit(w, F, DirectKind::strict);
  auto cmp = compare_cat_limits(lim, direct);
  REQUIRE(cmp.has_value());
  CHECK(is_isomorphism_of_categories(*cmp));
  // cross-check with the elementary inserter property inside Cat
  auto host = build_cat_full("Cat", {lim.limit, cats::one(), cats::two(), cats::empty()});
  auto p = host.find_functor(lim.eval(0, 0));
  auto lambda = host.find_transformation(lim.eval_arrow(1, *w.at(1).find_arrow("phi")));
  REQUIRE(p.has_value());
  REQUIRE(lambda.has_value());
  auto fu = host.find_functor(F.one(*w.shape->find_one("u")));
  auto fv = host.find_functor(F.one(*w.shape->find_one("v")));
  SpecialData sd{SpecialKind::inserter, {}, *fu, *fv, -1, -1};
  auto r = special_limit_check(*host.two, sd, SpecialCandidate{0, {*p}, *lambda});
  CHECK(r.ok());
}

TEST_CASE("Cat limits agree with the direct construction") {
  auto w = weights::inserter();
  auto F = weights::inserter();
  auto sh = w.shape;
  struct Case {
    ArrowFamily sigma;
    Tag t;
    DirectKind kind;
  };
  std::vector<Case> cases{{identity_arrows(sh), Tag::s, DirectKind::lax},
                          {all_arrows(sh), Tag::l, DirectKind::lax},
                          {all_arrows(sh), Tag::p, DirectKind::pseudo},
                          {all_arrows(sh), Tag::s, DirectKind::strict}};
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    for (const auto& c : cases) {
      auto lim = cat_limit_construct(w, F, c.sigma, c.t, o);
      auto direct = direct_cat_limit(w, F, c.kind, o);
      auto cmp = compare_cat_limits(lim, direct);
      REQUIRE(cmp.has_value());
      CHECK(check_functor(*cmp).empty());
      CHECK(is_isomorphism_of_categories(*cmp));
      for (const auto& r : verify_cat_limit(lim, {"empty", "one", "two"})) CHECK(r.isomorphism);
    }
  }
}

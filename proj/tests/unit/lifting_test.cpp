#include "doctest.h"

#include "twomon/fixtures.hpp"
#include "twomon/lifting.hpp"

using namespace twomon;

namespace {

AlgPtr talg(const TwoMonad& t, Tag tag, Variant v = Variant::omega) {
  return std::make_shared<const AlgebraTwoCategory>(build_talg(t, omega(t.base, tag), v));
}

NamedFamilies canonical(const TwoCatPtr& k) {
  return {{"Ω_s", omega(k, Tag::s)}, {"Ω_p", omega(k, Tag::p)}, {"Ω_ℓ", omega(k, Tag::l)}};
}

// The identity monad's T-Alg is the base with every cell relabelled.
TwoFunctor to_identity_talg(const AlgebraTwoCategory& alg) {
  const auto& k = *alg.monad.base;
  TwoFunctor f{alg.monad.base, alg.two, {}, {}, {}};
  for (int x = 0; x < k.object_count(); ++x) f.objects.push_back(*alg.find_algebra({x, k.id1(x)}));
  for (int g = 0; g < k.one_count(); ++g) {
    StrictAlgebra a{k.src(g), k.id1(k.src(g))}, b{k.tgt(g), k.id1(k.tgt(g))};
    f.ones.push_back(*alg.find_morphism({a, b, g, k.id2(g), alg.variant}));
  }
  for (int c = 0; c < k.two_count(); ++c) {
    for (int x : alg.two->twos_between(f.one(k.dom(c)), f.one(k.cod(c))))
      if (alg.cells[static_cast<std::size_t>(x)].cell == c) f.twos.push_back(x);
  }
  return f;
}

const CheckEntry& entry(const LiftResult& r, const std::string& name) {
  const auto* e = r.find(name);
  REQUIRE(e != nullptr);
  return *e;
}

}  // namespace

TEST_CASE("identity monad: conical lift is the base limit") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    auto alg = talg(identity_monad(k), Tag::l);
    auto iso = to_identity_talg(*alg);
    REQUIRE(iso.twos.size() == static_cast<std::size_t>(k->two_count()));
    for (const auto& sh : {"one", "discrete2", "arrow", "parallel"}) {
      auto s = fixtures::shape(sh);
      for (const auto& d : enumerate_two_functors(s, k)) {
        auto sigma = all_arrows(s);
        auto om = omega(k, Tag::l);
        auto base = find_conical_limit({d, sigma, om, Orientation::oplax});
        auto fbar = compose(iso, d);
        if (!base) {
          CHECK_THROWS_AS(lift_conical_limit(alg, sigma, om, fbar), Error);
          continue;
        }
        auto r = lift_conical_limit(alg, sigma, om, fbar, canonical(k));
        CHECK(r.ok());
        CHECK(r.algebra.carrier == base->vertex);
        CHECK(k->is_id1(r.algebra.structure));
        std::vector<int> under;
        for (std::size_t i = 0; i < r.cone.size(); ++i) {
          bool one = static_cast<int>(i) < s->object_count();
          under.push_back(one ? alg->forget.one(r.cone[i]) : alg->forget.two(r.cone[i]));
        }
        CHECK(under == base->cone);
      }
    }
  }
}

TEST_CASE("lifted structure map satisfies the defining equations") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      auto alg = talg(t, Tag::p);
      for (const auto& sh : {"discrete2", "arrow"}) {
        auto s = fixtures::shape(sh);
        for (const auto& fbar : enumerate_two_functors(s, alg->two)) {
          LiftResult r;
          try {
            r = lift_conical_limit(alg, all_arrows(s), omega(k, Tag::p), fbar);
          } catch (const Error&) {
            continue;
          }
          REQUIRE(r.ok());
          REQUIRE(r.base.has_value());
          const auto& pi = r.base->cone;
          int l = r.algebra.structure;
          for (int x = 0; x < s->object_count(); ++x) {
            int ax = alg->algebras[static_cast<std::size_t>(fbar.obj(x))].structure;
            CHECK(k->comp1(pi[static_cast<std::size_t>(x)], l) ==
                  k->comp1(ax, t.t.one(pi[static_cast<std::size_t>(x)])));
          }
          // π_f l = θ_f, the composite of F̄f's structural cell and Tπ_f
          int n = s->object_count();
          for (int f = 0; f < s->one_count(); ++f) {
            int b = alg->algebras[static_cast<std::size_t>(fbar.obj(s->tgt(f)))].structure;
            int bar = alg->morphisms[static_cast<std::size_t>(fbar.one(f))].cell;
            int pa = pi[static_cast<std::size_t>(s->src(f))];
            int pf = pi[static_cast<std::size_t>(n + f)];
            CHECK(k->rwhisker(pf, l) == k->vcomp(k->rwhisker(bar, t.t.one(pa)), k->lwhisker(b, t.t.two(pf))));
          }
        }
      }
    }
  }
}

TEST_CASE("lifted limits agree with limits found directly in T-Alg") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      for (auto tag : {Tag::s, Tag::l}) {
        for (auto v : {Variant::omega, Variant::co_omega}) {
          auto alg = talg(t, tag, v);
          auto o = v == Variant::omega ? Orientation::oplax : Orientation::lax;
          auto s = fixtures::shape("arrow");
          for (const auto& fbar : enumerate_two_functors(s, alg->two)) {
            auto sigma = identity_arrows(s);
            auto om = omega(k, Tag::l);
            auto base = find_conical_limit({compose(alg->forget, fbar), sigma, om, o});
            auto direct = find_conical_limit({fbar, sigma, omega_bar(*alg, om), o});
            if (!base) continue;
            auto r = lift_conical_limit(alg, sigma, om, fbar, canonical(k));
            CHECK(r.ok());
            CHECK(direct.has_value());
            if (v == Variant::co_omega) CHECK(entry(r, "direct 1-dimensional universal property").status == CheckStatus::pass);
          }
        }
      }
    }
  }
}

TEST_CASE("products of algebras") {
  // empty product: the terminal algebra
  auto term = fixtures::k_term();
  auto alg = talg(identity_monad(term), Tag::l);
  auto base = find_special_limit(*term, {SpecialKind::product, {}, -1, -1, -1, -1});
  REQUIRE(base.has_value());
  auto r = lift_product(alg, {}, *base);
  CHECK(r.ok());
  CHECK(r.algebra.carrier == 0);

  // K_CAT12: a product exists exactly when one exists among the algebras
  const auto& cf = fixtures::k_cat12();
  for (const auto& t : enumerate_monads(cf.two)) {
    auto a = talg(t, Tag::l);
    const auto& a2 = *a->two;
    for (int i = 0; i < a2.object_count(); ++i)
      for (int j = 0; j < a2.object_count(); ++j) {
        SpecialData lifted{SpecialKind::product, {i, j}, -1, -1, -1, -1};
        auto in_alg = find_special_limit(a2, lifted);
        auto b = find_special_limit(*cf.two, {SpecialKind::product,
                                              {a->algebras[static_cast<std::size_t>(i)].carrier,
                                               a->algebras[static_cast<std::size_t>(j)].carrier},
                                              -1, -1, -1, -1});
        if (!b) continue;
        auto lr = lift_product(a, {i, j}, *b, canonical(cf.two));
        CHECK(lr.ok());
        CHECK(in_alg.has_value());
        CHECK(entry(lr, "detects Ω_s").status == CheckStatus::pass);
      }
  }
}

TEST_CASE("inserter in K_CELL lifts to the evident one") {
  auto k = fixtures::k_cell();
  auto alg = talg(identity_monad(k), Tag::p);
  auto iso = to_identity_talg(*alg);
  int f = iso.one(*k->find_one("f")), g = iso.one(*k->find_one("g"));
  auto base = find_special_limit(*k, {SpecialKind::inserter, {}, *k->find_one("f"), *k->find_one("g"), -1, -1});
  REQUIRE(base.has_value());
  CHECK(k->object_name(base->vertex) == "X");
  CHECK(base->lambda == *k->find_two("alpha"));
  auto r = lift_inserter(alg, f, g, *base, canonical(k));
  CHECK(r.ok());
  CHECK(r.algebra.carrier == base->vertex);
  CHECK(alg->forget.two(r.cone[1]) == base->lambda);
  CHECK(entry(r, "key equation equivalence").status == CheckStatus::pass);
  // f = g with λ the identity
  auto same = find_special_limit(*k, {SpecialKind::inserter, {}, *k->find_one("f"), *k->find_one("f"), -1, -1});
  REQUIRE(same.has_value());
  CHECK(k->is_id2(same->lambda));
  CHECK(lift_inserter(alg, f, f, *same).ok());
}

TEST_CASE("key equation: both predicates on every candidate") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      auto alg = talg(t, Tag::l);
      const auto& a2 = *alg->two;
      for (int f = 0; f < a2.one_count(); ++f)
        for (int g = 0; g < a2.one_count(); ++g) {
          if (a2.src(f) != a2.src(g) || a2.tgt(f) != a2.tgt(g)) continue;
          const auto& fm = alg->morphisms[static_cast<std::size_t>(f)];
          const auto& gm = alg->morphisms[static_cast<std::size_t>(g)];
          auto base = find_special_limit(*k, {SpecialKind::inserter, {}, fm.f, gm.f, -1, -1});
          if (!base) continue;
          auto r = lift_inserter(alg, f, g, *base);
          REQUIRE(r.algebra_index >= 0);
          auto key = inserter_key_equation(*alg, f, g, *base, r.algebra.structure);
          // oracle: one candidate per (q, μ) with q a T-Alg 1-cell into the source
          int expected = 0;
          for (int q = 0; q < a2.one_count(); ++q) {
            if (a2.tgt(q) != a2.src(f)) continue;
            int under = alg->morphisms[static_cast<std::size_t>(q)].f;
            expected += static_cast<int>(k->twos_between(k->comp1(fm.f, under), k->comp1(gm.f, under)).size());
          }
          CHECK(key.candidates == expected);
          CHECK(key.holds());
        }
    }
  }
}

TEST_CASE("equifiers") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      auto alg = talg(t, Tag::l);
      const auto& a2 = *alg->two;
      for (int x = 0; x < a2.two_count(); ++x) {
        // α = β: the identity projection
        auto base = find_special_limit(*k, {SpecialKind::equifier, {}, -1, -1, alg->cells[static_cast<std::size_t>(x)].cell,
                                            alg->cells[static_cast<std::size_t>(x)].cell});
        REQUIRE(base.has_value());
        auto r = lift_equifier(alg, x, x, *base);
        CHECK(r.ok());
        if (k->is_id1(base->projections[0])) CHECK(r.algebra == alg->algebras[static_cast<std::size_t>(a2.src2(x))]);
      }
    }
  }
}

TEST_CASE("weighted lift with the terminal weight is the conical lift") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      auto alg = talg(t, Tag::p);
      auto s = fixtures::shape("arrow");
      auto w = terminal_weight(s);
      for (const auto& fbar : enumerate_two_functors(s, alg->two)) {
        auto sigma = all_arrows(s);
        auto om = omega(k, Tag::p);
        std::optional<LiftResult> c, wl;
        try {
          c = lift_conical_limit(alg, sigma, om, fbar);
        } catch (const Error&) {
        }
        try {
          wl = lift_weighted_limit(alg, sigma, om, w, fbar);
        } catch (const Error&) {
        }
        REQUIRE(c.has_value() == wl.has_value());
        if (!c) continue;
        CHECK(c->ok());
        CHECK(wl->ok());
        CHECK(c->algebra == wl->algebra);
        CHECK(c->projections == wl->projections);
      }
    }
  }
}

TEST_CASE("precondition failures") {
  // T(Ω) ⊄ Ω on the reflection monad
  auto k = fixtures::k_reflect();
  std::optional<TwoMonad> reflect;
  for (const auto& t : enumerate_monads(k))
    if (!t.t.objects.empty() && t.t.obj(*k->find_object("(X,0)")) == *k->find_object("(X,1)")) reflect = t;
  REQUIRE(reflect.has_value());
  auto om = generated_cell_family(k, {*k->find_two("(alpha,1_id_0)")});
  auto alg = talg(*reflect, Tag::s);
  auto s = fixtures::shape("one");
  auto fbar = enumerate_two_functors(s, alg->two).front();
  try {
    lift_conical_limit(alg, all_arrows(s), om, fbar);
    FAIL("expected PreconditionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailure);
  }
  // Ω' ⊄ Ω
  auto cell = fixtures::k_cell();
  auto lalg = talg(identity_monad(cell), Tag::l);
  auto f1 = enumerate_two_functors(s, lalg->two).front();
  try {
    lift_weighted_limit(lalg, all_arrows(s), omega(cell, Tag::s), terminal_weight(s), f1);
    FAIL("expected SubsetFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SubsetFailure);
  }
  // a candidate that is not an inserter
  auto palg = talg(identity_monad(cell), Tag::p);
  auto iso = to_identity_talg(*palg);
  int f = *cell->find_one("f"), g = *cell->find_one("g");
  SpecialCandidate bogus{*cell->find_object("X"), {cell->id1(*cell->find_object("X"))}, cell->id2(f)};
  try {
    lift_inserter(palg, iso.one(f), iso.one(g), bogus);
    FAIL("expected MediatorMissing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MediatorMissing);
  }
}

TEST_CASE("reversal is an isomorphism of algebra 2-categories") {
  for (const auto& [name, k] : fixtures::base_fixtures()) {
    for (const auto& t : enumerate_monads(k)) {
      auto a = talg(t, Tag::p);
      auto c = talg(t, Tag::p, Variant::co_omega);
      auto r = reversal_functor(*a, *c);
      CHECK(is_isomorphism(r));
      CHECK(compose(reversal_functor(*c, *a), r) == identity_two_functor(a->two));
    }
  }
}

TEST_CASE("corollary runners") {
  const auto& cf = fixtures::k_cat12();
  auto k = cf.two;
  auto w = weights::inserter();
  int lifted = 0;
  for (const auto& t : enumerate_monads(k)) {
    for (auto gamma : {Tag::s, Tag::p, Tag::l}) {
      auto alg = talg(t, gamma);
      for (const auto& fbar : enumerate_two_functors(w.shape, alg->two)) {
        for (auto kind : {CorollaryKind::oplax, CorollaryKind::sigma, CorollaryKind::strict}) {
          if (kind == CorollaryKind::sigma && gamma == Tag::l) continue;
          if (kind == CorollaryKind::strict && gamma != Tag::s) continue;
          for (bool lax : {false, true}) {
            if (lax && gamma == Tag::l) continue;
            CorollaryInput in{kind, alg, w, all_arrows(w.shape), fbar, lax};
            LiftResult r;
            try {
              r = corollary_runner(in);
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::PreconditionFailure);
              continue;
            }
            ++lifted;
            CHECK(r.ok());
            if (kind == CorollaryKind::oplax) {
              CHECK(entry(r, "detects Ω_s").status == CheckStatus::pass);
              CHECK(entry(r, "detects Ω_p").status == CheckStatus::pass);
            }
            if (kind == CorollaryKind::sigma) CHECK(entry(r, "detects Ω_s").status == CheckStatus::pass);
            // reproducible transcripts
            auto again = corollary_runner(in);
            REQUIRE(again.transcript.size() == r.transcript.size());
            for (std::size_t i = 0; i < r.transcript.size(); ++i) {
              CHECK(again.transcript[i].name == r.transcript[i].name);
              CHECK(again.transcript[i].status == r.transcript[i].status);
            }
          }
        }
      }
    }
  }
  CHECK(lifted > 0);
}

TEST_CASE("strict corollary on the identity monad leaves limits unchanged") {
  auto k = fixtures::k_cat12().two;
  auto alg = talg(identity_monad(k), Tag::s);
  auto iso = to_identity_talg(*alg);
  auto w = weights::inserter();
  for (const auto& d : enumerate_two_functors(w.shape, k)) {
    auto base = find_weighted_limit({w, d, all_arrows(w.shape), omega(k, Tag::s), Orientation::oplax});
    if (!base) continue;
    auto r = corollary_runner({CorollaryKind::strict, alg, w, all_arrows(w.shape), compose(iso, d), false});
    CHECK(r.ok());
    CHECK(r.algebra.carrier == base->vertex);
  }
}

TEST_CASE("inserter written three ways") {
  auto k = fixtures::k_cell();
  auto alg = talg(identity_monad(k), Tag::p);
  auto iso = to_identity_talg(*alg);
  auto gap = inserter_gap(alg, iso.one(*k->find_one("f")), iso.one(*k->find_one("g")), {{"Ω_s", omega(k, Tag::s)}});
  CHECK(gap.non_identity.empty());
  REQUIRE(gap.proposition.has_value());
  REQUIRE(gap.conical.has_value());
  REQUIRE(gap.elements.has_value());
  CHECK(gap.proposition->ok());
  CHECK(gap.conical->ok());
  CHECK(gap.elements->ok());
  // all three lifted vertices have the same carrier
  CHECK(gap.proposition->algebra.carrier == gap.conical->algebra.carrier);
}

#include "doctest.h"

#include "twomon/fixtures.hpp"
#include "twomon/transform.hpp"

using namespace twomon;

namespace {

TwoFunctor pair_to_cell(const std::string& u, const std::string& v) {
  return validate_two_functor(RawTwoFunctor{{{"a", "X"}, {"b", "Y"}}, {{"u", u}, {"v", v}}, {}}, fixtures::k_pair(),
                              fixtures::k_cell());
}

// Independent oracle: lax transformations F ⇒ G counted over every
// assignment of 1-cells to objects and 2-cells to 1-cells, with the three
// axioms written out directly.
int oracle_count(const TwoFunctor& F, const TwoFunctor& G, const ArrowFamily& sigma, const CellFamily& omega) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  int nobj = A.object_count(), nones = A.one_count();
  std::vector<int> comp(static_cast<std::size_t>(nobj), 0), cell(static_cast<std::size_t>(nones), 0);
  auto next = [](std::vector<int>& v, int base) {
    for (auto& x : v) {
      if (++x < base) return true;
      x = 0;
    }
    return false;
  };
  int count = 0;
  do {
    bool ok = true;
    for (int x = 0; x < nobj; ++x) {
      int c = comp[static_cast<std::size_t>(x)];
      ok = ok && B.src(c) == F.obj(x) && B.tgt(c) == G.obj(x);
    }
    if (!ok) continue;
    std::fill(cell.begin(), cell.end(), 0);
    do {
      auto th = [&](int x) { return comp[static_cast<std::size_t>(x)]; };
      auto tf = [&](int f) { return cell[static_cast<std::size_t>(f)]; };
      bool good = true;
      for (int f = 0; f < nones && good; ++f) {
        int d = B.comp1(G.one(f), th(A.src(f)));
        int c = B.comp1(th(A.tgt(f)), F.one(f));
        good = B.dom(tf(f)) == d && B.cod(tf(f)) == c;
        if (sigma.contains(f)) good = good && omega.contains(tf(f));
      }
      for (int x = 0; x < nobj && good; ++x) good = tf(A.id1(x)) == B.id2(th(x));
      for (int f = 0; f < nones && good; ++f)
        for (int g = 0; g < nones && good; ++g) {
          if (A.src(g) != A.tgt(f)) continue;
          int lhs = tf(A.comp1(g, f));
          int rhs = B.vcomp(B.hcomp(tf(g), B.id2(F.one(f))), B.hcomp(B.id2(G.one(g)), tf(f)));
          good = lhs == rhs;
        }
      for (int al = 0; al < A.two_count() && good; ++al) {
        int f = A.dom(al), g = A.cod(al);
        int lhs = B.vcomp(tf(g), B.hcomp(G.two(al), B.id2(th(A.src(f)))));
        int rhs = B.vcomp(B.hcomp(B.id2(th(A.tgt(f))), F.two(al)), tf(f));
        good = lhs == rhs;
      }
      if (good) ++count;
    } while (next(cell, B.two_count()));
  } while (next(comp, B.one_count()));
  return count;
}

}  // namespace

TEST_CASE("identity transformation is valid") {
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    auto F = pair_to_cell("f", "g");
    CHECK(check_lax_transformation(identity_transformation(F, o)).empty());
  }
}

TEST_CASE("constant diagram transformation example") {
  auto pair = fixtures::k_pair();
  auto cell = fixtures::k_cell();
  auto F = constant_two_functor(pair, cell, 0);
  auto G = constant_two_functor(pair, cell, 1);
  RawLaxTransformation raw{{{"a", "f"}, {"b", "f"}}, {{"u", "1_f"}, {"v", "1_f"}}};
  auto t = validate_lax_transformation(raw, F, G, Orientation::lax);
  CHECK(check_lax_transformation(t).empty());
  auto bad = t;
  bad.cells[static_cast<std::size_t>(*pair->find_one("id_a"))] = *cell->find_two("alpha");
  auto v = check_lax_transformation(bad);
  REQUIRE(!v.empty());
  // alpha has the type f => g, not f => f
  CHECK(v.front().kind == ErrorKind::TypeMismatch);
}

TEST_CASE("unit axiom violation") {
  auto cell = fixtures::k_cell();
  auto pair = fixtures::k_pair();
  auto x = identity_transformation(pair_to_cell("f", "g"), Orientation::lax);
  x.cells[static_cast<std::size_t>(*pair->find_one("u"))] = *cell->find_two("alpha");
  auto v = check_lax_transformation(x);
  REQUIRE(!v.empty());
  CHECK(v.front().kind == ErrorKind::TypeMismatch);
  // K_ISO gives the identity cell a twin of the same type
  auto iso = fixtures::k_iso();
  auto C = constant_two_functor(pair, iso, 0);
  auto y = identity_transformation(C, Orientation::lax);
  y.cells[static_cast<std::size_t>(*pair->find_one("id_a"))] = *iso->find_two("s_id_X");
  auto w = check_lax_transformation(y);
  REQUIRE(!w.empty());
  CHECK(w.front().kind == ErrorKind::UnitAxiom);
}

TEST_CASE("enumeration matches the nested-loop oracle") {
  auto cell = fixtures::k_cell();
  auto pair = fixtures::k_pair();
  std::vector<TwoFunctor> fs{pair_to_cell("f", "g"), pair_to_cell("g", "f"), pair_to_cell("f", "f"),
                             constant_two_functor(pair, cell, 0), constant_two_functor(pair, cell, 1)};
  for (auto& F : fs)
    for (auto& G : fs)
      for (Tag tag : {Tag::s, Tag::l}) {
        for (auto sigma : {identity_arrows(pair), all_arrows(pair)}) {
          auto om = omega(cell, tag);
          auto ts = enumerate_transformations(F, G, Orientation::lax, sigma, om);
          CHECK(static_cast<int>(ts.size()) == oracle_count(F, G, sigma, om));
          for (auto& t : ts) {
            CHECK(check_lax_transformation(t).empty());
            CHECK(is_sigma_omega(t, sigma, om));
          }
        }
      }
}

TEST_CASE("is_sigma_omega trivial cases") {
  auto iso = fixtures::k_iso();
  auto shape = fixtures::shape("arrow");
  auto F = validate_two_functor(RawTwoFunctor{{{"0", "X"}, {"1", "X"}}, {{"phi", "id_X"}}, {}}, shape, iso);
  auto all = enumerate_transformations(F, F, Orientation::lax, identity_arrows(shape), omega(iso, Tag::l));
  bool some_false = false;
  for (auto& t : all) {
    CHECK(is_sigma_omega(t, identity_arrows(shape), omega(iso, Tag::s)));
    CHECK(is_sigma_omega(t, all_arrows(shape), omega(iso, Tag::l)));
    if (!is_sigma_omega(t, all_arrows(shape), omega(iso, Tag::s))) some_false = true;
  }
  CHECK(some_false);
  CHECK_THROWS_AS(is_sigma_omega(all.front(), all_arrows(fixtures::k_pair()), omega(iso, Tag::s)), Error);
}

TEST_CASE("modifications") {
  auto cell = fixtures::k_cell();
  auto term = fixtures::k_term();
  auto F = constant_two_functor(term, cell, 0);
  auto G = constant_two_functor(term, cell, 1);
  auto ts = enumerate_transformations(F, G, Orientation::lax, all_arrows(term), omega(cell, Tag::l));
  REQUIRE(ts.size() == 2);
  auto& tf = ts[0].at(0) == *cell->find_one("f") ? ts[0] : ts[1];
  auto& tg = ts[0].at(0) == *cell->find_one("f") ? ts[1] : ts[0];
  auto m = validate_modification({{"T", "alpha"}}, tf, tg);
  CHECK(is_omega_modification(m, omega(cell, Tag::l)));
  CHECK(!is_omega_modification(m, omega(cell, Tag::s)));
  auto id = identity_modification(tf);
  CHECK(check_modification(id).empty());
  for (Tag t : {Tag::s, Tag::p, Tag::l}) CHECK(is_omega_modification(id, omega(cell, t)));
  auto s_all = enumerate_modifications(tf, tg);
  CHECK(s_all.size() == 1);
  auto os = omega(cell, Tag::s);
  CHECK(enumerate_modifications(tf, tg, &os).empty());
  // componentwise invertible modification is an Ω_p-modification
  auto iso = fixtures::k_iso();
  auto I = constant_two_functor(term, iso, 0);
  auto it = identity_transformation(I, Orientation::lax);
  for (auto& mm : enumerate_modifications(it, it)) CHECK(is_omega_modification(mm, omega(iso, Tag::p)));
}

TEST_CASE("vertical composites of transformations stay valid and σ-ω") {
  auto cell = fixtures::k_cell();
  auto pair = fixtures::k_pair();
  std::vector<TwoFunctor> fs{pair_to_cell("f", "g"), pair_to_cell("g", "g"), constant_two_functor(pair, cell, 0),
                             constant_two_functor(pair, cell, 1)};
  for (auto o : {Orientation::lax, Orientation::oplax}) {
    auto sigma = all_arrows(pair);
    auto om = omega(cell, Tag::l);
    for (auto& F : fs)
      for (auto& G : fs)
        for (auto& H : fs)
          for (auto& t : enumerate_transformations(F, G, o, sigma, om))
            for (auto& u : enumerate_transformations(G, H, o, sigma, om)) {
              auto c = vertical(u, t);
              CHECK(check_lax_transformation(c).empty());
            }
  }
}

TEST_CASE("oplax validation agrees with lax validation in the co-dual") {
  auto cell = fixtures::k_cell();
  auto co = co_dual(cell);
  auto pair = fixtures::k_pair();
  auto co_pair = co_dual(pair);
  std::vector<TwoFunctor> fs{pair_to_cell("f", "g"), pair_to_cell("g", "f"), constant_two_functor(pair, cell, 0),
                             constant_two_functor(pair, cell, 1)};
  for (auto& F : fs)
    for (auto& G : fs) {
      auto ts = enumerate_transformations(F, G, Orientation::oplax, all_arrows(pair), omega(cell, Tag::l));
      auto coF = co_dual(F, co_pair, co);
      auto coG = co_dual(G, co_pair, co);
      auto cts = enumerate_transformations(coF, coG, Orientation::lax, all_arrows(co_pair), omega(co, Tag::l));
      REQUIRE(ts.size() == cts.size());
      for (std::size_t i = 0; i < ts.size(); ++i) CHECK(co_dual(ts[i], coF, coG) == cts[i]);
    }
}

TEST_CASE("hom_sigma_omega") {
  auto term = fixtures::k_term();
  auto pair = fixtures::k_pair();
  auto F = constant_two_functor(pair, term, 0);
  auto h = hom_sigma_omega({F, F}, {"F", "G"}, Orientation::lax, all_arrows(pair), omega(term, Tag::s),
                           omega(term, Tag::s));
  // each of the 4 ordered pairs carries exactly one transformation
  CHECK(h.two->one_count() == 4);
  CHECK(check_two_category(*h.two).empty());
  auto cell = fixtures::k_cell();
  std::vector<TwoFunctor> fs{pair_to_cell("f", "g"), constant_two_functor(pair, cell, 0)};
  auto hl = hom_sigma_omega(fs, {"F", "C"}, Orientation::lax, identity_arrows(pair), omega(cell, Tag::l),
                            omega(cell, Tag::l));
  auto hs = hom_sigma_omega(fs, {"F", "C"}, Orientation::lax, identity_arrows(pair), omega(cell, Tag::l),
                            omega(cell, Tag::s));
  CHECK(check_two_category(*hl.two).empty());
  CHECK(check_two_category(*hs.two).empty());
  CHECK(hl.two->one_count() == hs.two->one_count());
  for (auto& m : hs.modifications) {
    for (int c : m.components) CHECK(cell->is_id2(c));
  }
  CHECK(hl.two->two_count() >= hs.two->two_count());
}

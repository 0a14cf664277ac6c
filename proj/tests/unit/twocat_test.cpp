#include "doctest.h"

#include "twomon/fixtures.hpp"
#include "twomon/twocat.hpp"

using namespace twomon;

TEST_CASE("K_TERM and K_CELL validate with the expected counts") {
  auto t = fixtures::k_term();
  CHECK(t->object_count() == 1);
  CHECK(t->one_count() == 1);
  CHECK(t->two_count() == 1);
  auto k = fixtures::k_cell();
  CHECK(k->object_count() == 2);
  CHECK(k->one_count() == 4);
  CHECK(k->two_count() == 5);
}

TEST_CASE("corrupting a forced identity composite raises InterchangeViolation") {
  auto raw = fixtures::raw_k_cell();
  complete_identities(raw);
  raw.hcomp[{"1_g", "1_id_X"}] = "1_f";
  try {
    validate_two_category(raw);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InterchangeViolation);
  }
}

TEST_CASE("all fixtures validate and satisfy interchange on every quadruple") {
  for (auto& [name, k] : fixtures::base_fixtures()) {
    INFO(name);
    CHECK(check_two_category(*k).empty());
    // interchange evaluated directly over all vertically composable pairs
    for (int a = 0; a < k->two_count(); ++a)
      for (int a2 = 0; a2 < k->two_count(); ++a2) {
        if (k->dom(a2) != k->cod(a)) continue;
        for (int b = 0; b < k->two_count(); ++b)
          for (int b2 = 0; b2 < k->two_count(); ++b2) {
            if (k->dom(b2) != k->cod(b) || k->src2(b) != k->tgt2(a)) continue;
            CHECK(k->hcomp(k->vcomp(b2, b), k->vcomp(a2, a)) == k->vcomp(k->hcomp(b2, a2), k->hcomp(b, a)));
          }
      }
  }
  for (auto& n : fixtures::shape_names()) CHECK(check_two_category(*fixtures::shape(n)).empty());
}

TEST_CASE("K_CAT12 has 7 functors and 11 natural transformations") {
  const auto& cf = fixtures::k_cat12();
  CHECK(cf.two->one_count() == 7);
  CHECK(cf.two->two_count() == 11);
}

TEST_CASE("2-functors") {
  auto k = fixtures::k_cell();
  CHECK(check_two_functor(identity_two_functor(k)).empty());
  auto pair = fixtures::k_pair();
  auto term = fixtures::k_term();
  CHECK(check_two_functor(constant_two_functor(pair, term, 0)).empty());
  // alpha sent to id_f while f and g go to distinct 1-cells
  auto bad = identity_two_functor(k);
  bad.twos[static_cast<std::size_t>(*k->find_two("alpha"))] = *k->find_two("1_f");
  auto v = check_two_functor(bad);
  REQUIRE(!v.empty());
  CHECK(v.front().kind == ErrorKind::NotFunctorial);
  RawTwoFunctor raw{{{"a", "X"}, {"b", "Y"}}, {{"u", "f"}, {"v", "g"}}, {}};
  auto f = validate_two_functor(raw, pair, k);
  CHECK(f.one(*pair->find_one("v")) == *k->find_one("g"));
}

TEST_CASE("families") {
  auto k = fixtures::k_cell();
  std::vector<std::string> all;
  for (int a = 0; a < k->two_count(); ++a) all.push_back(k->two_name(a));
  CHECK(validate_cell_family(k, all) == omega(k, Tag::l));
  CHECK(validate_cell_family(k, {"1_id_X", "1_id_Y", "1_f", "1_g"}) == omega(k, Tag::s));
  try {
    validate_cell_family(k, {"alpha"});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingIdentity);
  }
  // canonical Ω_p on K_CELL is Ω_s: alpha has no inverse
  CHECK(omega(k, Tag::p) == omega(k, Tag::s));
  CHECK(!k->is_invertible(*k->find_two("alpha")));
  auto t = fixtures::k_term();
  CHECK(omega(t, Tag::s) == omega(t, Tag::l));
  for (auto& [name, h] : fixtures::base_fixtures()) {
    for (Tag tag : {Tag::s, Tag::p, Tag::l}) {
      auto lab = canonical_families(h, tag);
      CHECK(check_arrow_family(lab.sigma).empty());
      CHECK(check_cell_family(lab.omega).empty());
    }
    CHECK(omega(h, Tag::s).subset_of(omega(h, Tag::p)));
    CHECK(omega(h, Tag::p).subset_of(omega(h, Tag::l)));
  }
  auto iso = fixtures::k_iso();
  CHECK(omega(iso, Tag::p) == omega(iso, Tag::l));
  CHECK(!(omega(iso, Tag::s) == omega(iso, Tag::p)));
}

TEST_CASE("arrow family closure") {
  auto k = fixtures::k_idem();
  try {
    validate_arrow_family(k, {});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingIdentity);
  }
  auto pair = fixtures::k_pair();
  CHECK(check_arrow_family(validate_arrow_family(pair, {"id_a", "id_b", "u"})).empty());
}

TEST_CASE("label order") {
  auto k = fixtures::k_cell();
  auto s = canonical_families(k, Tag::s);
  auto p = canonical_families(k, Tag::p);
  auto l = canonical_families(k, Tag::l);
  CHECK(compare_labels(s, l) == LabelOrder::Less);
  CHECK(compare_labels(s, p) != LabelOrder::Greater);
  CHECK(compare_labels(l, s) == LabelOrder::Greater);
  auto iso = fixtures::k_iso();
  CHECK(compare_labels(canonical_families(iso, Tag::s), canonical_families(iso, Tag::p)) == LabelOrder::Less);
  auto pair = fixtures::k_pair();
  Label a{identity_arrows(pair), omega(pair, Tag::s)};
  Label b{all_arrows(pair), omega(pair, Tag::l)};
  // on K_PAIR Ω_s = Ω_ℓ, so the Σ inclusion decides
  CHECK(compare_labels(a, b) == LabelOrder::Greater);
  auto kc = fixtures::k_cell();
  Label c{identity_arrows(kc), omega(kc, Tag::s)};
  Label d{all_arrows(kc), omega(kc, Tag::l)};
  CHECK(compare_labels(c, d) == LabelOrder::Incomparable);
  CHECK_THROWS_AS(compare_labels(a, c), Error);
}

TEST_CASE("co-duality") {
  for (auto& [name, k] : fixtures::base_fixtures()) {
    auto co = co_dual(*k);
    CHECK(check_two_category(co).empty());
    CHECK(co_dual(co) == *k);
    CHECK(co.two_count() == k->two_count());
    CHECK(co.one_count() == k->one_count());
    auto cop = std::make_shared<const TwoCategory>(co);
    CHECK(co_dual(omega(k, Tag::p), cop) == omega(cop, Tag::p));
    CHECK(co_dual(omega(k, Tag::s), cop) == omega(cop, Tag::s));
  }
  auto co = co_dual(*fixtures::k_cell());
  int alpha = *co.find_two("alpha");
  CHECK(co.one_name(co.dom(alpha)) == "g");
  CHECK(co.one_name(co.cod(alpha)) == "f");
}

TEST_CASE("hom categories") {
  auto k = fixtures::k_cell();
  auto h = k->hom(0, 1);
  CHECK(h.category->object_count() == 2);
  CHECK(h.category->arrow_count() == 3);
  CHECK(check_category(*h.category).empty());
}

#include "doctest.h"

#include "twomon/fincat.hpp"

using namespace twomon;

namespace {

// Independent count of natural transformations 1 -> 2: functors pick an
// object, components are arrows between the picks.
int brute_force_functor_category_1_2_arrows() {
  int arrows_between[2][2] = {{1, 1}, {0, 1}};
  int total = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) total += arrows_between[a][b];
  return total;
}

// Functors counted by brute force over all object/arrow assignments.
int brute_force_functor_count(const FinCategory& c, const FinCategory& d) {
  if (d.object_count() == 0) return c.object_count() == 0 ? 1 : 0;
  int count = 0;
  std::vector<int> objs(static_cast<std::size_t>(c.object_count()), 0);
  std::vector<int> arrs(static_cast<std::size_t>(c.arrow_count()), 0);
  auto total = [&](std::vector<int>& v, int base) {
    for (auto& x : v) {
      if (++x < base) return true;
      x = 0;
    }
    return false;
  };
  do {
    do {
      bool ok = true;
      for (int f = 0; f < c.arrow_count() && ok; ++f) {
        int g = arrs[static_cast<std::size_t>(f)];
        ok = d.source(g) == objs[static_cast<std::size_t>(c.source(f))] &&
             d.target(g) == objs[static_cast<std::size_t>(c.target(f))];
        if (c.is_identity(f)) ok = ok && d.is_identity(g);
      }
      for (int f = 0; f < c.arrow_count() && ok; ++f)
        for (int g = 0; g < c.arrow_count() && ok; ++g)
          if (c.composable(g, f))
            ok = arrs[static_cast<std::size_t>(c.compose(g, f))] ==
                 d.compose(arrs[static_cast<std::size_t>(g)], arrs[static_cast<std::size_t>(f)]);
      if (ok) ++count;
    } while (total(arrs, d.arrow_count()));
  } while (total(objs, d.object_count()));
  return count;
}

}  // namespace

TEST_CASE("validate_category accepts 1 and 2") {
  CHECK(check_category(*cats::one()).empty());
  auto two = cats::two();
  CHECK(two->object_count() == 2);
  CHECK(two->arrow_count() == 3);
  CHECK(check_category(*two).empty());
}

TEST_CASE("deleting a composite of 2 raises MissingComposite with witnesses") {
  RawCategory raw{"2", {"0", "1"}, {{"phi", "0", "1"}}, {}, {}};
  complete_identity_composites(raw);
  raw.composites.erase({"phi", "id_0"});
  try {
    validate_category(raw);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingComposite);
    CHECK(e.violations().front().witnesses == std::vector<std::string>{"phi", "id_0"});
  }
}

TEST_CASE("non-associative table is rejected") {
  // one object monoid {e,a,b} with a wrong product table
  RawCategory raw{"M", {"*"}, {{"a", "*", "*"}, {"b", "*", "*"}}, {}, {}};
  complete_identity_composites(raw);
  raw.composites[{"a", "a"}] = "b";
  raw.composites[{"a", "b"}] = "a";
  raw.composites[{"b", "a"}] = "b";
  raw.composites[{"b", "b"}] = "b";
  try {
    validate_category(raw);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAssociative);
  }
}

TEST_CASE("revalidation is a no-op") {
  for (auto c : {cats::empty(), cats::one(), cats::two(), cats::parallel(), cats::iso(), cats::chain3()}) {
    auto again = validate_category(to_raw(*c));
    CHECK(again == *c);
  }
}

TEST_CASE("functor_category(1,2) has 2 objects and 3 morphisms") {
  auto fc = functor_category(cats::one(), cats::two());
  CHECK(fc.category->object_count() == 2);
  CHECK(fc.category->arrow_count() == brute_force_functor_category_1_2_arrows());
  CHECK(check_category(*fc.category).empty());
}

TEST_CASE("functor categories into 1 and out of 0") {
  for (auto c : {cats::two(), cats::parallel(), cats::chain3(), cats::iso()}) {
    auto fc = functor_category(c, cats::one());
    CHECK(fc.category->object_count() == 1);
    CHECK(fc.category->arrow_count() == 1);
  }
  auto fc = functor_category(cats::empty(), cats::chain3());
  CHECK(fc.category->object_count() == 1);
}

TEST_CASE("functor enumeration matches brute force and validates") {
  std::vector<CatPtr> all{cats::empty(), cats::one(), cats::two(), cats::parallel(), cats::iso(),
                          cats::discrete2(), cats::chain3()};
  for (auto& c : all) {
    for (auto& d : all) {
      auto fs = enumerate_functors(c, d);
      CHECK(static_cast<int>(fs.size()) == brute_force_functor_count(*c, *d));
      for (auto& f : fs) CHECK(check_functor(f).empty());
      if (c->arrow_count() + d->arrow_count() < 10) {
        auto fc = functor_category(c, d);
        CHECK(check_category(*fc.category).empty());
      }
    }
  }
}

TEST_CASE("is_isomorphism_of_categories agrees with a brute-force inverse") {
  std::vector<CatPtr> all{cats::one(), cats::two(), cats::iso(), cats::discrete2(), cats::parallel()};
  for (auto& c : all) {
    for (auto& d : all) {
      auto fs = enumerate_functors(c, d);
      auto gs = enumerate_functors(d, c);
      for (auto& f : fs) {
        bool has_inverse = false;
        for (auto& g : gs) {
          if (compose(g, f) == identity_functor(c) && compose(f, g) == identity_functor(d)) has_inverse = true;
        }
        CHECK(is_isomorphism_of_categories(f) == has_inverse);
      }
    }
  }
  CHECK(is_isomorphism_of_categories(identity_functor(cats::two())));
  CHECK_FALSE(is_isomorphism_of_categories(enumerate_functors(cats::two(), cats::one()).front()));
}

TEST_CASE("products") {
  auto p11 = product_category(cats::one(), cats::one());
  CHECK(p11.category->object_count() == 1);
  CHECK(p11.category->arrow_count() == 1);
  auto p22 = product_category(cats::two(), cats::two());
  CHECK(p22.category->arrow_count() == 9);
  CHECK(check_category(*p22.category).empty());
  CHECK(check_functor(p22.first).empty());
  CHECK(check_functor(p22.second).empty());
  auto p0 = product_category(cats::two(), cats::empty());
  CHECK(p0.category->object_count() == 0);
}

TEST_CASE("horizontal composition of natural transformations obeys interchange") {
  auto fc = functor_category(cats::two(), cats::two());
  for (auto& a : fc.transformations)
    for (auto& a2 : fc.transformations) {
      if (!(a.target == a2.source)) continue;
      for (auto& b : fc.transformations)
        for (auto& b2 : fc.transformations) {
          if (!(b.target == b2.source)) continue;
          CHECK(horizontal(vertical(b2, b), vertical(a2, a)) ==
                vertical(horizontal(b2, a2), horizontal(b, a)));
        }
    }
}

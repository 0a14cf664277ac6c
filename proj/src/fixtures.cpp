#include "twomon/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace twomon::fixtures {

namespace {

TwoCatPtr finish(RawTwoCategory raw) {
  complete_identities(raw);
  return std::make_shared<const TwoCategory>(validate_two_category(std::move(raw)));
}

template <class F>
TwoCatPtr cached(F make) {
  static TwoCatPtr p = make();
  return p;
}

}  // namespace

RawTwoCategory raw_k_term() {
  RawTwoCategory raw;
  raw.name = "K_TERM";
  raw.objects = {"T"};
  return raw;
}

RawTwoCategory raw_k_cell() {
  RawTwoCategory raw;
  raw.name = "K_CELL";
  raw.objects = {"X", "Y"};
  raw.ones = {{"f", "X", "Y"}, {"g", "X", "Y"}};
  raw.twos = {{"alpha", "f", "g"}};
  return raw;
}

RawTwoCategory raw_k_pair() {
  RawTwoCategory raw;
  raw.name = "K_PAIR";
  raw.objects = {"a", "b"};
  raw.ones = {{"u", "a", "b"}, {"v", "a", "b"}};
  return raw;
}

RawTwoCategory raw_k_idem() {
  RawTwoCategory raw;
  raw.name = "K_IDEM";
  raw.objects = {"S"};
  raw.ones = {{"t", "S", "S"}};
  raw.id1["S"] = "e";
  raw.ones.push_back({"e", "S", "S"});
  raw.comp1[{"t", "t"}] = "t";
  return raw;
}

RawTwoCategory raw_k_parallel_cells() {
  RawTwoCategory raw;
  raw.name = "K_EQ";
  raw.objects = {"a", "b"};
  raw.ones = {{"u", "a", "b"}, {"v", "a", "b"}};
  raw.twos = {{"alpha", "u", "v"}, {"beta", "u", "v"}};
  return raw;
}

TwoCatPtr k_term() { return cached([] { return finish(raw_k_term()); }); }
TwoCatPtr k_cell() { return cached([] { return finish(raw_k_cell()); }); }
TwoCatPtr k_pair() { return cached([] { return finish(raw_k_pair()); }); }
TwoCatPtr k_idem() { return cached([] { return finish(raw_k_idem()); }); }
TwoCatPtr k_parallel_cells() { return cached([] { return finish(raw_k_parallel_cells()); }); }

TwoCatPtr k_iso() {
  return cached([] {
    auto base = cats::iso();
    std::vector<std::string> objs{"X", "X'"};
    std::vector<std::string> one_names{"id_X", "id_X'", "i", "j"};
    std::vector<TwoCategory::CellSpec> ones, twos;
    std::vector<int> id1, id2;
    // the underlying category has arrows id_0, id_1, u, v in some order
    std::map<std::string, std::string> rename{{"id_0", "id_X"}, {"id_1", "id_X'"}, {"u", "i"}, {"v", "j"}};
    for (int f = 0; f < base->arrow_count(); ++f) {
      ones.push_back({rename.at(base->arrow_name(f)), base->source(f), base->target(f)});
      twos.push_back({"1_" + ones.back().name, f, f});
      twos.push_back({"s_" + ones.back().name, f, f});
      id2.push_back(2 * f);
    }
    for (int x = 0; x < base->object_count(); ++x) id1.push_back(base->identity(x));
    auto k = TwoCategory::build(
        "K_ISO", objs, ones, twos, id1, id2, [&](int g, int f) { return base->compose(g, f); },
        [](int b, int a) { return 2 * (a / 2) + ((a % 2) ^ (b % 2)); },
        [&](int b, int a) { return 2 * base->compose(b / 2, a / 2) + ((a % 2) ^ (b % 2)); });
    auto v = check_two_category(k);
    if (!v.empty()) throw Error(std::move(v));
    return std::make_shared<const TwoCategory>(std::move(k));
  });
}

TwoCatPtr k_z2() {
  return cached([] {
    RawTwoCategory raw;
    raw.name = "Z2";
    raw.objects = {"O"};
    raw.ones = {{"e", "O", "O"}, {"z", "O", "O"}};
    raw.id1["O"] = "e";
    raw.comp1[{"z", "z"}] = "e";
    return finish(raw);
  });
}

TwoCatPtr k_twist() {
  return cached([] {
    auto k = product_two_category(*k_cell(), *k_z2());
    auto v = check_two_category(k);
    if (!v.empty()) throw Error(std::move(v));
    return std::make_shared<const TwoCategory>(std::move(k));
  });
}

TwoCatPtr k_reflect() {
  return cached([] {
    auto k = product_two_category(*k_cell(), *shape("arrow"));
    auto v = check_two_category(k);
    if (!v.empty()) throw Error(std::move(v));
    return std::make_shared<const TwoCategory>(std::move(k));
  });
}

const CatFull& k_cat12() {
  static const CatFull cf = build_cat_full("K_CAT12", {cats::one(), cats::two()});
  return cf;
}

std::vector<std::string> shape_names() { return {"empty", "one", "discrete2", "arrow", "parallel", "chain3"}; }

TwoCatPtr shape(const std::string& name) {
  static std::map<std::string, TwoCatPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  CatPtr c;
  if (name == "empty") c = cats::empty();
  else if (name == "one") c = cats::one();
  else if (name == "discrete2") c = cats::discrete2();
  else if (name == "arrow") c = cats::two();
  else if (name == "parallel") c = cats::parallel();
  else if (name == "chain3") c = cats::chain3();
  else throw std::invalid_argument("unknown shape " + name);
  auto k = locally_discrete(*c);
  auto p = std::make_shared<const TwoCategory>(std::move(k));
  cache[name] = p;
  return p;
}

std::vector<std::pair<std::string, TwoCatPtr>> base_fixtures() {
  return {{"K_TERM", k_term()}, {"K_CELL", k_cell()}, {"K_PAIR", k_pair()}, {"K_IDEM", k_idem()},
          {"K_ISO", k_iso()},   {"Z2", k_z2()},       {"K_TWIST", k_twist()}, {"K_CAT12", k_cat12().two}};
}

}  // namespace twomon::fixtures

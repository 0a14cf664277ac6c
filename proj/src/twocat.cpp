#include "twomon/twocat.hpp"

#include <algorithm>
#include <set>

namespace twomon {

namespace {

constexpr std::size_t kMaxReported = 64;

void report(std::vector<Violation>& out, ErrorKind kind, std::string msg,
            std::vector<std::string> witnesses) {
  if (out.size() < kMaxReported) out.push_back({kind, std::move(msg), std::move(witnesses)});
}

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

template <class T>
std::optional<int> index_of(const std::vector<T>& v, const T& x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return std::nullopt;
  return static_cast<int>(it - v.begin());
}

}  // namespace

void complete_identities(RawTwoCategory& raw) {
  std::map<std::string, std::pair<std::string, std::string>> one_type, two_type;
  for (const auto& c : raw.ones) one_type[c.name] = {c.source, c.target};
  for (const auto& x : raw.objects) {
    if (raw.id1.count(x)) continue;
    std::string id = "id_" + x;
    if (!one_type.count(id)) {
      raw.ones.push_back({id, x, x});
      one_type[id] = {x, x};
    }
    raw.id1[x] = id;
  }
  for (const auto& c : raw.twos) two_type[c.name] = {c.source, c.target};
  for (const auto& c : raw.ones) {
    if (raw.id2.count(c.name)) continue;
    std::string id = "1_" + c.name;
    if (!two_type.count(id)) {
      raw.twos.push_back({id, c.name, c.name});
      two_type[id] = {c.name, c.name};
    }
    raw.id2[c.name] = id;
  }
  auto lookup = [](const std::map<std::string, std::string>& m, const std::string& k) -> const std::string* {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  };
  for (const auto& c : raw.ones) {
    if (auto s = lookup(raw.id1, c.source)) raw.comp1.emplace(std::make_pair(c.name, *s), c.name);
    if (auto t = lookup(raw.id1, c.target)) raw.comp1.emplace(std::make_pair(*t, c.name), c.name);
  }
  for (const auto& c : raw.twos) {
    if (auto s = lookup(raw.id2, c.source)) raw.vcomp.emplace(std::make_pair(c.name, *s), c.name);
    if (auto t = lookup(raw.id2, c.target)) raw.vcomp.emplace(std::make_pair(*t, c.name), c.name);
    auto ty = one_type.find(c.source);
    if (ty == one_type.end()) continue;
    const auto* ida = lookup(raw.id1, ty->second.first);
    const auto* idb = lookup(raw.id1, ty->second.second);
    if (ida) {
      if (auto i = lookup(raw.id2, *ida)) raw.hcomp.emplace(std::make_pair(c.name, *i), c.name);
    }
    if (idb) {
      if (auto i = lookup(raw.id2, *idb)) raw.hcomp.emplace(std::make_pair(*i, c.name), c.name);
    }
  }
  for (const auto& [gf, h] : raw.comp1) {
    auto ig = lookup(raw.id2, gf.first);
    auto i_f = lookup(raw.id2, gf.second);
    auto ih = lookup(raw.id2, h);
    if (ig && i_f && ih) raw.hcomp.emplace(std::make_pair(*ig, *i_f), *ih);
  }
}

TwoCategory TwoCategory::build(std::string name, std::vector<std::string> objects,
                               std::vector<CellSpec> ones, std::vector<CellSpec> twos,
                               std::vector<int> id1, std::vector<int> id2, const Compose& comp1,
                               const Compose& vcomp, const Compose& hcomp) {
  TwoCategory k;
  k.name_ = std::move(name);
  k.objects_ = std::move(objects);
  std::vector<int> s1, t1, s2, t2, hs, ht;
  for (auto& c : ones) {
    k.ones_.push_back(std::move(c.name));
    s1.push_back(c.source);
    t1.push_back(c.target);
  }
  for (auto& c : twos) {
    k.twos_.push_back(std::move(c.name));
    s2.push_back(c.source);
    t2.push_back(c.target);
    hs.push_back(s1[ix(c.source)]);
    ht.push_back(t1[ix(c.source)]);
  }
  k.id1_ = std::move(id1);
  k.id2_ = std::move(id2);
  k.comp1_ = CompositionTable(k.object_count(), std::move(s1), std::move(t1));
  k.vcomp_ = CompositionTable(k.one_count(), std::move(s2), std::move(t2));
  k.hcomp_ = CompositionTable(k.object_count(), std::move(hs), std::move(ht));
  auto fill = [](CompositionTable& t, const Compose& fn) {
    for (int v = 0; v < t.node_count(); ++v) {
      for (int a : t.into(v)) {
        for (int b : t.out_of(v)) t.set(b, a, fn(b, a));
      }
    }
  };
  fill(k.comp1_, comp1);
  fill(k.vcomp_, vcomp);
  fill(k.hcomp_, hcomp);
  k.inverse_.assign(k.twos_.size(), -1);
  for (int a = 0; a < k.two_count(); ++a) {
    for (int b : k.twos_between(k.cod(a), k.dom(a))) {
      if (k.vcomp(b, a) == k.id2(k.dom(a)) && k.vcomp(a, b) == k.id2(k.cod(a))) {
        k.inverse_[ix(a)] = b;
        break;
      }
    }
  }
  return k;
}

std::string TwoCategory::qualified_two(int a) const {
  return name_ + ".hom(" + object_name(src2(a)) + "," + object_name(tgt2(a)) + ")." + two_name(a);
}

std::string TwoCategory::qualified_one(int f) const {
  return name_ + ".hom(" + object_name(src(f)) + "," + object_name(tgt(f)) + ")." + one_name(f);
}

std::vector<int> TwoCategory::ones_between(int x, int y) const {
  std::vector<int> out;
  for (int f : ones_from(x)) {
    if (tgt(f) == y) out.push_back(f);
  }
  return out;
}

std::vector<int> TwoCategory::twos_between(int f, int g) const {
  std::vector<int> out;
  for (int a : twos_from(f)) {
    if (cod(a) == g) out.push_back(a);
  }
  return out;
}

std::optional<int> TwoCategory::find_object(const std::string& n) const { return index_of(objects_, n); }
std::optional<int> TwoCategory::find_one(const std::string& n) const { return index_of(ones_, n); }
std::optional<int> TwoCategory::find_two(const std::string& n) const { return index_of(twos_, n); }

TwoCategory::Hom TwoCategory::hom(int x, int y) const {
  Hom h;
  h.ones = ones_between(x, y);
  std::map<int, int> local1, local2;
  for (std::size_t i = 0; i < h.ones.size(); ++i) local1[h.ones[i]] = static_cast<int>(i);
  std::vector<std::string> objs, arrs;
  std::vector<int> src_, tgt_, ident;
  for (int f : h.ones) {
    objs.push_back(one_name(f));
    ident.push_back(-1);
  }
  for (int f : h.ones) {
    for (int a : twos_from(f)) {
      local2[a] = static_cast<int>(h.twos.size());
      h.twos.push_back(a);
      arrs.push_back(two_name(a));
      src_.push_back(local1[dom(a)]);
      tgt_.push_back(local1[cod(a)]);
    }
  }
  for (std::size_t i = 0; i < h.ones.size(); ++i) ident[i] = local2[id2(h.ones[i])];
  auto cat = FinCategory::build("hom(" + object_name(x) + "," + object_name(y) + ")", objs, arrs, src_,
                                tgt_, ident, [&](int b, int a) {
                                  int c = vcomp(h.twos[ix(b)], h.twos[ix(a)]);
                                  auto it = local2.find(c);
                                  return it == local2.end() ? -1 : it->second;
                                });
  h.category = std::make_shared<const FinCategory>(std::move(cat));
  return h;
}

FinCategory TwoCategory::underlying() const {
  std::vector<int> s, t;
  for (int f = 0; f < one_count(); ++f) {
    s.push_back(src(f));
    t.push_back(tgt(f));
  }
  return FinCategory::build(name_, objects_, ones_, s, t, id1_, [&](int g, int f) { return comp1(g, f); });
}

std::vector<Violation> check_two_category(const TwoCategory& k) {
  std::vector<Violation> out;
  for (int x = 0; x < k.object_count(); ++x) {
    int i = k.id1(x);
    if (i < 0 || i >= k.one_count() || k.src(i) != x || k.tgt(i) != x) {
      report(out, ErrorKind::BadIdentity, "identity 1-cell has the wrong type", {k.object_name(x)});
    }
  }
  for (int f = 0; f < k.one_count(); ++f) {
    int i = k.id2(f);
    if (i < 0 || i >= k.two_count() || k.dom(i) != f || k.cod(i) != f) {
      report(out, ErrorKind::BadIdentity, "identity 2-cell has the wrong type", {k.qualified_one(f)});
    }
  }
  if (!out.empty()) return out;
  for (auto& v : check_category(k.underlying())) report(out, v.kind, "1-cells: " + v.message, v.witnesses);
  for (int x = 0; x < k.object_count(); ++x) {
    for (int y = 0; y < k.object_count(); ++y) {
      auto h = k.hom(x, y);
      for (auto& v : check_category(*h.category)) {
        report(out, v.kind, h.category->name() + ": " + v.message, v.witnesses);
      }
    }
  }
  if (!out.empty()) return out;
  auto q = [&](int a) { return k.qualified_two(a); };
  for (int x = 0; x < k.object_count(); ++x) {
    for (int a : k.hcomp_table().into(x)) {
      for (int b : k.hcomp_table().out_of(x)) {
        int c = k.hcomp(b, a);
        if (c < 0) {
          report(out, ErrorKind::MissingComposite, "horizontal composite undefined", {q(b), q(a)});
        } else if (k.dom(c) != k.comp1(k.dom(b), k.dom(a)) || k.cod(c) != k.comp1(k.cod(b), k.cod(a))) {
          report(out, ErrorKind::InterchangeViolation, "horizontal composite has the wrong boundary",
                 {q(b), q(a), q(c)});
        }
      }
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < k.one_count(); ++f) {
    for (int g : k.ones_from(k.tgt(f))) {
      if (k.hcomp(k.id2(g), k.id2(f)) != k.id2(k.comp1(g, f))) {
        report(out, ErrorKind::InterchangeViolation, "identity 2-cells do not compose to an identity",
               {q(k.id2(g)), q(k.id2(f))});
      }
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    if (k.hcomp(k.id2(k.id1(k.tgt2(a))), a) != a || k.hcomp(a, k.id2(k.id1(k.src2(a)))) != a) {
      report(out, ErrorKind::BadIdentity, "horizontal unit law fails", {q(a)});
    }
  }
  for (int x = 0; x < k.object_count(); ++x) {
    for (int a : k.hcomp_table().into(x)) {
      for (int a2 : k.twos_from(k.cod(a))) {
        int va = k.vcomp(a2, a);
        for (int b : k.hcomp_table().out_of(x)) {
          for (int b2 : k.twos_from(k.cod(b))) {
            if (k.hcomp(k.vcomp(b2, b), va) != k.vcomp(k.hcomp(b2, a2), k.hcomp(b, a))) {
              report(out, ErrorKind::InterchangeViolation, "interchange law fails", {q(b2), q(b), q(a2), q(a)});
            }
          }
        }
      }
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    for (int b : k.hcomp_table().out_of(k.tgt2(a))) {
      int ba = k.hcomp(b, a);
      for (int c : k.hcomp_table().out_of(k.tgt2(b))) {
        if (k.hcomp(c, ba) != k.hcomp(k.hcomp(c, b), a)) {
          report(out, ErrorKind::NonAssociativeHComp, "horizontal composition not associative", {q(c), q(b), q(a)});
        }
      }
    }
  }
  return out;
}

TwoCategory validate_two_category(RawTwoCategory raw) {
  std::vector<Violation> errs;
  std::map<std::string, int> obj, one, two;
  std::set<std::string> seen;
  auto claim = [&](const std::string& n) {
    if (!seen.insert(n).second) errs.push_back({ErrorKind::DuplicateName, "duplicate identifier", {n}});
  };
  for (const auto& x : raw.objects) {
    claim(x);
    obj.emplace(x, static_cast<int>(obj.size()));
  }
  std::vector<TwoCategory::CellSpec> ones, twos;
  for (const auto& c : raw.ones) {
    claim(c.name);
    auto s = obj.find(c.source), t = obj.find(c.target);
    if (s == obj.end() || t == obj.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "1-cell endpoint is not an object", {c.name}});
      continue;
    }
    one.emplace(c.name, static_cast<int>(ones.size()));
    ones.push_back({c.name, s->second, t->second});
  }
  for (const auto& c : raw.twos) {
    claim(c.name);
    auto s = one.find(c.source), t = one.find(c.target);
    if (s == one.end() || t == one.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "2-cell boundary is not a 1-cell", {c.name}});
      continue;
    }
    if (ones[ix(s->second)].source != ones[ix(t->second)].source ||
        ones[ix(s->second)].target != ones[ix(t->second)].target) {
      errs.push_back({ErrorKind::TypeMismatch, "2-cell between non-parallel 1-cells", {c.name}});
      continue;
    }
    two.emplace(c.name, static_cast<int>(twos.size()));
    twos.push_back({c.name, s->second, t->second});
  }
  std::vector<int> id1(obj.size(), -1), id2(ones.size(), -1);
  for (const auto& [x, f] : raw.id1) {
    auto o = obj.find(x);
    auto a = one.find(f);
    if (o == obj.end() || a == one.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "identity refers to an unknown cell", {x, f}});
    } else {
      id1[ix(o->second)] = a->second;
    }
  }
  for (const auto& [f, a] : raw.id2) {
    auto o = one.find(f);
    auto c = two.find(a);
    if (o == one.end() || c == two.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "identity refers to an unknown cell", {f, a}});
    } else {
      id2[ix(o->second)] = c->second;
    }
  }
  for (std::size_t x = 0; x < id1.size(); ++x) {
    if (id1[x] < 0) errs.push_back({ErrorKind::MissingIdentity, "object without identity 1-cell", {raw.objects[x]}});
  }
  for (std::size_t f = 0; f < id2.size(); ++f) {
    if (id2[f] < 0) errs.push_back({ErrorKind::MissingIdentity, "1-cell without identity 2-cell", {ones[f].name}});
  }
  using Table = std::map<std::pair<int, int>, int>;
  auto resolve = [&](const std::map<RawTwoCategory::Key, std::string>& in, const std::map<std::string, int>& ids,
                     const char* what) {
    Table t;
    for (const auto& [k, v] : in) {
      auto g = ids.find(k.first), f = ids.find(k.second), h = ids.find(v);
      if (g == ids.end() || f == ids.end() || h == ids.end()) {
        errs.push_back({ErrorKind::UnresolvedReference, std::string(what) + " refers to an unknown cell",
                        {k.first, k.second, v}});
        continue;
      }
      t[{g->second, f->second}] = h->second;
    }
    return t;
  };
  Table c1 = resolve(raw.comp1, one, "1-cell composite");
  Table cv = resolve(raw.vcomp, two, "vertical composite");
  Table ch = resolve(raw.hcomp, two, "horizontal composite");
  for (const auto& [k, v] : c1) {
    if (ones[ix(k.first)].source != ones[ix(k.second)].target) {
      errs.push_back({ErrorKind::BadComposite, "1-cell composite of a non-composable pair",
                      {ones[ix(k.first)].name, ones[ix(k.second)].name}});
    }
  }
  for (const auto& [k, v] : cv) {
    if (twos[ix(k.first)].source != twos[ix(k.second)].target) {
      errs.push_back({ErrorKind::BadComposite, "vertical composite of a non-composable pair",
                      {twos[ix(k.first)].name, twos[ix(k.second)].name}});
    }
  }
  for (const auto& [k, v] : ch) {
    if (ones[ix(twos[ix(k.first)].source)].source != ones[ix(twos[ix(k.second)].source)].target) {
      errs.push_back({ErrorKind::BadComposite, "horizontal composite of a non-composable pair",
                      {twos[ix(k.first)].name, twos[ix(k.second)].name}});
    }
  }
  raise_if_any(std::move(errs));
  auto get = [](const Table& t) {
    return [&t](int b, int a) {
      auto it = t.find({b, a});
      return it == t.end() ? -1 : it->second;
    };
  };
  auto k = TwoCategory::build(raw.name, raw.objects, ones, twos, id1, id2, get(c1), get(cv), get(ch));
  raise_if_any(check_two_category(k));
  return k;
}

RawTwoCategory to_raw(const TwoCategory& k) {
  RawTwoCategory raw;
  raw.name = k.name();
  for (int x = 0; x < k.object_count(); ++x) raw.objects.push_back(k.object_name(x));
  for (int f = 0; f < k.one_count(); ++f) {
    raw.ones.push_back({k.one_name(f), k.object_name(k.src(f)), k.object_name(k.tgt(f))});
    raw.id2[k.one_name(f)] = k.two_name(k.id2(f));
  }
  for (int a = 0; a < k.two_count(); ++a) raw.twos.push_back({k.two_name(a), k.one_name(k.dom(a)), k.one_name(k.cod(a))});
  for (int x = 0; x < k.object_count(); ++x) raw.id1[k.object_name(x)] = k.one_name(k.id1(x));
  auto dump = [](const CompositionTable& t, auto name, std::map<RawTwoCategory::Key, std::string>& out) {
    for (int v = 0; v < t.node_count(); ++v) {
      for (int a : t.into(v)) {
        for (int b : t.out_of(v)) {
          int c = t.at(b, a);
          if (c >= 0) out[{name(b), name(a)}] = name(c);
        }
      }
    }
  };
  dump(k.comp1_table(), [&](int f) { return k.one_name(f); }, raw.comp1);
  dump(k.vcomp_table(), [&](int a) { return k.two_name(a); }, raw.vcomp);
  dump(k.hcomp_table(), [&](int a) { return k.two_name(a); }, raw.hcomp);
  return raw;
}

bool same_two_category(const TwoCatPtr& a, const TwoCatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool TwoFunctor::operator==(const TwoFunctor& other) const {
  return objects == other.objects && ones == other.ones && twos == other.twos &&
         same_two_category(source, other.source) && same_two_category(target, other.target);
}

std::vector<Violation> check_two_functor(const TwoFunctor& fn) {
  std::vector<Violation> out;
  const auto& k = *fn.source;
  const auto& l = *fn.target;
  if (fn.objects.size() != ix(k.object_count()) || fn.ones.size() != ix(k.one_count()) ||
      fn.twos.size() != ix(k.two_count())) {
    report(out, ErrorKind::NotFunctorial, "2-functor tables have the wrong size", {});
    return out;
  }
  auto in_range = [](const std::vector<int>& v, int n) {
    return std::all_of(v.begin(), v.end(), [n](int x) { return x >= 0 && x < n; });
  };
  if (!in_range(fn.objects, l.object_count()) || !in_range(fn.ones, l.one_count()) ||
      !in_range(fn.twos, l.two_count())) {
    report(out, ErrorKind::NotFunctorial, "2-functor image out of range", {});
    return out;
  }
  for (int f = 0; f < k.one_count(); ++f) {
    if (l.src(fn.one(f)) != fn.obj(k.src(f)) || l.tgt(fn.one(f)) != fn.obj(k.tgt(f))) {
      report(out, ErrorKind::NotFunctorial, "1-cell source/target not preserved", {k.qualified_one(f)});
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    if (l.dom(fn.two(a)) != fn.one(k.dom(a)) || l.cod(fn.two(a)) != fn.one(k.cod(a))) {
      report(out, ErrorKind::NotFunctorial, "2-cell source/target not preserved", {k.qualified_two(a)});
    }
  }
  if (!out.empty()) return out;
  for (int x = 0; x < k.object_count(); ++x) {
    if (fn.one(k.id1(x)) != l.id1(fn.obj(x))) {
      report(out, ErrorKind::NotFunctorial, "identity 1-cell not preserved", {k.object_name(x)});
    }
  }
  for (int f = 0; f < k.one_count(); ++f) {
    if (fn.two(k.id2(f)) != l.id2(fn.one(f))) {
      report(out, ErrorKind::NotFunctorial, "identity 2-cell not preserved", {k.qualified_one(f)});
    }
    for (int g : k.ones_from(k.tgt(f))) {
      if (fn.one(k.comp1(g, f)) != l.comp1(fn.one(g), fn.one(f))) {
        report(out, ErrorKind::NotFunctorial, "1-cell composition not preserved", {k.qualified_one(g), k.qualified_one(f)});
      }
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    for (int b : k.twos_from(k.cod(a))) {
      if (fn.two(k.vcomp(b, a)) != l.vcomp(fn.two(b), fn.two(a))) {
        report(out, ErrorKind::NotFunctorial, "vertical composition not preserved", {k.qualified_two(b), k.qualified_two(a)});
      }
    }
    for (int b : k.hcomp_table().out_of(k.tgt2(a))) {
      if (fn.two(k.hcomp(b, a)) != l.hcomp(fn.two(b), fn.two(a))) {
        report(out, ErrorKind::NotFunctorial, "horizontal composition not preserved", {k.qualified_two(b), k.qualified_two(a)});
      }
    }
  }
  return out;
}

TwoFunctor validate_two_functor(const RawTwoFunctor& raw, const TwoCatPtr& source, const TwoCatPtr& target) {
  const auto& k = *source;
  const auto& l = *target;
  std::vector<Violation> errs;
  TwoFunctor fn{source, target, std::vector<int>(ix(k.object_count()), -1), std::vector<int>(ix(k.one_count()), -1),
                std::vector<int>(ix(k.two_count()), -1)};
  auto fill = [&](const std::map<std::string, std::string>& m, auto find_src, auto find_tgt, std::vector<int>& out) {
    for (const auto& [a, b] : m) {
      auto s = find_src(a);
      auto t = find_tgt(b);
      if (!s || !t) {
        errs.push_back({ErrorKind::UnresolvedReference, "2-functor entry refers to an unknown cell", {a, b}});
        continue;
      }
      out[ix(*s)] = *t;
    }
  };
  fill(raw.objects, [&](auto& n) { return k.find_object(n); }, [&](auto& n) { return l.find_object(n); }, fn.objects);
  fill(raw.ones, [&](auto& n) { return k.find_one(n); }, [&](auto& n) { return l.find_one(n); }, fn.ones);
  fill(raw.twos, [&](auto& n) { return k.find_two(n); }, [&](auto& n) { return l.find_two(n); }, fn.twos);
  raise_if_any(errs);
  for (int x = 0; x < k.object_count(); ++x) {
    if (fn.objects[ix(x)] < 0) {
      errs.push_back({ErrorKind::UnresolvedReference, "object has no image", {k.object_name(x)}});
    } else if (fn.ones[ix(k.id1(x))] < 0) {
      fn.ones[ix(k.id1(x))] = l.id1(fn.obj(x));
    }
  }
  for (int f = 0; f < k.one_count(); ++f) {
    if (fn.ones[ix(f)] < 0) {
      errs.push_back({ErrorKind::UnresolvedReference, "1-cell has no image", {k.one_name(f)}});
    } else if (fn.twos[ix(k.id2(f))] < 0) {
      fn.twos[ix(k.id2(f))] = l.id2(fn.one(f));
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    if (fn.twos[ix(a)] < 0) errs.push_back({ErrorKind::UnresolvedReference, "2-cell has no image", {k.two_name(a)}});
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_two_functor(fn));
  return fn;
}

TwoFunctor identity_two_functor(const TwoCatPtr& k) {
  TwoFunctor f{k, k, {}, {}, {}};
  for (int i = 0; i < k->object_count(); ++i) f.objects.push_back(i);
  for (int i = 0; i < k->one_count(); ++i) f.ones.push_back(i);
  for (int i = 0; i < k->two_count(); ++i) f.twos.push_back(i);
  return f;
}

TwoFunctor constant_two_functor(const TwoCatPtr& source, const TwoCatPtr& target, int x) {
  return TwoFunctor{source, target, std::vector<int>(ix(source->object_count()), x),
                    std::vector<int>(ix(source->one_count()), target->id1(x)),
                    std::vector<int>(ix(source->two_count()), target->id2(target->id1(x)))};
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h{f.source, g.target, {}, {}, {}};
  for (int x : f.objects) h.objects.push_back(g.obj(x));
  for (int x : f.ones) h.ones.push_back(g.one(x));
  for (int x : f.twos) h.twos.push_back(g.two(x));
  return h;
}

namespace {
std::vector<int> members(const std::vector<char>& m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}
}  // namespace

std::vector<int> ArrowFamily::cells() const { return members(member); }
std::vector<int> CellFamily::cells() const { return members(member); }

bool ArrowFamily::operator==(const ArrowFamily& other) const {
  return member == other.member && same_two_category(host, other.host);
}

bool CellFamily::operator==(const CellFamily& other) const {
  return member == other.member && same_two_category(host, other.host);
}

bool CellFamily::subset_of(const CellFamily& other) const {
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i] && !other.member[i]) return false;
  }
  return true;
}

std::vector<Violation> check_arrow_family(const ArrowFamily& s) {
  std::vector<Violation> out;
  const auto& k = *s.host;
  for (int x = 0; x < k.object_count(); ++x) {
    if (!s.contains(k.id1(x))) report(out, ErrorKind::MissingIdentity, "family misses an identity", {k.qualified_one(k.id1(x))});
  }
  for (int f = 0; f < k.one_count(); ++f) {
    if (!s.contains(f)) continue;
    for (int g : k.ones_from(k.tgt(f))) {
      if (s.contains(g) && !s.contains(k.comp1(g, f))) {
        report(out, ErrorKind::NotClosedUnderComposition, "composite leaves the family", {k.qualified_one(g), k.qualified_one(f)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_cell_family(const CellFamily& o) {
  std::vector<Violation> out;
  const auto& k = *o.host;
  for (int f = 0; f < k.one_count(); ++f) {
    if (!o.contains(k.id2(f))) report(out, ErrorKind::MissingIdentity, "family misses an identity 2-cell", {k.qualified_two(k.id2(f))});
  }
  for (int a = 0; a < k.two_count(); ++a) {
    if (!o.contains(a)) continue;
    for (int b : k.twos_from(k.cod(a))) {
      if (o.contains(b) && !o.contains(k.vcomp(b, a))) {
        report(out, ErrorKind::NotClosedUnderComposition, "vertical composite leaves the family", {k.qualified_two(b), k.qualified_two(a)});
      }
    }
    for (int b : k.hcomp_table().out_of(k.tgt2(a))) {
      if (o.contains(b) && !o.contains(k.hcomp(b, a))) {
        report(out, ErrorKind::NotClosedUnderComposition, "horizontal composite leaves the family", {k.qualified_two(b), k.qualified_two(a)});
      }
    }
  }
  return out;
}

ArrowFamily validate_arrow_family(const TwoCatPtr& host, const std::vector<std::string>& names) {
  ArrowFamily s{host, std::vector<char>(ix(host->one_count()), 0)};
  std::vector<Violation> errs;
  for (const auto& n : names) {
    if (auto f = host->find_one(n)) {
      s.member[ix(*f)] = 1;
    } else {
      errs.push_back({ErrorKind::UnresolvedReference, "unknown 1-cell", {n}});
    }
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_arrow_family(s));
  return s;
}

CellFamily validate_cell_family(const TwoCatPtr& host, const std::vector<std::string>& names) {
  CellFamily o{host, std::vector<char>(ix(host->two_count()), 0)};
  std::vector<Violation> errs;
  for (const auto& n : names) {
    if (auto a = host->find_two(n)) {
      o.member[ix(*a)] = 1;
    } else {
      errs.push_back({ErrorKind::UnresolvedReference, "unknown 2-cell", {n}});
    }
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_cell_family(o));
  return o;
}

ArrowFamily generated_arrow_family(const TwoCatPtr& host, const std::vector<int>& cells) {
  const auto& k = *host;
  ArrowFamily s{host, std::vector<char>(ix(k.one_count()), 0)};
  for (int x = 0; x < k.object_count(); ++x) s.member[ix(k.id1(x))] = 1;
  for (int f : cells) s.member[ix(f)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int f : s.cells()) {
      for (int g : k.ones_from(k.tgt(f))) {
        int h = k.comp1(g, f);
        if (s.contains(g) && !s.contains(h)) s.member[ix(h)] = 1, changed = true;
      }
    }
  }
  return s;
}

CellFamily generated_cell_family(const TwoCatPtr& host, const std::vector<int>& cells) {
  const auto& k = *host;
  CellFamily o{host, std::vector<char>(ix(k.two_count()), 0)};
  for (int f = 0; f < k.one_count(); ++f) o.member[ix(k.id2(f))] = 1;
  for (int a : cells) o.member[ix(a)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a : o.cells()) {
      for (int b : k.twos_from(k.cod(a))) {
        int c = k.vcomp(b, a);
        if (o.contains(b) && !o.contains(c)) o.member[ix(c)] = 1, changed = true;
      }
      for (int b : k.hcomp_table().out_of(k.tgt2(a))) {
        int c = k.hcomp(b, a);
        if (o.contains(b) && !o.contains(c)) o.member[ix(c)] = 1, changed = true;
      }
    }
  }
  return o;
}

std::string to_string(Tag t) {
  switch (t) {
    case Tag::s: return "s";
    case Tag::p: return "p";
    case Tag::l: return "l";
  }
  return "?";
}

ArrowFamily all_arrows(const TwoCatPtr& host) {
  return ArrowFamily{host, std::vector<char>(ix(host->one_count()), 1)};
}

ArrowFamily identity_arrows(const TwoCatPtr& host) { return generated_arrow_family(host, {}); }

CellFamily omega(const TwoCatPtr& host, Tag t) {
  CellFamily o{host, std::vector<char>(ix(host->two_count()), 0)};
  for (int a = 0; a < host->two_count(); ++a) {
    switch (t) {
      case Tag::s: o.member[ix(a)] = host->is_id2(a); break;
      case Tag::p: o.member[ix(a)] = host->is_invertible(a); break;
      case Tag::l: o.member[ix(a)] = 1; break;
    }
  }
  return o;
}

Label canonical_families(const TwoCatPtr& host, Tag t) {
  return Label{t == Tag::l ? identity_arrows(host) : all_arrows(host), omega(host, t)};
}

std::string to_string(LabelOrder o) {
  switch (o) {
    case LabelOrder::Less: return "<=";
    case LabelOrder::Greater: return ">=";
    case LabelOrder::Equal: return "=";
    case LabelOrder::Incomparable: return "incomparable";
  }
  return "?";
}

LabelOrder compare_labels(const Label& a, const Label& b) {
  if (!same_two_category(a.sigma.host, b.sigma.host) || !same_two_category(a.omega.host, b.omega.host)) {
    throw Error(ErrorKind::HostMismatch, "labels live on different hosts");
  }
  auto sub = [](const std::vector<char>& x, const std::vector<char>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] && !y[i]) return false;
    }
    return true;
  };
  bool le = sub(b.sigma.member, a.sigma.member) && sub(a.omega.member, b.omega.member);
  bool ge = sub(a.sigma.member, b.sigma.member) && sub(b.omega.member, a.omega.member);
  if (le && ge) return LabelOrder::Equal;
  if (le) return LabelOrder::Less;
  if (ge) return LabelOrder::Greater;
  return LabelOrder::Incomparable;
}

TwoCategory co_dual(const TwoCategory& k) {
  const std::string suffix = "^co";
  std::string name = k.name();
  if (name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    name.resize(name.size() - suffix.size());
  } else {
    name += suffix;
  }
  std::vector<std::string> objs;
  std::vector<TwoCategory::CellSpec> ones, twos;
  std::vector<int> id1, id2;
  for (int x = 0; x < k.object_count(); ++x) {
    objs.push_back(k.object_name(x));
    id1.push_back(k.id1(x));
  }
  for (int f = 0; f < k.one_count(); ++f) {
    ones.push_back({k.one_name(f), k.src(f), k.tgt(f)});
    id2.push_back(k.id2(f));
  }
  for (int a = 0; a < k.two_count(); ++a) twos.push_back({k.two_name(a), k.cod(a), k.dom(a)});
  return TwoCategory::build(
      name, objs, ones, twos, id1, id2, [&](int g, int f) { return k.comp1(g, f); },
      [&](int b, int a) { return k.vcomp(a, b); }, [&](int b, int a) { return k.hcomp(b, a); });
}

TwoCatPtr co_dual(const TwoCatPtr& k) { return std::make_shared<const TwoCategory>(co_dual(*k)); }

TwoFunctor co_dual(const TwoFunctor& f, const TwoCatPtr& co_source, const TwoCatPtr& co_target) {
  return TwoFunctor{co_source, co_target, f.objects, f.ones, f.twos};
}

CellFamily co_dual(const CellFamily& o, const TwoCatPtr& co_host) { return CellFamily{co_host, o.member}; }
ArrowFamily co_dual(const ArrowFamily& s, const TwoCatPtr& co_host) { return ArrowFamily{co_host, s.member}; }

TwoCategory product_two_category(const TwoCategory& k, const TwoCategory& l) {
  const int no = l.object_count(), n1 = l.one_count(), n2 = l.two_count();
  auto pair = [](const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; };
  std::vector<std::string> objs;
  std::vector<TwoCategory::CellSpec> ones, twos;
  std::vector<int> id1, id2;
  for (int x = 0; x < k.object_count(); ++x) {
    for (int y = 0; y < no; ++y) {
      objs.push_back(pair(k.object_name(x), l.object_name(y)));
      id1.push_back(k.id1(x) * n1 + l.id1(y));
    }
  }
  for (int f = 0; f < k.one_count(); ++f) {
    for (int g = 0; g < n1; ++g) {
      ones.push_back({pair(k.one_name(f), l.one_name(g)), k.src(f) * no + l.src(g), k.tgt(f) * no + l.tgt(g)});
      id2.push_back(k.id2(f) * n2 + l.id2(g));
    }
  }
  for (int a = 0; a < k.two_count(); ++a) {
    for (int b = 0; b < n2; ++b) {
      twos.push_back({pair(k.two_name(a), l.two_name(b)), k.dom(a) * n1 + l.dom(b), k.cod(a) * n1 + l.cod(b)});
    }
  }
  auto lift = [](int n, auto op) {
    return [n, op](int y, int x) {
      int p = op(y / n, x / n, true), q = op(y % n, x % n, false);
      return p < 0 || q < 0 ? -1 : p * n + q;
    };
  };
  return TwoCategory::build(
      k.name() + "x" + l.name(), objs, ones, twos, id1, id2,
      lift(n1, [&](int g, int f, bool left) { return left ? k.comp1(g, f) : l.comp1(g, f); }),
      lift(n2, [&](int b, int a, bool left) { return left ? k.vcomp(b, a) : l.vcomp(b, a); }),
      lift(n2, [&](int b, int a, bool left) { return left ? k.hcomp(b, a) : l.hcomp(b, a); }));
}

TwoCategory locally_discrete(const FinCategory& c) {
  std::vector<std::string> objs;
  std::vector<TwoCategory::CellSpec> ones, twos;
  std::vector<int> id1, id2;
  for (int x = 0; x < c.object_count(); ++x) {
    objs.push_back(c.object_name(x));
    id1.push_back(c.identity(x));
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    ones.push_back({c.arrow_name(f), c.source(f), c.target(f)});
    twos.push_back({"1_" + c.arrow_name(f), f, f});
    id2.push_back(f);
  }
  return TwoCategory::build(
      c.name(), objs, ones, twos, id1, id2, [&](int g, int f) { return c.compose(g, f); },
      [](int b, int) { return b; }, [&](int b, int a) { return c.compose(b, a); });
}

std::optional<int> CatFull::find_functor(const FinFunctor& f) const {
  auto s = std::find_if(categories.begin(), categories.end(), [&](const CatPtr& c) { return same_category(c, f.source); });
  auto t = std::find_if(categories.begin(), categories.end(), [&](const CatPtr& c) { return same_category(c, f.target); });
  if (s == categories.end() || t == categories.end()) return std::nullopt;
  std::vector<int> key = f.objects;
  key.push_back(-1);
  key.insert(key.end(), f.arrows.begin(), f.arrows.end());
  auto it = functor_index_.find({static_cast<int>(s - categories.begin()), static_cast<int>(t - categories.begin()), key});
  if (it == functor_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CatFull::find_transformation(const NatTransformation& t) const {
  auto s = find_functor(t.source);
  auto g = find_functor(t.target);
  if (!s || !g) return std::nullopt;
  auto it = transformation_index_.find({*s, *g, t.components});
  if (it == transformation_index_.end()) return std::nullopt;
  return it->second;
}

CatFull build_cat_full(const std::string& name, const std::vector<CatPtr>& categories) {
  CatFull cf;
  cf.categories = categories;
  const int n = static_cast<int>(categories.size());
  std::vector<std::string> objs;
  std::set<std::string> used;
  for (int i = 0; i < n; ++i) {
    std::string nm = categories[ix(i)]->name();
    if (!used.insert(nm).second) nm += "#" + std::to_string(i);
    used.insert(nm);
    objs.push_back(nm);
  }
  std::vector<TwoCategory::CellSpec> ones, twos;
  std::vector<int> one_src, one_tgt;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (auto& f : enumerate_functors(categories[ix(i)], categories[ix(j)])) {
        std::vector<int> key = f.objects;
        key.push_back(-1);
        key.insert(key.end(), f.arrows.begin(), f.arrows.end());
        cf.functor_index_[{i, j, key}] = static_cast<int>(ones.size());
        ones.push_back({objs[ix(i)] + "->" + objs[ix(j)] + functor_label(f), i, j});
        cf.functors.push_back(std::move(f));
        charge(ones.size(), "Cat_fin 1-cells");
      }
    }
  }
  std::vector<int> id1(ix(n), -1), id2(ones.size(), -1);
  for (int i = 0; i < n; ++i) id1[ix(i)] = *cf.find_functor(identity_functor(categories[ix(i)]));
  for (std::size_t f = 0; f < ones.size(); ++f) {
    for (std::size_t g = 0; g < ones.size(); ++g) {
      if (ones[f].source != ones[g].source || ones[f].target != ones[g].target) continue;
      for (auto& t : enumerate_nat_transformations(cf.functors[f], cf.functors[g])) {
        int idx = static_cast<int>(twos.size());
        if (f == g && t == identity_nat(cf.functors[f])) id2[f] = idx;
        std::string comps;
        for (std::size_t c = 0; c < t.components.size(); ++c) {
          comps += (c ? "," : "") + t.source.target->arrow_name(t.components[c]);
        }
        cf.transformation_index_[{static_cast<int>(f), static_cast<int>(g), t.components}] = idx;
        twos.push_back({ones[f].name + "=>" + functor_label(cf.functors[g]) + "{" + comps + "}",
                        static_cast<int>(f), static_cast<int>(g)});
        cf.transformations.push_back(std::move(t));
        charge(twos.size(), "Cat_fin 2-cells");
      }
    }
  }
  auto k = TwoCategory::build(
      name, objs, ones, twos, id1, id2,
      [&](int g, int f) {
        auto r = cf.find_functor(compose(cf.functors[ix(g)], cf.functors[ix(f)]));
        return r ? *r : -1;
      },
      [&](int b, int a) {
        auto r = cf.find_transformation(vertical(cf.transformations[ix(b)], cf.transformations[ix(a)]));
        return r ? *r : -1;
      },
      [&](int b, int a) {
        auto r = cf.find_transformation(horizontal(cf.transformations[ix(b)], cf.transformations[ix(a)]));
        return r ? *r : -1;
      });
  cf.two = std::make_shared<const TwoCategory>(std::move(k));
  return cf;
}

}  // namespace twomon

namespace twomon {

namespace {
bool bijective(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}
}  // namespace

bool is_isomorphism(const TwoFunctor& f) {
  const auto& t = *f.target;
  return bijective(f.objects, t.object_count()) && bijective(f.ones, t.one_count()) && bijective(f.twos, t.two_count());
}

bool same_structure(const TwoCategory& a, const TwoCategory& b) {
  auto ra = to_raw(a);
  auto rb = to_raw(b);
  rb.name = ra.name;
  return ra.objects == rb.objects && ra.id1 == rb.id1 && ra.id2 == rb.id2 && ra.comp1 == rb.comp1 &&
         ra.vcomp == rb.vcomp && ra.hcomp == rb.hcomp && ra.ones.size() == rb.ones.size() &&
         ra.twos.size() == rb.twos.size() &&
         std::equal(ra.ones.begin(), ra.ones.end(), rb.ones.begin(),
                    [](const auto& x, const auto& y) { return x.name == y.name && x.source == y.source && x.target == y.target; }) &&
         std::equal(ra.twos.begin(), ra.twos.end(), rb.twos.begin(),
                    [](const auto& x, const auto& y) { return x.name == y.name && x.source == y.source && x.target == y.target; });
}

}  // namespace twomon

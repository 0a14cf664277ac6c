#include "twomon/fincat.hpp"

#include <algorithm>
#include <set>

#include "twomon/search.hpp"

namespace twomon {

namespace {

constexpr std::size_t kMaxReported = 64;

void report(std::vector<Violation>& out, ErrorKind kind, std::string msg,
            std::vector<std::string> witnesses) {
  if (out.size() < kMaxReported) out.push_back({kind, std::move(msg), std::move(witnesses)});
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

void complete_identity_composites(RawCategory& raw) {
  std::set<std::string> arrow_names;
  for (const auto& a : raw.arrows) arrow_names.insert(a.name);
  for (const auto& x : raw.objects) {
    if (raw.identity.count(x)) continue;
    std::string id = "id_" + x;
    if (!arrow_names.count(id)) {
      raw.arrows.push_back({id, x, x});
      arrow_names.insert(id);
    }
    raw.identity[x] = id;
  }
  for (const auto& a : raw.arrows) {
    auto s = raw.identity.find(a.source);
    auto t = raw.identity.find(a.target);
    if (s != raw.identity.end()) raw.composites.emplace(std::make_pair(a.name, s->second), a.name);
    if (t != raw.identity.end()) raw.composites.emplace(std::make_pair(t->second, a.name), a.name);
  }
}

FinCategory FinCategory::build(std::string name, std::vector<std::string> objects,
                               std::vector<std::string> arrows, std::vector<int> source,
                               std::vector<int> target, std::vector<int> identity,
                               const ComposeFn& compose) {
  FinCategory c;
  c.name_ = std::move(name);
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.identity_ = std::move(identity);
  c.table_ = CompositionTable(c.object_count(), std::move(source), std::move(target));
  for (int x = 0; x < c.object_count(); ++x) {
    for (int f : c.table_.into(x)) {
      for (int g : c.table_.out_of(x)) c.table_.set(g, f, compose(g, f));
    }
  }
  return c;
}

std::vector<int> FinCategory::arrows_between(int x, int y) const {
  std::vector<int> out;
  for (int f : arrows_from(x)) {
    if (target(f) == y) out.push_back(f);
  }
  return out;
}

std::optional<int> FinCategory::find_object(const std::string& n) const {
  auto it = std::find(objects_.begin(), objects_.end(), n);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<int>(it - objects_.begin());
}

std::optional<int> FinCategory::find_arrow(const std::string& n) const {
  auto it = std::find(arrows_.begin(), arrows_.end(), n);
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<int>(it - arrows_.begin());
}

std::optional<int> FinCategory::inverse(int f) const {
  for (int g : arrows_between(target(f), source(f))) {
    if (compose(g, f) == identity(source(f)) && compose(f, g) == identity(target(f))) return g;
  }
  return std::nullopt;
}

std::vector<Violation> check_category(const FinCategory& c) {
  std::vector<Violation> out;
  const auto& an = [&](int f) { return c.arrow_name(f); };
  for (int x = 0; x < c.object_count(); ++x) {
    int id = c.identity(x);
    if (id < 0 || id >= c.arrow_count() || c.source(id) != x || c.target(id) != x) {
      report(out, ErrorKind::BadIdentity, "identity has wrong source or target",
             {c.object_name(x)});
    }
  }
  if (!out.empty()) return out;
  for (int x = 0; x < c.object_count(); ++x) {
    for (int f : c.arrows_into(x)) {
      for (int g : c.arrows_from(x)) {
        int h = c.compose(g, f);
        if (h < 0) {
          report(out, ErrorKind::MissingComposite, "composite undefined", {an(g), an(f)});
        } else if (c.source(h) != c.source(f) || c.target(h) != c.target(g)) {
          report(out, ErrorKind::BadComposite, "composite has wrong source or target",
                 {an(g), an(f), an(h)});
        }
      }
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f) {
      report(out, ErrorKind::BadIdentity, "f∘id != f", {an(f), an(c.identity(c.source(f)))});
    }
    if (c.compose(c.identity(c.target(f)), f) != f) {
      report(out, ErrorKind::BadIdentity, "id∘f != f", {an(c.identity(c.target(f))), an(f)});
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    for (int g : c.arrows_from(c.target(f))) {
      int gf = c.compose(g, f);
      for (int h : c.arrows_from(c.target(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          report(out, ErrorKind::NonAssociative, "h∘(g∘f) != (h∘g)∘f", {an(h), an(g), an(f)});
        }
      }
    }
  }
  return out;
}

FinCategory validate_category(const RawCategory& raw) {
  std::vector<Violation> errs;
  std::map<std::string, int> obj, arr;
  for (const auto& x : raw.objects) {
    if (!obj.emplace(x, static_cast<int>(obj.size())).second) {
      errs.push_back({ErrorKind::DuplicateName, "duplicate object", {x}});
    }
  }
  std::vector<std::string> arrow_names;
  std::vector<int> src, tgt;
  for (const auto& a : raw.arrows) {
    if (obj.count(a.name)) errs.push_back({ErrorKind::DuplicateName, "arrow named like an object", {a.name}});
    if (!arr.emplace(a.name, static_cast<int>(arr.size())).second) {
      errs.push_back({ErrorKind::DuplicateName, "duplicate arrow", {a.name}});
      continue;
    }
    auto s = obj.find(a.source);
    auto t = obj.find(a.target);
    if (s == obj.end() || t == obj.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "arrow endpoint is not an object", {a.name}});
      src.push_back(0);
      tgt.push_back(0);
    } else {
      src.push_back(s->second);
      tgt.push_back(t->second);
    }
    arrow_names.push_back(a.name);
  }
  std::vector<int> ident(obj.size(), -1);
  for (const auto& [x, f] : raw.identity) {
    auto o = obj.find(x);
    auto a = arr.find(f);
    if (o == obj.end() || a == arr.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "identity refers to unknown cell", {x, f}});
      continue;
    }
    ident[static_cast<std::size_t>(o->second)] = a->second;
  }
  for (std::size_t x = 0; x < ident.size(); ++x) {
    if (ident[x] < 0) errs.push_back({ErrorKind::BadIdentity, "object has no identity", {raw.objects[x]}});
  }
  std::map<std::pair<int, int>, int> comp;
  for (const auto& [gf, h] : raw.composites) {
    auto g = arr.find(gf.first);
    auto f = arr.find(gf.second);
    auto r = arr.find(h);
    if (g == arr.end() || f == arr.end() || r == arr.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "composite refers to unknown arrow",
                      {gf.first, gf.second, h}});
      continue;
    }
    if (src[static_cast<std::size_t>(g->second)] != tgt[static_cast<std::size_t>(f->second)]) {
      errs.push_back({ErrorKind::BadComposite, "composite listed for a non-composable pair",
                      {gf.first, gf.second}});
      continue;
    }
    comp[{g->second, f->second}] = r->second;
  }
  raise_if_any(std::move(errs));
  auto c = FinCategory::build(raw.name, raw.objects, arrow_names, src, tgt, ident,
                              [&](int g, int f) {
                                auto it = comp.find({g, f});
                                return it == comp.end() ? -1 : it->second;
                              });
  raise_if_any(check_category(c));
  return c;
}

RawCategory to_raw(const FinCategory& c) {
  RawCategory raw;
  raw.name = c.name();
  for (int x = 0; x < c.object_count(); ++x) raw.objects.push_back(c.object_name(x));
  for (int f = 0; f < c.arrow_count(); ++f) {
    raw.arrows.push_back({c.arrow_name(f), c.object_name(c.source(f)), c.object_name(c.target(f))});
  }
  for (int x = 0; x < c.object_count(); ++x) raw.identity[c.object_name(x)] = c.arrow_name(c.identity(x));
  for (int x = 0; x < c.object_count(); ++x) {
    for (int f : c.arrows_into(x)) {
      for (int g : c.arrows_from(x)) {
        int h = c.compose(g, f);
        if (h >= 0) raw.composites[{c.arrow_name(g), c.arrow_name(f)}] = c.arrow_name(h);
      }
    }
  }
  return raw;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return objects == other.objects && arrows == other.arrows && same_category(source, other.source) &&
         same_category(target, other.target);
}

std::vector<Violation> check_functor(const FinFunctor& fn) {
  std::vector<Violation> out;
  const auto& c = *fn.source;
  const auto& d = *fn.target;
  if (fn.objects.size() != static_cast<std::size_t>(c.object_count()) ||
      fn.arrows.size() != static_cast<std::size_t>(c.arrow_count())) {
    report(out, ErrorKind::NotFunctorial, "functor tables have the wrong size", {});
    return out;
  }
  for (int x = 0; x < c.object_count(); ++x) {
    int y = fn.on_object(x);
    if (y < 0 || y >= d.object_count()) {
      report(out, ErrorKind::NotFunctorial, "object image out of range", {c.object_name(x)});
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    int g = fn.on_arrow(f);
    if (g < 0 || g >= d.arrow_count()) {
      report(out, ErrorKind::NotFunctorial, "arrow image out of range", {c.arrow_name(f)});
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < c.arrow_count(); ++f) {
    int g = fn.on_arrow(f);
    if (d.source(g) != fn.on_object(c.source(f)) || d.target(g) != fn.on_object(c.target(f))) {
      report(out, ErrorKind::NotFunctorial, "source/target not preserved", {c.arrow_name(f)});
    }
  }
  for (int x = 0; x < c.object_count(); ++x) {
    if (fn.on_arrow(c.identity(x)) != d.identity(fn.on_object(x))) {
      report(out, ErrorKind::NotFunctorial, "identity not preserved", {c.arrow_name(c.identity(x))});
    }
  }
  if (!out.empty()) return out;
  for (int x = 0; x < c.object_count(); ++x) {
    for (int f : c.arrows_into(x)) {
      for (int g : c.arrows_from(x)) {
        if (fn.on_arrow(c.compose(g, f)) != d.compose(fn.on_arrow(g), fn.on_arrow(f))) {
          report(out, ErrorKind::NotFunctorial, "composition not preserved",
                 {c.arrow_name(g), c.arrow_name(f)});
        }
      }
    }
  }
  return out;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f{c, c, {}, {}};
  for (int x = 0; x < c->object_count(); ++x) f.objects.push_back(x);
  for (int a = 0; a < c->arrow_count(); ++a) f.arrows.push_back(a);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.source, g.target, {}, {}};
  for (int x : f.objects) h.objects.push_back(g.on_object(x));
  for (int a : f.arrows) h.arrows.push_back(g.on_arrow(a));
  return h;
}

std::vector<Violation> check_nat_transformation(const NatTransformation& t) {
  std::vector<Violation> out;
  const auto& c = *t.source.source;
  const auto& d = *t.source.target;
  if (t.components.size() != static_cast<std::size_t>(c.object_count())) {
    report(out, ErrorKind::NotNatural, "component table has the wrong size", {});
    return out;
  }
  for (int x = 0; x < c.object_count(); ++x) {
    int a = t.at(x);
    if (a < 0 || a >= d.arrow_count() || d.source(a) != t.source.on_object(x) ||
        d.target(a) != t.target.on_object(x)) {
      report(out, ErrorKind::NotNatural, "component has the wrong type", {c.object_name(x)});
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < c.arrow_count(); ++f) {
    int lhs = d.compose(t.target.on_arrow(f), t.at(c.source(f)));
    int rhs = d.compose(t.at(c.target(f)), t.source.on_arrow(f));
    if (lhs != rhs) report(out, ErrorKind::NotNatural, "naturality square fails", {c.arrow_name(f)});
  }
  return out;
}

NatTransformation identity_nat(const FinFunctor& f) {
  NatTransformation t{f, f, {}};
  for (int y : f.objects) t.components.push_back(f.target->identity(y));
  return t;
}

NatTransformation vertical(const NatTransformation& b, const NatTransformation& a) {
  NatTransformation t{a.source, b.target, {}};
  for (std::size_t x = 0; x < a.components.size(); ++x) {
    t.components.push_back(a.source.target->compose(b.components[x], a.components[x]));
  }
  return t;
}

NatTransformation horizontal(const NatTransformation& b, const NatTransformation& a) {
  // (b∘a)_x = b_{F'x} ∘ G(a_x)
  NatTransformation t{compose(b.source, a.source), compose(b.target, a.target), {}};
  const auto& e = *b.source.target;
  for (std::size_t x = 0; x < a.components.size(); ++x) {
    int fx_prime = a.target.on_object(static_cast<int>(x));
    t.components.push_back(e.compose(b.at(fx_prime), b.source.on_arrow(a.components[x])));
  }
  return t;
}

bool is_invertible(const NatTransformation& t) {
  const auto& d = *t.source.target;
  return std::all_of(t.components.begin(), t.components.end(),
                     [&](int a) { return d.inverse(a).has_value(); });
}

namespace {

std::vector<int> functor_key(const FinFunctor& f) {
  std::vector<int> k = f.objects;
  k.push_back(-1);
  k.insert(k.end(), f.arrows.begin(), f.arrows.end());
  return k;
}

}  // namespace

std::string functor_label(const FinFunctor& f) {
  std::vector<std::string> objs, arrs;
  for (int y : f.objects) objs.push_back(f.target->object_name(y));
  for (int a = 0; a < f.source->arrow_count(); ++a) {
    if (!f.source->is_identity(a)) arrs.push_back(f.target->arrow_name(f.on_arrow(a)));
  }
  std::string s = "<" + join(objs, ",");
  if (!arrs.empty()) s += ";" + join(arrs, ",");
  return s + ">";
}

std::vector<FinFunctor> enumerate_functors(const CatPtr& c, const CatPtr& d) {
  Search search;
  const int n = c->object_count();
  for (int x = 0; x < n; ++x) {
    std::vector<int> all(static_cast<std::size_t>(d->object_count()));
    for (int y = 0; y < d->object_count(); ++y) all[static_cast<std::size_t>(y)] = y;
    search.add_variable(all);
  }
  for (int f = 0; f < c->arrow_count(); ++f) {
    const int s = c->source(f), t = c->target(f);
    const bool ident = c->is_identity(f);
    int var = search.add_variable([=, &d](const Search::Assignment& a, std::vector<int>& out) {
      int fs = a[static_cast<std::size_t>(s)], ft = a[static_cast<std::size_t>(t)];
      if (ident) {
        out.push_back(d->identity(fs));
      } else {
        out = d->arrows_between(fs, ft);
      }
    });
    (void)var;
  }
  for (int x = 0; x < n; ++x) {
    for (int f : c->arrows_into(x)) {
      for (int g : c->arrows_from(x)) {
        int h = c->compose(g, f);
        int at = n + std::max({f, g, h});
        search.add_check(at, [=, &d](const Search::Assignment& a) {
          auto img = [&](int arrow) { return a[static_cast<std::size_t>(n + arrow)]; };
          return d->compose(img(g), img(f)) == img(h);
        });
      }
    }
  }
  std::vector<FinFunctor> out;
  search.run([&](const Search::Assignment& a) {
    FinFunctor fn{c, d, {a.begin(), a.begin() + n}, {a.begin() + n, a.end()}};
    out.push_back(std::move(fn));
    charge(out.size(), "functor enumeration");
    return true;
  });
  return out;
}

std::vector<NatTransformation> enumerate_nat_transformations(const FinFunctor& f,
                                                             const FinFunctor& g) {
  const auto& c = *f.source;
  const auto& d = f.target;
  Search search;
  for (int x = 0; x < c.object_count(); ++x) {
    search.add_variable(d->arrows_between(f.on_object(x), g.on_object(x)));
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    const int s = c.source(a), t = c.target(a);
    search.add_check(std::max(s, t), [=, &f, &g](const Search::Assignment& asg) {
      int lhs = d->compose(g.on_arrow(a), asg[static_cast<std::size_t>(s)]);
      int rhs = d->compose(asg[static_cast<std::size_t>(t)], f.on_arrow(a));
      return lhs == rhs;
    });
  }
  std::vector<NatTransformation> out;
  search.run([&](const Search::Assignment& asg) {
    out.push_back(NatTransformation{f, g, asg});
    return true;
  });
  return out;
}

std::optional<int> FunctorCategory::find_functor(const FinFunctor& f) const {
  auto it = functor_index_.find(functor_key(f));
  if (it == functor_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FunctorCategory::find_transformation(const NatTransformation& t) const {
  auto s = find_functor(t.source);
  auto g = find_functor(t.target);
  if (!s || !g) return std::nullopt;
  std::vector<int> key{*s, *g};
  key.insert(key.end(), t.components.begin(), t.components.end());
  auto it = transformation_index_.find(key);
  if (it == transformation_index_.end()) return std::nullopt;
  return it->second;
}

FunctorCategory functor_category(const CatPtr& c, const CatPtr& d) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d);
  std::vector<std::string> obj_names;
  for (std::size_t i = 0; i < fc.functors.size(); ++i) {
    fc.functor_index_[functor_key(fc.functors[i])] = static_cast<int>(i);
    obj_names.push_back(functor_label(fc.functors[i]));
  }
  std::vector<std::string> arrow_names;
  std::vector<int> src, tgt;
  std::vector<int> ident(fc.functors.size(), -1);
  for (std::size_t i = 0; i < fc.functors.size(); ++i) {
    for (std::size_t j = 0; j < fc.functors.size(); ++j) {
      for (auto& t : enumerate_nat_transformations(fc.functors[i], fc.functors[j])) {
        std::vector<int> key{static_cast<int>(i), static_cast<int>(j)};
        key.insert(key.end(), t.components.begin(), t.components.end());
        int idx = static_cast<int>(fc.transformations.size());
        fc.transformation_index_[key] = idx;
        if (i == j && t == identity_nat(fc.functors[i])) ident[i] = idx;
        std::vector<std::string> comps;
        for (int a : t.components) comps.push_back(d->arrow_name(a));
        arrow_names.push_back(obj_names[i] + "=>" + obj_names[j] + "{" + join(comps, ",") + "}");
        src.push_back(static_cast<int>(i));
        tgt.push_back(static_cast<int>(j));
        fc.transformations.push_back(std::move(t));
        charge(fc.transformations.size(), "functor category");
      }
    }
  }
  const std::string name = "[" + c->name() + "," + d->name() + "]";
  auto cat = FinCategory::build(name, obj_names, arrow_names, src, tgt, ident, [&](int b, int a) {
    auto r = fc.find_transformation(vertical(fc.transformations[static_cast<std::size_t>(b)],
                                             fc.transformations[static_cast<std::size_t>(a)]));
    return r ? *r : -1;
  });
  fc.category = std::make_shared<const FinCategory>(std::move(cat));
  return fc;
}

bool is_isomorphism_of_categories(const FinFunctor& f) {
  auto bijective = [](const std::vector<int>& map, int size) {
    if (map.size() != static_cast<std::size_t>(size)) return false;
    std::vector<char> hit(static_cast<std::size_t>(size), 0);
    for (int v : map) {
      if (v < 0 || v >= size || hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
  };
  return bijective(f.objects, f.target->object_count()) && bijective(f.arrows, f.target->arrow_count());
}

ProductCategory product_category(const CatPtr& c, const CatPtr& d) {
  const int nd = d->object_count(), md = d->arrow_count();
  std::vector<std::string> objs, arrs;
  std::vector<int> src, tgt, ident;
  for (int x = 0; x < c->object_count(); ++x) {
    for (int y = 0; y < nd; ++y) objs.push_back("(" + c->object_name(x) + "," + d->object_name(y) + ")");
  }
  for (int f = 0; f < c->arrow_count(); ++f) {
    for (int g = 0; g < md; ++g) {
      arrs.push_back("(" + c->arrow_name(f) + "," + d->arrow_name(g) + ")");
      src.push_back(c->source(f) * nd + d->source(g));
      tgt.push_back(c->target(f) * nd + d->target(g));
    }
  }
  for (int x = 0; x < c->object_count(); ++x) {
    for (int y = 0; y < nd; ++y) ident.push_back(c->identity(x) * md + d->identity(y));
  }
  auto cat = FinCategory::build(c->name() + "x" + d->name(), objs, arrs, src, tgt, ident,
                                [&](int b, int a) {
                                  return c->compose(b / md, a / md) * md + d->compose(b % md, a % md);
                                });
  ProductCategory p;
  p.category = std::make_shared<const FinCategory>(std::move(cat));
  p.first = FinFunctor{p.category, c, {}, {}};
  p.second = FinFunctor{p.category, d, {}, {}};
  for (int o = 0; o < p.category->object_count(); ++o) {
    p.first.objects.push_back(o / nd);
    p.second.objects.push_back(o % nd);
  }
  for (int a = 0; a < p.category->arrow_count(); ++a) {
    p.first.arrows.push_back(a / md);
    p.second.arrows.push_back(a % md);
  }
  return p;
}

namespace cats {

namespace {
CatPtr make(RawCategory raw) {
  complete_identity_composites(raw);
  return std::make_shared<const FinCategory>(validate_category(raw));
}
}  // namespace

CatPtr empty() { return make(RawCategory{"0", {}, {}, {}, {}}); }

CatPtr one() { return make(RawCategory{"1", {"*"}, {}, {}, {}}); }

CatPtr two() { return make(RawCategory{"2", {"0", "1"}, {{"phi", "0", "1"}}, {}, {}}); }

CatPtr parallel() {
  return make(RawCategory{"P", {"0", "1"}, {{"s", "0", "1"}, {"t", "0", "1"}}, {}, {}});
}

CatPtr iso() {
  RawCategory raw{"I", {"0", "1"}, {{"u", "0", "1"}, {"v", "1", "0"}}, {}, {}};
  complete_identity_composites(raw);
  raw.composites[{"v", "u"}] = "id_0";
  raw.composites[{"u", "v"}] = "id_1";
  return std::make_shared<const FinCategory>(validate_category(raw));
}

CatPtr discrete2() { return make(RawCategory{"D2", {"0", "1"}, {}, {}, {}}); }

CatPtr chain3() {
  RawCategory raw{"3", {"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}, {"ba", "0", "2"}}, {}, {}};
  complete_identity_composites(raw);
  raw.composites[{"b", "a"}] = "ba";
  return std::make_shared<const FinCategory>(validate_category(raw));
}

}  // namespace cats

}  // namespace twomon

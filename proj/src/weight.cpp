#include "twomon/weight.hpp"

#include <algorithm>

#include "twomon/fixtures.hpp"

namespace twomon {

namespace {
std::size_t ix(int i) { return static_cast<std::size_t>(i); }
}  // namespace

std::vector<Violation> check_weight(const Weight& w) {
  std::vector<Violation> out;
  const auto& a = *w.shape;
  if (w.objects.size() != ix(a.object_count()) || w.ones.size() != ix(a.one_count()) ||
      w.twos.size() != ix(a.two_count())) {
    out.push_back({ErrorKind::NotFunctorial, "weight tables have the wrong size", {}});
    return out;
  }
  for (int f = 0; f < a.one_count(); ++f) {
    const auto& wf = w.one(f);
    if (!same_category(wf.source, w.objects[ix(a.src(f))]) || !same_category(wf.target, w.objects[ix(a.tgt(f))])) {
      out.push_back({ErrorKind::NotFunctorial, "functor has the wrong domain or codomain", {a.qualified_one(f)}});
      continue;
    }
    for (auto& v : check_functor(wf)) out.push_back({v.kind, a.one_name(f) + ": " + v.message, v.witnesses});
  }
  if (!out.empty()) return out;
  for (int al = 0; al < a.two_count(); ++al) {
    const auto& t = w.two(al);
    if (!(t.source == w.one(a.dom(al))) || !(t.target == w.one(a.cod(al)))) {
      out.push_back({ErrorKind::NotFunctorial, "natural transformation has the wrong boundary", {a.qualified_two(al)}});
      continue;
    }
    for (auto& v : check_nat_transformation(t)) out.push_back({v.kind, a.two_name(al) + ": " + v.message, v.witnesses});
  }
  if (!out.empty()) return out;
  for (int x = 0; x < a.object_count(); ++x) {
    if (!(w.one(a.id1(x)) == identity_functor(w.objects[ix(x)]))) {
      out.push_back({ErrorKind::NotFunctorial, "identity 1-cell not sent to the identity functor", {a.object_name(x)}});
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    if (!(w.two(a.id2(f)) == identity_nat(w.one(f)))) {
      out.push_back({ErrorKind::NotFunctorial, "identity 2-cell not preserved", {a.qualified_one(f)}});
    }
    for (int g : a.ones_from(a.tgt(f))) {
      if (!(w.one(a.comp1(g, f)) == compose(w.one(g), w.one(f)))) {
        out.push_back({ErrorKind::NotFunctorial, "composition not preserved", {a.qualified_one(g), a.qualified_one(f)}});
      }
    }
  }
  for (int al = 0; al < a.two_count(); ++al) {
    for (int b : a.twos_from(a.cod(al))) {
      if (!(w.two(a.vcomp(b, al)) == vertical(w.two(b), w.two(al)))) {
        out.push_back({ErrorKind::NotFunctorial, "vertical composition not preserved", {a.qualified_two(b), a.qualified_two(al)}});
      }
    }
    for (int b : a.hcomp_table().out_of(a.tgt2(al))) {
      if (!(w.two(a.hcomp(b, al)) == horizontal(w.two(b), w.two(al)))) {
        out.push_back({ErrorKind::NotFunctorial, "horizontal composition not preserved", {a.qualified_two(b), a.qualified_two(al)}});
      }
    }
  }
  return out;
}

FinFunctor resolve_functor(const RawFunctorData& raw, const CatPtr& c, const CatPtr& d) {
  FinFunctor f{c, d, std::vector<int>(ix(c->object_count()), -1), std::vector<int>(ix(c->arrow_count()), -1)};
  std::vector<Violation> errs;
  for (const auto& [x, y] : raw.objects) {
    auto xi = c->find_object(x);
    auto yi = d->find_object(y);
    if (!xi || !yi) {
      errs.push_back({ErrorKind::UnresolvedReference, "functor entry refers to an unknown object", {x, y}});
    } else {
      f.objects[ix(*xi)] = *yi;
    }
  }
  for (const auto& [x, y] : raw.arrows) {
    auto xi = c->find_arrow(x);
    auto yi = d->find_arrow(y);
    if (!xi || !yi) {
      errs.push_back({ErrorKind::UnresolvedReference, "functor entry refers to an unknown arrow", {x, y}});
    } else {
      f.arrows[ix(*xi)] = *yi;
    }
  }
  raise_if_any(errs);
  for (int x = 0; x < c->object_count(); ++x) {
    if (f.objects[ix(x)] < 0) {
      errs.push_back({ErrorKind::UnresolvedReference, "object has no image", {c->object_name(x)}});
    } else if (f.arrows[ix(c->identity(x))] < 0) {
      f.arrows[ix(c->identity(x))] = d->identity(f.objects[ix(x)]);
    }
  }
  for (int a = 0; a < c->arrow_count(); ++a) {
    if (f.arrows[ix(a)] < 0) errs.push_back({ErrorKind::UnresolvedReference, "arrow has no image", {c->arrow_name(a)}});
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_functor(f));
  return f;
}

Weight validate_weight(const RawWeight& raw, const TwoCatPtr& shape) {
  const auto& a = *shape;
  Weight w{shape, std::vector<CatPtr>(ix(a.object_count())), {}, {}};
  std::vector<Violation> errs;
  for (int x = 0; x < a.object_count(); ++x) {
    auto it = raw.objects.find(a.object_name(x));
    if (it == raw.objects.end()) {
      errs.push_back({ErrorKind::UnresolvedReference, "weight has no value at object", {a.object_name(x)}});
    } else {
      w.objects[ix(x)] = it->second;
    }
  }
  raise_if_any(errs);
  for (int f = 0; f < a.one_count(); ++f) {
    auto c = w.objects[ix(a.src(f))];
    auto d = w.objects[ix(a.tgt(f))];
    auto it = raw.ones.find(a.one_name(f));
    if (it != raw.ones.end()) {
      w.ones.push_back(resolve_functor(it->second, c, d));
    } else if (a.is_id1(f)) {
      w.ones.push_back(identity_functor(c));
    } else {
      errs.push_back({ErrorKind::UnresolvedReference, "weight has no value at 1-cell", {a.one_name(f)}});
      w.ones.push_back(FinFunctor{c, d, {}, {}});
    }
  }
  raise_if_any(errs);
  for (int al = 0; al < a.two_count(); ++al) {
    const auto& src = w.one(a.dom(al));
    const auto& tgt = w.one(a.cod(al));
    auto it = raw.twos.find(a.two_name(al));
    if (it == raw.twos.end()) {
      if (a.is_id2(al)) {
        w.twos.push_back(identity_nat(src));
      } else {
        errs.push_back({ErrorKind::UnresolvedReference, "weight has no value at 2-cell", {a.two_name(al)}});
        w.twos.push_back(NatTransformation{src, tgt, {}});
      }
      continue;
    }
    NatTransformation t{src, tgt, std::vector<int>(ix(src.source->object_count()), -1)};
    for (const auto& [x, arrow] : it->second) {
      auto xi = src.source->find_object(x);
      auto ai = src.target->find_arrow(arrow);
      if (!xi || !ai) {
        errs.push_back({ErrorKind::UnresolvedReference, "component refers to an unknown cell", {x, arrow}});
      } else {
        t.components[ix(*xi)] = *ai;
      }
    }
    w.twos.push_back(std::move(t));
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_weight(w));
  return w;
}

Weight terminal_weight(const TwoCatPtr& shape) {
  const auto& a = *shape;
  auto one = cats::one();
  Weight w{shape, std::vector<CatPtr>(ix(a.object_count()), one), {}, {}};
  auto id = identity_functor(one);
  w.ones.assign(ix(a.one_count()), id);
  w.twos.assign(ix(a.two_count()), identity_nat(id));
  return w;
}

std::vector<CatPtr> categories_of(const std::vector<const Weight*>& ws) {
  std::vector<CatPtr> out;
  for (const auto* w : ws) {
    for (const auto& c : w->objects) {
      if (std::none_of(out.begin(), out.end(), [&](const CatPtr& d) { return same_category(c, d); })) out.push_back(c);
    }
  }
  return out;
}

TwoFunctor into_cat_full(const Weight& w, const CatFull& cf) {
  const auto& a = *w.shape;
  TwoFunctor f{w.shape, cf.two, {}, {}, {}};
  for (int x = 0; x < a.object_count(); ++x) {
    auto it = std::find_if(cf.categories.begin(), cf.categories.end(),
                           [&](const CatPtr& c) { return same_category(c, w.objects[ix(x)]); });
    if (it == cf.categories.end()) throw Error(ErrorKind::HostMismatch, "category missing from Cat_fin", {w.at(x).name()});
    f.objects.push_back(static_cast<int>(it - cf.categories.begin()));
  }
  for (int g = 0; g < a.one_count(); ++g) {
    auto r = cf.find_functor(w.one(g));
    if (!r) throw Error(ErrorKind::HostMismatch, "functor missing from Cat_fin", {a.one_name(g)});
    f.ones.push_back(*r);
  }
  for (int al = 0; al < a.two_count(); ++al) {
    auto r = cf.find_transformation(w.two(al));
    if (!r) throw Error(ErrorKind::HostMismatch, "transformation missing from Cat_fin", {a.two_name(al)});
    f.twos.push_back(*r);
  }
  return f;
}

namespace weights {

namespace {
Weight parallel_weight(const TwoCatPtr& shape) {
  auto one = cats::one();
  auto two = cats::two();
  RawWeight raw;
  raw.objects = {{"a", one}, {"b", two}};
  raw.ones["u"] = RawFunctorData{{{"*", "0"}}, {}};
  raw.ones["v"] = RawFunctorData{{{"*", "1"}}, {}};
  if (shape->find_two("alpha")) {
    raw.twos["alpha"] = {{"*", "phi"}};
    raw.twos["beta"] = {{"*", "phi"}};
  }
  return validate_weight(raw, shape);
}
}  // namespace

Weight inserter() { return parallel_weight(fixtures::k_pair()); }
Weight equifier() { return parallel_weight(fixtures::k_parallel_cells()); }

}  // namespace weights

}  // namespace twomon

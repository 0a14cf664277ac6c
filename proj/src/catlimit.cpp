#include "twomon/catlimit.hpp"

#include <algorithm>
#include <map>

#include "twomon/search.hpp"

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

CatPtr finish_category(const std::string& name, std::size_t nobj, const std::vector<std::pair<int, int>>& ends,
                       const std::function<int(int)>& identity, const std::function<int(int, int)>& comp) {
  std::vector<std::string> obj, arr;
  std::vector<int> src, tgt, ident;
  for (std::size_t i = 0; i < nobj; ++i) obj.push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    arr.push_back("r" + std::to_string(i));
    src.push_back(ends[i].first);
    tgt.push_back(ends[i].second);
  }
  for (std::size_t i = 0; i < nobj; ++i) ident.push_back(identity(static_cast<int>(i)));
  auto c = FinCategory::build(name, obj, arr, src, tgt, ident, comp);
  raise_if_any(check_category(c));
  return std::make_shared<const FinCategory>(std::move(c));
}

}  // namespace

CatLimit cat_limit_construct(const Weight& w, const Weight& f, const ArrowFamily& sigma, Tag omega_tag, Orientation o) {
  if (!same_two_category(w.shape, f.shape)) throw Error(ErrorKind::HostMismatch, "weight and diagram have different shapes");
  CatLimit out{w, f, sigma, omega_tag, o, build_cat_full("Cat", categories_of({&w, &f})), {}, {}, nullptr};
  auto wf = into_cat_full(w, out.host);
  auto ff = into_cat_full(f, out.host);
  out.objects = enumerate_transformations(wf, ff, o, sigma, omega(out.host.two, omega_tag));
  charge(out.objects.size(), "Cat limit objects");
  std::vector<std::pair<int, int>> ends;
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    for (std::size_t j = 0; j < out.objects.size(); ++j) {
      for (auto& m : enumerate_modifications(out.objects[i], out.objects[j])) {
        index[{static_cast<int>(i), m.components}] = static_cast<int>(out.arrows.size());
        ends.push_back({static_cast<int>(i), static_cast<int>(j)});
        out.arrows.push_back(std::move(m));
        charge(out.arrows.size(), "Cat limit arrows");
      }
    }
  }
  const auto& h = *out.host.two;
  out.limit = finish_category(
      "{W,F}", out.objects.size(), ends,
      [&](int i) { return index.at({i, identity_modification(out.objects[ix(i)]).components}); },
      [&](int second, int first) {
        auto m = vertical(out.arrows[ix(second)], out.arrows[ix(first)]);
        auto it = index.find({ends[ix(first)].first, m.components});
        (void)h;
        return it == index.end() ? -1 : it->second;
      });
  return out;
}

FinFunctor CatLimit::eval(int a, int x) const {
  FinFunctor e{limit, diagram.objects[ix(a)], {}, {}};
  for (const auto& t : objects) e.objects.push_back(host.functors[ix(t.at(a))].on_object(x));
  for (const auto& m : arrows) e.arrows.push_back(host.transformations[ix(m.at(a))].at(x));
  return e;
}

NatTransformation CatLimit::eval_arrow(int a, int phi) const {
  const auto& wa = weight.at(a);
  NatTransformation n{eval(a, wa.source(phi)), eval(a, wa.target(phi)), {}};
  for (const auto& t : objects) n.components.push_back(host.functors[ix(t.at(a))].on_arrow(phi));
  return n;
}

NatTransformation CatLimit::eval_cell(int f, int x) const {
  const auto& s = *weight.shape;
  const int a = s.src(f), b = s.tgt(f);
  auto ffx = compose(diagram.one(f), eval(a, x));
  auto xi = eval(b, weight.one(f).on_object(x));
  NatTransformation n = orientation == Orientation::lax ? NatTransformation{ffx, xi, {}} : NatTransformation{xi, ffx, {}};
  for (const auto& t : objects) n.components.push_back(host.transformations[ix(t.cell(f))].at(x));
  return n;
}

CatPtr probe_category(const std::string& name) {
  if (name == "empty") return cats::empty();
  if (name == "one") return cats::one();
  if (name == "two") return cats::two();
  if (name == "parallel") return cats::parallel();
  if (name == "iso") return cats::iso();
  if (name == "discrete2") return cats::discrete2();
  if (name == "chain3") return cats::chain3();
  throw Error(ErrorKind::UnresolvedReference, "unknown probe category", {name});
}

std::vector<std::string> default_probes() { return {"empty", "one", "two", "parallel"}; }

std::vector<ProbeResult> verify_cat_limit(const CatLimit& l, const std::vector<std::string>& probes) {
  std::vector<ProbeResult> out;
  const auto& shape = *l.weight.shape;
  for (const auto& name : probes) {
    auto b = probe_category(name);
    ProbeResult r;
    r.probe = name;
    auto cats = categories_of({&l.diagram});
    cats.insert(cats.begin(), b);
    auto host = build_cat_full("Cat_" + name, cats);
    auto F = into_cat_full(l.diagram, host);
    WeightedDiagram d{l.weight, F, l.sigma, omega(host.two, l.omega), l.orientation};
    auto cc = cone_category(d, 0, nullptr);
    auto fc = functor_category(b, l.limit);
    r.functors = fc.category->object_count();
    r.transformations = fc.category->arrow_count();
    r.cones = static_cast<int>(cc.cones.size());
    r.cone_morphisms = static_cast<int>(cc.arrows.size());
    WeightedLayout lay(l.weight);
    auto image = [&](const FinFunctor& hf) -> std::optional<int> {
      std::vector<int> cone(ix(lay.size), -1);
      for (int a = 0; a < shape.object_count(); ++a) {
        for (int x = 0; x < l.weight.at(a).object_count(); ++x) {
          auto g = host.find_functor(compose(l.eval(a, x), hf));
          if (!g) return std::nullopt;
          cone[ix(lay.object(a, x))] = *g;
        }
        for (int phi = 0; phi < l.weight.at(a).arrow_count(); ++phi) {
          auto t = host.find_transformation(horizontal(l.eval_arrow(a, phi), identity_nat(hf)));
          if (!t) return std::nullopt;
          cone[ix(lay.arrow(a, phi))] = *t;
        }
      }
      for (int f = 0; f < shape.one_count(); ++f) {
        for (int x = 0; x < l.weight.at(shape.src(f)).object_count(); ++x) {
          auto t = host.find_transformation(horizontal(l.eval_cell(f, x), identity_nat(hf)));
          if (!t) return std::nullopt;
          cone[ix(lay.cell(f, x))] = *t;
        }
      }
      return cc.find_cone(cone);
    };
    std::vector<int> objs, arrs;
    bool total = true;
    for (const auto& hf : fc.functors) {
      auto c = image(hf);
      total = total && c.has_value();
      objs.push_back(c ? *c : -1);
    }
    for (std::size_t i = 0; i < fc.transformations.size() && total; ++i) {
      const auto& beta = fc.transformations[i];
      std::vector<int> comps;
      for (int a = 0; a < shape.object_count(); ++a) {
        for (int x = 0; x < l.weight.at(a).object_count(); ++x) {
          auto t = host.find_transformation(horizontal(identity_nat(l.eval(a, x)), beta));
          comps.push_back(t ? *t : -1);
        }
      }
      int s = objs[ix(*fc.find_functor(beta.source))], t = objs[ix(*fc.find_functor(beta.target))];
      auto m = cc.find_arrow(s, t, comps);
      total = total && m.has_value();
      arrs.push_back(m ? *m : -1);
    }
    if (total) {
      FinFunctor xi{fc.category, cc.category, objs, arrs};
      r.isomorphism = check_functor(xi).empty() && is_isomorphism_of_categories(xi);
    }
    out.push_back(r);
  }
  return out;
}

std::string to_string(DirectKind k) {
  switch (k) {
    case DirectKind::lax: return "lax";
    case DirectKind::pseudo: return "pseudo";
    case DirectKind::strict: return "strict";
  }
  return "?";
}

DirectLimit direct_cat_limit(const Weight& w, const Weight& f, DirectKind kind, Orientation o) {
  const auto& a = *w.shape;
  const bool lax = o == Orientation::lax;
  DirectLimit out;
  // candidate components per object of the shape
  std::vector<std::vector<FinFunctor>> comps;
  for (int x = 0; x < a.object_count(); ++x) comps.push_back(enumerate_functors(w.objects[ix(x)], f.objects[ix(x)]));
  std::vector<std::size_t> pick(ix(a.object_count()), 0);
  auto advance = [&](std::vector<std::size_t>& v, const std::function<std::size_t(std::size_t)>& size) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (++v[i] < size(i)) return true;
      v[i] = 0;
    }
    return false;
  };
  bool any = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return !c.empty(); });
  while (any) {
    std::vector<FinFunctor> th;
    for (int x = 0; x < a.object_count(); ++x) th.push_back(comps[ix(x)][pick[ix(x)]]);
    // θ_f: Ff∘θ_A ⇒ θ_B∘Wf (lax) or the reverse
    std::vector<std::vector<NatTransformation>> cells;
    bool empty = false;
    for (int g = 0; g < a.one_count(); ++g) {
      auto lhs = compose(f.one(g), th[ix(a.src(g))]);
      auto rhs = compose(th[ix(a.tgt(g))], w.one(g));
      auto all = lax ? enumerate_nat_transformations(lhs, rhs) : enumerate_nat_transformations(rhs, lhs);
      std::vector<NatTransformation> keep;
      for (auto& n : all) {
        bool ok = kind == DirectKind::lax || (kind == DirectKind::pseudo ? is_invertible(n) : n == identity_nat(n.source));
        if (a.is_id1(g)) ok = n == identity_nat(n.source);
        if (ok) keep.push_back(std::move(n));
      }
      empty = empty || keep.empty();
      cells.push_back(std::move(keep));
    }
    std::vector<std::size_t> cp(ix(a.one_count()), 0);
    while (!empty) {
      DirectLimit::Object ob{th, {}};
      for (int g = 0; g < a.one_count(); ++g) ob.cells.push_back(cells[ix(g)][cp[ix(g)]]);
      bool good = true;
      for (int g = 0; g < a.one_count() && good; ++g) {
        for (int h : a.ones_from(a.tgt(g))) {
          auto first = horizontal(identity_nat(f.one(h)), ob.cells[ix(g)]);  // Fh∘θ_g
          auto second = horizontal(ob.cells[ix(h)], identity_nat(w.one(g)));  // θ_h∘Wg
          auto expect = lax ? vertical(second, first) : vertical(first, second);
          good = good && ob.cells[ix(a.comp1(h, g))] == expect;
        }
      }
      for (int al = 0; al < a.two_count() && good; ++al) {
        int g = a.dom(al), h = a.cod(al);
        auto fa = horizontal(f.two(al), identity_nat(th[ix(a.src(g))]));  // Fα∘θ_A
        auto wa = horizontal(identity_nat(th[ix(a.tgt(g))]), w.two(al));  // θ_B∘Wα
        if (lax) {
          good = vertical(ob.cells[ix(h)], fa) == vertical(wa, ob.cells[ix(g)]);
        } else {
          good = vertical(fa, ob.cells[ix(g)]) == vertical(ob.cells[ix(h)], wa);
        }
      }
      if (good) {
        out.objects.push_back(std::move(ob));
        charge(out.objects.size(), "direct limit objects");
      }
      if (!advance(cp, [&](std::size_t i) { return cells[i].size(); })) break;
    }
    if (!advance(pick, [&](std::size_t i) { return comps[i].size(); })) break;
  }
  // morphisms: ρ_A: θ_A ⇒ θ'_A with θ'_f∘(Ff ρ_A) = (ρ_B Wf)∘θ_f (lax)
  std::vector<std::pair<int, int>> ends;
  std::map<std::pair<int, std::vector<std::vector<int>>>, int> index;
  auto key = [](const std::vector<NatTransformation>& v) {
    std::vector<std::vector<int>> k;
    for (const auto& n : v) k.push_back(n.components);
    return k;
  };
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    for (std::size_t j = 0; j < out.objects.size(); ++j) {
      const auto& s = out.objects[i];
      const auto& t = out.objects[j];
      std::vector<std::vector<NatTransformation>> cand;
      for (int x = 0; x < a.object_count(); ++x) cand.push_back(enumerate_nat_transformations(s.components[ix(x)], t.components[ix(x)]));
      if (std::any_of(cand.begin(), cand.end(), [](const auto& c) { return c.empty(); })) continue;
      std::vector<std::size_t> rp(ix(a.object_count()), 0);
      do {
        std::vector<NatTransformation> rho;
        for (int x = 0; x < a.object_count(); ++x) rho.push_back(cand[ix(x)][rp[ix(x)]]);
        bool good = true;
        for (int g = 0; g < a.one_count() && good; ++g) {
          auto frho = horizontal(identity_nat(f.one(g)), rho[ix(a.src(g))]);
          auto rhow = horizontal(rho[ix(a.tgt(g))], identity_nat(w.one(g)));
          good = lax ? vertical(t.cells[ix(g)], frho) == vertical(rhow, s.cells[ix(g)])
                     : vertical(t.cells[ix(g)], rhow) == vertical(frho, s.cells[ix(g)]);
        }
        if (good) {
          index[{static_cast<int>(i), key(rho)}] = static_cast<int>(out.arrows.size());
          ends.push_back({static_cast<int>(i), static_cast<int>(j)});
          out.arrows.push_back({static_cast<int>(i), static_cast<int>(j), std::move(rho)});
          charge(out.arrows.size(), "direct limit arrows");
        }
      } while (advance(rp, [&](std::size_t x) { return cand[x].size(); }));
    }
  }
  out.limit = finish_category(
      "direct " + to_string(kind), out.objects.size(), ends,
      [&](int i) {
        std::vector<NatTransformation> ids;
        for (const auto& c : out.objects[ix(i)].components) ids.push_back(identity_nat(c));
        return index.at({i, key(ids)});
      },
      [&](int second, int first) {
        std::vector<NatTransformation> v;
        for (std::size_t x = 0; x < out.arrows[ix(first)].components.size(); ++x)
          v.push_back(vertical(out.arrows[ix(second)].components[x], out.arrows[ix(first)].components[x]));
        auto it = index.find({out.arrows[ix(first)].source, key(v)});
        return it == index.end() ? -1 : it->second;
      });
  return out;
}

std::optional<FinFunctor> compare_cat_limits(const CatLimit& l, const DirectLimit& d) {
  FinFunctor cmp{l.limit, d.limit, {}, {}};
  for (const auto& t : l.objects) {
    int found = -1;
    for (std::size_t i = 0; i < d.objects.size() && found < 0; ++i) {
      bool same = true;
      for (std::size_t x = 0; x < t.components.size() && same; ++x)
        same = l.host.functors[ix(t.components[x])] == d.objects[i].components[x];
      for (std::size_t g = 0; g < t.cells.size() && same; ++g)
        same = l.host.transformations[ix(t.cells[g])] == d.objects[i].cells[g];
      if (same) found = static_cast<int>(i);
    }
    if (found < 0) return std::nullopt;
    cmp.objects.push_back(found);
  }
  for (std::size_t m = 0; m < l.arrows.size(); ++m) {
    int s = cmp.on_object(l.limit->source(static_cast<int>(m))), t = cmp.on_object(l.limit->target(static_cast<int>(m)));
    int found = -1;
    for (std::size_t i = 0; i < d.arrows.size() && found < 0; ++i) {
      if (d.arrows[i].source != s || d.arrows[i].target != t) continue;
      bool same = true;
      for (std::size_t x = 0; x < l.arrows[m].components.size() && same; ++x)
        same = l.host.transformations[ix(l.arrows[m].components[x])] == d.arrows[i].components[x];
      if (same) found = static_cast<int>(i);
    }
    if (found < 0) return std::nullopt;
    cmp.arrows.push_back(found);
  }
  return cmp;
}

}  // namespace twomon

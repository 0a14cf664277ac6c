#include "twomon/cones.hpp"

#include <algorithm>
#include <functional>

#include "twomon/search.hpp"

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

struct FlatCheck {
  std::vector<int> vars;
  ErrorKind kind;
  std::string what;
  std::vector<std::string> witnesses;
  std::function<bool(const std::vector<int>&)> holds;
};

int last_of(const std::vector<int>& vars) { return *std::max_element(vars.begin(), vars.end()); }

/// Axioms of a weighted cone over the flat layout, each with the entries it reads.
std::vector<FlatCheck> weighted_checks(const WeightedDiagram& d) {
  const auto& a = *d.weight.shape;
  const auto& k = *d.diagram.target;
  const auto& w = d.weight;
  const auto& F = d.diagram;
  const bool lax = d.orientation == Orientation::lax;
  WeightedLayout lay(w);
  std::vector<FlatCheck> out;
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& c = w.at(A);
    for (int p = 0; p < c.arrow_count(); ++p) {
      for (int q : c.arrows_from(c.target(p))) {
        int r = c.compose(q, p);
        int vp = lay.arrow(A, p), vq = lay.arrow(A, q), vr = lay.arrow(A, r);
        out.push_back({{vp, vq, vr}, ErrorKind::NotFunctorial, "θ_A does not preserve composition",
                       {a.object_name(A), c.arrow_name(q), c.arrow_name(p)},
                       [&k, vp, vq, vr](const std::vector<int>& s) { return k.vcomp(s[ix(vq)], s[ix(vp)]) == s[ix(vr)]; }});
      }
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    const int A = a.src(f), B = a.tgt(f);
    const auto& wf = w.one(f);
    const auto& ca = w.at(A);
    const int Ff = F.one(f);
    for (int p = 0; p < ca.arrow_count(); ++p) {
      if (ca.is_identity(p)) continue;
      int x = ca.source(p), y = ca.target(p);
      int cx = lay.cell(f, x), cy = lay.cell(f, y), ap = lay.arrow(A, p), bp = lay.arrow(B, wf.on_arrow(p));
      out.push_back({{cx, cy, ap, bp}, ErrorKind::NotNatural, "θ_f is not natural in x", {a.qualified_one(f), ca.arrow_name(p)},
                     [&k, lax, Ff, cx, cy, ap, bp](const std::vector<int>& s) {
                       int wh = k.lwhisker(Ff, s[ix(ap)]);
                       if (lax) return k.vcomp(s[ix(cy)], wh) == k.vcomp(s[ix(bp)], s[ix(cx)]);
                       return k.vcomp(wh, s[ix(cx)]) == k.vcomp(s[ix(cy)], s[ix(bp)]);
                     }});
    }
    for (int g : a.ones_from(B)) {
      int h = a.comp1(g, f);
      const int Fg = F.one(g);
      for (int x = 0; x < ca.object_count(); ++x) {
        int vf = lay.cell(f, x), vg = lay.cell(g, wf.on_object(x)), vh = lay.cell(h, x);
        out.push_back({{vf, vg, vh}, ErrorKind::CompositionAxiom, "composition axiom fails",
                       {a.qualified_one(g), a.qualified_one(f), ca.object_name(x)},
                       [&k, lax, Fg, vf, vg, vh](const std::vector<int>& s) {
                         int wh = k.lwhisker(Fg, s[ix(vf)]);
                         return s[ix(vh)] == (lax ? k.vcomp(s[ix(vg)], wh) : k.vcomp(wh, s[ix(vg)]));
                       }});
      }
    }
  }
  for (int al = 0; al < a.two_count(); ++al) {
    const int f = a.dom(al), g = a.cod(al), A = a.src(f), B = a.tgt(f);
    const auto& wa = w.two(al);
    const int Fa = F.two(al);
    for (int x = 0; x < w.at(A).object_count(); ++x) {
      int vf = lay.cell(f, x), vg = lay.cell(g, x), vo = lay.object(A, x), vb = lay.arrow(B, wa.at(x));
      out.push_back({{vf, vg, vo, vb}, ErrorKind::TwoCellNaturality, "2-cell naturality fails",
                     {a.qualified_two(al), w.at(A).object_name(x)},
                     [&k, lax, Fa, vf, vg, vo, vb](const std::vector<int>& s) {
                       int wh = k.rwhisker(Fa, s[ix(vo)]);
                       if (lax) return k.vcomp(s[ix(vg)], wh) == k.vcomp(s[ix(vb)], s[ix(vf)]);
                       return k.vcomp(wh, s[ix(vf)]) == k.vcomp(s[ix(vg)], s[ix(vb)]);
                     }});
    }
  }
  return out;
}

/// Expected boundary of (θ_f)_x.
std::pair<int, int> weighted_boundary(const WeightedDiagram& d, const WeightedLayout& lay, const std::vector<int>& s,
                                      int f, int x) {
  const auto& a = *d.weight.shape;
  const auto& k = *d.diagram.target;
  int from = k.comp1(d.diagram.one(f), s[ix(lay.object(a.src(f), x))]);
  int to = s[ix(lay.object(a.tgt(f), d.weight.one(f).on_object(x)))];
  if (d.orientation == Orientation::oplax) std::swap(from, to);
  return {from, to};
}

}  // namespace

WeightedLayout::WeightedLayout(const Weight& w) {
  const auto& a = *w.shape;
  for (int A = 0; A < a.object_count(); ++A) {
    object_offset.push_back(size);
    size += w.at(A).object_count();
  }
  ones = size;
  for (int A = 0; A < a.object_count(); ++A) {
    arrow_offset.push_back(size);
    size += w.at(A).arrow_count();
  }
  for (int f = 0; f < a.one_count(); ++f) {
    cell_offset.push_back(size);
    size += w.at(a.src(f)).object_count();
  }
}

std::optional<int> ConeCategory::find_cone(const std::vector<int>& c) const {
  auto it = cone_index_.find(c);
  if (it == cone_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ConeCategory::find_arrow(int source, int target, const std::vector<int>& comps) const {
  auto it = arrow_index_.find({source, target, comps});
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool ConeCategory::arrow_in(int m, const CellFamily& omega_prime) const {
  const auto& c = arrows[ix(m)].components;
  return std::all_of(c.begin(), c.end(), [&](int x) { return omega_prime.contains(x); });
}

void ConeCategory::seal(const std::string& name) {
  cone_index_.clear();
  arrow_index_.clear();
  for (std::size_t i = 0; i < cones.size(); ++i) cone_index_[cones[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    arrow_index_[{arrows[i].source, arrows[i].target, arrows[i].components}] = static_cast<int>(i);
  }
  charge(arrows.size(), "cone category");
  const auto& k = *base;
  std::vector<std::string> obj, arr;
  std::vector<int> src, tgt, ident;
  for (std::size_t i = 0; i < cones.size(); ++i) obj.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    arr.push_back("m" + std::to_string(i));
    src.push_back(arrows[i].source);
    tgt.push_back(arrows[i].target);
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    std::vector<int> ids;
    for (int j = 0; j < ones; ++j) ids.push_back(k.id2(cones[i][ix(j)]));
    auto m = find_arrow(static_cast<int>(i), static_cast<int>(i), ids);
    if (!m) throw Error(ErrorKind::BadIdentity, "cone category lacks an identity", {name, obj[i]});
    ident.push_back(*m);
  }
  category = std::make_shared<const FinCategory>(FinCategory::build(
      name, obj, arr, src, tgt, ident, [&](int second, int first) {
        std::vector<int> comps;
        const auto& p = arrows[ix(first)].components;
        const auto& q = arrows[ix(second)].components;
        for (std::size_t j = 0; j < p.size(); ++j) comps.push_back(k.vcomp(q[j], p[j]));
        auto m = find_arrow(arrows[ix(first)].source, arrows[ix(second)].target, comps);
        return m ? *m : -1;
      }));
}

std::vector<int> flatten(const LaxTransformation& t) {
  auto out = t.components;
  out.insert(out.end(), t.cells.begin(), t.cells.end());
  return out;
}

LaxTransformation conical_cone(const ConicalDiagram& d, int vertex, const std::vector<int>& flat) {
  const int n = d.diagram.source->object_count();
  LaxTransformation t;
  t.source = constant_two_functor(d.diagram.source, d.diagram.target, vertex);
  t.target = d.diagram;
  t.orientation = d.orientation;
  t.components.assign(flat.begin(), flat.begin() + n);
  t.cells.assign(flat.begin() + n, flat.end());
  return t;
}

ConeCategory cone_category(const ConicalDiagram& d, int vertex, const CellFamily* omega_prime) {
  ConeCategory out;
  out.base = d.diagram.target;
  out.vertex = vertex;
  out.ones = d.diagram.source->object_count();
  auto delta = constant_two_functor(d.diagram.source, d.diagram.target, vertex);
  auto ts = enumerate_transformations(delta, d.diagram, d.orientation, d.sigma, d.omega);
  for (const auto& t : ts) out.cones.push_back(flatten(t));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      for (auto& m : enumerate_modifications(ts[i], ts[j], omega_prime)) {
        out.arrows.push_back({static_cast<int>(i), static_cast<int>(j), m.components});
        charge(out.arrows.size(), "cone morphisms");
      }
    }
  }
  out.seal("Cones(" + out.base->object_name(vertex) + ")");
  return out;
}

std::vector<Violation> check_weighted_cone(const WeightedDiagram& d, int vertex, const std::vector<int>& s) {
  const auto& a = *d.weight.shape;
  const auto& k = *d.diagram.target;
  const auto& w = d.weight;
  WeightedLayout lay(w);
  std::vector<Violation> out;
  if (s.size() != ix(lay.size)) return {{ErrorKind::TypeMismatch, "cone has the wrong number of entries", {}}};
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& c = w.at(A);
    for (int x = 0; x < c.object_count(); ++x) {
      int h = s[ix(lay.object(A, x))];
      if (h < 0 || h >= k.one_count() || k.src(h) != vertex || k.tgt(h) != d.diagram.obj(A)) {
        out.push_back({ErrorKind::TypeMismatch, "θ_A(x) has the wrong boundary", {a.object_name(A), c.object_name(x)}});
      }
    }
  }
  if (!out.empty()) return out;
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& c = w.at(A);
    for (int p = 0; p < c.arrow_count(); ++p) {
      int cell = s[ix(lay.arrow(A, p))];
      int dom = s[ix(lay.object(A, c.source(p)))], cod = s[ix(lay.object(A, c.target(p)))];
      if (cell < 0 || cell >= k.two_count() || k.dom(cell) != dom || k.cod(cell) != cod) {
        out.push_back({ErrorKind::TypeMismatch, "θ_A(φ) has the wrong boundary", {a.object_name(A), c.arrow_name(p)}});
      } else if (c.is_identity(p) && cell != k.id2(dom)) {
        out.push_back({ErrorKind::NotFunctorial, "θ_A does not preserve identities", {a.object_name(A), c.arrow_name(p)}});
      }
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    for (int x = 0; x < w.at(a.src(f)).object_count(); ++x) {
      int cell = s[ix(lay.cell(f, x))];
      auto [from, to] = weighted_boundary(d, lay, s, f, x);
      std::vector<std::string> wit{a.qualified_one(f), w.at(a.src(f)).object_name(x)};
      if (cell < 0 || cell >= k.two_count() || k.dom(cell) != from || k.cod(cell) != to) {
        out.push_back({ErrorKind::TypeMismatch, "(θ_f)_x has the wrong boundary", wit});
      } else if (a.is_id1(f) && !k.is_id2(cell)) {
        out.push_back({ErrorKind::UnitAxiom, "(θ_id)_x is not an identity", wit});
      } else if (d.sigma.contains(f) && !d.omega.contains(cell)) {
        out.push_back({ErrorKind::NotInOmega, "(θ_f)_x is not in Ω for f in Σ", wit});
      }
    }
  }
  if (!out.empty()) return out;
  for (const auto& c : weighted_checks(d)) {
    if (!c.holds(s)) out.push_back({c.kind, c.what, c.witnesses});
  }
  return out;
}

std::vector<Violation> check_weighted_cone_morphism(const WeightedDiagram& d, const std::vector<int>& s,
                                                    const std::vector<int>& t, const std::vector<int>& r) {
  const auto& a = *d.weight.shape;
  const auto& k = *d.diagram.target;
  const auto& w = d.weight;
  WeightedLayout lay(w);
  std::vector<Violation> out;
  for (int i = 0; i < lay.ones; ++i) {
    int c = r[ix(i)];
    if (c < 0 || c >= k.two_count() || k.dom(c) != s[ix(i)] || k.cod(c) != t[ix(i)]) {
      out.push_back({ErrorKind::TypeMismatch, "component has the wrong boundary", {std::to_string(i)}});
    }
  }
  if (!out.empty()) return out;
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& c = w.at(A);
    for (int p = 0; p < c.arrow_count(); ++p) {
      int x = lay.object(A, c.source(p)), y = lay.object(A, c.target(p)), v = lay.arrow(A, p);
      if (k.vcomp(t[ix(v)], r[ix(x)]) != k.vcomp(r[ix(y)], s[ix(v)])) {
        out.push_back({ErrorKind::NotNatural, "ρ_A is not natural", {a.object_name(A), c.arrow_name(p)}});
      }
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    const int A = a.src(f), B = a.tgt(f);
    for (int x = 0; x < w.at(A).object_count(); ++x) {
      int v = lay.cell(f, x);
      int ra = r[ix(lay.object(A, x))], rb = r[ix(lay.object(B, w.one(f).on_object(x)))];
      int wh = k.lwhisker(d.diagram.one(f), ra);
      bool ok = d.orientation == Orientation::lax ? k.vcomp(t[ix(v)], wh) == k.vcomp(rb, s[ix(v)])
                                                  : k.vcomp(t[ix(v)], rb) == k.vcomp(wh, s[ix(v)]);
      if (!ok) out.push_back({ErrorKind::ModificationAxiom, "cone morphism axiom fails", {a.qualified_one(f), w.at(A).object_name(x)}});
    }
  }
  return out;
}

ConeCategory cone_category(const WeightedDiagram& d, int vertex, const CellFamily* omega_prime) {
  const auto& a = *d.weight.shape;
  const auto& k = *d.diagram.target;
  const auto& w = d.weight;
  WeightedLayout lay(w);
  Search search;
  for (int A = 0; A < a.object_count(); ++A) {
    auto dom = k.ones_between(vertex, d.diagram.obj(A));
    for (int x = 0; x < w.at(A).object_count(); ++x) search.add_variable(dom);
  }
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& c = w.at(A);
    for (int p = 0; p < c.arrow_count(); ++p) {
      int vx = lay.object(A, c.source(p)), vy = lay.object(A, c.target(p));
      bool ident = c.is_identity(p);
      search.add_variable([&k, vx, vy, ident](const Search::Assignment& s, std::vector<int>& out) {
        if (ident) {
          out.push_back(k.id2(s[ix(vx)]));
        } else {
          out = k.twos_between(s[ix(vx)], s[ix(vy)]);
        }
      });
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    for (int x = 0; x < w.at(a.src(f)).object_count(); ++x) {
      bool ident = a.is_id1(f), restricted = d.sigma.contains(f);
      search.add_variable([&d, &k, &lay, f, x, ident, restricted](const Search::Assignment& s, std::vector<int>& out) {
        auto [from, to] = weighted_boundary(d, lay, s, f, x);
        if (from < 0 || to < 0) return;
        if (ident) {
          out.push_back(k.id2(from));
          return;
        }
        for (int c : k.twos_between(from, to)) {
          if (!restricted || d.omega.contains(c)) out.push_back(c);
        }
      });
    }
  }
  auto checks = weighted_checks(d);
  for (const auto& c : checks) search.add_check(last_of(c.vars), c.holds);

  ConeCategory out;
  out.base = d.diagram.target;
  out.vertex = vertex;
  out.ones = lay.ones;
  search.run([&](const Search::Assignment& s) {
    out.cones.push_back(s);
    charge(out.cones.size(), "weighted cones");
    return true;
  });
  for (std::size_t i = 0; i < out.cones.size(); ++i) {
    for (std::size_t j = 0; j < out.cones.size(); ++j) {
      const auto& s = out.cones[i];
      const auto& t = out.cones[j];
      Search ms;
      for (int v = 0; v < lay.ones; ++v) {
        std::vector<int> dom;
        for (int c : k.twos_between(s[ix(v)], t[ix(v)])) {
          if (!omega_prime || omega_prime->contains(c)) dom.push_back(c);
        }
        ms.add_variable(std::move(dom));
      }
      ms.run([&](const Search::Assignment& r) {
        if (check_weighted_cone_morphism(d, s, t, r).empty()) {
          out.arrows.push_back({static_cast<int>(i), static_cast<int>(j), r});
          charge(out.arrows.size(), "weighted cone morphisms");
        }
        return true;
      });
    }
  }
  out.seal("Cones^W(" + k.object_name(vertex) + ")");
  return out;
}

std::vector<int> precompose(const TwoCategory& k, int ones, const std::vector<int>& cone, int h) {
  std::vector<int> out;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    out.push_back(static_cast<int>(i) < ones ? k.comp1(cone[i], h) : k.rwhisker(cone[i], h));
  }
  return out;
}

std::vector<int> precompose_cell(const TwoCategory& k, int ones, const std::vector<int>& cone, int beta) {
  std::vector<int> out;
  for (int i = 0; i < ones; ++i) out.push_back(k.lwhisker(cone[ix(i)], beta));
  return out;
}

std::optional<FinFunctor> postcompose_functor(const TwoCategory& k, const ConeCategory& at_b,
                                              const std::vector<int>& cone, int b, int l) {
  auto hom = k.hom(b, l);
  FinFunctor f{hom.category, at_b.category, {}, {}};
  for (int h : hom.ones) {
    auto c = at_b.find_cone(precompose(k, at_b.ones, cone, h));
    if (!c) return std::nullopt;
    f.objects.push_back(*c);
  }
  for (int beta : hom.twos) {
    auto s = at_b.find_cone(precompose(k, at_b.ones, cone, k.dom(beta)));
    auto t = at_b.find_cone(precompose(k, at_b.ones, cone, k.cod(beta)));
    auto m = at_b.find_arrow(*s, *t, precompose_cell(k, at_b.ones, cone, beta));
    if (!m) return std::nullopt;
    f.arrows.push_back(*m);
  }
  return f;
}

}  // namespace twomon

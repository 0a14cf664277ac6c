#include "twomon/transform.hpp"

#include <algorithm>

#include "twomon/search.hpp"

namespace twomon {

namespace {

constexpr std::size_t kMaxReported = 64;

void report(std::vector<Violation>& out, ErrorKind kind, std::string msg, std::vector<std::string> witnesses) {
  if (out.size() < kMaxReported) out.push_back({kind, std::move(msg), std::move(witnesses)});
}

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// Structural equations shared by validation and enumeration. `cell(f)`
// returns θ_f, `comp(A)` returns θ_A.
template <class Comp, class Cell>
int composite_rhs(const TwoCategory& b, const TwoFunctor& F, const TwoFunctor& G, Orientation o, int f, int g,
                  Comp /*comp*/, Cell cell) {
  int left = b.hcomp(cell(g), b.id2(F.one(f)));   // θ_g ∘h id_{Ff}
  int right = b.hcomp(b.id2(G.one(g)), cell(f));  // id_{Gg} ∘h θ_f
  return o == Orientation::lax ? b.vcomp(left, right) : b.vcomp(right, left);
}

template <class Comp, class Cell>
bool naturality_holds(const TwoCategory& b, const TwoFunctor& F, const TwoFunctor& G, Orientation o, int alpha,
                      const TwoCategory& a, Comp comp, Cell cell) {
  int f = a.dom(alpha), g = a.cod(alpha);
  int x = a.src(f), y = a.tgt(f);
  int g_side = b.hcomp(G.two(alpha), b.id2(comp(x)));  // Gα ∘h id_{θ_A}
  int f_side = b.hcomp(b.id2(comp(y)), F.two(alpha));  // id_{θ_B} ∘h Fα
  if (o == Orientation::lax) return b.vcomp(cell(g), g_side) == b.vcomp(f_side, cell(f));
  return b.vcomp(cell(g), f_side) == b.vcomp(g_side, cell(f));
}

}  // namespace

std::string to_string(Orientation o) { return o == Orientation::lax ? "lax" : "oplax"; }
Orientation flip(Orientation o) { return o == Orientation::lax ? Orientation::oplax : Orientation::lax; }

std::pair<int, int> structural_boundary(const TwoFunctor& f, const TwoFunctor& g, Orientation o, int theta_a,
                                        int theta_b, int arrow) {
  const auto& b = *f.target;
  int gt = b.comp1(g.one(arrow), theta_a);
  int tf = b.comp1(theta_b, f.one(arrow));
  return o == Orientation::lax ? std::make_pair(gt, tf) : std::make_pair(tf, gt);
}

std::vector<Violation> check_lax_transformation(const LaxTransformation& t) {
  std::vector<Violation> out;
  const auto& a = *t.source.source;
  const auto& b = *t.source.target;
  if (!same_two_category(t.source.source, t.target.source) || !same_two_category(t.source.target, t.target.target)) {
    report(out, ErrorKind::HostMismatch, "functors are not parallel", {});
    return out;
  }
  if (t.components.size() != ix(a.object_count()) || t.cells.size() != ix(a.one_count())) {
    report(out, ErrorKind::TypeMismatch, "transformation tables have the wrong size", {});
    return out;
  }
  for (int x = 0; x < a.object_count(); ++x) {
    int c = t.at(x);
    if (c < 0 || c >= b.one_count() || b.src(c) != t.source.obj(x) || b.tgt(c) != t.target.obj(x)) {
      report(out, ErrorKind::TypeMismatch, "component has the wrong type", {a.object_name(x)});
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < a.one_count(); ++f) {
    auto [d, c] = structural_boundary(t.source, t.target, t.orientation, t.at(a.src(f)), t.at(a.tgt(f)), f);
    int cell = t.cell(f);
    if (cell < 0 || cell >= b.two_count() || b.dom(cell) != d || b.cod(cell) != c) {
      report(out, ErrorKind::TypeMismatch, "structural 2-cell has the wrong type", {a.qualified_one(f)});
    }
  }
  if (!out.empty()) return out;
  auto comp = [&](int x) { return t.at(x); };
  auto cell = [&](int f) { return t.cell(f); };
  for (int x = 0; x < a.object_count(); ++x) {
    if (t.cell(a.id1(x)) != b.id2(t.at(x))) {
      report(out, ErrorKind::UnitAxiom, "structural cell of an identity is not an identity", {a.object_name(x)});
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    for (int g : a.ones_from(a.tgt(f))) {
      if (t.cell(a.comp1(g, f)) != composite_rhs(b, t.source, t.target, t.orientation, f, g, comp, cell)) {
        report(out, ErrorKind::CompositionAxiom, "composition axiom fails", {a.qualified_one(g), a.qualified_one(f)});
      }
    }
  }
  for (int al = 0; al < a.two_count(); ++al) {
    if (!naturality_holds(b, t.source, t.target, t.orientation, al, a, comp, cell)) {
      report(out, ErrorKind::TwoCellNaturality, "2-cell naturality fails", {a.qualified_two(al)});
    }
  }
  return out;
}

LaxTransformation validate_lax_transformation(const RawLaxTransformation& raw, const TwoFunctor& f,
                                              const TwoFunctor& g, Orientation o) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  LaxTransformation t{f, g, o, std::vector<int>(ix(a.object_count()), -1), std::vector<int>(ix(a.one_count()), -1)};
  std::vector<Violation> errs;
  for (const auto& [x, c] : raw.components) {
    auto xi = a.find_object(x);
    auto ci = b.find_one(c);
    if (!xi || !ci) {
      errs.push_back({ErrorKind::UnresolvedReference, "component refers to an unknown cell", {x, c}});
    } else {
      t.components[ix(*xi)] = *ci;
    }
  }
  for (const auto& [h, c] : raw.cells) {
    auto hi = a.find_one(h);
    auto ci = b.find_two(c);
    if (!hi || !ci) {
      errs.push_back({ErrorKind::UnresolvedReference, "structural cell refers to an unknown cell", {h, c}});
    } else {
      t.cells[ix(*hi)] = *ci;
    }
  }
  raise_if_any(errs);
  for (int x = 0; x < a.object_count(); ++x) {
    if (t.components[ix(x)] < 0) {
      errs.push_back({ErrorKind::UnresolvedReference, "missing component", {a.object_name(x)}});
    } else if (t.cells[ix(a.id1(x))] < 0) {
      t.cells[ix(a.id1(x))] = b.id2(t.components[ix(x)]);
    }
  }
  for (int h = 0; h < a.one_count(); ++h) {
    if (t.cells[ix(h)] < 0) errs.push_back({ErrorKind::UnresolvedReference, "missing structural cell", {a.one_name(h)}});
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_lax_transformation(t));
  return t;
}

LaxTransformation identity_transformation(const TwoFunctor& f, Orientation o) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  LaxTransformation t{f, f, o, {}, {}};
  for (int x = 0; x < a.object_count(); ++x) t.components.push_back(b.id1(f.obj(x)));
  for (int h = 0; h < a.one_count(); ++h) t.cells.push_back(b.id2(f.one(h)));
  return t;
}

LaxTransformation vertical(const LaxTransformation& psi, const LaxTransformation& theta) {
  const auto& a = *theta.source.source;
  const auto& b = *theta.source.target;
  LaxTransformation t{theta.source, psi.target, theta.orientation, {}, {}};
  for (int x = 0; x < a.object_count(); ++x) t.components.push_back(b.comp1(psi.at(x), theta.at(x)));
  for (int f = 0; f < a.one_count(); ++f) {
    int first = b.hcomp(psi.cell(f), b.id2(theta.at(a.src(f))));    // ψ_f ∘h id_{θ_A}
    int second = b.hcomp(b.id2(psi.at(a.tgt(f))), theta.cell(f));   // id_{ψ_B} ∘h θ_f
    t.cells.push_back(theta.orientation == Orientation::lax ? b.vcomp(second, first) : b.vcomp(first, second));
  }
  return t;
}

bool is_sigma_omega(const LaxTransformation& t, const ArrowFamily& sigma, const CellFamily& omega) {
  if (!same_two_category(sigma.host, t.source.source) || !same_two_category(omega.host, t.source.target)) {
    throw Error(ErrorKind::HostMismatch, "families do not live on the transformation's 2-categories");
  }
  for (int f = 0; f < t.source.source->one_count(); ++f) {
    if (sigma.contains(f) && !omega.contains(t.cell(f))) return false;
  }
  return true;
}

namespace {

bool modification_axiom(const TwoCategory& a, const TwoCategory& b, const LaxTransformation& s,
                        const LaxTransformation& t, int f, int rho_a, int rho_b) {
  int gf = b.id2(s.target.one(f));
  int ff = b.id2(s.source.one(f));
  int g_side = b.hcomp(gf, rho_a);  // id_{Gf} ∘h ρ_A
  int f_side = b.hcomp(rho_b, ff);  // ρ_B ∘h id_{Ff}
  (void)a;
  if (s.orientation == Orientation::lax) return b.vcomp(t.cell(f), g_side) == b.vcomp(f_side, s.cell(f));
  return b.vcomp(t.cell(f), f_side) == b.vcomp(g_side, s.cell(f));
}

}  // namespace

std::vector<Violation> check_modification(const Modification& m) {
  std::vector<Violation> out;
  const auto& a = *m.source.source.source;
  const auto& b = *m.source.source.target;
  if (!(m.source.source == m.target.source) || !(m.source.target == m.target.target) ||
      m.source.orientation != m.target.orientation) {
    report(out, ErrorKind::TypeMismatch, "transformations are not parallel", {});
    return out;
  }
  if (m.components.size() != ix(a.object_count())) {
    report(out, ErrorKind::TypeMismatch, "modification table has the wrong size", {});
    return out;
  }
  for (int x = 0; x < a.object_count(); ++x) {
    int c = m.at(x);
    if (c < 0 || c >= b.two_count() || b.dom(c) != m.source.at(x) || b.cod(c) != m.target.at(x)) {
      report(out, ErrorKind::TypeMismatch, "modification component has the wrong type", {a.object_name(x)});
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < a.one_count(); ++f) {
    if (!modification_axiom(a, b, m.source, m.target, f, m.at(a.src(f)), m.at(a.tgt(f)))) {
      report(out, ErrorKind::ModificationAxiom, "modification axiom fails", {a.qualified_one(f)});
    }
  }
  return out;
}

Modification validate_modification(const std::map<std::string, std::string>& raw, const LaxTransformation& s,
                                   const LaxTransformation& t) {
  const auto& a = *s.source.source;
  const auto& b = *s.source.target;
  Modification m{s, t, std::vector<int>(ix(a.object_count()), -1)};
  std::vector<Violation> errs;
  for (const auto& [x, c] : raw) {
    auto xi = a.find_object(x);
    auto ci = b.find_two(c);
    if (!xi || !ci) {
      errs.push_back({ErrorKind::UnresolvedReference, "modification refers to an unknown cell", {x, c}});
    } else {
      m.components[ix(*xi)] = *ci;
    }
  }
  for (int x = 0; x < a.object_count(); ++x) {
    if (m.components[ix(x)] < 0) errs.push_back({ErrorKind::UnresolvedReference, "missing component", {a.object_name(x)}});
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_modification(m));
  return m;
}

bool is_omega_modification(const Modification& m, const CellFamily& omega_prime) {
  return std::all_of(m.components.begin(), m.components.end(), [&](int c) { return omega_prime.contains(c); });
}

Modification identity_modification(const LaxTransformation& t) {
  Modification m{t, t, {}};
  for (int c : t.components) m.components.push_back(t.source.target->id2(c));
  return m;
}

Modification vertical(const Modification& b, const Modification& a) {
  Modification m{a.source, b.target, {}};
  const auto& k = *a.source.source.target;
  for (std::size_t x = 0; x < a.components.size(); ++x) m.components.push_back(k.vcomp(b.components[x], a.components[x]));
  return m;
}

std::vector<LaxTransformation> enumerate_transformations(const TwoFunctor& F, const TwoFunctor& G, Orientation o,
                                                         const ArrowFamily& sigma, const CellFamily& omega) {
  const auto& a = *F.source;
  const auto& b = *F.target;
  const int n = a.object_count();
  Search search;
  for (int x = 0; x < n; ++x) search.add_variable(b.ones_between(F.obj(x), G.obj(x)));
  for (int f = 0; f < a.one_count(); ++f) {
    const int s = a.src(f), t = a.tgt(f);
    const bool ident = a.is_id1(f);
    const bool restricted = sigma.contains(f);
    search.add_variable([&, f, s, t, ident, restricted](const Search::Assignment& asg, std::vector<int>& out) {
      if (ident) {
        out.push_back(b.id2(asg[ix(s)]));
        return;
      }
      auto [d, c] = structural_boundary(F, G, o, asg[ix(s)], asg[ix(t)], f);
      if (d < 0 || c < 0) return;
      for (int cell : b.twos_between(d, c)) {
        if (!restricted || omega.contains(cell)) out.push_back(cell);
      }
    });
  }
  auto comp_of = [](const Search::Assignment& asg) { return [&asg](int x) { return asg[ix(x)]; }; };
  auto cell_of = [n](const Search::Assignment& asg) { return [&asg, n](int f) { return asg[ix(n + f)]; }; };
  for (int f = 0; f < a.one_count(); ++f) {
    for (int g : a.ones_from(a.tgt(f))) {
      int h = a.comp1(g, f);
      search.add_check(n + std::max({f, g, h}), [&, f, g, h, n](const Search::Assignment& asg) {
        return asg[ix(n + h)] == composite_rhs(b, F, G, o, f, g, comp_of(asg), cell_of(asg));
      });
    }
  }
  for (int al = 0; al < a.two_count(); ++al) {
    int at = n + std::max(a.dom(al), a.cod(al));
    search.add_check(at, [&, al](const Search::Assignment& asg) {
      return naturality_holds(b, F, G, o, al, a, comp_of(asg), cell_of(asg));
    });
  }
  std::vector<LaxTransformation> out;
  search.run([&](const Search::Assignment& asg) {
    out.push_back(LaxTransformation{F, G, o, {asg.begin(), asg.begin() + n}, {asg.begin() + n, asg.end()}});
    charge(out.size(), "transformation enumeration");
    return true;
  });
  return out;
}

std::vector<Modification> enumerate_modifications(const LaxTransformation& s, const LaxTransformation& t,
                                                  const CellFamily* omega_prime) {
  const auto& a = *s.source.source;
  const auto& b = *s.source.target;
  Search search;
  for (int x = 0; x < a.object_count(); ++x) {
    std::vector<int> dom;
    for (int c : b.twos_between(s.at(x), t.at(x))) {
      if (!omega_prime || omega_prime->contains(c)) dom.push_back(c);
    }
    search.add_variable(std::move(dom));
  }
  for (int f = 0; f < a.one_count(); ++f) {
    int x = a.src(f), y = a.tgt(f);
    search.add_check(std::max(x, y), [&, f, x, y](const Search::Assignment& asg) {
      return modification_axiom(a, b, s, t, f, asg[ix(x)], asg[ix(y)]);
    });
  }
  std::vector<Modification> out;
  search.run([&](const Search::Assignment& asg) {
    out.push_back(Modification{s, t, asg});
    charge(out.size(), "modification enumeration");
    return true;
  });
  return out;
}

HomTwoCategory hom_sigma_omega(const std::vector<TwoFunctor>& functors, const std::vector<std::string>& names,
                               Orientation o, const ArrowFamily& sigma, const CellFamily& omega,
                               const CellFamily& omega_prime) {
  HomTwoCategory h;
  h.functors = functors;
  const auto& b = *omega.host;
  std::vector<TwoCategory::CellSpec> ones, twos;
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int> t_index;
  std::map<std::pair<int, std::vector<int>>, int> m_index;  // (source transformation, components)
  std::vector<int> t_src, t_tgt;
  auto label = [&](const LaxTransformation& t, std::size_t i, std::size_t j) {
    std::string s = names[i] + "=>" + names[j] + "[";
    for (std::size_t k = 0; k < t.components.size(); ++k) s += (k ? "," : "") + b.one_name(t.components[k]);
    s += ";";
    for (std::size_t k = 0; k < t.cells.size(); ++k) s += (k ? "," : "") + b.two_name(t.cells[k]);
    return s + "]";
  };
  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      for (auto& t : enumerate_transformations(functors[i], functors[j], o, sigma, omega)) {
        int idx = static_cast<int>(h.transformations.size());
        t_index[{static_cast<int>(i), static_cast<int>(j), t.components, t.cells}] = idx;
        ones.push_back({label(t, i, j), static_cast<int>(i), static_cast<int>(j)});
        h.transformations.push_back(std::move(t));
        charge(h.transformations.size(), "Hom 1-cells");
      }
    }
  }
  auto find_t = [&](const LaxTransformation& t, int i, int j) {
    auto it = t_index.find({i, j, t.components, t.cells});
    return it == t_index.end() ? -1 : it->second;
  };
  std::vector<int> id1, id2(h.transformations.size(), -1);
  for (std::size_t i = 0; i < functors.size(); ++i) {
    id1.push_back(find_t(identity_transformation(functors[i], o), static_cast<int>(i), static_cast<int>(i)));
  }
  for (std::size_t p = 0; p < h.transformations.size(); ++p) {
    for (std::size_t q = 0; q < h.transformations.size(); ++q) {
      if (ones[p].source != ones[q].source || ones[p].target != ones[q].target) continue;
      for (auto& m : enumerate_modifications(h.transformations[p], h.transformations[q], &omega_prime)) {
        int idx = static_cast<int>(h.modifications.size());
        if (p == q && m == identity_modification(h.transformations[p])) id2[p] = idx;
        std::string s = ones[p].name + "~>" + ones[q].name + "{";
        for (std::size_t k = 0; k < m.components.size(); ++k) s += (k ? "," : "") + b.two_name(m.components[k]);
        m_index[{static_cast<int>(p), m.components}] = idx;
        twos.push_back({s + "}", static_cast<int>(p), static_cast<int>(q)});
        h.modifications.push_back(std::move(m));
        charge(h.modifications.size(), "Hom 2-cells");
      }
    }
  }
  auto find_m = [&](int p, const std::vector<int>& comps) {
    auto it = m_index.find({p, comps});
    return it == m_index.end() ? -1 : it->second;
  };
  auto k = TwoCategory::build(
      "Hom", names, ones, twos, id1, id2,
      [&](int g, int f) {
        return find_t(vertical(h.transformations[ix(g)], h.transformations[ix(f)]), ones[ix(f)].source,
                      ones[ix(g)].target);
      },
      [&](int y, int x) {
        auto m = vertical(h.modifications[ix(y)], h.modifications[ix(x)]);
        return find_m(twos[ix(x)].source, m.components);
      },
      [&](int y, int x) {
        // (σ∗ρ)_A = σ_A ∘h ρ_A
        const auto& rx = h.modifications[ix(x)];
        const auto& ry = h.modifications[ix(y)];
        std::vector<int> comps;
        for (std::size_t c = 0; c < rx.components.size(); ++c) comps.push_back(b.hcomp(ry.components[c], rx.components[c]));
        int src = find_t(vertical(ry.source, rx.source), ones[ix(twos[ix(x)].source)].source,
                         ones[ix(twos[ix(y)].source)].target);
        return src < 0 ? -1 : find_m(src, comps);
      });
  h.two = std::make_shared<const TwoCategory>(std::move(k));
  return h;
}

LaxTransformation co_dual(const LaxTransformation& t, const TwoFunctor& co_source, const TwoFunctor& co_target) {
  return LaxTransformation{co_source, co_target, flip(t.orientation), t.components, t.cells};
}

}  // namespace twomon

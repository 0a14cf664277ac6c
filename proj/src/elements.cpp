#include "twomon/elements.hpp"

#include <algorithm>

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

struct TwoData {
  int alpha, source, target;  // 2-cell of 𝒜, 1-cells of El_W
};

}  // namespace

int ElementsTwoCategory::find_one(int source, int f, int phi) const {
  auto it = one_index.find({source, f, phi});
  return it == one_index.end() ? -1 : it->second;
}

ElementsTwoCategory build_elements(const Weight& w, const ArrowFamily& sigma, Orientation o) {
  const auto& a = *w.shape;
  const bool lax = o == Orientation::lax;
  ElementsTwoCategory el;
  el.orientation = o;
  std::vector<std::string> obj;
  for (int A = 0; A < a.object_count(); ++A) {
    for (int x = 0; x < w.at(A).object_count(); ++x) {
      el.object_index[{A, x}] = static_cast<int>(el.objects.size());
      el.objects.push_back({x, A});
      obj.push_back("(" + w.at(A).object_name(x) + "," + a.object_name(A) + ")");
    }
  }
  std::vector<TwoCategory::CellSpec> ones;
  std::vector<int> one_src, one_tgt;
  for (int s = 0; s < static_cast<int>(el.objects.size()); ++s) {
    auto [x, A] = el.objects[ix(s)];
    for (int f : a.ones_from(A)) {
      const int B = a.tgt(f);
      const int fx = w.one(f).on_object(x);
      const auto& wb = w.at(B);
      for (int y = 0; y < wb.object_count(); ++y) {
        auto phis = lax ? wb.arrows_between(fx, y) : wb.arrows_between(y, fx);
        for (int phi : phis) {
          int t = el.object_index.at({B, y});
          el.one_index[{s, f, phi}] = static_cast<int>(el.ones.size());
          el.ones.push_back({f, phi});
          ones.push_back({"(" + a.one_name(f) + "," + wb.arrow_name(phi) + ")@" + obj[ix(s)], s, t});
          one_src.push_back(s);
          one_tgt.push_back(t);
        }
      }
    }
  }
  charge(ones.size(), "El_W 1-cells");
  // 2-cells: α: f ⇒ g with ψ∘(Wα)_x = φ (lax) or (Wα)_x∘φ = ψ (oplax).
  std::vector<TwoData> cells;
  std::vector<TwoCategory::CellSpec> twos;
  std::map<std::tuple<int, int, int>, int> cell_index;
  for (int p = 0; p < static_cast<int>(el.ones.size()); ++p) {
    for (int q = 0; q < static_cast<int>(el.ones.size()); ++q) {
      if (one_src[ix(p)] != one_src[ix(q)] || one_tgt[ix(p)] != one_tgt[ix(q)]) continue;
      const auto [f, phi] = el.ones[ix(p)];
      const auto [g, psi] = el.ones[ix(q)];
      const int x = el.objects[ix(one_src[ix(p)])].first;
      const auto& wb = w.at(a.tgt(f));
      for (int al : a.twos_between(f, g)) {
        int comp = w.two(al).at(x);
        bool ok = lax ? wb.compose(psi, comp) == phi : wb.compose(comp, phi) == psi;
        if (!ok) continue;
        cell_index[{al, p, q}] = static_cast<int>(cells.size());
        cells.push_back({al, p, q});
        twos.push_back({a.two_name(al) + ":" + ones[ix(p)].name + "=>" + ones[ix(q)].name, p, q});
      }
    }
  }
  charge(twos.size(), "El_W 2-cells");
  std::vector<int> id1, id2;
  for (int s = 0; s < static_cast<int>(el.objects.size()); ++s) {
    auto [x, A] = el.objects[ix(s)];
    id1.push_back(el.find_one(s, a.id1(A), w.at(A).identity(x)));
  }
  for (int p = 0; p < static_cast<int>(el.ones.size()); ++p) {
    id2.push_back(cell_index.at({a.id2(el.ones[ix(p)].f), p, p}));
  }
  auto comp1 = [&](int q, int p) {
    const auto [f, phi] = el.ones[ix(p)];
    const auto [g, psi] = el.ones[ix(q)];
    const auto& wc = w.at(a.tgt(g));
    int gphi = w.one(g).on_arrow(phi);
    int chi = lax ? wc.compose(psi, gphi) : wc.compose(gphi, psi);
    return el.find_one(one_src[ix(p)], a.comp1(g, f), chi);
  };
  auto vcomp = [&](int d2, int d1) {
    auto it = cell_index.find({a.vcomp(cells[ix(d2)].alpha, cells[ix(d1)].alpha), cells[ix(d1)].source, cells[ix(d2)].target});
    return it == cell_index.end() ? -1 : it->second;
  };
  auto hcomp = [&](int d2, int d1) {
    int s = comp1(cells[ix(d2)].source, cells[ix(d1)].source);
    int t = comp1(cells[ix(d2)].target, cells[ix(d1)].target);
    auto it = cell_index.find({a.hcomp(cells[ix(d2)].alpha, cells[ix(d1)].alpha), s, t});
    return it == cell_index.end() ? -1 : it->second;
  };
  auto two = std::make_shared<const TwoCategory>(TwoCategory::build(
      "El(" + a.name() + ")", obj, ones, twos, id1, id2, comp1, vcomp, hcomp));
  raise_if_any(check_two_category(*two));
  el.two = two;
  el.projection = TwoFunctor{two, w.shape, {}, {}, {}};
  for (auto [x, A] : el.objects) el.projection.objects.push_back(A);
  for (auto [f, phi] : el.ones) el.projection.ones.push_back(f);
  for (const auto& c : cells) el.projection.twos.push_back(c.alpha);
  raise_if_any(check_two_functor(el.projection));
  el.id_sigma = ArrowFamily{two, std::vector<char>(ones.size(), 0)};
  for (int p = 0; p < static_cast<int>(el.ones.size()); ++p) {
    const auto [f, phi] = el.ones[ix(p)];
    if (sigma.contains(f) && w.at(a.tgt(f)).is_identity(phi)) el.id_sigma.member[ix(p)] = 1;
  }
  return el;
}

ConicalDiagram conical_expression(const WeightedDiagram& d, const ElementsTwoCategory& el) {
  return {compose(d.diagram, el.projection), el.id_sigma, d.omega, d.orientation};
}

std::vector<int> weighted_to_conical(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& c) {
  const auto& k = *d.diagram.target;
  const auto& a = *d.weight.shape;
  WeightedLayout lay(d.weight);
  std::vector<int> out;
  for (auto [x, A] : el.objects) out.push_back(c[ix(lay.object(A, x))]);
  for (int p = 0; p < static_cast<int>(el.ones.size()); ++p) {
    const auto [f, phi] = el.ones[ix(p)];
    const int x = el.objects[ix(el.two->src(p))].first;
    int tf = c[ix(lay.cell(f, x))];
    int tphi = c[ix(lay.arrow(a.tgt(f), phi))];
    out.push_back(d.orientation == Orientation::lax ? k.vcomp(tphi, tf) : k.vcomp(tf, tphi));
  }
  return out;
}

std::vector<int> conical_to_weighted(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& c) {
  const auto& a = *d.weight.shape;
  const auto& w = d.weight;
  WeightedLayout lay(w);
  const int n = static_cast<int>(el.objects.size());
  std::vector<int> out(ix(lay.size), -1);
  for (int s = 0; s < n; ++s) {
    auto [x, A] = el.objects[ix(s)];
    out[ix(lay.object(A, x))] = c[ix(s)];
  }
  for (int A = 0; A < a.object_count(); ++A) {
    const auto& wa = w.at(A);
    for (int phi = 0; phi < wa.arrow_count(); ++phi) {
      // lax: (id, φ): (x,A) → (x',A); oplax: (id, φ): (x',A) → (x,A)
      int s = el.find_object(A, d.orientation == Orientation::lax ? wa.source(phi) : wa.target(phi));
      out[ix(lay.arrow(A, phi))] = c[ix(n + el.find_one(s, a.id1(A), phi))];
    }
  }
  for (int f = 0; f < a.one_count(); ++f) {
    const auto& wa = w.at(a.src(f));
    const auto& wb = w.at(a.tgt(f));
    for (int x = 0; x < wa.object_count(); ++x) {
      int s = el.find_object(a.src(f), x);
      out[ix(lay.cell(f, x))] = c[ix(n + el.find_one(s, f, wb.identity(w.one(f).on_object(x))))];
    }
  }
  return out;
}

std::vector<int> weighted_to_conical_cell(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& r) {
  WeightedLayout lay(d.weight);
  std::vector<int> out;
  for (auto [x, A] : el.objects) out.push_back(r[ix(lay.object(A, x))]);
  return out;
}

std::vector<int> conical_to_weighted_cell(const WeightedDiagram& d, const ElementsTwoCategory& el, const std::vector<int>& r) {
  WeightedLayout lay(d.weight);
  std::vector<int> out(ix(lay.ones), -1);
  for (int s = 0; s < static_cast<int>(el.objects.size()); ++s) {
    auto [x, A] = el.objects[ix(s)];
    out[ix(lay.object(A, x))] = r[ix(s)];
  }
  return out;
}

ConeCorrespondence cone_correspondence(const WeightedDiagram& d, const ElementsTwoCategory& el, int vertex,
                                       const CellFamily* omega_prime) {
  ConeCorrespondence out;
  out.weighted = cone_category(d, vertex, omega_prime);
  out.conical = cone_category(conical_expression(d, el), vertex, omega_prime);
  auto transport = [&](const ConeCategory& from, const ConeCategory& to, bool forward) -> std::optional<FinFunctor> {
    FinFunctor fn{from.category, to.category, {}, {}};
    for (const auto& c : from.cones) {
      auto img = to.find_cone(forward ? weighted_to_conical(d, el, c) : conical_to_weighted(d, el, c));
      if (!img) return std::nullopt;
      fn.objects.push_back(*img);
    }
    for (const auto& m : from.arrows) {
      auto comps = forward ? weighted_to_conical_cell(d, el, m.components) : conical_to_weighted_cell(d, el, m.components);
      auto img = to.find_arrow(fn.on_object(m.source), fn.on_object(m.target), comps);
      if (!img) return std::nullopt;
      fn.arrows.push_back(*img);
    }
    return fn;
  };
  out.forward = transport(out.weighted, out.conical, true);
  out.backward = transport(out.conical, out.weighted, false);
  if (out.forward && out.backward && check_functor(*out.forward).empty() && check_functor(*out.backward).empty()) {
    out.inverse = compose(*out.backward, *out.forward) == identity_functor(out.weighted.category) &&
                  compose(*out.forward, *out.backward) == identity_functor(out.conical.category);
    out.isomorphism = is_isomorphism_of_categories(*out.forward);
  }
  return out;
}

}  // namespace twomon

#include "twomon/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

template <class T>
bool bijective_onto(const std::vector<T>& images, std::vector<T> targets) {
  std::vector<T> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  std::sort(targets.begin(), targets.end());
  return sorted == targets;
}

std::vector<int> name_order(const TwoCategory& k) {
  std::vector<int> order(ix(k.object_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return k.object_name(a) < k.object_name(b); });
  return order;
}

}  // namespace

LimitProblem::LimitProblem(ConicalDiagram d) : diagram_(d), base_(d.diagram.target) {
  ones_ = d.diagram.source->object_count();
  for (int b = 0; b < base_->object_count(); ++b) cones_.push_back(cone_category(d, b));
}

LimitProblem::LimitProblem(WeightedDiagram d) : diagram_(d), base_(d.diagram.target) {
  ones_ = WeightedLayout(d.weight).ones;
  for (int b = 0; b < base_->object_count(); ++b) cones_.push_back(cone_category(d, b));
}

BTranscript transcribe(const LimitProblem& p, int vertex, const std::vector<int>& cone, int b) {
  const auto& k = *p.base();
  const auto& cc = p.cones_at(b);
  BTranscript t;
  t.b = b;
  auto hom = k.hom(b, vertex);
  std::map<int, int> local;
  for (std::size_t i = 0; i < hom.ones.size(); ++i) {
    local[hom.ones[i]] = static_cast<int>(i);
    auto c = cc.find_cone(precompose(k, p.ones(), cone, hom.ones[i]));
    t.objects.push_back(c ? *c : -1);
  }
  for (int beta : hom.twos) {
    int s = t.objects[ix(local.at(k.dom(beta)))], u = t.objects[ix(local.at(k.cod(beta)))];
    std::optional<int> m;
    if (s >= 0 && u >= 0) m = cc.find_arrow(s, u, precompose_cell(k, p.ones(), cone, beta));
    t.arrows.push_back(m ? *m : -1);
  }
  std::vector<int> all_cones(cc.cones.size()), all_arrows(cc.arrows.size());
  std::iota(all_cones.begin(), all_cones.end(), 0);
  std::iota(all_arrows.begin(), all_arrows.end(), 0);
  t.isomorphism = bijective_onto(t.objects, all_cones) && bijective_onto(t.arrows, all_arrows);
  return t;
}

LimitCertificate certify(std::shared_ptr<const LimitProblem> p, int vertex, const std::vector<int>& cone) {
  LimitCertificate c;
  c.vertex = vertex;
  c.cone = cone;
  for (int b = 0; b < p->base()->object_count(); ++b) c.transcript.push_back(transcribe(*p, vertex, cone, b));
  c.problem = std::move(p);
  return c;
}

std::optional<LimitCertificate> find_limit(std::shared_ptr<const LimitProblem> p) {
  const auto& k = *p->base();
  std::optional<LimitCertificate> first;
  std::vector<int> vertices;
  std::vector<std::vector<int>> cones;
  for (int l : name_order(k)) {
    for (const auto& cone : p->cones_at(l).cones) {
      bool universal = true;
      for (int b = 0; b < k.object_count() && universal; ++b) universal = transcribe(*p, l, cone, b).isomorphism;
      if (!universal) continue;
      vertices.push_back(l);
      cones.push_back(cone);
      if (!first) first = certify(p, l, cone);
      break;
    }
  }
  if (first) {
    first->successful_vertices = vertices;
    first->successful_cones = cones;
  }
  return first;
}

std::optional<LimitCertificate> find_conical_limit(const ConicalDiagram& d) {
  return find_limit(std::make_shared<const LimitProblem>(d));
}

std::optional<LimitCertificate> find_weighted_limit(const WeightedDiagram& d) {
  return find_limit(std::make_shared<const LimitProblem>(d));
}

LimitReport verify_limit(const LimitCertificate& c) {
  LimitReport r;
  const auto& p = *c.problem;
  const auto& k = *p.base();
  r.cone_valid = p.cones_at(c.vertex).find_cone(c.cone).has_value();
  if (!r.cone_valid) r.failures.push_back("the cone is not a σ-ω-cone with vertex " + k.object_name(c.vertex));
  r.universal = r.cone_valid;
  for (int b = 0; b < k.object_count() && r.cone_valid; ++b) {
    auto t = transcribe(p, c.vertex, c.cone, b);
    bool same = b < static_cast<int>(c.transcript.size()) && c.transcript[ix(b)].objects == t.objects &&
                c.transcript[ix(b)].arrows == t.arrows;
    if (!t.isomorphism) {
      r.universal = false;
      r.failures.push_back("post-composition is not an isomorphism at " + k.object_name(b));
    }
    if (!same) r.failures.push_back("recorded transcript differs at " + k.object_name(b));
  }
  if (r.cone_valid) {
    // ξ = μ_L(id_L)
    auto h = mediator(c, c.vertex, c.cone);
    if (!h || *h != k.id1(c.vertex)) r.failures.push_back("the cone is not the image of the identity");
  }
  return r;
}

CompatibilityResult check_compatibility(const LimitCertificate& c, const CellFamily& omega_prime, const std::string& name) {
  CompatibilityResult res;
  res.family = name;
  res.direct = true;
  res.preimage = true;
  const auto& p = *c.problem;
  const auto& k = *p.base();
  for (int b = 0; b < k.object_count(); ++b) {
    const auto& cc = p.cones_at(b);
    auto t = transcribe(p, c.vertex, c.cone, b);
    auto hom = k.hom(b, c.vertex);
    // direct: hom(B,L)^Ω' → Cones(B,F)^Ω' is an isomorphism
    std::vector<int> images, targets;
    for (std::size_t i = 0; i < hom.twos.size(); ++i) {
      if (!omega_prime.contains(hom.twos[i])) continue;
      int m = t.arrows[i];
      if (m < 0 || !cc.arrow_in(m, omega_prime)) {
        res.direct = false;
        res.witnesses.push_back(k.qualified_two(hom.twos[i]));
      }
      images.push_back(m);
    }
    for (int m = 0; m < static_cast<int>(cc.arrows.size()); ++m) {
      if (cc.arrow_in(m, omega_prime)) targets.push_back(m);
    }
    if (!t.isomorphism || !bijective_onto(images, targets)) res.direct = false;
    // preimages: every Ω'-component morphism comes from an Ω'-2-cell
    for (int m : targets) {
      auto it = std::find(t.arrows.begin(), t.arrows.end(), m);
      if (it == t.arrows.end()) {
        res.preimage = false;
        continue;
      }
      int beta = hom.twos[ix(static_cast<int>(it - t.arrows.begin()))];
      if (!omega_prime.contains(beta)) {
        res.preimage = false;
        res.witnesses.push_back(k.qualified_two(beta));
      }
    }
  }
  return res;
}

std::optional<int> mediator(const LimitCertificate& c, int b, const std::vector<int>& cone) {
  const auto& p = *c.problem;
  auto idx = p.cones_at(b).find_cone(cone);
  if (!idx) return std::nullopt;
  auto hom = p.base()->hom(b, c.vertex);
  auto t = transcribe(p, c.vertex, c.cone, b);
  std::optional<int> found;
  for (std::size_t i = 0; i < t.objects.size(); ++i) {
    if (t.objects[i] != *idx) continue;
    if (found) return std::nullopt;
    found = hom.ones[i];
  }
  return found;
}

std::optional<int> mediator_cell(const LimitCertificate& c, int b, int h, int h2, const std::vector<int>& comps) {
  const auto& p = *c.problem;
  const auto& k = *p.base();
  auto s = p.cones_at(b).find_cone(precompose(k, p.ones(), c.cone, h));
  auto t = p.cones_at(b).find_cone(precompose(k, p.ones(), c.cone, h2));
  if (!s || !t) return std::nullopt;
  auto m = p.cones_at(b).find_arrow(*s, *t, comps);
  if (!m) return std::nullopt;
  std::optional<int> found;
  for (int beta : k.twos_between(h, h2)) {
    if (precompose_cell(k, p.ones(), c.cone, beta) != comps) continue;
    if (found) return std::nullopt;
    found = beta;
  }
  return found;
}

std::string to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::product: return "product";
    case SpecialKind::inserter: return "inserter";
    case SpecialKind::iso_inserter: return "iso-inserter";
    case SpecialKind::equifier: return "equifier";
  }
  return "?";
}

SpecialReport special_limit_check(const TwoCategory& k, const SpecialData& d, const SpecialCandidate& c,
                                  const std::vector<std::pair<std::string, CellFamily>>& omega_primes) {
  SpecialReport r;
  const int l = c.vertex;
  std::vector<bool> compat(omega_primes.size(), true);
  // For each E: the 1-dimensional map on 1-cells h and, for each pair
  // (h, h'), the 2-dimensional map on 2-cells β.
  using Key = std::vector<int>;
  std::function<std::optional<Key>(int)> on_one;
  std::function<std::vector<Key>(int)> one_targets;
  std::function<Key(int)> on_two;
  std::function<std::vector<Key>(int, int)> two_targets;  // targets given h, h'
  std::function<bool(const Key&)> key_in;                  // every entry of a key in Ω'
  const CellFamily* current = nullptr;
  key_in = [&](const Key& key) {
    return std::all_of(key.begin(), key.end(), [&](int x) { return current->contains(x); });
  };

  if (d.kind == SpecialKind::product) {
    r.cone_valid = c.projections.size() == d.factors.size();
    for (std::size_t i = 0; r.cone_valid && i < d.factors.size(); ++i) {
      int p = c.projections[i];
      r.cone_valid = k.src(p) == l && k.tgt(p) == d.factors[i];
    }
    on_one = [&](int h) -> std::optional<Key> {
      Key key;
      for (int p : c.projections) key.push_back(k.comp1(p, h));
      return key;
    };
    one_targets = [&](int e) {
      std::vector<Key> out{Key{}};
      for (int a : d.factors) {
        std::vector<Key> next;
        for (const auto& prefix : out)
          for (int q : k.ones_between(e, a)) {
            auto key = prefix;
            key.push_back(q);
            next.push_back(key);
          }
        out = std::move(next);
      }
      return out;
    };
    on_two = [&](int beta) {
      Key key;
      for (int p : c.projections) key.push_back(k.lwhisker(p, beta));
      return key;
    };
    two_targets = [&](int h, int h2) {
      std::vector<Key> out{Key{}};
      for (int p : c.projections) {
        std::vector<Key> next;
        for (const auto& prefix : out)
          for (int b : k.twos_between(k.comp1(p, h), k.comp1(p, h2))) {
            auto key = prefix;
            key.push_back(b);
            next.push_back(key);
          }
        out = std::move(next);
      }
      return out;
    };
  } else if (d.kind == SpecialKind::inserter || d.kind == SpecialKind::iso_inserter) {
    const bool iso = d.kind == SpecialKind::iso_inserter;
    const int p = c.projections.empty() ? -1 : c.projections[0];
    const int f = d.f, g = d.g, lam = c.lambda;
    r.cone_valid = p >= 0 && lam >= 0 && k.src(p) == l && k.tgt(p) == k.src(f) && k.src(f) == k.src(g) &&
                   k.tgt(f) == k.tgt(g) && k.dom(lam) == k.comp1(f, p) && k.cod(lam) == k.comp1(g, p) &&
                   (!iso || k.is_invertible(lam));
    on_one = [&, p, lam](int h) -> std::optional<Key> { return Key{k.comp1(p, h), k.rwhisker(lam, h)}; };
    one_targets = [&, iso, f, g](int e) {
      std::vector<Key> out;
      for (int q : k.ones_between(e, k.src(f)))
        for (int mu : k.twos_between(k.comp1(f, q), k.comp1(g, q)))
          if (!iso || k.is_invertible(mu)) out.push_back({q, mu});
      return out;
    };
    on_two = [&, p](int alpha) { return Key{k.lwhisker(p, alpha)}; };
    two_targets = [&, p, lam, f, g](int h, int h2) {
      std::vector<Key> out;
      for (int beta : k.twos_between(k.comp1(p, h), k.comp1(p, h2))) {
        if (k.vcomp(k.rwhisker(lam, h2), k.lwhisker(f, beta)) == k.vcomp(k.lwhisker(g, beta), k.rwhisker(lam, h)))
          out.push_back({beta});
      }
      return out;
    };
  } else {
    const int p = c.projections.empty() ? -1 : c.projections[0];
    const int a = d.alpha, b = d.beta;
    r.cone_valid = p >= 0 && k.src(p) == l && k.tgt(p) == k.src2(a) && k.dom(a) == k.dom(b) && k.cod(a) == k.cod(b) &&
                   k.rwhisker(a, p) == k.rwhisker(b, p);
    on_one = [&, p](int h) -> std::optional<Key> { return Key{k.comp1(p, h)}; };
    one_targets = [&, a, b](int e) {
      std::vector<Key> out;
      for (int q : k.ones_between(e, k.src2(a)))
        if (k.rwhisker(a, q) == k.rwhisker(b, q)) out.push_back({q});
      return out;
    };
    on_two = [&, p](int alpha) { return Key{k.lwhisker(p, alpha)}; };
    two_targets = [&, p](int h, int h2) {
      std::vector<Key> out;
      for (int beta : k.twos_between(k.comp1(p, h), k.comp1(p, h2))) out.push_back({beta});
      return out;
    };
  }
  if (!r.cone_valid) {
    r.witnesses.push_back("candidate is not a " + to_string(d.kind) + " cone");
    return r;
  }
  r.one_dimensional = true;
  r.two_dimensional = true;
  for (int e = 0; e < k.object_count(); ++e) {
    auto hs = k.ones_between(e, l);
    std::vector<Key> images;
    for (int h : hs) images.push_back(*on_one(h));
    if (!bijective_onto(images, one_targets(e))) {
      r.one_dimensional = false;
      r.witnesses.push_back("1-dimensional property fails at " + k.object_name(e));
    }
    for (int h : hs) {
      for (int h2 : hs) {
        auto cells = k.twos_between(h, h2);
        std::vector<Key> imgs;
        for (int beta : cells) imgs.push_back(on_two(beta));
        auto targets = two_targets(h, h2);
        if (!bijective_onto(imgs, targets)) {
          r.two_dimensional = false;
          r.witnesses.push_back("2-dimensional property fails at " + k.one_name(h) + ", " + k.one_name(h2));
          continue;
        }
        for (std::size_t i = 0; i < omega_primes.size(); ++i) {
          current = &omega_primes[i].second;
          for (std::size_t j = 0; j < cells.size(); ++j) {
            if (key_in(imgs[j]) && !current->contains(cells[j])) {
              compat[i] = false;
              r.witnesses.push_back(omega_primes[i].first + ": " + k.qualified_two(cells[j]));
            }
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < omega_primes.size(); ++i) r.compatible.push_back({omega_primes[i].first, compat[i]});
  return r;
}

}  // namespace twomon

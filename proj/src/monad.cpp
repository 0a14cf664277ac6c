#include "twomon/monad.hpp"

#include <algorithm>
#include <set>

#include "twomon/search.hpp"

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<TwoFunctor> enumerate_two_functors(const TwoCatPtr& ap, const TwoCatPtr& bp) {
  const auto& a = *ap;
  const auto& b = *bp;
  const int no = a.object_count(), n1 = a.one_count();
  Search s;
  std::vector<int> objs(ix(b.object_count()));
  for (int x = 0; x < b.object_count(); ++x) objs[ix(x)] = x;
  for (int x = 0; x < no; ++x) s.add_variable(objs);
  for (int f = 0; f < n1; ++f) {
    const int src = a.src(f), tgt = a.tgt(f);
    const bool ident = a.is_id1(f);
    s.add_variable([&b, src, tgt, ident](const Search::Assignment& asg, std::vector<int>& out) {
      if (ident) {
        out.push_back(b.id1(asg[ix(src)]));
      } else {
        out = b.ones_between(asg[ix(src)], asg[ix(tgt)]);
      }
    });
  }
  for (int al = 0; al < a.two_count(); ++al) {
    const int d = no + a.dom(al), c = no + a.cod(al);
    const bool ident = a.is_id2(al);
    s.add_variable([&b, d, c, ident](const Search::Assignment& asg, std::vector<int>& out) {
      if (ident) {
        out.push_back(b.id2(asg[ix(d)]));
      } else {
        out = b.twos_between(asg[ix(d)], asg[ix(c)]);
      }
    });
  }
  for (int f = 0; f < n1; ++f) {
    for (int g : a.ones_from(a.tgt(f))) {
      int h = a.comp1(g, f);
      s.add_check(no + std::max({f, g, h}), [&b, f, g, h, no](const Search::Assignment& asg) {
        return b.comp1(asg[ix(no + g)], asg[ix(no + f)]) == asg[ix(no + h)];
      });
    }
  }
  const int base2 = no + n1;
  for (int al = 0; al < a.two_count(); ++al) {
    for (int be : a.twos_from(a.cod(al))) {
      int c = a.vcomp(be, al);
      s.add_check(base2 + std::max({al, be, c}), [&b, al, be, c, base2](const Search::Assignment& asg) {
        return b.vcomp(asg[ix(base2 + be)], asg[ix(base2 + al)]) == asg[ix(base2 + c)];
      });
    }
    for (int be : a.hcomp_table().out_of(a.tgt2(al))) {
      int c = a.hcomp(be, al);
      s.add_check(base2 + std::max({al, be, c}), [&b, al, be, c, base2](const Search::Assignment& asg) {
        return b.hcomp(asg[ix(base2 + be)], asg[ix(base2 + al)]) == asg[ix(base2 + c)];
      });
    }
  }
  std::vector<TwoFunctor> out;
  s.run([&](const Search::Assignment& asg) {
    TwoFunctor f{ap, bp, {asg.begin(), asg.begin() + no}, {asg.begin() + no, asg.begin() + base2},
                 {asg.begin() + base2, asg.end()}};
    out.push_back(std::move(f));
    charge(out.size(), "2-functor enumeration");
    return true;
  });
  return out;
}

namespace {

/// Law checks of a monad over (T, m, i); the naturality and law lists are
/// shared by validation and enumeration.
std::vector<Violation> monad_violations(const TwoMonad& mo) {
  const auto& k = *mo.base;
  const auto& t = mo.t;
  std::vector<Violation> out;
  for (int x = 0; x < k.object_count(); ++x) {
    int tx = t.obj(x), ttx = t.obj(tx);
    int m = mo.mult(x), i = mo.unit(x);
    if (k.src(m) != ttx || k.tgt(m) != tx || k.src(i) != x || k.tgt(i) != tx) {
      out.push_back({ErrorKind::TypeMismatch, "m or i has the wrong boundary", {k.object_name(x)}});
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < k.one_count(); ++f) {
    int a = k.src(f), b = k.tgt(f);
    int tf = t.one(f), ttf = t.one(tf);
    if (k.comp1(mo.mult(b), ttf) != k.comp1(tf, mo.mult(a))) {
      out.push_back({ErrorKind::NaturalityViolation, "m is not natural", {k.qualified_one(f)}});
    }
    if (k.comp1(mo.unit(b), f) != k.comp1(tf, mo.unit(a))) {
      out.push_back({ErrorKind::NaturalityViolation, "i is not natural", {k.qualified_one(f)}});
    }
  }
  for (int al = 0; al < k.two_count(); ++al) {
    int a = k.src2(al), b = k.tgt2(al);
    int ta = t.two(al), tta = t.two(ta);
    if (k.lwhisker(mo.mult(b), tta) != k.rwhisker(ta, mo.mult(a))) {
      out.push_back({ErrorKind::NaturalityViolation, "m is not 2-natural", {k.qualified_two(al)}});
    }
    if (k.lwhisker(mo.unit(b), al) != k.rwhisker(ta, mo.unit(a))) {
      out.push_back({ErrorKind::NaturalityViolation, "i is not 2-natural", {k.qualified_two(al)}});
    }
  }
  for (int x = 0; x < k.object_count(); ++x) {
    int tx = t.obj(x), m = mo.mult(x);
    if (k.comp1(m, t.one(m)) != k.comp1(m, mo.mult(tx))) {
      out.push_back({ErrorKind::MonadLaw, "associativity fails", {k.object_name(x)}});
    }
    if (k.comp1(m, mo.unit(tx)) != k.id1(tx)) out.push_back({ErrorKind::MonadLaw, "m∘i_T ≠ id", {k.object_name(x)}});
    if (k.comp1(m, t.one(mo.unit(x))) != k.id1(tx)) out.push_back({ErrorKind::MonadLaw, "m∘Ti ≠ id", {k.object_name(x)}});
  }
  return out;
}

}  // namespace

std::vector<Violation> check_monad(const TwoMonad& mo) {
  std::vector<Violation> out;
  for (auto& v : check_two_functor(mo.t)) out.push_back({ErrorKind::FunctorLaw, v.message, v.witnesses});
  if (!out.empty()) return out;
  if (!same_two_category(mo.t.source, mo.base) || !same_two_category(mo.t.target, mo.base)) {
    return {{ErrorKind::FunctorLaw, "T is not an endo-2-functor of the base", {}}};
  }
  const auto n = ix(mo.base->object_count());
  if (mo.m.size() != n || mo.i.size() != n) return {{ErrorKind::TypeMismatch, "m or i has the wrong size", {}}};
  return monad_violations(mo);
}

TwoMonad validate_monad(const RawMonad& raw, const TwoCatPtr& base) {
  TwoMonad mo{base, validate_two_functor(raw.endo, base, base), {}, {}};
  std::vector<Violation> errs;
  for (int x = 0; x < base->object_count(); ++x) {
    for (auto [table, out, what] : {std::tuple{&raw.mult, &mo.m, "m"}, std::tuple{&raw.unit, &mo.i, "i"}}) {
      auto it = table->find(base->object_name(x));
      std::optional<int> f = it == table->end() ? std::nullopt : base->find_one(it->second);
      if (!f) {
        errs.push_back({ErrorKind::UnresolvedReference, std::string(what) + " has no valid component", {base->object_name(x)}});
        out->push_back(-1);
      } else {
        out->push_back(*f);
      }
    }
  }
  raise_if_any(std::move(errs));
  raise_if_any(check_monad(mo));
  return mo;
}

TwoMonad identity_monad(const TwoCatPtr& base) {
  TwoMonad mo{base, identity_two_functor(base), {}, {}};
  for (int x = 0; x < base->object_count(); ++x) {
    mo.m.push_back(base->id1(x));
    mo.i.push_back(base->id1(x));
  }
  return mo;
}

std::vector<TwoMonad> enumerate_monads(const TwoCatPtr& base) {
  const auto& k = *base;
  std::vector<TwoMonad> out;
  for (const auto& t : enumerate_two_functors(base, base)) {
    Search s;
    const int n = k.object_count();
    for (int x = 0; x < n; ++x) s.add_variable(k.ones_between(t.obj(t.obj(x)), t.obj(x)));
    for (int x = 0; x < n; ++x) s.add_variable(k.ones_between(x, t.obj(x)));
    s.run([&](const Search::Assignment& asg) {
      TwoMonad mo{base, t, {asg.begin(), asg.begin() + n}, {asg.begin() + n, asg.end()}};
      if (monad_violations(mo).empty()) out.push_back(std::move(mo));
      charge(out.size(), "monad enumeration");
      return true;
    });
  }
  return out;
}

bool monad_preserves_family(const TwoMonad& t, const CellFamily& omega, int* witness) {
  for (int a : omega.cells()) {
    if (!omega.contains(t.t.two(a))) {
      if (witness) *witness = a;
      return false;
    }
  }
  return true;
}

std::vector<Violation> check_algebra(const TwoMonad& t, const StrictAlgebra& al) {
  const auto& k = *t.base;
  int a = al.structure, x = al.carrier;
  if (a < 0 || a >= k.one_count() || k.src(a) != t.t.obj(x) || k.tgt(a) != x) {
    return {{ErrorKind::TypeMismatch, "structure map has the wrong boundary", {k.object_name(x)}}};
  }
  std::vector<Violation> out;
  if (k.comp1(a, t.t.one(a)) != k.comp1(a, t.mult(x))) {
    out.push_back({ErrorKind::AlgebraLaw, "a∘Ta ≠ a∘m", {k.qualified_one(a)}});
  }
  if (k.comp1(a, t.unit(x)) != k.id1(x)) out.push_back({ErrorKind::AlgebraLaw, "a∘i ≠ id", {k.qualified_one(a)}});
  return out;
}

std::vector<StrictAlgebra> enumerate_algebras(const TwoMonad& t) {
  const auto& k = *t.base;
  std::vector<StrictAlgebra> out;
  for (int x = 0; x < k.object_count(); ++x) {
    for (int a : k.ones_between(t.t.obj(x), x)) {
      StrictAlgebra al{x, a};
      if (check_algebra(t, al).empty()) out.push_back(al);
    }
  }
  return out;
}

std::string to_string(Variant v) { return v == Variant::omega ? "omega" : "co-omega"; }

std::pair<int, int> weak_boundary(const TwoMonad& t, const StrictAlgebra& a, const StrictAlgebra& b, int f, Variant v) {
  const auto& k = *t.base;
  int from = k.comp1(b.structure, t.t.one(f)), to = k.comp1(f, a.structure);
  if (v == Variant::co_omega) std::swap(from, to);
  return {from, to};
}

namespace {

/// f̄ whiskered by m_A against the pasting of f̄ with T(f̄).
bool mult_coherent(const TwoMonad& t, const WeakMorphism& w) {
  const auto& k = *t.base;
  int x = w.source.carrier;
  int lhs = k.rwhisker(w.cell, t.mult(x));
  int first = k.lwhisker(w.target.structure, t.t.two(w.cell));  // b Tf̄
  int second = k.rwhisker(w.cell, t.t.one(w.source.structure));  // f̄ Ta
  int rhs = w.variant == Variant::omega ? k.vcomp(second, first) : k.vcomp(first, second);
  return lhs == rhs;
}

}  // namespace

std::vector<Violation> check_weak_morphism(const TwoMonad& t, const WeakMorphism& w, const CellFamily& omega) {
  const auto& k = *t.base;
  std::vector<Violation> out;
  auto [from, to] = weak_boundary(t, w.source, w.target, w.f, w.variant);
  if (w.f < 0 || k.src(w.f) != w.source.carrier || k.tgt(w.f) != w.target.carrier || w.cell < 0 ||
      k.dom(w.cell) != from || k.cod(w.cell) != to) {
    return {{ErrorKind::TypeMismatch, "structural 2-cell has the wrong boundary", {w.f < 0 ? "?" : k.qualified_one(w.f)}}};
  }
  if (!omega.contains(w.cell)) out.push_back({ErrorKind::NotInOmega, "structural 2-cell is not in Ω", {k.qualified_two(w.cell)}});
  if (k.rwhisker(w.cell, t.unit(w.source.carrier)) != k.id2(w.f)) {
    out.push_back({ErrorKind::CoherenceUnit, "unit coherence fails", {k.qualified_two(w.cell)}});
  }
  if (!mult_coherent(t, w)) out.push_back({ErrorKind::CoherenceMult, "multiplication coherence fails", {k.qualified_two(w.cell)}});
  return out;
}

std::vector<WeakMorphism> enumerate_weak_morphisms(const TwoMonad& t, const StrictAlgebra& a, const StrictAlgebra& b,
                                                   const CellFamily& omega, Variant v) {
  const auto& k = *t.base;
  std::vector<WeakMorphism> out;
  for (int f : k.ones_between(a.carrier, b.carrier)) {
    auto [from, to] = weak_boundary(t, a, b, f, v);
    for (int c : k.twos_between(from, to)) {
      WeakMorphism w{a, b, f, c, v};
      if (check_weak_morphism(t, w, omega).empty()) out.push_back(w);
    }
  }
  return out;
}

WeakMorphism identity_weak_morphism(const TwoMonad& t, const StrictAlgebra& a, Variant v) {
  return {a, a, t.base->id1(a.carrier), t.base->id2(a.structure), v};
}

WeakMorphism compose_weak_morphisms(const TwoMonad& t, const WeakMorphism& g, const WeakMorphism& f) {
  const auto& k = *t.base;
  int first = k.rwhisker(g.cell, t.t.one(f.f));  // ḡ Tf
  int second = k.lwhisker(g.f, f.cell);          // g f̄
  int cell = f.variant == Variant::omega ? k.vcomp(second, first) : k.vcomp(first, second);
  return {f.source, g.target, k.comp1(g.f, f.f), cell, f.variant};
}

std::optional<WeakMorphism> reverse(const TwoMonad& t, const WeakMorphism& w) {
  int inv = t.base->inverse(w.cell);
  if (inv < 0) return std::nullopt;
  auto out = w;
  out.cell = inv;
  out.variant = w.variant == Variant::omega ? Variant::co_omega : Variant::omega;
  return out;
}

std::vector<Violation> check_algebra_two_cell(const TwoMonad& t, const AlgebraTwoCell& c) {
  const auto& k = *t.base;
  const auto& p = c.source;
  const auto& q = c.target;
  if (!(p.source == q.source) || !(p.target == q.target) || c.cell < 0 || k.dom(c.cell) != p.f || k.cod(c.cell) != q.f) {
    return {{ErrorKind::TypeMismatch, "algebra 2-cell has the wrong boundary", {}}};
  }
  int ta = k.lwhisker(p.target.structure, t.t.two(c.cell));  // b Tα
  int aa = k.rwhisker(c.cell, p.source.structure);           // α a
  bool ok = p.variant == Variant::omega ? k.vcomp(q.cell, ta) == k.vcomp(aa, p.cell)
                                        : k.vcomp(ta, p.cell) == k.vcomp(q.cell, aa);
  if (!ok) return {{ErrorKind::AlgebraCellAxiom, "algebra 2-cell equation fails", {k.qualified_two(c.cell)}}};
  return {};
}

std::optional<int> AlgebraTwoCategory::find_algebra(const StrictAlgebra& a) const {
  auto it = std::find(algebras.begin(), algebras.end(), a);
  if (it == algebras.end()) return std::nullopt;
  return static_cast<int>(it - algebras.begin());
}

std::optional<int> AlgebraTwoCategory::find_morphism(const WeakMorphism& w) const {
  auto it = std::find(morphisms.begin(), morphisms.end(), w);
  if (it == morphisms.end()) return std::nullopt;
  return static_cast<int>(it - morphisms.begin());
}

bool AlgebraTwoCategory::is_in(int m, const CellFamily& omega_prime) const {
  return omega_prime.contains(morphisms[ix(m)].cell);
}

AlgebraTwoCategory build_talg(const TwoMonad& t, const CellFamily& omega, Variant v) {
  const auto& k = *t.base;
  AlgebraTwoCategory out{t, omega, v, nullptr, {}, enumerate_algebras(t), {}, {}};
  std::vector<std::string> objs;
  auto alg_name = [&](const StrictAlgebra& a) { return "(" + k.object_name(a.carrier) + "," + k.one_name(a.structure) + ")"; };
  for (const auto& a : out.algebras) objs.push_back(alg_name(a));
  std::vector<TwoCategory::CellSpec> ones;
  std::map<std::tuple<int, int, int, int>, int> one_index;  // (src, tgt, f, f̄)
  for (std::size_t i = 0; i < out.algebras.size(); ++i) {
    for (std::size_t j = 0; j < out.algebras.size(); ++j) {
      for (auto& w : enumerate_weak_morphisms(t, out.algebras[i], out.algebras[j], omega, v)) {
        one_index[{static_cast<int>(i), static_cast<int>(j), w.f, w.cell}] = static_cast<int>(out.morphisms.size());
        ones.push_back({"(" + k.one_name(w.f) + "," + k.two_name(w.cell) + "):" + objs[i] + "->" + objs[j],
                        static_cast<int>(i), static_cast<int>(j)});
        out.morphisms.push_back(w);
        charge(out.morphisms.size(), "T-Alg 1-cells");
      }
    }
  }
  // 2-cells keyed (α, first, second): (dom, cod) for ω and (cod, dom) for
  // coω, so that co-duality preserves the order.
  struct Key {
    int alpha, first, second;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> keys;
  for (int p = 0; p < static_cast<int>(out.morphisms.size()); ++p) {
    for (int q = 0; q < static_cast<int>(out.morphisms.size()); ++q) {
      const auto& mp = out.morphisms[ix(p)];
      const auto& mq = out.morphisms[ix(q)];
      if (!(mp.source == mq.source) || !(mp.target == mq.target)) continue;
      if (ones[ix(p)].source != ones[ix(q)].source || ones[ix(p)].target != ones[ix(q)].target) continue;
      for (int al : k.twos_between(mp.f, mq.f)) {
        if (!check_algebra_two_cell(t, {mp, mq, al}).empty()) continue;
        keys.push_back(v == Variant::omega ? Key{al, p, q} : Key{al, q, p});
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  charge(keys.size(), "T-Alg 2-cells");
  std::map<std::tuple<int, int, int>, int> two_index;  // (α, dom, cod)
  std::vector<TwoCategory::CellSpec> twos;
  for (const auto& key : keys) {
    int d = v == Variant::omega ? key.first : key.second;
    int c = v == Variant::omega ? key.second : key.first;
    two_index[{key.alpha, d, c}] = static_cast<int>(twos.size());
    twos.push_back({k.two_name(key.alpha) + "[" + ones[ix(key.first)].name + "|" + ones[ix(key.second)].name + "]", d, c});
    out.cells.push_back({out.morphisms[ix(d)], out.morphisms[ix(c)], key.alpha});
  }
  auto find1 = [&](int s, int tg, const WeakMorphism& w) {
    auto it = one_index.find({s, tg, w.f, w.cell});
    return it == one_index.end() ? -1 : it->second;
  };
  auto find2 = [&](int al, int d, int c) {
    auto it = two_index.find({al, d, c});
    return it == two_index.end() ? -1 : it->second;
  };
  std::vector<int> id1, id2;
  for (std::size_t i = 0; i < out.algebras.size(); ++i) {
    id1.push_back(find1(static_cast<int>(i), static_cast<int>(i), identity_weak_morphism(t, out.algebras[i], v)));
  }
  for (int p = 0; p < static_cast<int>(out.morphisms.size()); ++p) id2.push_back(find2(k.id2(out.morphisms[ix(p)].f), p, p));
  auto comp1 = [&](int q, int p) {
    return find1(ones[ix(p)].source, ones[ix(q)].target, compose_weak_morphisms(t, out.morphisms[ix(q)], out.morphisms[ix(p)]));
  };
  auto vcomp = [&](int b, int a) {
    return find2(k.vcomp(out.cells[ix(b)].cell, out.cells[ix(a)].cell), twos[ix(a)].source, twos[ix(b)].target);
  };
  auto hcomp = [&](int b, int a) {
    int d = comp1(twos[ix(b)].source, twos[ix(a)].source);
    int c = comp1(twos[ix(b)].target, twos[ix(a)].target);
    if (d < 0 || c < 0) return -1;
    return find2(k.hcomp(out.cells[ix(b)].cell, out.cells[ix(a)].cell), d, c);
  };
  auto two = std::make_shared<const TwoCategory>(TwoCategory::build(
      std::string(v == Variant::omega ? "Alg" : "coAlg") + "(" + k.name() + ")", objs, ones, twos, id1, id2, comp1,
      vcomp, hcomp));
  raise_if_any(check_two_category(*two));
  out.two = two;
  out.forget = TwoFunctor{two, t.base, {}, {}, {}};
  for (const auto& a : out.algebras) out.forget.objects.push_back(a.carrier);
  for (const auto& w : out.morphisms) out.forget.ones.push_back(w.f);
  for (const auto& c : out.cells) out.forget.twos.push_back(c.cell);
  raise_if_any(check_two_functor(out.forget));
  return out;
}

CellFamily omega_bar(const AlgebraTwoCategory& alg, const CellFamily& omega) {
  CellFamily out{alg.two, std::vector<char>(alg.cells.size(), 0)};
  for (std::size_t i = 0; i < alg.cells.size(); ++i) out.member[i] = omega.contains(alg.cells[i].cell) ? 1 : 0;
  return out;
}

ArrowFamily arrows_in(const AlgebraTwoCategory& alg, const CellFamily& omega_prime) {
  ArrowFamily out{alg.two, std::vector<char>(alg.morphisms.size(), 0)};
  for (std::size_t i = 0; i < alg.morphisms.size(); ++i) out.member[i] = omega_prime.contains(alg.morphisms[i].cell) ? 1 : 0;
  return out;
}

TwoMonad co_dual(const TwoMonad& t, const TwoCatPtr& co_base) {
  return {co_base, co_dual(t.t, co_base, co_base), t.m, t.i};
}

bool detects_omega_prime(const AlgebraTwoCategory& alg, const std::vector<int>& projections, int source,
                         const CellFamily& omega_prime, int* witness) {
  const auto& k = *alg.two;
  for (int z : k.ones_into(source)) {
    bool premise = true;
    for (int p : projections) premise = premise && alg.is_in(k.comp1(p, z), omega_prime);
    if (premise && !alg.is_in(z, omega_prime)) {
      if (witness) *witness = z;
      return false;
    }
  }
  return true;
}

}  // namespace twomon

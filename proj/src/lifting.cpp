#include "twomon/lifting.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace twomon {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

void record(LiftResult& r, std::string name, bool ok, std::vector<std::string> witnesses = {}) {
  r.transcript.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witnesses)});
}

void not_applicable(LiftResult& r, std::string name, std::string reason) {
  r.transcript.push_back({std::move(name), CheckStatus::not_applicable, {std::move(reason)}});
}

std::vector<int> name_sorted_objects(const TwoCategory& k) {
  std::vector<int> out(ix(k.object_count()));
  for (int i = 0; i < k.object_count(); ++i) out[ix(i)] = i;
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return k.object_name(a) < k.object_name(b); });
  return out;
}

/// The unique 1-cell x → y satisfying pred, if there is exactly one.
std::optional<int> unique_one(const TwoCategory& k, int x, int y, const std::function<bool(int)>& pred) {
  std::optional<int> found;
  for (int h : k.ones_between(x, y)) {
    if (!pred(h)) continue;
    if (found) return std::nullopt;
    found = h;
  }
  return found;
}

/// Index of the strict morphism (f, id) between two algebras, or -1.
int strict_morphism(const AlgebraTwoCategory& alg, int from, int to, int f) {
  const auto& k = *alg.monad.base;
  const auto& a = alg.algebras[ix(from)];
  const auto& b = alg.algebras[ix(to)];
  auto [dom, cod] = weak_boundary(alg.monad, a, b, f, alg.variant);
  if (dom < 0 || dom != cod) return -1;
  auto m = alg.find_morphism({a, b, f, k.id2(dom), alg.variant});
  return m ? *m : -1;
}

/// The algebra 2-cell over `cell` between two T-Alg 1-cells, or -1.
int algebra_cell(const AlgebraTwoCategory& alg, int dom, int cod, int cell) {
  if (dom < 0 || cod < 0) return -1;
  for (int c : alg.two->twos_between(dom, cod))
    if (alg.cells[ix(c)].cell == cell) return c;
  return -1;
}

std::vector<int> forget_flat(const AlgebraTwoCategory& alg, int ones, const std::vector<int>& flat) {
  std::vector<int> out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    int x = flat[i];
    out.push_back(x < 0 ? -1 : static_cast<int>(i) < ones ? alg.forget.one(x) : alg.forget.two(x));
  }
  return out;
}

bool injective_complete(const std::vector<int>& images, std::size_t n) {
  std::set<int> seen;
  for (int x : images) {
    if (x < 0 || !seen.insert(x).second) return false;
  }
  return seen.size() == n;
}

/// Cone validity and the 1- and 2-dimensional universal property.
void record_universal(LiftResult& r, const LimitCertificate& c, const std::string& prefix) {
  auto rep = verify_limit(c);
  const auto& p = *c.problem;
  const auto& k = *p.base();
  record(r, prefix + "lifted cone is a cone", rep.cone_valid, rep.cone_valid ? std::vector<std::string>{} : rep.failures);
  if (!rep.cone_valid) return;
  std::vector<std::string> one, two;
  for (int b = 0; b < k.object_count(); ++b) {
    const auto& t = c.transcript[ix(b)];
    const auto& cc = p.cones_at(b);
    if (!injective_complete(t.objects, cc.cones.size())) one.push_back(k.object_name(b));
    if (!injective_complete(t.arrows, cc.arrows.size())) two.push_back(k.object_name(b));
  }
  record(r, prefix + "1-dimensional universal property", one.empty(), one);
  record(r, prefix + "2-dimensional universal property", two.empty(), two);
}

void record_detection(LiftResult& r, const AlgebraTwoCategory& alg, const std::vector<int>& projections, int vertex,
                      const NamedFamilies& families, const std::function<bool(std::size_t)>& compatible) {
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& [name, fam] = families[i];
    if (!compatible(i)) {
      not_applicable(r, "detects " + name, "base limit is not " + name + "-compatible");
      continue;
    }
    int w = -1;
    bool ok = detects_omega_prime(alg, projections, vertex, fam, &w);
    record(r, "detects " + name, ok, ok ? std::vector<std::string>{} : std::vector<std::string>{alg.two->qualified_one(w)});
  }
}

/// Algebra laws for the constructed structure and its place in T-Alg.
bool record_algebra(LiftResult& r, int carrier, int structure) {
  const auto& alg = *r.alg;
  r.algebra = {carrier, structure};
  auto v = check_algebra(alg.monad, r.algebra);
  std::vector<std::string> w;
  for (const auto& x : v) w.push_back(describe(x));
  record(r, "algebra laws", v.empty(), w);
  auto idx = alg.find_algebra(r.algebra);
  if (!idx) return false;
  r.algebra_index = *idx;
  return v.empty();
}

int invertible_or_throw(const TwoCategory& k, int cell, const std::string& what) {
  int inv = k.inverse(cell);
  if (inv < 0) throw Error(ErrorKind::NotInvertible, what + " is not invertible", {k.qualified_two(cell)});
  return inv;
}

NamedFamilies with_omega(const CellFamily& omega, const NamedFamilies& rest) {
  NamedFamilies out{{"Ω", omega}};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

SpecialReport base_check(const TwoCategory& k, const SpecialData& d, const SpecialCandidate& base, const CellFamily& omega,
                         const NamedFamilies& omega_primes) {
  auto rep = special_limit_check(k, d, base, with_omega(omega, omega_primes));
  if (!rep.ok()) throw Error(ErrorKind::MediatorMissing, "base candidate is not a " + to_string(d.kind), rep.witnesses);
  if (!rep.compatible.front().second) {
    throw Error(ErrorKind::NotCompatible, "base " + to_string(d.kind) + " is not Ω-compatible", rep.witnesses);
  }
  return rep;
}

void record_special(LiftResult& r, const SpecialData& d, const SpecialCandidate& c) {
  auto rep = special_limit_check(*r.alg->two, d, c);
  record(r, "lifted cone is a cone", rep.cone_valid, rep.cone_valid ? std::vector<std::string>{} : rep.witnesses);
  if (!rep.cone_valid) return;
  record(r, "1-dimensional universal property", rep.one_dimensional, rep.one_dimensional ? std::vector<std::string>{} : rep.witnesses);
  record(r, "2-dimensional universal property", rep.two_dimensional, rep.two_dimensional ? std::vector<std::string>{} : rep.witnesses);
}

/// Each pair of parallel 2-cells into the vertex is determined by its
/// whiskerings with the projections.
void record_jointly_monic(LiftResult& r, const LimitCertificate& c) {
  const auto& p = *c.problem;
  const auto& k = *p.base();
  std::vector<std::string> w;
  for (int b = 0; b < k.object_count(); ++b) {
    auto hs = k.ones_between(b, c.vertex);
    for (int h : hs)
      for (int h2 : hs) {
        std::set<std::vector<int>> seen;
        for (int beta : k.twos_between(h, h2)) {
          if (!seen.insert(precompose_cell(k, p.ones(), c.cone, beta)).second) w.push_back(k.qualified_two(beta));
        }
      }
  }
  record(r, "projections jointly monic", w.empty(), w);
}

LiftResult lift_conical_op(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega, const TwoFunctor& fbar,
                           const NamedFamilies& seconds) {
  const auto& t = alg->monad;
  const auto& k = *t.base;
  const auto& a = *fbar.source;
  LiftResult r;
  r.alg = alg;
  if (!same_two_category(fbar.target, alg->two)) throw Error(ErrorKind::HostMismatch, "diagram does not land in T-Alg");
  int w = -1;
  if (!monad_preserves_family(t, omega, &w)) {
    throw Error(ErrorKind::PreconditionFailure, "T(Ω) ⊄ Ω", {k.qualified_two(w), k.qualified_two(t.t.two(w))});
  }
  for (int f : sigma.cells()) {
    int cell = alg->morphisms[ix(fbar.one(f))].cell;
    if (!omega.contains(cell)) {
      throw Error(ErrorKind::PreconditionFailure, "structural 2-cell of F̄(" + a.one_name(f) + ") is not in Ω",
                  {k.qualified_two(cell)});
    }
  }
  ConicalDiagram base{compose(alg->forget, fbar), sigma, omega, Orientation::oplax};
  auto cert = find_conical_limit(base);
  if (!cert) throw Error(ErrorKind::PreconditionFailure, "the σ-ωop-limit of U∘F̄ does not exist in " + k.name());
  auto compat = check_compatibility(*cert, alg->omega, "Ω'");
  record(r, "base compatibility computations agree", compat.agree(), compat.witnesses);
  if (!compat.holds()) throw Error(ErrorKind::NotCompatible, "base limit is not Ω'-compatible", compat.witnesses);
  r.base = cert;
  record_jointly_monic(r, *cert);

  const int n = a.object_count();
  const int l = cert->vertex;
  const int tl = t.t.obj(l);
  const auto& pi = cert->cone;
  std::vector<int> theta(pi.size(), -1);
  for (int x = 0; x < n; ++x) {
    int ax = alg->algebras[ix(fbar.obj(x))].structure;
    theta[ix(x)] = k.comp1(ax, t.t.one(pi[ix(x)]));
  }
  std::vector<std::string> outside;
  for (int f = 0; f < a.one_count(); ++f) {
    int src = a.src(f), dst = a.tgt(f);
    int b = alg->algebras[ix(fbar.obj(dst))].structure;
    int bar = alg->morphisms[ix(fbar.one(f))].cell;
    int cell = k.vcomp(k.rwhisker(bar, t.t.one(pi[ix(src)])), k.lwhisker(b, t.t.two(pi[ix(n + f)])));
    theta[ix(n + f)] = cell;
    if (sigma.contains(f) && (cell < 0 || !omega.contains(cell))) outside.push_back(a.one_name(f));
  }
  record(r, "θ_f in Ω for f in Σ", outside.empty(), outside);

  auto lmap = mediator(*cert, tl, theta);
  int count = 0;
  for (int h : k.ones_between(tl, l)) count += precompose(k, n, pi, h) == theta ? 1 : 0;
  record(r, "structure map unique", lmap.has_value() && count == 1, {std::to_string(count) + " candidates"});
  if (!lmap) return r;
  if (!record_algebra(r, l, *lmap)) return r;

  std::vector<std::string> lax_proj;
  for (int x = 0; x < n; ++x) {
    int m = strict_morphism(*alg, r.algebra_index, fbar.obj(x), pi[ix(x)]);
    if (m < 0) lax_proj.push_back(k.qualified_one(pi[ix(x)]));
    r.projections.push_back(m);
  }
  record(r, "strict projections", lax_proj.empty(), lax_proj);
  if (!lax_proj.empty()) return r;
  r.cone = r.projections;
  const auto& a2 = *alg->two;
  std::vector<std::string> not_cells;
  for (int f = 0; f < a.one_count(); ++f) {
    int dom = r.projections[ix(a.tgt(f))];
    int cod = a2.comp1(fbar.one(f), r.projections[ix(a.src(f))]);
    int c = algebra_cell(*alg, dom, cod, pi[ix(n + f)]);
    if (c < 0) not_cells.push_back(k.qualified_two(pi[ix(n + f)]));
    r.cone.push_back(c);
  }
  record(r, "projection 2-cells are algebra 2-cells", not_cells.empty(), not_cells);
  if (!not_cells.empty()) return r;
  record(r, "preserved by U", forget_flat(*alg, n, r.cone) == pi && alg->forget.obj(r.algebra_index) == l);

  auto problem = std::make_shared<const LimitProblem>(
      ConicalDiagram{fbar, sigma, omega_bar(*alg, omega), Orientation::oplax});
  record_universal(r, certify(problem, r.algebra_index, r.cone), "");
  record_detection(r, *alg, r.projections, r.algebra_index, seconds,
                   [&](std::size_t i) { return check_compatibility(*cert, seconds[i].second, seconds[i].first).holds(); });
  return r;
}

NamedFamilies co_families(const NamedFamilies& fs, const TwoCatPtr& co) {
  NamedFamilies out;
  for (const auto& [name, f] : fs) out.push_back({name, co_dual(f, co)});
  return out;
}

/// The σ-ω (lax) case for a coω algebra 2-category: co(T-Alg_coω) is
/// T^co-Alg_ω and lax cones in 𝒦 are oplax cones in 𝒦^co.
LiftResult lift_conical_lax(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega, const TwoFunctor& fbar,
                            const NamedFamilies& seconds) {
  const auto& t = alg->monad;
  auto kco = co_dual(t.base);
  auto tco = co_dual(t, kco);
  auto algco = std::make_shared<const AlgebraTwoCategory>(build_talg(tco, co_dual(alg->omega, kco), Variant::omega));
  if (!same_structure(co_dual(*alg->two), *algco->two)) {
    throw Error(ErrorKind::VerificationFailure, "co(T-Alg_coω) differs from T^co-Alg_ω");
  }
  auto aco = co_dual(fbar.source);
  TwoFunctor fco{aco, algco->two, fbar.objects, fbar.ones, fbar.twos};
  auto rc = lift_conical_op(algco, co_dual(sigma, aco), co_dual(omega, kco), fco, co_families(seconds, kco));
  LiftResult r = rc;
  r.alg = alg;
  r.base.reset();
  if (rc.base) {
    auto direct = find_conical_limit({compose(alg->forget, fbar), sigma, omega, Orientation::lax});
    bool same = direct && direct->vertex == rc.base->vertex && direct->cone == rc.base->cone;
    record(r, "co-dual base agrees", same);
    r.base = direct;
  }
  if (!r.ok() || r.cone.empty()) return r;
  auto problem =
      std::make_shared<const LimitProblem>(ConicalDiagram{fbar, sigma, omega_bar(*alg, omega), Orientation::lax});
  record_universal(r, certify(problem, r.algebra_index, r.cone), "direct ");
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

bool LiftResult::ok() const {
  return algebra_index >= 0 &&
         std::none_of(transcript.begin(), transcript.end(), [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
}

const CheckEntry* LiftResult::find(const std::string& name) const {
  for (const auto& e : transcript)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> LiftResult::failures() const {
  std::vector<std::string> out;
  for (const auto& e : transcript)
    if (e.status == CheckStatus::fail) out.push_back(e.name);
  if (algebra_index < 0) out.push_back("no lifted algebra");
  return out;
}

std::optional<SpecialCandidate> find_special_limit(const TwoCategory& k, const SpecialData& d) {
  for (int l : name_sorted_objects(k)) {
    std::vector<SpecialCandidate> cands;
    if (d.kind == SpecialKind::product) {
      std::vector<std::vector<int>> tuples{{}};
      for (int x : d.factors) {
        std::vector<std::vector<int>> next;
        for (const auto& pre : tuples)
          for (int p : k.ones_between(l, x)) {
            auto v = pre;
            v.push_back(p);
            next.push_back(v);
          }
        tuples = std::move(next);
      }
      for (auto& v : tuples) cands.push_back({l, v, -1});
    } else if (d.kind == SpecialKind::equifier) {
      for (int p : k.ones_between(l, k.src2(d.alpha))) cands.push_back({l, {p}, -1});
    } else {
      for (int p : k.ones_between(l, k.src(d.f)))
        for (int lam : k.twos_between(k.comp1(d.f, p), k.comp1(d.g, p))) cands.push_back({l, {p}, lam});
    }
    for (const auto& c : cands)
      if (special_limit_check(k, d, c).ok()) return c;
  }
  return std::nullopt;
}

LiftResult lift_product(const AlgPtr& alg, const std::vector<int>& algebras, const SpecialCandidate& base,
                        const NamedFamilies& omega_primes) {
  const auto& t = alg->monad;
  const auto& k = *t.base;
  LiftResult r;
  r.alg = alg;
  SpecialData d{SpecialKind::product, {}, -1, -1, -1, -1};
  for (int i : algebras) d.factors.push_back(alg->algebras[ix(i)].carrier);
  auto rep = base_check(k, d, base, alg->omega, omega_primes);
  const int l = base.vertex;
  auto a = unique_one(k, t.t.obj(l), l, [&](int h) {
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      int p = base.projections[i];
      if (k.comp1(p, h) != k.comp1(alg->algebras[ix(algebras[i])].structure, t.t.one(p))) return false;
    }
    return true;
  });
  record(r, "structure map unique", a.has_value());
  if (!a || !record_algebra(r, l, *a)) return r;
  std::vector<std::string> lax;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    int m = strict_morphism(*alg, r.algebra_index, algebras[i], base.projections[i]);
    if (m < 0) lax.push_back(k.qualified_one(base.projections[i]));
    r.projections.push_back(m);
  }
  record(r, "strict projections", lax.empty(), lax);
  if (!lax.empty()) return r;
  r.cone = r.projections;
  record(r, "preserved by U", forget_flat(*alg, static_cast<int>(r.cone.size()), r.cone) == base.projections);
  SpecialData lifted{SpecialKind::product, algebras, -1, -1, -1, -1};
  record_special(r, lifted, {r.algebra_index, r.projections, -1});
  record_detection(r, *alg, r.projections, r.algebra_index, omega_primes,
                   [&](std::size_t i) { return rep.compatible[i + 1].second; });
  return r;
}

KeyEquationReport inserter_key_equation(const AlgebraTwoCategory& alg, int f, int g, const SpecialCandidate& base,
                                        int structure, bool iso) {
  const auto& t = alg.monad;
  const auto& k = *t.base;
  const auto& a2 = *alg.two;
  const auto& fm = alg.morphisms[ix(f)];
  const auto& gm = alg.morphisms[ix(g)];
  const int p = base.projections[0], lam = base.lambda;
  const int bidx = a2.src(f);
  KeyEquationReport rep;
  for (int e = 0; e < a2.object_count(); ++e) {
    for (int q : a2.ones_between(e, bidx)) {
      const auto& qm = alg.morphisms[ix(q)];
      const int d = qm.source.structure;
      const int qbar = qm.cell;
      for (int mu : k.twos_between(k.comp1(fm.f, qm.f), k.comp1(gm.f, qm.f))) {
        if (iso && !k.is_invertible(mu)) continue;
        ++rep.candidates;
        auto h = unique_one(k, qm.source.carrier, base.vertex,
                            [&](int x) { return k.comp1(p, x) == qm.f && k.rwhisker(lam, x) == mu; });
        if (!h) {
          ++rep.mismatches;
          rep.witnesses.push_back("no mediator for " + k.qualified_two(mu));
          continue;
        }
        bool cell = check_algebra_two_cell(t, {compose_weak_morphisms(t, fm, qm), compose_weak_morphisms(t, gm, qm), mu})
                        .empty();
        int hd = k.comp1(*h, d);
        int ath = k.comp1(structure, t.t.one(*h));
        int lhs, rhs;
        if (alg.variant == Variant::omega) {
          lhs = k.vcomp(k.rwhisker(lam, hd), k.lwhisker(fm.f, qbar));
          rhs = k.vcomp(k.lwhisker(gm.f, qbar), k.rwhisker(lam, ath));
        } else {
          lhs = k.vcomp(k.rwhisker(lam, ath), k.lwhisker(fm.f, qbar));
          rhs = k.vcomp(k.lwhisker(gm.f, qbar), k.rwhisker(lam, hd));
        }
        bool cone_morphism = lhs >= 0 && lhs == rhs;
        if (cell != cone_morphism) {
          ++rep.mismatches;
          rep.witnesses.push_back(a2.qualified_one(q) + " / " + k.qualified_two(mu));
        }
      }
    }
  }
  return rep;
}

LiftResult lift_inserter(const AlgPtr& alg, int f, int g, const SpecialCandidate& base, const NamedFamilies& omega_primes,
                         bool iso) {
  const auto& t = alg->monad;
  const auto& k = *t.base;
  const auto& a2 = *alg->two;
  LiftResult r;
  r.alg = alg;
  if (a2.src(f) != a2.src(g) || a2.tgt(f) != a2.tgt(g)) {
    throw Error(ErrorKind::PreconditionFailure, "the 1-cells are not parallel", {a2.qualified_one(f), a2.qualified_one(g)});
  }
  const auto& fm = alg->morphisms[ix(f)];
  const auto& gm = alg->morphisms[ix(g)];
  const bool om = alg->variant == Variant::omega;
  // ω needs f̄⁻¹, coω needs ḡ⁻¹; the iso variant needs both
  int finv = om || iso ? invertible_or_throw(k, fm.cell, "f̄") : -1;
  int ginv = !om || iso ? invertible_or_throw(k, gm.cell, "ḡ") : -1;
  SpecialData d{iso ? SpecialKind::iso_inserter : SpecialKind::inserter, {}, fm.f, gm.f, -1, -1};
  auto rep = base_check(k, d, base, alg->omega, omega_primes);
  const int l = base.vertex, p = base.projections[0], lam = base.lambda;
  const int b = fm.source.structure, c = fm.target.structure;
  const int tp = t.t.one(p);
  const int q = k.comp1(b, tp);
  int middle = k.lwhisker(c, t.t.two(lam));
  int mu = om ? k.vcomp(k.rwhisker(gm.cell, tp), k.vcomp(middle, k.rwhisker(finv, tp)))
              : k.vcomp(k.rwhisker(ginv, tp), k.vcomp(middle, k.rwhisker(fm.cell, tp)));
  record(r, "cone (q, μ) well typed", mu >= 0);
  if (mu < 0) return r;
  auto a = unique_one(k, t.t.obj(l), l, [&](int h) { return k.comp1(p, h) == q && k.rwhisker(lam, h) == mu; });
  record(r, "structure map unique", a.has_value());
  if (!a || !record_algebra(r, l, *a)) return r;
  int pm = strict_morphism(*alg, r.algebra_index, a2.src(f), p);
  record(r, "strict projections", pm >= 0, pm >= 0 ? std::vector<std::string>{} : std::vector<std::string>{k.qualified_one(p)});
  if (pm < 0) return r;
  r.projections = {pm};
  int lam2 = algebra_cell(*alg, a2.comp1(f, pm), a2.comp1(g, pm), lam);
  record(r, "λ is an algebra 2-cell", lam2 >= 0, lam2 >= 0 ? std::vector<std::string>{} : std::vector<std::string>{k.qualified_two(lam)});
  if (lam2 < 0) return r;
  r.cone = {pm, lam2};
  record(r, "preserved by U", alg->forget.one(pm) == p && alg->forget.two(lam2) == lam);
  record_special(r, {d.kind, {}, f, g, -1, -1}, {r.algebra_index, {pm}, lam2});
  auto key = inserter_key_equation(*alg, f, g, base, *a, iso);
  record(r, "key equation equivalence", key.holds(), key.witnesses);
  record_detection(r, *alg, r.projections, r.algebra_index, omega_primes,
                   [&](std::size_t i) { return rep.compatible[i + 1].second; });
  return r;
}

LiftResult lift_equifier(const AlgPtr& alg, int alpha, int beta, const SpecialCandidate& base,
                         const NamedFamilies& omega_primes) {
  const auto& t = alg->monad;
  const auto& k = *t.base;
  const auto& a2 = *alg->two;
  LiftResult r;
  r.alg = alg;
  if (a2.dom(alpha) != a2.dom(beta) || a2.cod(alpha) != a2.cod(beta)) {
    throw Error(ErrorKind::PreconditionFailure, "the 2-cells are not parallel",
                {a2.qualified_two(alpha), a2.qualified_two(beta)});
  }
  const auto& ca = alg->cells[ix(alpha)];
  const auto& cb = alg->cells[ix(beta)];
  if (alg->variant == Variant::omega) invertible_or_throw(k, ca.source.cell, "f̄");
  else invertible_or_throw(k, ca.target.cell, "ḡ");
  SpecialData d{SpecialKind::equifier, {}, -1, -1, ca.cell, cb.cell};
  auto rep = base_check(k, d, base, alg->omega, omega_primes);
  const int l = base.vertex, p = base.projections[0];
  const int q = k.comp1(ca.source.source.structure, t.t.one(p));
  if (k.rwhisker(ca.cell, q) != k.rwhisker(cb.cell, q)) {
    throw Error(ErrorKind::EquifyFailure, "b∘Tp does not equify α and β", {k.qualified_one(q)});
  }
  auto a = unique_one(k, t.t.obj(l), l, [&](int h) { return k.comp1(p, h) == q; });
  record(r, "structure map unique", a.has_value());
  if (!a || !record_algebra(r, l, *a)) return r;
  int pm = strict_morphism(*alg, r.algebra_index, a2.src2(alpha), p);
  record(r, "strict projections", pm >= 0, pm >= 0 ? std::vector<std::string>{} : std::vector<std::string>{k.qualified_one(p)});
  if (pm < 0) return r;
  r.projections = {pm};
  r.cone = {pm};
  record(r, "preserved by U", alg->forget.one(pm) == p);
  record_special(r, {SpecialKind::equifier, {}, -1, -1, alpha, beta}, {r.algebra_index, {pm}, -1});
  record_detection(r, *alg, r.projections, r.algebra_index, omega_primes,
                   [&](std::size_t i) { return rep.compatible[i + 1].second; });
  return r;
}

LiftResult lift_conical_limit(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega,
                              const TwoFunctor& diagram, const NamedFamilies& omega_seconds) {
  if (alg->variant == Variant::omega) return lift_conical_op(alg, sigma, omega, diagram, omega_seconds);
  return lift_conical_lax(alg, sigma, omega, diagram, omega_seconds);
}

LiftResult lift_weighted_limit(const AlgPtr& alg, const ArrowFamily& sigma, const CellFamily& omega, const Weight& w,
                               const TwoFunctor& diagram, const NamedFamilies& omega_seconds) {
  const auto& k = *alg->monad.base;
  if (!same_two_category(w.shape, diagram.source) || !same_two_category(sigma.host, diagram.source))
    throw Error(ErrorKind::HostMismatch, "weight, Σ and diagram must share the shape");
  if (!same_two_category(diagram.target, alg->two)) throw Error(ErrorKind::HostMismatch, "the diagram does not land in T-Alg");
  for (int c : alg->omega.cells()) {
    if (!omega.contains(c)) throw Error(ErrorKind::SubsetFailure, "Ω' ⊄ Ω", {k.qualified_two(c)});
  }
  const auto o = alg->variant == Variant::omega ? Orientation::oplax : Orientation::lax;
  auto el = build_elements(w, sigma, o);
  auto rc = lift_conical_limit(alg, el.id_sigma, omega, compose(diagram, el.projection), omega_seconds);
  LiftResult r = rc;
  if (!rc.ok() || !rc.base) return r;
  WeightedDiagram wd{w, diagram, sigma, omega_bar(*alg, omega), o};
  WeightedLayout layout(w);
  r.cone = conical_to_weighted(wd, el, rc.cone);
  r.projections.assign(r.cone.begin(), r.cone.begin() + layout.ones);
  record_universal(r, certify(std::make_shared<const LimitProblem>(wd), r.algebra_index, r.cone), "weighted ");
  WeightedDiagram wk{w, compose(alg->forget, diagram), sigma, omega, o};
  auto transported = conical_to_weighted(wk, el, rc.base->cone);
  record(r, "projection correspondence", forget_flat(*alg, layout.ones, r.cone) == transported);
  auto base = certify(std::make_shared<const LimitProblem>(wk), rc.base->vertex, transported);
  record(r, "transported base is a weighted limit", verify_limit(base).ok());
  return r;
}

TwoFunctor reversal_functor(const AlgebraTwoCategory& from, const AlgebraTwoCategory& to) {
  const auto& t = from.monad;
  if (!(t == to.monad) || !(from.omega == to.omega) || from.variant == to.variant) {
    throw Error(ErrorKind::PreconditionFailure, "reversal needs the same monad and family with opposite variants");
  }
  TwoFunctor r{from.two, to.two, {}, {}, {}};
  for (const auto& a : from.algebras) r.objects.push_back(*to.find_algebra(a));
  for (const auto& m : from.morphisms) {
    auto rev = reverse(t, m);
    if (!rev) throw Error(ErrorKind::NotInvertible, "structural 2-cell is not invertible", {t.base->qualified_two(m.cell)});
    auto idx = to.find_morphism(*rev);
    if (!idx) throw Error(ErrorKind::NotInOmega, "reversed morphism is not in T-Alg", {t.base->qualified_two(rev->cell)});
    r.ones.push_back(*idx);
  }
  for (int c = 0; c < from.two->two_count(); ++c) {
    int x = algebra_cell(to, r.one(from.two->dom(c)), r.one(from.two->cod(c)), from.cells[ix(c)].cell);
    if (x < 0) throw Error(ErrorKind::AlgebraCellAxiom, "reversed 2-cell is not an algebra 2-cell", {from.two->qualified_two(c)});
    r.twos.push_back(x);
  }
  raise_if_any(check_two_functor(r));
  return r;
}

std::string to_string(CorollaryKind k) {
  switch (k) {
    case CorollaryKind::oplax: return "oplax";
    case CorollaryKind::sigma: return "sigma";
    case CorollaryKind::strict: return "strict";
  }
  return "?";
}

LiftResult corollary_runner(const CorollaryInput& in) {
  const auto& alg = in.alg;
  const auto& base = alg->monad.base;
  const auto& shape = in.weight.shape;
  if (alg->variant != Variant::omega) throw Error(ErrorKind::PreconditionFailure, "corollaries read T-Alg_ω");
  std::optional<Tag> gamma;
  for (auto tg : {Tag::s, Tag::p, Tag::l})
    if (!gamma && alg->omega == omega(base, tg)) gamma = tg;
  if (!gamma) throw Error(ErrorKind::PreconditionFailure, "Ω' is not one of Ω_s, Ω_p, Ω_ℓ");
  CellFamily om = omega(base, Tag::l);
  ArrowFamily sigma = identity_arrows(shape);
  NamedFamilies seconds;
  switch (in.kind) {
    case CorollaryKind::oplax:
      seconds = {{"Ω_s", omega(base, Tag::s)}, {"Ω_p", omega(base, Tag::p)}};
      break;
    case CorollaryKind::sigma:
      if (*gamma == Tag::l) throw Error(ErrorKind::PreconditionFailure, "σ-limits lift for γ = p, s");
      om = omega(base, Tag::p);
      sigma = in.sigma;
      seconds = {{"Ω_s", omega(base, Tag::s)}};
      break;
    case CorollaryKind::strict:
      if (*gamma != Tag::s) throw Error(ErrorKind::PreconditionFailure, "strict limits lift for γ = s");
      om = omega(base, Tag::s);
      sigma = all_arrows(shape);
      break;
  }
  LiftResult r;
  if (!in.lax_reading) {
    r = lift_weighted_limit(alg, sigma, om, in.weight, in.diagram, seconds);
  } else {
    if (*gamma == Tag::l) throw Error(ErrorKind::PreconditionFailure, "the lax reading needs Ω' invertible");
    auto co = std::make_shared<const AlgebraTwoCategory>(build_talg(alg->monad, alg->omega, Variant::co_omega));
    auto rev = reversal_functor(*alg, *co);
    auto back = reversal_functor(*co, *alg);
    auto rc = lift_weighted_limit(co, sigma, om, in.weight, compose(rev, in.diagram), seconds);
    r = rc;
    r.alg = alg;
    if (rc.algebra_index >= 0 && !rc.cone.empty()) {
      WeightedLayout layout(in.weight);
      for (std::size_t i = 0; i < r.cone.size(); ++i) {
        r.cone[i] = static_cast<int>(i) < layout.ones ? back.one(rc.cone[i]) : back.two(rc.cone[i]);
      }
      for (auto& p : r.projections) p = back.one(p);
      r.algebra_index = back.obj(rc.algebra_index);
      WeightedDiagram wd{in.weight, in.diagram, sigma, omega_bar(*alg, om), Orientation::lax};
      record_universal(r, certify(std::make_shared<const LimitProblem>(wd), r.algebra_index, r.cone), "reversed ");
      for (const auto& [name, fam] : seconds) {
        const auto* e = rc.find("detects " + name);
        if (!e || e->status == CheckStatus::not_applicable) continue;
        int w = -1;
        bool ok = detects_omega_prime(*alg, r.projections, r.algebra_index, fam, &w);
        record(r, "reversed detects " + name, ok, ok ? std::vector<std::string>{} : std::vector<std::string>{alg->two->qualified_one(w)});
      }
    }
  }
  std::vector<std::string> missing;
  for (const auto& [name, fam] : seconds) {
    const auto* e = r.find("detects " + name);
    if (!e || e->status != CheckStatus::pass) missing.push_back(name);
  }
  record(r, "corollary detection claims", missing.empty(), missing);
  return r;
}

namespace {

TwoFunctor pair_diagram(const TwoCatPtr& shape, const AlgebraTwoCategory& alg, int f, int g) {
  const auto& a2 = *alg.two;
  int src = a2.src(f), dst = a2.tgt(f);
  TwoFunctor d{shape, alg.two, {}, {}, {}};
  for (int x = 0; x < shape->object_count(); ++x) d.objects.push_back(shape->object_name(x) == "a" ? src : dst);
  for (int u = 0; u < shape->one_count(); ++u) {
    const auto& n = shape->one_name(u);
    d.ones.push_back(n == "u" ? f : n == "v" ? g : a2.id1(d.obj(shape->src(u))));
  }
  for (int c = 0; c < shape->two_count(); ++c) d.twos.push_back(a2.id2(d.one(shape->dom(c))));
  raise_if_any(check_two_functor(d));
  return d;
}

std::vector<std::string> error_lines(const Error& e) {
  std::vector<std::string> out;
  for (const auto& v : e.violations()) out.push_back(describe(v));
  return out;
}

}  // namespace

InserterGap inserter_gap(const AlgPtr& alg, int f, int g, const NamedFamilies& omega_primes) {
  const auto& k = *alg->monad.base;
  InserterGap gap;
  for (int m : {f, g}) {
    int cell = alg->morphisms[ix(m)].cell;
    if (!k.is_id2(cell)) gap.non_identity.push_back(k.qualified_two(cell));
  }
  const auto& fm = alg->morphisms[ix(f)];
  const auto& gm = alg->morphisms[ix(g)];
  try {
    auto base = find_special_limit(k, {SpecialKind::inserter, {}, fm.f, gm.f, -1, -1});
    if (!base) throw Error(ErrorKind::PreconditionFailure, "no inserter of (f, g) in " + k.name());
    gap.proposition = lift_inserter(alg, f, g, *base, omega_primes);
  } catch (const Error& e) {
    gap.proposition_error = error_lines(e);
  }
  auto w = weights::inserter();
  const auto& shape = w.shape;
  auto d = pair_diagram(shape, *alg, f, g);
  auto os = omega(alg->monad.base, Tag::s);
  try {
    auto sigma = validate_arrow_family(shape, {"u", "id_a", "id_b"});
    gap.conical = lift_conical_limit(alg, sigma, os, d, omega_primes);
  } catch (const Error& e) {
    gap.conical_error = error_lines(e);
  }
  try {
    auto el = build_elements(w, all_arrows(shape), Orientation::oplax);
    gap.elements = lift_conical_limit(alg, el.id_sigma, os, compose(d, el.projection), omega_primes);
  } catch (const Error& e) {
    gap.elements_error = error_lines(e);
  }
  return gap;
}

}  // namespace twomon

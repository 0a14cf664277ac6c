#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "twomon/dsl.hpp"

namespace twomon::dsl {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"validate", "limit", "lift", "enumerate-monads", "suite"};
  return c;
}

namespace {

bool is_precondition(ErrorKind k) {
  return k == ErrorKind::PreconditionFailure || k == ErrorKind::SubsetFailure || k == ErrorKind::NotCompatible ||
         k == ErrorKind::NotInvertible;
}

std::vector<std::string> lines(const Error& e) {
  std::vector<std::string> out;
  for (const auto& v : e.violations()) out.push_back(describe(v));
  return out;
}

CheckEntry entry(std::string name, bool ok, std::vector<std::string> witnesses = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::vector<std::string>{} : std::move(witnesses)};
}

Status status_of(const std::vector<CheckEntry>& t) {
  for (const auto& e : t)
    if (e.status == CheckStatus::fail) return Status::fail;
  return Status::pass;
}

std::string object_id(const TwoCategory& k, int x) { return k.name() + "." + k.object_name(x); }

class Runner {
 public:
  Runner(const Environment& env, const RunOptions& opt) : env_(env), opt_(opt) {}

  Report task(const std::string& name) {
    const auto& t = env_.tasks.at(name);
    Report r;
    r.task = name;
    r.kind = t.kind;
    auto start = std::chrono::steady_clock::now();
    try {
      dispatch(t, r);
      r.status = status_of(r.transcript);
      long long passed = 0;
      for (const auto& e : r.transcript) passed += e.status == CheckStatus::pass;
      r.statistics["checks"] = static_cast<long long>(r.transcript.size());
      r.statistics["checks passed"] = passed;
    } catch (const Error& e) {
      r.status = is_precondition(e.kind()) ? Status::not_applicable : Status::error;
      r.messages = lines(e);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  static std::string need(const TaskDecl& t, const std::string& key) {
    auto v = t.get(key);
    if (!v || v->size() != 1)
      throw Error(ErrorKind::InvalidDeclaration, "task needs exactly one '" + key + "' argument", {to_string(t.span)});
    return v->front();
  }
  static std::vector<std::string> list(const TaskDecl& t, const std::string& key, std::size_t n = 0) {
    auto v = t.get(key);
    if (!v || v->empty() || (n && v->size() != n))
      throw Error(ErrorKind::InvalidDeclaration, "task needs a '" + key + "' statement" +
                                                     (n ? " with " + std::to_string(n) + " arguments" : ""),
                  {to_string(t.span)});
    return *v;
  }
  static std::string maybe(const TaskDecl& t, const std::string& key, const std::string& fallback) {
    return t.get(key) ? need(t, key) : fallback;
  }

  static Orientation orientation(const TaskDecl& t) {
    auto o = maybe(t, "orientation", "lax");
    if (o == "lax") return Orientation::lax;
    if (o == "oplax") return Orientation::oplax;
    throw Error(ErrorKind::InvalidDeclaration, "orientation is lax or oplax", {o});
  }
  static Variant variant(const TaskDecl& t) {
    auto v = maybe(t, "variant", "omega");
    if (v == "omega") return Variant::omega;
    if (v == "coomega") return Variant::co_omega;
    throw Error(ErrorKind::InvalidDeclaration, "variant is omega or coomega", {v});
  }

  NamedFamilies seconds(const TaskDecl& t) const {
    NamedFamilies out;
    std::set<std::string> seen;
    for (const auto& key : {"compat", "detect"})
      if (auto v = t.get(key))
        for (const auto& n : *v)
          if (seen.insert(n).second) out.emplace_back(n, env_.cell_families.at(n));
    return out;
  }

  const CellFamily& cells(const TaskDecl& t, const std::string& key) const {
    return env_.cell_families.at(need(t, key));
  }
  const ArrowFamily& arrows(const TaskDecl& t, const std::string& key) const {
    return env_.arrow_families.at(need(t, key));
  }

  const TwoFunctor& functor(const TaskDecl& t) const {
    auto n = need(t, "diagram");
    auto it = env_.functors.find(n);
    if (it == env_.functors.end()) throw Error(ErrorKind::TypeMismatch, "expected a functor declaration", {n});
    return it->second;
  }

  AlgPtr talg(const TaskDecl& t) {
    auto m = need(t, "monad");
    auto o = need(t, "morphisms");
    Variant v = variant(t);
    auto key = std::make_tuple(m, o, static_cast<int>(v));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto& mon = env_.monads.at(m);
    const auto& fam = env_.cell_families.at(o);
    if (!same_two_category(fam.host, mon.base))
      throw Error(ErrorKind::HostMismatch, "family '" + o + "' is not on the base of '" + m + "'", {o, m});
    auto alg = std::make_shared<const AlgebraTwoCategory>(build_talg(mon, fam, v));
    cache_[key] = alg;
    return alg;
  }

  static int morphism_index(const AlgebraTwoCategory& alg, const WeakMorphism& w, const std::string& name) {
    if (w.variant != alg.variant) throw Error(ErrorKind::TypeMismatch, "morphism of the other variant", {name});
    auto i = alg.find_morphism(w);
    if (!i) throw Error(ErrorKind::NotInOmega, "structural cell outside the morphism family", {name});
    return *i;
  }

  int morphism(const AlgebraTwoCategory& alg, const std::string& name, const std::string& monad) const {
    const auto& m = env_.morphisms.at(name);
    if (m.monad != monad) throw Error(ErrorKind::HostMismatch, "morphism over another monad", {name});
    return morphism_index(alg, m.morphism, name);
  }

  static int algebra_cell(const AlgebraTwoCategory& alg, int f, int g, int cell, const std::string& what) {
    for (int x : alg.two->twos_between(f, g))
      if (alg.cells[static_cast<std::size_t>(x)].cell == cell) return x;
    throw Error(ErrorKind::AlgebraCellAxiom, "not an algebra 2-cell", {what});
  }

  TwoFunctor lifted_diagram(const TaskDecl& t, const AlgebraTwoCategory& alg) const {
    auto n = need(t, "diagram");
    auto it = env_.diagrams.find(n);
    if (it == env_.diagrams.end()) throw Error(ErrorKind::TypeMismatch, "expected a diagram declaration", {n});
    const auto& d = it->second;
    if (d.monad != need(t, "monad")) throw Error(ErrorKind::HostMismatch, "diagram over another monad", {n});
    const auto& s = *d.shape;
    const auto& a = *alg.two;
    TwoFunctor f{d.shape, alg.two, {}, {}, {}};
    for (int x = 0; x < s.object_count(); ++x) f.objects.push_back(*alg.find_algebra(env_.algebras.at(d.objects.at(x)).algebra));
    for (int g = 0; g < s.one_count(); ++g) {
      if (s.is_id1(g)) f.ones.push_back(a.id1(f.obj(s.src(g))));
      else f.ones.push_back(morphism(alg, d.ones.at(g), d.monad));
    }
    for (int c = 0; c < s.two_count(); ++c) {
      if (s.is_id2(c)) {
        f.twos.push_back(a.id2(f.one(s.dom(c))));
        continue;
      }
      auto it2 = d.twos.find(c);
      if (it2 == d.twos.end()) throw Error(ErrorKind::UnresolvedReference, "2-cell without an image", {s.two_name(c)});
      f.twos.push_back(algebra_cell(alg, f.one(s.dom(c)), f.one(s.cod(c)), it2->second, s.two_name(c)));
    }
    raise_if_any(check_two_functor(f));
    return f;
  }

  static void limit_entries(const LimitCertificate& c, const NamedFamilies& fams, Report& r) {
    auto v = verify_limit(c);
    r.transcript.push_back(entry("cone is valid", v.cone_valid, v.failures));
    r.transcript.push_back(entry("universal property", v.universal, v.failures));
    for (const auto& [n, f] : fams) {
      auto cr = check_compatibility(c, f, n);
      r.transcript.push_back(entry("compatibility computations agree for " + n, cr.agree(), cr.witnesses));
      r.transcript.push_back(entry("compatible with " + n, cr.holds(), cr.witnesses));
    }
    const auto& k = *c.problem->base();
    r.result["vertex"] = {object_id(k, c.vertex)};
    auto& cone = r.result["cone"];
    for (std::size_t i = 0; i < c.cone.size(); ++i)
      cone.push_back(static_cast<int>(i) < c.problem->ones() ? k.qualified_one(c.cone[i]) : k.qualified_two(c.cone[i]));
    r.statistics["limit vertices"] = static_cast<long long>(c.successful_vertices.size());
    r.statistics["objects searched"] = k.object_count();
  }

  void limit(const std::optional<LimitCertificate>& c, const TwoCategory& host, const NamedFamilies& fams, Report& r) {
    r.transcript.push_back(entry("limit exists", c.has_value(), {"no object of " + host.name() + " carries a limit cone"}));
    if (c) limit_entries(*c, fams, r);
  }

  static void check_hosts(const TwoFunctor& f, const ArrowFamily& s, const CellFamily& o) {
    if (!same_two_category(s.host, f.source)) throw Error(ErrorKind::HostMismatch, "Σ is not on the diagram's shape");
    if (!same_two_category(o.host, f.target)) throw Error(ErrorKind::HostMismatch, "Ω is not on the diagram's target");
  }

  static void lifted(const LiftResult& l, Report& r, const std::string& prefix = "") {
    for (auto e : l.transcript) {
      e.name = prefix + e.name;
      r.transcript.push_back(std::move(e));
    }
    if (l.algebra_index < 0) return;
    const auto& k = *l.alg->monad.base;
    const auto& a = *l.alg->two;
    r.result[prefix + "algebra"] = {object_id(k, l.algebra.carrier), k.qualified_one(l.algebra.structure)};
    auto& p = r.result[prefix + "projections"];
    for (int x : l.projections) p.push_back(a.qualified_one(x));
  }

  void dispatch(const TaskDecl& t, Report& r) {
    const auto& kind = t.kind;
    if (kind == "limit-conical") {
      const auto& f = functor(t);
      const auto& s = arrows(t, "sigma");
      const auto& o = cells(t, "omega");
      check_hosts(f, s, o);
      limit(find_conical_limit({f, s, o, orientation(t)}), *f.target, seconds(t), r);
    } else if (kind == "limit-weighted") {
      const auto& f = functor(t);
      const auto& s = arrows(t, "sigma");
      const auto& o = cells(t, "omega");
      check_hosts(f, s, o);
      const auto& w = env_.weights.at(need(t, "weight"));
      if (!same_two_category(w.shape, f.source)) throw Error(ErrorKind::HostMismatch, "weight and diagram shapes differ");
      limit(find_weighted_limit({w, f, s, o, orientation(t)}), *f.target, seconds(t), r);
    } else if (kind == "cat-limit") {
      cat_limit(t, r);
    } else if (kind == "lift-conical" || kind == "lift-weighted") {
      auto alg = talg(t);
      auto d = lifted_diagram(t, *alg);
      const auto& s = arrows(t, "sigma");
      const auto& o = cells(t, "omega");
      if (kind == "lift-conical") lifted(lift_conical_limit(alg, s, o, d, seconds(t)), r);
      else lifted(lift_weighted_limit(alg, s, o, env_.weights.at(need(t, "weight")), d, seconds(t)), r);
    } else if (kind == "lift-product") {
      auto alg = talg(t);
      std::vector<int> idx, carriers;
      for (const auto& n : list(t, "algebras")) {
        const auto& a = env_.algebras.at(n);
        if (a.monad != need(t, "monad")) throw Error(ErrorKind::HostMismatch, "algebra over another monad", {n});
        idx.push_back(*alg->find_algebra(a.algebra));
        carriers.push_back(a.algebra.carrier);
      }
      auto base = find_special_limit(*alg->monad.base, {SpecialKind::product, carriers, -1, -1, -1, -1});
      if (!base) throw Error(ErrorKind::PreconditionFailure, "no product in the base");
      lifted(lift_product(alg, idx, *base, seconds(t)), r);
    } else if (kind == "lift-inserter" || kind == "lift-iso-inserter" || kind == "lift-equifier") {
      auto alg = talg(t);
      auto p = list(t, "pair", 2);
      auto mn = need(t, "monad");
      int f = morphism(*alg, p[0], mn), g = morphism(*alg, p[1], mn);
      const auto& k = *alg->monad.base;
      const auto& fm = alg->morphisms[static_cast<std::size_t>(f)];
      const auto& gm = alg->morphisms[static_cast<std::size_t>(g)];
      if (kind == "lift-equifier") {
        auto c = list(t, "cells", 2);
        auto named = [&](const std::string& n) {
          auto x = k.find_two(n);
          if (!x) throw Error(ErrorKind::UnresolvedReference, "unknown 2-cell of " + k.name(), {n});
          return *x;
        };
        int a = algebra_cell(*alg, f, g, named(c[0]), c[0]);
        int b = algebra_cell(*alg, f, g, named(c[1]), c[1]);
        auto base = find_special_limit(k, {SpecialKind::equifier, {}, -1, -1, alg->cells[static_cast<std::size_t>(a)].cell,
                                           alg->cells[static_cast<std::size_t>(b)].cell});
        if (!base) throw Error(ErrorKind::PreconditionFailure, "no equifier in the base");
        lifted(lift_equifier(alg, a, b, *base, seconds(t)), r);
      } else {
        bool iso = kind == "lift-iso-inserter";
        auto base = find_special_limit(k, {iso ? SpecialKind::iso_inserter : SpecialKind::inserter, {}, fm.f, gm.f, -1, -1});
        if (!base) throw Error(ErrorKind::PreconditionFailure, "no inserter in the base");
        lifted(lift_inserter(alg, f, g, *base, seconds(t), iso), r);
      }
    } else if (kind == "corollary") {
      auto alg = talg(t);
      auto form = need(t, "form");
      CorollaryKind ck = form == "oplax" ? CorollaryKind::oplax : form == "sigma" ? CorollaryKind::sigma : CorollaryKind::strict;
      if (form != "oplax" && form != "sigma" && form != "strict")
        throw Error(ErrorKind::InvalidDeclaration, "form is oplax, sigma or strict", {form});
      const auto& w = env_.weights.at(need(t, "weight"));
      auto d = lifted_diagram(t, *alg);
      ArrowFamily s = t.get("sigma") ? arrows(t, "sigma") : all_arrows(w.shape);
      auto reading = maybe(t, "reading", "oplax");
      lifted(corollary_runner({ck, alg, w, s, d, reading == "lax"}), r);
    } else if (kind == "inserter-gap") {
      gap(t, r);
    }
  }

  void gap(const TaskDecl& t, Report& r) {
    auto alg = talg(t);
    auto p = list(t, "pair", 2);
    auto mn = need(t, "monad");
    auto g = inserter_gap(alg, morphism(*alg, p[0], mn), morphism(*alg, p[1], mn), seconds(t));
    r.transcript.push_back(entry("structural cells are identities", g.non_identity.empty(), g.non_identity));
    auto path = [&](const std::string& name, const std::optional<LiftResult>& l, const std::vector<std::string>& err) {
      if (l) {
        r.transcript.push_back(entry(name, l->ok(), l->failures()));
        lifted(*l, r, name + ": ");
        return;
      }
      bool pre = !err.empty() && (err.front().rfind("PreconditionFailure", 0) == 0 || err.front().rfind("NotInvertible", 0) == 0 ||
                                  err.front().rfind("NotCompatible", 0) == 0);
      r.transcript.push_back({name, pre ? CheckStatus::not_applicable : CheckStatus::fail, err});
    };
    path("elementary lift", g.proposition, g.proposition_error);
    path("conical lift", g.conical, g.conical_error);
    path("lift through elements", g.elements, g.elements_error);
  }

  void cat_limit(const TaskDecl& t, Report& r) {
    const auto& w = env_.weights.at(need(t, "weight"));
    auto dn = need(t, "diagram");
    auto it = env_.weights.find(dn);
    if (it == env_.weights.end()) throw Error(ErrorKind::TypeMismatch, "expected a Cat-valued diagram (weight declaration)", {dn});
    const auto& f = it->second;
    const auto& s = arrows(t, "sigma");
    auto on = need(t, "omega");
    Tag tag = on == "s" ? Tag::s : on == "p" ? Tag::p : Tag::l;
    if (on != "s" && on != "p" && on != "l") throw Error(ErrorKind::InvalidDeclaration, "omega is s, p or l", {on});
    Orientation o = orientation(t);
    auto l = cat_limit_construct(w, f, s, tag, o);
    auto probes = opt_.probes.empty() ? default_probes() : opt_.probes;
    for (const auto& pr : verify_cat_limit(l, probes))
      r.transcript.push_back(entry("probe " + pr.probe, pr.isomorphism, {pr.probe}));
    std::optional<DirectKind> direct;
    if (tag == Tag::l || s == identity_arrows(s.host)) direct = DirectKind::lax;
    else if (s == all_arrows(s.host)) direct = tag == Tag::p ? DirectKind::pseudo : DirectKind::strict;
    if (direct) {
      auto dl = direct_cat_limit(w, f, *direct, o);
      auto cmp = compare_cat_limits(l, dl);
      r.transcript.push_back(entry("matches the direct " + to_string(*direct) + " limit",
                                   cmp && is_isomorphism_of_categories(*cmp), {"comparison functor"}));
    } else {
      r.transcript.push_back({"matches a direct limit", CheckStatus::not_applicable, {}});
    }
    r.result["certificate"] = {"probe-verified"};
    r.statistics["limit objects"] = l.limit->object_count();
    r.statistics["limit arrows"] = l.limit->arrow_count();
  }

  const Environment& env_;
  const RunOptions& opt_;
  std::map<std::tuple<std::string, std::string, int>, AlgPtr> cache_;
};

Report input_error(const std::string& task, const Error& e) {
  Report r;
  r.task = task;
  r.kind = "input";
  r.status = Status::error;
  r.messages = lines(e);
  return r;
}

Report validation(const Environment& env) {
  Report r;
  r.task = "validate";
  r.kind = "validate";
  for (const auto& [kind, name] : env.order) r.statistics[kind + " declarations"] += 1;
  for (const auto& [n, k] : env.twocats) {
    r.result["twocat " + n] = {std::to_string(k->object_count()) + " objects", std::to_string(k->one_count()) + " 1-cells",
                               std::to_string(k->two_count()) + " 2-cells"};
  }
  r.transcript.push_back({"declarations elaborate", CheckStatus::pass, {}});
  return r;
}

Report monads(const Environment& env, const std::string& name) {
  Report r;
  r.task = "enumerate-monads " + name;
  r.kind = "enumerate-monads";
  auto it = env.twocats.find(name);
  if (it == env.twocats.end()) throw Error(ErrorKind::UnresolvedReference, "unknown twocat '" + name + "'", {name});
  const auto& k = *it->second;
  auto all = enumerate_monads(it->second);
  r.statistics["monads"] = static_cast<long long>(all.size());
  for (std::size_t n = 0; n < all.size(); ++n) {
    const auto& t = all[n];
    std::vector<std::string> desc;
    for (int x = 0; x < k.object_count(); ++x)
      desc.push_back(k.object_name(x) + " -> " + k.object_name(t.t.obj(x)) + ", m = " + k.one_name(t.mult(x)) +
                     ", i = " + k.one_name(t.unit(x)));
    for (int f = 0; f < k.one_count(); ++f) desc.push_back(k.one_name(f) + " -> " + k.one_name(t.t.one(f)));
    r.result["monad " + std::to_string(n)] = desc;
    auto v = check_monad(t);
    r.transcript.push_back(entry("monad " + std::to_string(n) + " satisfies the laws", v.empty(), {}));
  }
  return r;
}

}  // namespace

RunResult run(const std::string& command, std::string_view source, const RunOptions& options) {
  RunResult out;
  out.command = command;
  auto finish = [&]() {
    int code = 0;
    for (const auto& r : out.reports) {
      if (r.status == Status::error) code = 2;
      else if (r.status == Status::fail && code == 0) code = 1;
    }
    out.exit_code = code;
    return out;
  };
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end()) {
    out.reports.push_back(input_error(command, Error(ErrorKind::InvalidDeclaration, "unknown command '" + command + "'")));
    return finish();
  }
  std::size_t saved = cell_budget();
  if (options.budget) set_cell_budget(*options.budget);
  struct Restore {
    std::size_t n;
    ~Restore() { set_cell_budget(n); }
  } restore{saved};
  Environment env;
  try {
    env = elaborate(parse(source));
  } catch (const Error& e) {
    out.reports.push_back(input_error("document", e));
    return finish();
  }
  if (command == "validate") {
    out.reports.push_back(validation(env));
    return finish();
  }
  if (command == "enumerate-monads") {
    try {
      out.reports.push_back(monads(env, options.twocat));
    } catch (const Error& e) {
      out.reports.push_back(input_error("enumerate-monads", e));
    }
    return finish();
  }
  Runner runner(env, options);
  auto kind_ok = [&](const std::string& kind) {
    if (command == "suite") return true;
    bool is_limit = kind.rfind("limit-", 0) == 0 || kind == "cat-limit";
    return command == "limit" ? is_limit : !is_limit;
  };
  if (command == "suite") {
    for (const auto& n : env.task_order) out.reports.push_back(runner.task(n));
    return finish();
  }
  auto it = env.tasks.find(options.task);
  if (it == env.tasks.end()) {
    out.reports.push_back(input_error(options.task, Error(ErrorKind::UnresolvedReference, "unknown task '" + options.task + "'",
                                                          {options.task})));
  } else if (!kind_ok(it->second.kind)) {
    out.reports.push_back(input_error(options.task, Error(ErrorKind::TypeMismatch, "task kind '" + it->second.kind +
                                                                                      "' does not belong to '" + command + "'")));
  } else {
    out.reports.push_back(runner.task(options.task));
  }
  return finish();
}

std::string to_json(const RunResult& rr) {
  using nlohmann::json;
  json j;
  j["schema"] = report_schema;
  j["tool"] = {{"name", "twomon"}, {"version", tool_version}};
  j["command"] = rr.command;
  j["exit_code"] = rr.exit_code;
  json reports = json::array();
  std::map<std::string, int> summary;
  for (const auto& r : rr.reports) {
    json t = json::array();
    for (const auto& e : r.transcript)
      t.push_back({{"check", e.name}, {"outcome", twomon::to_string(e.status)}, {"witnesses", e.witnesses}});
    reports.push_back({{"task", r.task},
                       {"kind", r.kind},
                       {"status", to_string(r.status)},
                       {"transcript", t},
                       {"result", r.result},
                       {"statistics", r.statistics},
                       {"messages", r.messages}});
    summary[to_string(r.status)] += 1;
  }
  j["reports"] = reports;
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

std::string to_text(const RunResult& rr, bool verbose) {
  std::ostringstream os;
  for (const auto& r : rr.reports) {
    os << "[" << to_string(r.status) << "] " << r.task << " (" << r.kind << ")";
    if (verbose) os << " " << std::fixed << std::setprecision(3) << r.seconds << "s";
    os << "\n";
    for (const auto& m : r.messages) os << "  " << m << "\n";
    for (const auto& e : r.transcript) {
      if (!verbose && e.status == CheckStatus::pass) continue;
      os << "  " << twomon::to_string(e.status) << ": " << e.name;
      for (std::size_t i = 0; i < e.witnesses.size(); ++i) os << (i ? ", " : " [") << e.witnesses[i];
      if (!e.witnesses.empty()) os << "]";
      os << "\n";
    }
    if (verbose) {
      for (const auto& [k, v] : r.result) {
        os << "  " << k << ":";
        for (const auto& x : v) os << " " << x;
        os << "\n";
      }
      for (const auto& [k, v] : r.statistics) os << "  " << k << " = " << v << "\n";
    }
  }
  os << "exit " << rr.exit_code << "\n";
  return os.str();
}

}  // namespace twomon::dsl

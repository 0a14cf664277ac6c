#include <algorithm>
#include <set>
#include <sstream>

#include "twomon/dsl.hpp"
#include "twomon/fixtures.hpp"

namespace twomon::dsl {

std::optional<std::vector<std::string>> TaskDecl::get(const std::string& key) const {
  for (const auto& s : params) {
    if (s.head() != key) continue;
    std::vector<std::string> out;
    for (std::size_t i = 1; i < s.tokens.size(); ++i)
      if (s.tokens[i].kind != Token::Kind::symbol) out.push_back(s.tokens[i].text);
    return out;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const Statement& s, const std::string& msg) {
  throw Error(ErrorKind::InvalidDeclaration, msg, {to_string(s.span)});
}
[[noreturn]] void unresolved(const std::string& what, const std::string& name) {
  throw Error(ErrorKind::UnresolvedReference, "unknown " + what + " '" + name + "'", {name});
}

/// Matches `pattern` (space separated; `N` a name, `N*` trailing names,
/// anything else a literal token) and returns the captured names.
std::vector<std::string> match(const Statement& s, const std::string& pattern) {
  std::istringstream in(pattern);
  std::vector<std::string> pat;
  for (std::string w; in >> w;) pat.push_back(w);
  std::vector<std::string> out;
  std::size_t i = 0;
  auto fail = [&]() { invalid(s, "expected `" + pattern + "`"); };
  for (const auto& p : pat) {
    if (p == "N*") {
      for (; i < s.tokens.size(); ++i) {
        if (s.tokens[i].kind == Token::Kind::symbol) fail();
        out.push_back(s.tokens[i].text);
      }
      return out;
    }
    if (i >= s.tokens.size()) fail();
    const auto& t = s.tokens[i++];
    if (p == "N") {
      if (t.kind == Token::Kind::symbol) fail();
      out.push_back(t.text);
    } else if (t.text != p) {
      fail();
    }
  }
  if (i != s.tokens.size()) fail();
  return out;
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& what, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) unresolved(what, name);
  return it->second;
}

int object_of(const TwoCategory& k, const std::string& n) {
  if (auto x = k.find_object(n)) return *x;
  unresolved("object of " + k.name(), n);
}
int one_of(const TwoCategory& k, const std::string& n) {
  if (auto x = k.find_one(n)) return *x;
  unresolved("1-cell of " + k.name(), n);
}
int two_of(const TwoCategory& k, const std::string& n) {
  if (auto x = k.find_two(n)) return *x;
  unresolved("2-cell of " + k.name(), n);
}

Tag tag_of(const Statement& s, const std::string& n) {
  if (n == "s") return Tag::s;
  if (n == "p") return Tag::p;
  if (n == "l") return Tag::l;
  invalid(s, "expected one of s, p, l");
}

TwoCatPtr renamed(const TwoCatPtr& k, const std::string& name) {
  if (k->name() == name) return k;
  auto raw = to_raw(*k);
  raw.name = name;
  return std::make_shared<const TwoCategory>(validate_two_category(std::move(raw)));
}

TwoCatPtr builtin_twocat(const Statement& s, const std::vector<std::string>& a) {
  if (a.size() == 2 && a[0] == "shape") return fixtures::shape(a[1]);
  if (a.size() == 1) {
    for (const auto& [n, k] : fixtures::base_fixtures())
      if (n == a[0]) return k;
    if (a[0] == "K_REFLECT") return fixtures::k_reflect();
    if (a[0] == "K_EQ") return fixtures::k_parallel_cells();
  }
  invalid(s, "unknown builtin 2-category");
}

class Elaborator {
 public:
  Environment env;
  std::vector<Violation> errors;

  void declaration(const Declaration& d) {
    const std::string& name = d.name.text;
    if (!names_[d.kind].insert(name).second)
      throw Error(ErrorKind::DuplicateName, "duplicate " + d.kind + " '" + name + "'", {name});
    if (d.kind == "fincat") env.fincats[name] = fincat(d);
    else if (d.kind == "twocat") env.twocats[name] = twocat(d);
    else if (d.kind == "family") family(d);
    else if (d.kind == "weight") env.weights[name] = weight(d);
    else if (d.kind == "functor") env.functors[name] = functor(d);
    else if (d.kind == "monad") env.monads[name] = monad(d);
    else if (d.kind == "algebra") env.algebras[name] = algebra(d);
    else if (d.kind == "morphism") env.morphisms[name] = morphism(d);
    else if (d.kind == "diagram") env.diagrams[name] = diagram(d);
    else if (d.kind == "task") {
      env.tasks[name] = task(d);
      env.task_order.push_back(name);
    }
    env.order.emplace_back(d.kind, name);
  }

 private:
  std::map<std::string, std::set<std::string>> names_;

  CatPtr fincat(const Declaration& d) {
    RawCategory raw;
    raw.name = d.name.text;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      if (h == "builtin") {
        auto a = match(s, "builtin N");
        static const std::map<std::string, CatPtr (*)()> b = {
            {"empty", cats::empty}, {"one", cats::one},     {"two", cats::two},     {"parallel", cats::parallel},
            {"iso", cats::iso},     {"discrete2", cats::discrete2}, {"chain3", cats::chain3}};
        if (d.body.size() != 1) invalid(s, "builtin must be the only statement");
        return lookup(b, "builtin category", a[0])();
      } else if (h == "objects") {
        for (auto& x : match(s, "objects N*")) raw.objects.push_back(x);
      } else if (h == "arrow") {
        auto a = match(s, "arrow N : N -> N");
        raw.arrows.push_back({a[0], a[1], a[2]});
      } else if (h == "identity") {
        auto a = match(s, "identity N = N");
        raw.identity[a[0]] = a[1];
      } else if (h == "compose") {
        auto a = match(s, "compose N . N = N");
        raw.composites[{a[0], a[1]}] = a[2];
      } else {
        invalid(s, "unknown fincat statement '" + h + "'");
      }
    }
    complete_identity_composites(raw);
    return std::make_shared<const FinCategory>(validate_category(raw));
  }

  TwoCatPtr twocat(const Declaration& d) {
    const std::string& name = d.name.text;
    RawTwoCategory raw;
    raw.name = name;
    std::set<std::string> objects;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      bool whole = h == "builtin" || h == "product" || h == "catfull" || h == "codual" || h == "discrete";
      if (whole && d.body.size() != 1) invalid(s, "'" + h + "' must be the only statement");
      if (h == "builtin") {
        return renamed(builtin_twocat(s, match(s, "builtin N*")), name);
      } else if (h == "product") {
        auto a = match(s, "product N N");
        const auto& k = lookup(env.twocats, "twocat", a[0]);
        const auto& l = lookup(env.twocats, "twocat", a[1]);
        return renamed(std::make_shared<const TwoCategory>(product_two_category(*k, *l)), name);
      } else if (h == "catfull") {
        std::vector<CatPtr> cs;
        for (const auto& c : match(s, "catfull N*")) cs.push_back(lookup(env.fincats, "fincat", c));
        return build_cat_full(name, cs).two;
      } else if (h == "codual") {
        auto a = match(s, "codual N");
        return renamed(co_dual(lookup(env.twocats, "twocat", a[0])), name);
      } else if (h == "discrete") {
        auto a = match(s, "discrete N");
        return renamed(std::make_shared<const TwoCategory>(locally_discrete(*lookup(env.fincats, "fincat", a[0]))),
                       name);
      } else if (h == "objects") {
        for (auto& x : match(s, "objects N*")) {
          raw.objects.push_back(x);
          objects.insert(x);
        }
      } else if (h == "onecell") {
        auto a = match(s, "onecell N : N -> N");
        raw.ones.push_back({a[0], a[1], a[2]});
      } else if (h == "twocell") {
        auto a = match(s, "twocell N : N => N");
        raw.twos.push_back({a[0], a[1], a[2]});
      } else if (h == "identity") {
        auto a = match(s, "identity N = N");
        (objects.count(a[0]) ? raw.id1 : raw.id2)[a[0]] = a[1];
      } else if (h == "compose") {
        auto a = match(s, "compose N . N = N");
        raw.comp1[{a[0], a[1]}] = a[2];
      } else if (h == "vcomp" || h == "hcomp") {
        auto a = match(s, h + " N * N = N");
        (h == "vcomp" ? raw.vcomp : raw.hcomp)[{a[0], a[1]}] = a[2];
      } else {
        invalid(s, "unknown twocat statement '" + h + "'");
      }
    }
    complete_identities(raw);
    return std::make_shared<const TwoCategory>(validate_two_category(std::move(raw)));
  }

  void family(const Declaration& d) {
    TwoCatPtr host;
    std::optional<Statement> body;
    for (const auto& s : d.body) {
      if (s.head() == "on") host = lookup(env.twocats, "twocat", match(s, "on N")[0]);
      else if (s.head() == "arrows" || s.head() == "cells") {
        if (body) invalid(s, "a family has one 'arrows' or 'cells' statement");
        body = s;
      } else {
        invalid(s, "unknown family statement '" + s.head() + "'");
      }
    }
    if (!host) throw Error(ErrorKind::InvalidDeclaration, "family without 'on'", {d.name.text});
    if (!body) throw Error(ErrorKind::InvalidDeclaration, "family without 'arrows' or 'cells'", {d.name.text});
    const auto& s = *body;
    auto a = match(s, s.head() + " N*");
    const auto& k = *host;
    bool generated = !a.empty() && a[0] == "generated";
    if (generated) a.erase(a.begin());
    if (s.head() == "arrows") {
      ArrowFamily f;
      if (!generated && a == std::vector<std::string>{"all"}) f = all_arrows(host);
      else if (!generated && a == std::vector<std::string>{"identities"}) f = identity_arrows(host);
      else {
        std::vector<int> cells;
        for (const auto& n : a) cells.push_back(one_of(k, n));
        for (int x = 0; x < k.object_count(); ++x) cells.push_back(k.id1(x));
        if (generated) f = generated_arrow_family(host, cells);
        else {
          std::vector<std::string> names;
          for (int c : cells) names.push_back(k.one_name(c));
          f = validate_arrow_family(host, names);
        }
      }
      env.arrow_families[d.name.text] = f;
    } else {
      CellFamily f;
      if (!generated && a.size() == 2 && a[0] == "canonical") f = omega(host, tag_of(s, a[1]));
      else {
        std::vector<int> cells;
        for (const auto& n : a) cells.push_back(two_of(k, n));
        for (int g = 0; g < k.one_count(); ++g) cells.push_back(k.id2(g));
        if (generated) f = generated_cell_family(host, cells);
        else {
          std::vector<std::string> names;
          for (int c : cells) names.push_back(k.two_name(c));
          f = validate_cell_family(host, names);
        }
      }
      env.cell_families[d.name.text] = f;
    }
  }

  Weight weight(const Declaration& d) {
    TwoCatPtr shape;
    RawWeight raw;
    std::optional<Weight> whole;
    bool terminal = false;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      if (h == "builtin") {
        auto a = match(s, "builtin N");
        if (a[0] == "inserter") whole = weights::inserter();
        else if (a[0] == "equifier") whole = weights::equifier();
        else invalid(s, "unknown builtin weight '" + a[0] + "'");
      } else if (h == "shape") {
        shape = lookup(env.twocats, "twocat", match(s, "shape N")[0]);
      } else if (h == "terminal") {
        match(s, "terminal");
        terminal = true;
      } else if (h == "at") {
        auto a = match(s, "at N = N");
        raw.objects[a[0]] = lookup(env.fincats, "fincat", a[1]);
      } else if (h == "object") {
        auto a = match(s, "object N N -> N");
        raw.ones[a[0]].objects[a[1]] = a[2];
      } else if (h == "arrow") {
        auto a = match(s, "arrow N N -> N");
        raw.ones[a[0]].arrows[a[1]] = a[2];
      } else if (h == "cell") {
        auto a = match(s, "cell N N -> N");
        raw.twos[a[0]][a[1]] = a[2];
      } else {
        invalid(s, "unknown weight statement '" + h + "'");
      }
    }
    if (whole) {
      if (d.body.size() != 1) throw Error(ErrorKind::InvalidDeclaration, "builtin must be the only statement", {d.name.text});
      return *whole;
    }
    if (!shape) throw Error(ErrorKind::InvalidDeclaration, "weight without 'shape'", {d.name.text});
    if (terminal) {
      if (d.body.size() != 2) throw Error(ErrorKind::InvalidDeclaration, "'terminal' takes only a shape", {d.name.text});
      return terminal_weight(shape);
    }
    return validate_weight(raw, shape);
  }

  TwoFunctor functor(const Declaration& d) {
    TwoCatPtr from, to;
    RawTwoFunctor raw;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      if (h == "from") from = lookup(env.twocats, "twocat", match(s, "from N")[0]);
      else if (h == "to") to = lookup(env.twocats, "twocat", match(s, "to N")[0]);
      else if (!cell_map(s, raw)) invalid(s, "unknown functor statement '" + h + "'");
    }
    if (!from || !to) throw Error(ErrorKind::InvalidDeclaration, "functor needs 'from' and 'to'", {d.name.text});
    return validate_two_functor(raw, from, to);
  }

  static bool cell_map(const Statement& s, RawTwoFunctor& raw) {
    const auto& h = s.head();
    if (h != "object" && h != "onecell" && h != "twocell") return false;
    auto a = match(s, h + " N -> N");
    (h == "object" ? raw.objects : h == "onecell" ? raw.ones : raw.twos)[a[0]] = a[1];
    return true;
  }

  TwoMonad monad(const Declaration& d) {
    TwoCatPtr base;
    RawMonad raw;
    std::optional<TwoMonad> whole;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      if (h == "on") {
        base = lookup(env.twocats, "twocat", match(s, "on N")[0]);
      } else if (h == "identity") {
        match(s, "identity");
        if (!base) invalid(s, "'on' must come first");
        whole = identity_monad(base);
      } else if (h == "enumerated") {
        auto a = match(s, "enumerated N");
        if (!base) invalid(s, "'on' must come first");
        auto all = enumerate_monads(base);
        std::size_t n = 0;
        try {
          n = std::stoul(a[0]);
        } catch (const std::exception&) {
          invalid(s, "expected an index");
        }
        if (n >= all.size())
          invalid(s, "index out of range: " + std::to_string(all.size()) + " monads on " + base->name());
        whole = all[n];
      } else if (h == "mult" || h == "unit") {
        auto a = match(s, h + " N = N");
        (h == "mult" ? raw.mult : raw.unit)[a[0]] = a[1];
      } else if (!cell_map(s, raw.endo)) {
        invalid(s, "unknown monad statement '" + h + "'");
      }
    }
    if (!base) throw Error(ErrorKind::InvalidDeclaration, "monad without 'on'", {d.name.text});
    if (whole) {
      if (d.body.size() != 2) throw Error(ErrorKind::InvalidDeclaration, "'identity' and 'enumerated' stand alone", {d.name.text});
      return *whole;
    }
    return validate_monad(raw, base);
  }

  std::map<std::string, std::vector<std::string>> keyed(const Declaration& d,
                                                        const std::map<std::string, std::string>& patterns) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& s : d.body) {
      auto it = patterns.find(s.head());
      if (it == patterns.end()) invalid(s, "unknown " + d.kind + " statement '" + s.head() + "'");
      if (out.count(s.head())) invalid(s, "repeated '" + s.head() + "'");
      out[s.head()] = match(s, it->second);
    }
    for (const auto& [k, p] : patterns)
      if (!out.count(k) && k != "variant")
        throw Error(ErrorKind::InvalidDeclaration, d.kind + " needs '" + k + "'", {d.name.text});
    return out;
  }

  AlgebraDecl algebra(const Declaration& d) {
    auto a = keyed(d, {{"monad", "monad N"}, {"carrier", "carrier N"}, {"structure", "structure N"}});
    const auto& t = lookup(env.monads, "monad", a["monad"][0]);
    StrictAlgebra alg{object_of(*t.base, a["carrier"][0]), one_of(*t.base, a["structure"][0])};
    raise_if_any(check_algebra(t, alg));
    return {a["monad"][0], alg};
  }

  MorphismDecl morphism(const Declaration& d) {
    auto a = keyed(d, {{"monad", "monad N"},
                       {"variant", "variant N"},
                       {"from", "from N"},
                       {"to", "to N"},
                       {"onecell", "onecell N"},
                       {"cell", "cell N"}});
    const auto& mn = a["monad"][0];
    const auto& t = lookup(env.monads, "monad", mn);
    Variant v = Variant::omega;
    if (a.count("variant")) {
      if (a["variant"][0] == "coomega") v = Variant::co_omega;
      else if (a["variant"][0] != "omega")
        throw Error(ErrorKind::InvalidDeclaration, "variant is omega or coomega", {d.name.text});
    }
    const auto& src = lookup(env.algebras, "algebra", a["from"][0]);
    const auto& tgt = lookup(env.algebras, "algebra", a["to"][0]);
    if (src.monad != mn || tgt.monad != mn)
      throw Error(ErrorKind::HostMismatch, "algebras of another monad", {a["from"][0], a["to"][0]});
    WeakMorphism w{src.algebra, tgt.algebra, one_of(*t.base, a["onecell"][0]), two_of(*t.base, a["cell"][0]), v};
    raise_if_any(check_weak_morphism(t, w, omega(t.base, Tag::l)));
    return {mn, w};
  }

  DiagramDecl diagram(const Declaration& d) {
    DiagramDecl out;
    out.span = d.span;
    const TwoMonad* t = nullptr;
    for (const auto& s : d.body) {
      const auto& h = s.head();
      if (h == "monad") {
        out.monad = match(s, "monad N")[0];
        t = &lookup(env.monads, "monad", out.monad);
      } else if (h == "shape") {
        out.shape = lookup(env.twocats, "twocat", match(s, "shape N")[0]);
      } else if (h == "object" || h == "onecell" || h == "twocell") {
        if (!t || !out.shape) invalid(s, "'monad' and 'shape' must come first");
        auto a = match(s, h + " N -> N");
        if (h == "object") {
          if (lookup(env.algebras, "algebra", a[1]).monad != out.monad) invalid(s, "algebra of another monad");
          out.objects[object_of(*out.shape, a[0])] = a[1];
        } else if (h == "onecell") {
          if (lookup(env.morphisms, "morphism", a[1]).monad != out.monad) invalid(s, "morphism of another monad");
          out.ones[one_of(*out.shape, a[0])] = a[1];
        } else {
          out.twos[two_of(*out.shape, a[0])] = two_of(*t->base, a[1]);
        }
      } else {
        invalid(s, "unknown diagram statement '" + h + "'");
      }
    }
    if (!t || !out.shape) throw Error(ErrorKind::InvalidDeclaration, "diagram needs 'monad' and 'shape'", {d.name.text});
    const auto& k = *out.shape;
    for (int x = 0; x < k.object_count(); ++x)
      if (!out.objects.count(x)) throw Error(ErrorKind::UnresolvedReference, "object without an algebra", {k.object_name(x)});
    for (int f = 0; f < k.one_count(); ++f) {
      if (k.is_id1(f)) continue;
      auto it = out.ones.find(f);
      if (it == out.ones.end()) throw Error(ErrorKind::UnresolvedReference, "1-cell without a morphism", {k.one_name(f)});
      const auto& w = env.morphisms.at(it->second).morphism;
      if (!(w.source == env.algebras.at(out.objects[k.src(f)]).algebra) ||
          !(w.target == env.algebras.at(out.objects[k.tgt(f)]).algebra))
        throw Error(ErrorKind::TypeMismatch, "morphism endpoints do not match", {k.one_name(f), it->second});
    }
    return out;
  }

  TaskDecl task(const Declaration& d) {
    TaskDecl t;
    t.span = d.span;
    for (const auto& s : d.body) {
      if (s.head() == "kind") t.kind = match(s, "kind N")[0];
      else t.params.push_back(s);
    }
    static const std::set<std::string> kinds = {"limit-conical", "limit-weighted", "cat-limit",     "lift-conical",
                                                "lift-weighted", "lift-product",   "lift-inserter", "lift-iso-inserter",
                                                "lift-equifier", "corollary",      "inserter-gap"};
    if (!kinds.count(t.kind)) throw Error(ErrorKind::InvalidDeclaration, "unknown task kind '" + t.kind + "'", {d.name.text});
    static const std::map<std::string, std::string> refs = {
        {"monad", "monad"},      {"morphisms", "cells"}, {"omega", "cells"},   {"compat", "cells"},
        {"detect", "cells"},     {"sigma", "arrows"},    {"weight", "weight"}, {"algebras", "algebra"},
        {"pair", "morphism"}};
    for (const auto& s : t.params) {
      auto it = refs.find(s.head());
      if (it == refs.end()) continue;
      auto names = match(s, s.head() + " N*");
      if (t.kind == "cat-limit" && s.head() == "omega") continue;
      for (const auto& n : names) {
        const auto& r = it->second;
        bool ok = r == "monad" ? env.monads.count(n) > 0
                  : r == "cells" ? env.cell_families.count(n) > 0
                  : r == "arrows" ? env.arrow_families.count(n) > 0
                  : r == "weight" ? env.weights.count(n) > 0
                  : r == "algebra" ? env.algebras.count(n) > 0
                                   : env.morphisms.count(n) > 0;
        if (!ok) unresolved(r == "cells" || r == "arrows" ? "family" : r, n);
      }
    }
    if (auto dg = t.get("diagram")) {
      for (const auto& n : *dg)
        if (!env.functors.count(n) && !env.diagrams.count(n) && !env.weights.count(n)) unresolved("diagram", n);
    }
    return t;
  }
};

std::string default_one(const std::string& x) { return "id_" + x; }
std::string default_two(const std::string& f) { return "1_" + f; }

Token word(const std::string& s) { return {Token::Kind::word, s, {}}; }
Token sym(const std::string& s) { return {Token::Kind::symbol, s, {}}; }

}  // namespace

Environment elaborate(const Document& doc) {
  Elaborator e;
  for (const auto& d : doc.declarations) {
    try {
      e.declaration(d);
    } catch (const Error& err) {
      for (auto v : err.violations()) {
        v.message = to_string(d.span) + " in " + d.kind + " " + d.name.text + ": " + v.message;
        e.errors.push_back(std::move(v));
      }
    }
  }
  raise_if_any(e.errors);
  return std::move(e.env);
}

Declaration twocat_declaration(const std::string& name, const TwoCategory& k) {
  Declaration d;
  d.kind = "twocat";
  d.name = word(name);
  auto add = [&](std::vector<Token> ts) { d.body.push_back({std::move(ts), {}}); };
  std::vector<Token> objs{word("objects")};
  for (int x = 0; x < k.object_count(); ++x) objs.push_back(word(k.object_name(x)));
  add(objs);
  auto id1_named = [&](int f) { return k.is_id1(f) && k.one_name(f) == default_one(k.object_name(k.src(f))); };
  auto id2_named = [&](int a) { return k.is_id2(a) && k.two_name(a) == default_two(k.one_name(k.dom(a))); };
  for (int f = 0; f < k.one_count(); ++f) {
    if (id1_named(f)) continue;
    add({word("onecell"), word(k.one_name(f)), sym(":"), word(k.object_name(k.src(f))), sym("->"),
         word(k.object_name(k.tgt(f)))});
    if (k.is_id1(f)) add({word("identity"), word(k.object_name(k.src(f))), sym("="), word(k.one_name(f))});
  }
  for (int a = 0; a < k.two_count(); ++a) {
    if (id2_named(a)) continue;
    add({word("twocell"), word(k.two_name(a)), sym(":"), word(k.one_name(k.dom(a))), sym("=>"),
         word(k.one_name(k.cod(a)))});
    if (k.is_id2(a)) add({word("identity"), word(k.one_name(k.dom(a))), sym("="), word(k.two_name(a))});
  }
  for (int g = 0; g < k.one_count(); ++g)
    for (int f = 0; f < k.one_count(); ++f) {
      if (k.is_id1(f) || k.is_id1(g)) continue;
      int h = k.comp1(g, f);
      if (h >= 0) add({word("compose"), word(k.one_name(g)), sym("."), word(k.one_name(f)), sym("="), word(k.one_name(h))});
    }
  for (int b = 0; b < k.two_count(); ++b)
    for (int a = 0; a < k.two_count(); ++a) {
      int v = k.is_id2(a) || k.is_id2(b) ? -1 : k.vcomp(b, a);
      if (v >= 0) add({word("vcomp"), word(k.two_name(b)), sym("*"), word(k.two_name(a)), sym("="), word(k.two_name(v))});
      bool unit = (k.is_id2(a) && k.is_id1(k.dom(a))) || (k.is_id2(b) && k.is_id1(k.dom(b)));
      int h = unit ? -1 : k.hcomp(b, a);
      if (h >= 0) add({word("hcomp"), word(k.two_name(b)), sym("*"), word(k.two_name(a)), sym("="), word(k.two_name(h))});
    }
  return d;
}

}  // namespace twomon::dsl

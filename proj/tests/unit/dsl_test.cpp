#include <fstream>
#include <sstream>

#include "doctest.h"

#include "twomon/dsl.hpp"
#include "twomon/fixtures.hpp"

using namespace twomon;
using namespace twomon::dsl;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(TWOMON_SOURCE_DIR) + "/" + rel, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<std::string> corpus = {"corpus/fixtures.twm", "corpus/limits.twm", "corpus/lifting.twm",
                                         "corpus/inserter_gap.twm"};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::ResourceBound;
}

int line_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')) + 1; }

}  // namespace

TEST_CASE("one twocat with one object") {
  auto d = parse("twocat K { objects A }");
  REQUIRE(d.declarations.size() == 1);
  CHECK(d.declarations[0].kind == "twocat");
  auto env = elaborate(d);
  CHECK(env.twocats.at("K")->object_count() == 1);
  CHECK(env.twocats.at("K")->one_count() == 1);
}

TEST_CASE("unclosed block is a syntax error at end of input") {
  try {
    parse("twocat K {\n  objects A\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    const auto& w = e.violations().front().witnesses;
    REQUIRE(w.size() == 2);
    CHECK(w[0] == "3:1");
    CHECK(w[1] == "}");
  }
}

TEST_CASE("syntax errors are collected per declaration") {
  try {
    parse("twocat K { objects A { }\nfoo L { }\ntwocat M { objects B }");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.violations().size() == 2);
    for (const auto& v : e.violations()) CHECK(v.kind == ErrorKind::SyntaxError);
  }
  CHECK(kind_of([] { parse("twocat K { objects A @ }"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("twocat K { objects \"A }"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("corpus parses and round-trips") {
  for (const auto& f : corpus) {
    CAPTURE(f);
    auto text = slurp(f);
    auto d = parse(text);
    auto printed = print(d);
    CHECK(parse(printed) == d);
    CHECK(print(parse(printed)) == printed);
    int lines = line_count(text);
    for (const auto& decl : d.declarations) {
      CHECK(decl.span.line >= 1);
      CHECK(decl.span.end_line <= lines);
      for (const auto& s : decl.body) CHECK(s.span.end_line <= decl.span.end_line);
    }
    CHECK_NOTHROW(elaborate(d));
  }
}

TEST_CASE("quoting round-trips awkward names") {
  Document d;
  Declaration decl;
  decl.kind = "twocat";
  decl.name = {Token::Kind::quoted, "K 1", {}};
  decl.body.push_back({{{Token::Kind::word, "objects", {}},
                        {Token::Kind::quoted, "(X,O)", {}},
                        {Token::Kind::quoted, "a\"b\\c", {}},
                        {Token::Kind::quoted, "plain", {}},
                        {Token::Kind::quoted, "x-", {}}},
                       {}});
  d.declarations.push_back(decl);
  CHECK(parse(print(d)) == d);
}

TEST_CASE("fixture corpus reproduces the fixtures by name") {
  auto env = elaborate(parse(slurp("corpus/fixtures.twm")));
  auto expected = fixtures::base_fixtures();
  expected.emplace_back("K_REFLECT", fixtures::k_reflect());
  for (const auto& s : fixtures::shape_names()) expected.emplace_back("shape_" + s, fixtures::shape(s));
  for (const auto& [name, k] : expected) {
    CAPTURE(name);
    const auto& e = *env.twocats.at(name);
    REQUIRE(e.object_count() == k->object_count());
    REQUIRE(e.one_count() == k->one_count());
    REQUIRE(e.two_count() == k->two_count());
    for (int x = 0; x < k->object_count(); ++x) {
      auto y = e.find_object(k->object_name(x));
      REQUIRE(y.has_value());
      CHECK(e.one_name(e.id1(*y)) == k->one_name(k->id1(x)));
    }
    auto one = [&](int f) { return *e.find_one(k->one_name(f)); };
    auto two = [&](int a) { return *e.find_two(k->two_name(a)); };
    for (int f = 0; f < k->one_count(); ++f) {
      REQUIRE(e.find_one(k->one_name(f)).has_value());
      CHECK(e.object_name(e.src(one(f))) == k->object_name(k->src(f)));
      CHECK(e.object_name(e.tgt(one(f))) == k->object_name(k->tgt(f)));
      CHECK(e.two_name(e.id2(one(f))) == k->two_name(k->id2(f)));
    }
    for (int a = 0; a < k->two_count(); ++a) {
      REQUIRE(e.find_two(k->two_name(a)).has_value());
      CHECK(e.one_name(e.dom(two(a))) == k->one_name(k->dom(a)));
      CHECK(e.one_name(e.cod(two(a))) == k->one_name(k->cod(a)));
    }
    for (int g = 0; g < k->one_count(); ++g)
      for (int f = 0; f < k->one_count(); ++f) {
        int h = k->comp1(g, f);
        int eh = e.comp1(one(g), one(f));
        CHECK((h < 0) == (eh < 0));
        if (h >= 0 && eh >= 0) CHECK(e.one_name(eh) == k->one_name(h));
      }
    for (int b = 0; b < k->two_count(); ++b)
      for (int a = 0; a < k->two_count(); ++a) {
        int v = k->vcomp(b, a), ev = e.vcomp(two(b), two(a));
        CHECK((v < 0) == (ev < 0));
        if (v >= 0 && ev >= 0) CHECK(e.two_name(ev) == k->two_name(v));
        int h = k->hcomp(b, a), eh = e.hcomp(two(b), two(a));
        CHECK((h < 0) == (eh < 0));
        if (h >= 0 && eh >= 0) CHECK(e.two_name(eh) == k->two_name(h));
      }
  }
}

TEST_CASE("K_CELL source elaborates with identities added") {
  auto env = elaborate(parse(
      "twocat K_CELL {\n  objects X Y\n  onecell f : X -> Y\n  onecell g : X -> Y\n  twocell alpha : f => g\n}\n"
      "family O { on K_CELL; cells alpha }\n"));
  const auto& k = *env.twocats.at("K_CELL");
  CHECK(k.object_count() == 2);
  CHECK(k.one_count() == 4);
  CHECK(k.two_count() == 5);
  const auto& o = env.cell_families.at("O");
  for (int f = 0; f < k.one_count(); ++f) CHECK(o.contains(k.id2(f)));
  CHECK(o.cells().size() == 5);
}

TEST_CASE("elaboration errors") {
  auto kind = [](const std::string& src) { return kind_of([&] { elaborate(parse(src)); }); };
  CHECK(kind("family O { on L; cells canonical s }") == ErrorKind::UnresolvedReference);
  CHECK(kind("twocat K { objects A }\ntwocat K { objects B }") == ErrorKind::DuplicateName);
  CHECK(kind("twocat K { objects A; frobnicate }") == ErrorKind::InvalidDeclaration);
  CHECK(kind("twocat K { objects A B; onecell f : A -> B; onecell g : B -> A }") == ErrorKind::MissingComposite);
  CHECK(kind("twocat K { objects A }\nmonad T { on K; enumerated 7 }") == ErrorKind::InvalidDeclaration);
  CHECK(kind("twocat K { objects A }\ntask t { kind nonsense }") == ErrorKind::InvalidDeclaration);
  // every bad declaration is reported, with its span
  try {
    elaborate(parse("family O { on L; cells canonical s }\ntwocat K { objects A; bogus }\n"));
    FAIL("expected errors");
  } catch (const Error& e) {
    REQUIRE(e.violations().size() == 2);
    CHECK(e.violations()[0].message.rfind("1:1-1:37", 0) == 0);
    CHECK(e.violations()[1].message.rfind("2:1-", 0) == 0);
  }
}

TEST_CASE("algebras and morphisms are validated") {
  std::string base = "twocat K { builtin K_CELL }\nmonad T { on K; identity }\n";
  CHECK(kind_of([&] { elaborate(parse(base + "algebra A { monad T; carrier X; structure f }")); }) ==
        ErrorKind::TypeMismatch);
  CHECK(kind_of([&] {
          elaborate(parse(base + "algebra A { monad T; carrier X; structure id_X }\n"
                                 "algebra B { monad T; carrier Y; structure id_Y }\n"
                                 "morphism M { monad T; from A; to B; onecell f; cell alpha }"));
        }) == ErrorKind::TypeMismatch);
}

TEST_CASE("run: exit codes and determinism") {
  RunOptions opt;
  for (const auto& f : corpus) {
    CAPTURE(f);
    auto text = slurp(f);
    CHECK(run("validate", text, opt).exit_code == 0);
    auto a = run("suite", text, opt);
    CHECK(a.exit_code == 0);
    CHECK(to_json(a) == to_json(run("suite", text, opt)));
  }
  CHECK(run("limit", slurp("tests/data/no_limit.twm"), {"lax_limit_of_f", "", {}, {}, false}).exit_code == 1);
  CHECK(run("validate", slurp("tests/data/bad_syntax.twm"), opt).exit_code == 2);
  CHECK(run("validate", slurp("tests/data/bad_reference.twm"), opt).exit_code == 2);
  CHECK(run("lift", slurp("corpus/lifting.twm"), {"missing", "", {}, {}, false}).exit_code == 2);
  // a limit task is not a lift task
  CHECK(run("lift", slurp("corpus/limits.twm"), {"inserter_of_f_g", "", {}, {}, false}).exit_code == 2);
  CHECK(run("frobnicate", "", opt).exit_code == 2);
  auto m = run("enumerate-monads", "twocat K { builtin K_TWIST }", {"", "K", {}, {}, false});
  CHECK(m.exit_code == 0);
  CHECK(m.reports.front().statistics.at("monads") == 4);
}

TEST_CASE("budget and probe options") {
  auto text = slurp("corpus/limits.twm");
  RunOptions tight;
  tight.budget = 1;
  auto r = run("limit", text, {"lax_cat_limit", "", {}, 1, false});
  CHECK(r.exit_code == 2);
  CHECK(r.reports.front().messages.front().rfind("ResourceBound", 0) == 0);
  RunOptions probes{"lax_cat_limit", "", {"iso", "chain3"}, {}, false};
  auto p = run("limit", text, probes);
  CHECK(p.exit_code == 0);
  int probed = 0;
  for (const auto& e : p.reports.front().transcript) probed += e.name.rfind("probe ", 0) == 0;
  CHECK(probed == 2);
  CHECK(cell_budget() == 10000);
}

TEST_CASE("report JSON is canonical") {
  auto r = run("lift", slurp("corpus/lifting.twm"), {"inserter_of_f_g", "", {}, {}, false});
  auto j = to_json(r);
  CHECK(j.find("\"schema\": \"twomon-report/1\"") != std::string::npos);
  CHECK(j.find("seconds") == std::string::npos);
  CHECK(j.back() == '\n');
  // keys appear sorted within the report object
  auto pos = [&](const std::string& k) { return j.find("\"" + k + "\":"); };
  CHECK(pos("kind") < pos("messages"));
  CHECK(pos("messages") < pos("result"));
  CHECK(pos("status") < pos("task"));
  CHECK(pos("task") < pos("transcript"));
}

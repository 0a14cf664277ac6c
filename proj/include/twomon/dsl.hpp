#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twomon/catlimit.hpp"
#include "twomon/lifting.hpp"
#include "twomon/weight.hpp"

namespace twomon::dsl {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr std::string_view report_schema = "twomon-report/1";

/// 1-based line and column; `end` is one past the last character.
struct Span {
  int line = 1, column = 1, end_line = 1, end_column = 1;
};
std::string to_string(const Span& s);

struct Token {
  enum class Kind { word, quoted, symbol };
  Kind kind = Kind::word;
  std::string text;
  Span span;
  /// Words and quoted strings with the same text are equal.
  bool operator==(const Token& o) const {
    return (kind == Kind::symbol) == (o.kind == Kind::symbol) && text == o.text;
  }
};

/// One line (or `;`-separated part of a line) of a block.
struct Statement {
  std::vector<Token> tokens;
  Span span;
  const std::string& head() const { return tokens.front().text; }
  bool operator==(const Statement& o) const { return tokens == o.tokens; }
};

struct Declaration {
  std::string kind;
  Token name;
  std::vector<Statement> body;
  Span span;
  bool operator==(const Declaration& o) const { return kind == o.kind && name == o.name && body == o.body; }
};

/// Spans are ignored by equality.
struct Document {
  std::vector<Declaration> declarations;
  bool operator==(const Document& o) const = default;
};

/// Declaration keywords in the order they are documented.
const std::vector<std::string>& declaration_kinds();

/// Throws Error with one SyntaxError per malformed declaration; witnesses
/// are the position and then the expected tokens.
Document parse(std::string_view text);
/// Canonical layout; quotes names that are not plain words.
std::string print(const Document& d);

struct AlgebraDecl {
  std::string monad;
  StrictAlgebra algebra;
};
struct MorphismDecl {
  std::string monad;
  WeakMorphism morphism;
};
/// F̄: shape → T-Alg, resolved once the task fixes Ω' and the variant.
struct DiagramDecl {
  std::string monad;
  TwoCatPtr shape;
  std::map<int, std::string> objects, ones;  // shape cell -> algebra / morphism declaration
  std::map<int, int> twos;                   // shape 2-cell -> base 2-cell
  Span span;
};
struct TaskDecl {
  std::string kind;
  std::vector<Statement> params;
  Span span;
  /// Arguments of the first statement headed `key`, or nullopt.
  std::optional<std::vector<std::string>> get(const std::string& key) const;
};

struct Environment {
  std::map<std::string, CatPtr> fincats;
  std::map<std::string, TwoCatPtr> twocats;
  std::map<std::string, ArrowFamily> arrow_families;
  std::map<std::string, CellFamily> cell_families;
  std::map<std::string, Weight> weights;
  std::map<std::string, TwoFunctor> functors;
  std::map<std::string, TwoMonad> monads;
  std::map<std::string, AlgebraDecl> algebras;
  std::map<std::string, MorphismDecl> morphisms;
  std::map<std::string, DiagramDecl> diagrams;
  std::map<std::string, TaskDecl> tasks;
  std::vector<std::string> task_order;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) as declared
};

/// Validates every declaration; all violations are collected and raised
/// together, each prefixed with its span.
Environment elaborate(const Document& d);

/// The fixture 2-category as declaration source (used to build the corpus).
Declaration twocat_declaration(const std::string& name, const TwoCategory& k);

enum class Status { pass, fail, error, not_applicable };
std::string to_string(Status s);

struct Report {
  std::string task, kind;
  Status status = Status::pass;
  std::vector<CheckEntry> transcript;
  std::map<std::string, std::vector<std::string>> result;
  std::map<std::string, long long> statistics;
  std::vector<std::string> messages;
  double seconds = 0;  // text output only
};

struct RunOptions {
  std::string task, twocat;
  std::vector<std::string> probes;  // empty: the default probes
  std::optional<std::size_t> budget;
  bool verbose = false;
};

struct RunResult {
  std::string command;
  std::vector<Report> reports;
  int exit_code = 0;
};

const std::vector<std::string>& commands();

/// 0 when every report passes or is not applicable, 1 when a check failed,
/// 2 on an input error (parse, elaboration, unknown task, runtime error).
RunResult run(const std::string& command, std::string_view source, const RunOptions& options);
/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string to_json(const RunResult& r);
std::string to_text(const RunResult& r, bool verbose);

}  // namespace twomon::dsl

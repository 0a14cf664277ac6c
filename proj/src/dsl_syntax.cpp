#include <algorithm>
#include <cctype>

#include "twomon/dsl.hpp"

namespace twomon::dsl {

std::string to_string(const Span& s) {
  return std::to_string(s.line) + ":" + std::to_string(s.column) + "-" + std::to_string(s.end_line) + ":" +
         std::to_string(s.end_column);
}

const std::vector<std::string>& declaration_kinds() {
  static const std::vector<std::string> kinds = {"fincat", "twocat",  "family",   "weight",  "functor",
                                                 "monad",  "algebra", "morphism", "diagram", "task"};
  return kinds;
}

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool plain_word(const std::string& s) {
  if (s.empty() || s.front() == '-' || s.front() == '\'') return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (word_char(s[i])) continue;
    if (s[i] == '-' && i + 1 < s.size() && word_char(s[i + 1]) && s[i + 1] != '\'') continue;
    return false;
  }
  return true;
}

struct Lexed {
  Token token;
  bool newline = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Lexed> run() {
    std::vector<Lexed> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '\n') {
        Lexed l;
        l.newline = true;
        l.token.span = here();
        advance();
        close(l.token.span);
        out.push_back(l);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '"') {
        out.push_back({quoted(), false});
      } else if (word_char(c) && c != '\'') {
        out.push_back({word(), false});
      } else {
        out.push_back({symbol(), false});
      }
    }
    return out;
  }

  Span end_of_input() const {
    Span s{line_, column_, line_, column_};
    return s;
  }

 private:
  Span here() const { return {line_, column_, line_, column_}; }
  void close(Span& s) const {
    s.end_line = line_;
    s.end_column = column_;
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  Token word() {
    Token t{Token::Kind::word, "", here()};
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool hyphen = c == '-' && pos_ + 1 < text_.size() && word_char(text_[pos_ + 1]) && text_[pos_ + 1] != '\'';
      if (!word_char(c) && !hyphen) break;
      t.text += c;
      advance();
    }
    close(t.span);
    return t;
  }

  Token quoted() {
    Token t{Token::Kind::quoted, "", here()};
    advance();
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        close(t.span);
        throw Error(ErrorKind::SyntaxError, "unterminated string", {position(t.span), "\""});
      }
      char c = text_[pos_];
      advance();
      if (c == '"') break;
      if (c == '\\' && pos_ < text_.size()) {
        char e = text_[pos_];
        advance();
        t.text += e == 'n' ? '\n' : e;
      } else {
        t.text += c;
      }
    }
    close(t.span);
    return t;
  }

  Token symbol() {
    Token t{Token::Kind::symbol, "", here()};
    static const std::vector<std::string> symbols = {"->", "=>", "{", "}", ";", ":", ".", "*", "=", ","};
    for (const auto& s : symbols) {
      if (text_.substr(pos_, s.size()) == s) {
        for (std::size_t i = 0; i < s.size(); ++i) advance();
        t.text = s;
        close(t.span);
        return t;
      }
    }
    std::string c(1, text_[pos_]);
    advance();
    close(t.span);
    throw Error(ErrorKind::SyntaxError, "unexpected character '" + c + "'", {position(t.span)});
  }

 public:
  static std::string position(const Span& s) { return std::to_string(s.line) + ":" + std::to_string(s.column); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Lexed> toks, Span eof) : toks_(std::move(toks)), eof_(eof) {}

  Document run() {
    Document d;
    while (true) {
      skip_separators();
      if (done()) break;
      try {
        d.declarations.push_back(declaration());
      } catch (const Error& e) {
        errors_.insert(errors_.end(), e.violations().begin(), e.violations().end());
        recover();
      }
    }
    raise_if_any(errors_);
    return d;
  }

 private:
  bool done() const { return i_ >= toks_.size(); }
  const Lexed& peek() const { return toks_[i_]; }
  bool is_symbol(const std::string& s) const {
    return !done() && !peek().newline && peek().token.kind == Token::Kind::symbol && peek().token.text == s;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::vector<std::string> w{done() ? Lexer::position(eof_) : Lexer::position(peek().token.span)};
    w.insert(w.end(), expected.begin(), expected.end());
    std::string got = done() ? "end of input" : peek().newline ? "end of line" : "'" + peek().token.text + "'";
    throw Error(ErrorKind::SyntaxError, what + ", found " + got, w);
  }

  void skip_separators() {
    while (!done() && (peek().newline || is_symbol(";"))) ++i_;
  }
  void skip_newlines() {
    while (!done() && peek().newline) ++i_;
  }

  Declaration declaration() {
    const auto& kinds = declaration_kinds();
    if (peek().newline || peek().token.kind != Token::Kind::word ||
        std::find(kinds.begin(), kinds.end(), peek().token.text) == kinds.end())
      fail("expected a declaration keyword", kinds);
    Declaration d;
    d.kind = peek().token.text;
    d.span = peek().token.span;
    ++i_;
    if (done() || peek().newline || peek().token.kind == Token::Kind::symbol) fail("expected a name", {"name"});
    d.name = peek().token;
    ++i_;
    skip_newlines();
    if (!is_symbol("{")) fail("expected '{'", {"{"});
    ++i_;
    while (true) {
      skip_separators();
      if (done()) fail("unclosed block", {"}"});
      if (is_symbol("}")) break;
      d.body.push_back(statement());
    }
    d.span.end_line = peek().token.span.end_line;
    d.span.end_column = peek().token.span.end_column;
    ++i_;
    return d;
  }

  Statement statement() {
    Statement s;
    if (peek().token.kind != Token::Kind::word) fail("expected a statement keyword", {"keyword", "}"});
    s.span = peek().token.span;
    while (!done() && !peek().newline && !is_symbol(";") && !is_symbol("}")) {
      if (is_symbol("{")) fail("unexpected '{' inside a block", {"}", ";"});
      s.tokens.push_back(peek().token);
      s.span.end_line = peek().token.span.end_line;
      s.span.end_column = peek().token.span.end_column;
      ++i_;
    }
    return s;
  }

  void recover() {
    while (!done() && !is_symbol("}")) ++i_;
    if (!done()) ++i_;
  }

  std::vector<Lexed> toks_;
  Span eof_;
  std::size_t i_ = 0;
  std::vector<Violation> errors_;
};

std::string render(const Token& t) {
  if (t.kind == Token::Kind::symbol || (t.kind == Token::Kind::word && plain_word(t.text))) return t.text;
  std::string out = "\"";
  for (char c : t.text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

Document parse(std::string_view text) {
  Lexer lx(text);
  auto toks = lx.run();
  return Parser(std::move(toks), lx.end_of_input()).run();
}

std::string print(const Document& d) {
  std::string out;
  for (std::size_t k = 0; k < d.declarations.size(); ++k) {
    const auto& decl = d.declarations[k];
    if (k) out += "\n";
    out += decl.kind + " " + render(decl.name) + " {\n";
    for (const auto& s : decl.body) {
      out += " ";
      for (const auto& t : s.tokens) out += " " + render(t);
      out += "\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace twomon::dsl

#include "prur/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "prur/errors.hpp"

namespace prur {

namespace {

enum class Tok { ident, number, op, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back(Token{Tok::ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(Token{Tok::number, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*/^(),;:").find(c) != std::string_view::npos) {
      out.push_back(Token{Tok::op, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_op(const char* op) const { return peek().kind == Tok::op && peek().text == op; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }
  void expect_op(const char* op) {
    if (!at_op(op)) fail(std::string("expected '") + op + "'", peek());
    next();
  }

  MvPoly expression(const RingPtr& ring) {
    MvPoly acc = term(ring);
    while (at_op("+") || at_op("-")) {
      const bool minus = next().text == "-";
      MvPoly rhs = term(ring);
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> names;
    while (true) {
      const Token& t = next();
      if (t.kind != Tok::ident) fail("expected a symbol name", t);
      if (t.text.front() == '_') fail("symbols starting with '_' are reserved", t);
      names.push_back(t.text);
      if (at_op(",")) {
        next();
        continue;
      }
      break;
    }
    return names;
  }

 private:
  MvPoly term(const RingPtr& ring) {
    MvPoly acc = unary(ring);
    while (at_op("*") || at_op("/")) {
      const Token op = next();
      const Token at = peek();
      MvPoly rhs = unary(ring);
      if (op.text == "*") {
        acc *= rhs;
      } else {
        if (!rhs.is_constant()) fail("division is only allowed by a constant", at);
        if (rhs.is_zero()) fail("division by zero", at);
        acc *= Rational(1 / rhs.constant_value());
      }
    }
    return acc;
  }

  MvPoly unary(const RingPtr& ring) {
    if (at_op("-")) {
      next();
      return -unary(ring);
    }
    if (at_op("+")) {
      next();
      return unary(ring);
    }
    return power(ring);
  }

  MvPoly power(const RingPtr& ring) {
    MvPoly base = atom(ring);
    if (!at_op("^")) return base;
    next();
    const Token& t = peek();
    if (at_op("-")) fail("negative exponents are not allowed", t);
    if (t.kind != Tok::number) fail("exponent must be a nonnegative integer", t);
    next();
    if (t.text.size() > 4 || std::stoul(t.text) > 4096) fail("exponent too large", t);
    return base.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  MvPoly atom(const RingPtr& ring) {
    const Token& t = next();
    if (t.kind == Tok::number) return MvPoly(ring, Rational(Integer(t.text)));
    if (t.kind == Tok::ident) {
      auto idx = ring->index_of(t.text);
      if (!idx) fail("unknown symbol '" + t.text + "'", t);
      return MvPoly::variable(ring, *idx);
    }
    if (t.kind == Tok::op && t.text == "(") {
      MvPoly e = expression(ring);
      expect_op(")");
      return e;
    }
    fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedSystem parse_system(std::string_view text, MonomialOrder var_order, MonomialOrder param_order) {
  Parser p(lex(text));
  std::optional<std::vector<std::string>> params;
  std::optional<std::vector<std::string>> vars;
  ParsedSystem out;
  std::set<std::string> seen;
  while (p.peek().kind != Tok::end) {
    const Token head = p.next();
    if (head.kind != Tok::ident) p.fail("expected 'parameters', 'variables' or 'system'", head);
    p.expect_op(":");
    if (head.text == "parameters" || head.text == "variables") {
      if (out.ring) p.fail("declarations must precede the system", head);
      auto& slot = head.text == "parameters" ? params : vars;
      if (slot) p.fail("duplicate '" + head.text + "' declaration", head);
      const Token first = p.peek();
      slot = p.name_list();
      for (const auto& n : *slot)
        if (!seen.insert(n).second) p.fail("symbol '" + n + "' declared twice", first);
      p.expect_op(";");
    } else if (head.text == "system") {
      if (out.ring) p.fail("duplicate 'system' section", head);
      if (!vars) p.fail("'variables' must be declared before the system", head);
      out.ring = Ring::make(*vars, params.value_or(std::vector<std::string>{}), var_order, param_order);
      while (true) {
        out.polys.push_back(p.expression(out.ring));
        if (p.at_op(",")) {
          p.next();
          continue;
        }
        break;
      }
      p.expect_op(";");
    } else {
      p.fail("unknown section '" + head.text + "'", head);
    }
  }
  if (!out.ring) p.fail("empty system", p.peek());
  return out;
}

MvPoly parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser p(lex(text));
  MvPoly e = p.expression(ring);
  if (p.peek().kind != Tok::end) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  return e;
}

}  // namespace prur

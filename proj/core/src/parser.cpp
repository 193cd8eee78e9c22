#include "bbs/parser.hpp"

#include <cctype>
#include <vector>

#include "bbs/error.hpp"

namespace bbs {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx, SourcePos origin)
      : text_(text), ctx_(ctx), origin_(origin) {}

  Polynomial parse_all() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    Polynomial p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  struct Mark {
    int line;
    int column;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  Mark mark() const { return {line_, column_}; }

  [[noreturn]] void fail_at(Mark m, const std::string& msg, ErrorCode code = ErrorCode::Syntax) const {
    int line = origin_.line + m.line - 1;
    int column = m.line == 1 ? origin_.column + m.column - 1 : m.column;
    if (code == ErrorCode::Syntax) throw ParseError(line, column, msg);
    throw Error(code, msg + " at line " + std::to_string(line) + ", column " + std::to_string(column));
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(mark(), msg); }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  // Length of the first piece of a split of `name` into declared variable
  // names, longest pieces first; 0 when no split exists.
  std::size_t split_prefix(const std::string& name) const {
    std::vector<std::size_t> first(name.size() + 1, 0);
    std::vector<bool> ok(name.size() + 1, false);
    ok[name.size()] = true;
    for (std::size_t i = name.size(); i-- > 0;) {
      for (std::size_t j = name.size(); j > i; --j) {
        if (ok[j] && ctx_->find(std::string_view(name).substr(i, j - i))) {
          ok[i] = true;
          first[i] = j - i;
          break;
        }
      }
    }
    return ok[0] ? first[0] : 0;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  int exponent() {
    Mark m = mark();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    std::string d = digits();
    if (d.size() > 6) fail_at(m, "exponent too large");
    return std::stoi(d);
  }

  // expression := ['+'|'-'] product (('+'|'-') product)*
  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      advance();
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      bool minus = peek() == '-';
      advance();
      Polynomial rhs = product();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  bool starts_factor() const {
    if (at_end()) return false;
    char c = peek();
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  // product := power (['*'] power)*
  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        advance();
        skip_space();
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      acc *= power();
    }
    return acc;
  }

  // power := atom ['^' int]
  Polynomial power() {
    Polynomial base = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      int e = exponent();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  // atom := int ['/' int] | identifier | '(' expression ')'
  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    Mark m = mark();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (!at_end() && peek() == '/') {
        advance();
        Mark dm = mark();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        std::string den = digits();
        Integer d(den);
        if (d == 0) fail_at(dm, "zero denominator");
        Rational q(Integer(num), d);
        q.canonicalize();
        return Polynomial::constant(ctx_, q);
      }
      return Polynomial::constant(ctx_, Rational(Integer(num)));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      std::string name = identifier();
      auto v = ctx_->find(name);
      if (v) return Polynomial::variable(ctx_, *v);
      // "xy" for x*y: an undeclared identifier that splits into declared
      // names is read one piece at a time, so '^' binds to the last piece.
      std::size_t first = split_prefix(name);
      if (first == 0) fail_at(m, "unknown variable '" + name + "'", ErrorCode::UnknownVariable);
      pos_ = start;
      column_ = m.column;
      for (std::size_t i = 0; i < first; ++i) advance();
      return Polynomial::variable(ctx_, *ctx_->find(name.substr(0, first)));
    }
    if (c == '(') {
      advance();
      Polynomial inner = expression();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  SourcePos origin_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, SourcePos origin) {
  return Parser(text, ctx, origin).parse_all();
}

Term parse_term(std::string_view text, const ContextPtr& ctx, SourcePos origin) {
  Polynomial p = parse_polynomial(text, ctx, origin);
  if (p.size() != 1 || p.leading().coeff != 1 || p.leading().mono.has_params() || p.leading().mono.deform() != 0) {
    throw ParseError(origin.line, origin.column, "expected a power product in the main variables");
  }
  return p.leading().mono.main_term();
}

}  // namespace bbs

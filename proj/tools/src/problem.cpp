#include "bbs_cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bbs/error.hpp"
#include "bbs/scheme.hpp"

namespace bbs::cli {

namespace {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Source {
 public:
  explicit Source(std::string_view text) : text_(text) {
    // Comments become blanks so offsets keep their line and column.
    bool comment = false;
    for (char& c : text_) {
      if (c == '\n') {
        comment = false;
      } else if (c == '#') {
        comment = true;
      }
      if (comment) c = ' ';
    }
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  std::string_view view(Span s) const { return std::string_view(text_).substr(s.begin, s.end - s.begin); }

  SourcePos pos(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {static_cast<int>(line), static_cast<int>(offset - line_starts_[line - 1] + 1)};
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    SourcePos p = pos(offset);
    throw ParseError(p.line, p.column, msg);
  }

  Span trim(Span s) const {
    while (s.begin < s.end && std::isspace(static_cast<unsigned char>(text_[s.begin]))) ++s.begin;
    while (s.end > s.begin && std::isspace(static_cast<unsigned char>(text_[s.end - 1]))) --s.end;
    return s;
  }

  // Splits at `sep` outside parentheses and brackets; pieces are trimmed.
  std::vector<Span> split(Span s, char sep) const {
    std::vector<Span> out;
    int depth = 0;
    std::size_t start = s.begin;
    for (std::size_t i = s.begin; i < s.end; ++i) {
      char c = text_[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == sep && depth == 0) {
        out.push_back(trim({start, i}));
        start = i + 1;
      }
    }
    out.push_back(trim({start, s.end}));
    return out;
  }

  // ';'-terminated clauses; the text after the last ';' must be blank.
  std::vector<Span> clauses() const {
    std::vector<Span> out = split({0, text_.size()}, ';');
    Span tail = out.back();
    out.pop_back();
    if (tail.begin != tail.end) fail(tail.begin, "missing ';' after clause");
    for (const Span& c : out) {
      if (c.begin == c.end) fail(c.begin, "empty clause");
    }
    return out;
  }

 private:
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string identifier(const Source& src, Span s) {
  std::string_view v = src.view(s);
  if (v.empty() || !std::isalpha(static_cast<unsigned char>(v.front())) ||
      !std::all_of(v.begin(), v.end(), ident_char)) {
    src.fail(s.begin, "expected an identifier");
  }
  return std::string(v);
}

struct Clause {
  std::string keyword;
  Span span;
  Span body;
};

Clause read_clause(const Source& src, Span s) {
  std::size_t i = s.begin;
  while (i < s.end && ident_char(src.view({i, i + 1})[0])) ++i;
  if (i == s.begin) src.fail(s.begin, "expected a clause keyword");
  return {std::string(src.view({s.begin, i})), s, src.trim({i, s.end})};
}

std::vector<Span> items(const Source& src, const Clause& c, char sep = ',') {
  if (c.body.begin == c.body.end) src.fail(c.span.begin, "clause '" + c.keyword + "' is empty");
  std::vector<Span> out = src.split(c.body, sep);
  for (const Span& s : out) {
    if (s.begin == s.end) src.fail(s.begin, "empty item in '" + c.keyword + "'");
  }
  return out;
}

Polynomial poly(const Source& src, Span s, const ContextPtr& ctx) {
  return parse_polynomial(src.view(s), ctx, src.pos(s.begin));
}

BorderPrebasis read_matrix(const Source& src, Span body, const OrderIdeal& o, const ContextPtr& ctx) {
  std::string_view v = src.view(body);
  if (v.back() != ']') src.fail(body.end - 1, "expected ']'");
  std::vector<Span> rows = src.split(src.trim({body.begin + 1, body.end - 1}), ';');
  if (static_cast<int>(rows.size()) != o.mu()) {
    src.fail(body.begin, "prebasis matrix needs " + std::to_string(o.mu()) + " rows, one per order ideal term");
  }
  PolyMatrix a(ctx, o.mu(), o.nu());
  for (int i = 0; i < o.mu(); ++i) {
    Span row = rows[static_cast<std::size_t>(i)];
    std::vector<Span> cells = src.split(row, ',');
    if (static_cast<int>(cells.size()) != o.nu()) {
      src.fail(row.begin, "prebasis row needs " + std::to_string(o.nu()) + " entries, one per border term");
    }
    for (int j = 0; j < o.nu(); ++j) {
      Polynomial e = poly(src, cells[static_cast<std::size_t>(j)], ctx);
      if (e.uses_main()) src.fail(cells[static_cast<std::size_t>(j)].begin, "coefficients may not use main variables");
      a.at(i, j) = e;
    }
  }
  return BorderPrebasis(o, std::move(a));
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Source src(text);
  std::vector<Clause> clauses;
  for (const Span& s : src.clauses()) clauses.push_back(read_clause(src, s));
  if (clauses.empty() || clauses.front().keyword != "ring") {
    src.fail(clauses.empty() ? 0 : clauses.front().span.begin, "the first clause must be 'ring'");
  }

  std::vector<std::string> main;
  for (const Span& s : items(src, clauses.front())) main.push_back(identifier(src, s));
  std::optional<std::string> deform;
  for (const Clause& c : clauses) {
    if (c.keyword == "deform") deform = identifier(src, c.body);
  }
  ProblemFile pf;
  try {
    pf.ring = VariableContext::make(main, {}, deform ? *deform : default_deform_name(main));
  } catch (const Error& e) {
    src.fail(clauses.front().body.begin, e.what());
  }

  std::optional<Clause> prebasis;
  for (std::size_t ci = 1; ci < clauses.size(); ++ci) {
    const Clause& c = clauses[ci];
    if (c.keyword == "ring") src.fail(c.span.begin, "duplicate 'ring' clause");
    if (c.keyword == "deform") continue;
    if (c.keyword == "weights") {
      std::vector<int> w;
      std::string body(src.view(c.body));
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream is(body);
      std::string tok;
      while (is >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
            tok.size() > 6 || std::stoi(tok) < 1) {
          src.fail(c.body.begin, "weights must be positive integers");
        }
        w.push_back(std::stoi(tok));
      }
      if (static_cast<int>(w.size()) != pf.ring->num_main()) {
        src.fail(c.body.begin, "need one weight per ring variable");
      }
      pf.weights = WeightVector(w);
    } else if (c.keyword == "orderideal") {
      std::vector<Term> terms;
      for (const Span& s : items(src, c)) terms.push_back(parse_term(src.view(s), pf.ring, src.pos(s.begin)));
      try {
        pf.order_ideal = OrderIdeal::from_terms(terms);
      } catch (const Error& e) {
        src.fail(c.body.begin, e.what());
      }
    } else if (c.keyword == "ideal") {
      std::vector<Polynomial> gens;
      for (const Span& s : items(src, c)) gens.push_back(poly(src, s, pf.ring));
      pf.ideal = std::move(gens);
    } else if (c.keyword == "prebasis") {
      prebasis = c;
    } else if (c.keyword == "point") {
      pf.has_point = true;
      for (const Span& s : items(src, c)) {
        std::vector<Span> kv = src.split(s, '=');
        if (kv.size() != 2) src.fail(s.begin, "expected 'name = value'");
        std::string name = identifier(src, kv[0]);
        Polynomial value = poly(src, kv[1], pf.ring);
        if (!value.is_constant()) src.fail(kv[1].begin, "point values must be rational numbers");
        pf.point.emplace_back(name, value.constant_term());
      }
    } else {
      src.fail(c.span.begin, "unknown clause '" + c.keyword + "'");
    }
  }

  if (prebasis) {
    if (!pf.order_ideal) src.fail(prebasis->span.begin, "'prebasis' needs an 'orderideal' clause");
    if (src.view(prebasis->body).starts_with("[")) {
      pf.prebasis = read_matrix(src, prebasis->body, *pf.order_ideal, pf.ring);
    } else {
      std::vector<Polynomial> gens;
      for (const Span& s : items(src, *prebasis)) gens.push_back(poly(src, s, pf.ring));
      try {
        pf.prebasis = BorderPrebasis::from_polynomials(*pf.order_ideal, gens);
      } catch (const Error& e) {
        src.fail(prebasis->body.begin, e.what());
      }
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace bbs::cli

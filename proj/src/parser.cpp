#include "freepoly/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace freepoly {

namespace {

std::string failure_message(std::size_t line, std::size_t column, const std::vector<std::string>& expected,
                            const std::string& found) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": expected ";
  if (expected.size() == 1) {
    out << expected.front();
  } else {
    out << "one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) out << (i ? ", " : "") << expected[i];
    out << "}";
  }
  out << ", found " << found;
  return out.str();
}

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> lex(const std::string& text, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      j = i + 2;
      t.kind = Tok::Sym;
    } else if (std::string("(){},;+-*/^=").find(ch) != std::string::npos) {
      j = i + 1;
      t.kind = Tok::Sym;
    } else {
      throw ParseFailure(line, column, {"a number", "a variable", "an operator"}, "'" + std::string(1, ch) + "'");
    }
    t.text = text.substr(i, j - i);
    column += j - i;
    i = j;
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

QVec trimmed(QVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

QVec add_padded(const QVec& a, const QVec& b) {
  QVec out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trimmed(std::move(out));
}

using Key = std::pair<std::int64_t, QVec>;

void accumulate(PolyExpr& p, const Key& k, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.terms.erase(it);
  }
}

PolyExpr constant_expr(const CycNum& c) {
  PolyExpr p;
  accumulate(p, {0, {}}, c);
  return p;
}

PolyExpr add_expr(PolyExpr a, const PolyExpr& b) {
  for (const auto& [k, c] : b.terms) accumulate(a, k, c);
  return a;
}

PolyExpr neg_expr(PolyExpr a) {
  for (auto& [k, c] : a.terms) c = -c;
  return a;
}

PolyExpr mul_expr(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr out;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) accumulate(out, {ka.first + kb.first, add_padded(ka.second, kb.second)}, ca * cb);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseFailure(peek().line, peek().column, std::move(expected), describe(peek()));
  }
  [[noreturn]] void error_at(const Token& t, const std::string& what) const {
    throw ParseFailure(t.line, t.column, {what}, describe(t));
  }

  Token take() { return tokens_[pos_++]; }

  void expect_sym(const char* s) {
    if (!at_sym(s)) error({std::string("'") + s + "'"});
    ++pos_;
  }
  void expect_ident(const char* s) {
    if (!at_ident(s)) error({std::string("'") + s + "'"});
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) error({"end of input"});
  }

  Integer integer() {
    if (peek().kind != Tok::Int) error({"an integer"});
    return Integer(take().text);
  }

  std::int64_t small_integer() {
    const Token t = peek();
    const Integer v = integer();
    if (!v.fits_slong_p()) error_at(t, "an integer of moderate size");
    return v.get_si();
  }

  std::int64_t signed_integer() {
    bool neg = false;
    if (at_sym("-")) {
      ++pos_;
      neg = true;
    } else if (at_sym("+")) {
      ++pos_;
    }
    const std::int64_t v = small_integer();
    return neg ? -v : v;
  }

  Rational rational() {
    bool neg = false;
    if (at_sym("-")) {
      ++pos_;
      neg = true;
    }
    Integer num = integer();
    Integer den = 1;
    if (at_sym("/")) {
      ++pos_;
      const Token t = peek();
      den = integer();
      if (den == 0) error_at(t, "a nonzero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  IVec tuple() {
    expect_sym("(");
    IVec out{signed_integer()};
    while (at_sym(",")) {
      ++pos_;
      out.push_back(signed_integer());
    }
    expect_sym(")");
    return out;
  }

  PolyExpr expr() {
    PolyExpr acc = term();
    while (at_sym("+") || at_sym("-")) {
      const bool minus = take().text == "-";
      PolyExpr t = term();
      acc = add_expr(std::move(acc), minus ? neg_expr(std::move(t)) : t);
    }
    return acc;
  }

  PolyExpr term() {
    PolyExpr acc = unary();
    while (at_sym("*") || at_sym("/")) {
      const bool divide = take().text == "/";
      const Token at = peek();
      PolyExpr rhs = unary();
      if (divide) {
        if (rhs.terms.size() != 1) error_at(at, "a single-term divisor");
        const auto& [k, c] = *rhs.terms.begin();
        if (k.first != 0) error_at(at, "a divisor free of y");
        PolyExpr inv;
        accumulate(inv, {0, scale(k.second, Rational(-1))}, c.inverse());
        rhs = std::move(inv);
      }
      acc = mul_expr(acc, rhs);
    }
    return acc;
  }

  PolyExpr unary() {
    if (at_sym("-")) {
      ++pos_;
      return neg_expr(unary());
    }
    if (at_sym("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  PolyExpr power() {
    PolyExpr base = atom();
    if (!at_sym("^")) return base;
    ++pos_;
    const Token at = peek();
    Rational k;
    if (at_sym("(")) {
      ++pos_;
      k = rational();
      expect_sym(")");
    } else if (at_sym("-")) {
      ++pos_;
      k = -Rational(integer());
    } else if (peek().kind == Tok::Int) {
      k = Rational(integer());
    } else {
      error({"an integer exponent", "'('"});
    }
    return raise(base, k, at);
  }

  PolyExpr raise(const PolyExpr& base, const Rational& k, const Token& at) {
    if (k.get_den() == 1 && k >= 0) {
      if (!k.get_num().fits_slong_p()) error_at(at, "a smaller exponent");
      PolyExpr out = constant_expr(CycNum(1));
      for (long i = k.get_num().get_si(); i > 0; --i) out = mul_expr(out, base);
      return out;
    }
    if (base.terms.size() != 1) error_at(at, "a nonnegative integer exponent for a sum");
    const auto& [key, c] = *base.terms.begin();
    const Rational yk = Rational(key.first) * k;
    if (yk.get_den() != 1) error_at(at, "an exponent keeping the y-degree integral");
    CycNum coef;
    if (k.get_den() == 1) {
      coef = c.pow(k.get_num().get_si());
    } else if (c.is_one()) {
      coef = c;
    } else {
      error_at(at, "an integer exponent for a non-unit coefficient");
    }
    PolyExpr out;
    accumulate(out, {yk.get_num().get_si(), trimmed(scale(key.second, k))}, coef);
    return out;
  }

  PolyExpr atom() {
    const Token t = peek();
    if (t.kind == Tok::Int) {
      ++pos_;
      return constant_expr(CycNum(Rational(Integer(t.text))));
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      ++pos_;
      PolyExpr inner = expr();
      expect_sym(")");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      if (t.text == "y") {
        PolyExpr p;
        accumulate(p, {1, {}}, CycNum(1));
        return p;
      }
      if (t.text == "zeta") {
        expect_sym("(");
        const Token at = peek();
        const std::int64_t n = small_integer();
        if (n < 1) error_at(at, "a positive conductor");
        expect_sym(")");
        return constant_expr(root_of_unity(1, n));
      }
      if (t.text[0] == 'x') {
        std::size_t index = 1;
        if (t.text.size() > 1) {
          const std::string digits = t.text.substr(1);
          if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
              digits.size() > 3 || std::stoul(digits) == 0) {
            error_at(t, "a variable x1, x2, ...");
          }
          index = std::stoul(digits);
        }
        QVec v(index, Rational(0));
        v[index - 1] = 1;
        PolyExpr p;
        accumulate(p, {0, v}, CycNum(1));
        return p;
      }
    }
    error({"a number", "a variable", "zeta(N)", "'('"});
  }

  SeriesLiteral series() {
    expect_ident("series");
    expect_sym("(");
    expect_ident("n");
    expect_sym("=");
    const Token at = peek();
    SeriesLiteral s;
    s.denom = small_integer();
    if (s.denom < 1) error_at(at, "a positive denominator");
    while (at_sym(";")) {
      ++pos_;
      if (at_ident("prec")) {
        ++pos_;
        expect_sym("=");
        s.precision = rational();
        continue;
      }
      if (!at_sym("(")) error({"'prec'", "an exponent tuple"});
      const Token tt = peek();
      IVec p = tuple();
      if (!s.terms.empty() && p.size() != s.terms.front().first.size()) error_at(tt, "a tuple of the same length");
      expect_sym("->");
      const Token ct = peek();
      const PolyExpr c = expr();
      if (!c.is_constant()) error_at(ct, "a constant coefficient");
      s.terms.emplace_back(std::move(p), c.terms.empty() ? CycNum() : c.terms.begin()->second);
    }
    expect_sym(")");
    return s;
  }

  ConeLiteral cone() {
    expect_ident("cone");
    expect_sym("{");
    ConeLiteral c;
    c.generators.push_back(tuple());
    while (at_sym(",")) {
      ++pos_;
      const Token at = peek();
      c.generators.push_back(tuple());
      if (c.generators.back().size() != c.generators.front().size()) error_at(at, "a generator of the same length");
    }
    expect_sym("}");
    return c;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename T, typename Fn>
T parse_whole(const std::string& text, std::size_t line, std::size_t column, Fn&& fn) {
  Parser p(lex(text, line, column));
  T out = fn(p);
  p.expect_end();
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParseFailure::ParseFailure(std::size_t line, std::size_t column, std::vector<std::string> expected,
                           const std::string& found)
    : Error(ErrorKind::ParseError, failure_message(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

std::size_t PolyExpr::dim() const {
  std::size_t d = 0;
  for (const auto& [k, c] : terms) d = std::max(d, k.second.size());
  return d;
}

std::int64_t PolyExpr::y_degree() const {
  std::int64_t d = -1;
  for (const auto& [k, c] : terms) d = std::max(d, k.first);
  return d;
}

bool PolyExpr::is_constant() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.first.first == 0 && t.first.second.empty(); });
}

std::size_t SeriesLiteral::dim() const { return terms.empty() ? 0 : terms.front().first.size(); }

std::size_t ParsedInput::dim() const {
  std::size_t d = e.value_or(0);
  if (polynomial) d = std::max(d, polynomial->dim());
  if (series) d = std::max(d, series->dim());
  if (cone) d = std::max(d, cone->dim());
  for (const auto& v : elements) d = std::max(d, v.size());
  return std::max<std::size_t>(d, 1);
}

PolyExpr parse_polynomial(const std::string& text) {
  return parse_whole<PolyExpr>(text, 1, 1, [](Parser& p) { return p.expr(); });
}

SeriesLiteral parse_series(const std::string& text) {
  return parse_whole<SeriesLiteral>(text, 1, 1, [](Parser& p) { return p.series(); });
}

ConeLiteral parse_cone(const std::string& text) {
  return parse_whole<ConeLiteral>(text, 1, 1, [](Parser& p) { return p.cone(); });
}

CycNum parse_constant(const std::string& text) {
  const PolyExpr e = parse_polynomial(text);
  if (!e.is_constant()) throw ParseFailure(1, 1, {"a constant"}, "'" + text + "'");
  return e.terms.empty() ? CycNum() : e.terms.begin()->second;
}

ParsedInput parse_input(const std::string& text, std::size_t first_line) {
  ParsedInput out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = first_line;
  for (; std::getline(in, raw); ++line) {
    const std::string body = strip_comment(raw);
    const std::string item = trim(body);
    if (item.empty()) continue;
    const std::size_t col = body.find_first_not_of(" \t") + 1;
    Parser p(lex(item, line, col));
    const Token head = p.peek();
    auto once = [&](bool already) {
      if (already) throw ParseFailure(head.line, head.column, {"at most one such item per job"}, describe(head));
    };
    if (head.kind == Tok::Ident && head.text == "series") {
      once(out.series.has_value());
      out.series = p.series();
    } else if (head.kind == Tok::Ident && head.text == "cone") {
      once(out.cone.has_value());
      out.cone = p.cone();
    } else if (head.kind == Tok::Ident && item.find('=') != std::string::npos &&
               (head.text == "precision" || head.text == "n" || head.text == "d" || head.text == "e" ||
                head.text == "element")) {
      p.take();
      p.expect_sym("=");
      if (head.text == "precision") {
        const Token at = p.peek();
        out.precision = p.rational();
        if (*out.precision <= 0) p.error_at(at, "a positive precision");
      } else if (head.text == "element") {
        out.elements.push_back(p.tuple());
      } else {
        const Token at = p.peek();
        const std::int64_t v = p.small_integer();
        if (v < 1) p.error_at(at, "a positive integer");
        if (head.text == "n") out.n = v;
        if (head.text == "d") out.d = v;
        if (head.text == "e") out.e = static_cast<std::size_t>(v);
      }
    } else {
      once(out.polynomial.has_value());
      out.polynomial = p.expr();
    }
    p.expect_end();
  }
  return out;
}

std::vector<JobText> split_jobs(const std::string& document) {
  std::vector<JobText> jobs;
  std::istringstream in(document);
  std::string raw;
  std::size_t line = 1;
  JobText cur;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) jobs.push_back(cur);
    cur = JobText{};
    has_content = false;
  };
  for (; std::getline(in, raw); ++line) {
    if (trim(raw) == "---") {
      flush();
      continue;
    }
    if (!has_content && cur.text.empty()) cur.first_line = line;
    cur.text += raw + "\n";
    if (!trim(strip_comment(raw)).empty()) has_content = true;
  }
  flush();
  return jobs;
}

SeriesPoly to_series_poly(const PolyExpr& p, const Ambient& ambient) {
  const std::size_t e = ambient.dim();
  if (p.dim() > e) fail(ErrorKind::InvalidArgument, "the polynomial uses more variables than the ambient dimension");
  const std::int64_t deg = p.y_degree();
  std::vector<std::int64_t> denom(static_cast<std::size_t>(std::max<std::int64_t>(deg + 1, 0)), 1);
  for (const auto& [k, c] : p.terms) {
    if (k.first < 0) fail(ErrorKind::InvalidArgument, "negative power of y");
    for (const auto& q : k.second) {
      denom[static_cast<std::size_t>(k.first)] = lcm_i64(denom[static_cast<std::size_t>(k.first)], q.get_den().get_si());
    }
  }
  std::vector<FracSeries> coeffs;
  for (std::size_t k = 0; k < denom.size(); ++k) coeffs.emplace_back(ambient, denom[k]);
  for (const auto& [k, c] : p.terms) {
    const std::size_t yk = static_cast<std::size_t>(k.first);
    IVec v(e, 0);
    for (std::size_t i = 0; i < k.second.size(); ++i) {
      const Rational scaled = k.second[i] * denom[yk];
      v[i] = scaled.get_num().get_si();
    }
    coeffs[yk].add_term(v, c);
  }
  return SeriesPoly(ambient, std::move(coeffs));
}

FracSeries to_frac_series(const SeriesLiteral& s, const Ambient& ambient) {
  if (s.dim() > ambient.dim()) fail(ErrorKind::InvalidArgument, "the series uses more variables than the ambient dimension");
  FracSeries out(ambient, s.denom);
  for (const auto& [p, c] : s.terms) {
    IVec v(ambient.dim(), 0);
    std::copy(p.begin(), p.end(), v.begin());
    out.add_term(v, c);
  }
  return s.precision ? out.with_precision(*s.precision) : out;
}

Cone to_cone(const ConeLiteral& c) { return Cone(c.dim(), c.generators); }

std::string cone_literal(const Cone& c) {
  std::string out = "cone{";
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < c.dim(); ++j) out += (j ? "," : "") + std::to_string(c.generators()[i][j]);
    out += ")";
  }
  return out + "}";
}

}  // namespace freepoly

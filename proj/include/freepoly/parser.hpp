#pragma once

#include "freepoly/errors.hpp"
#include "freepoly/ypoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace freepoly {

// A syntax error with its position (1-based) and the tokens that would have
// been accepted there.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// A parsed polynomial in y and x_1, x_2, ... with rational x-exponents,
// before an ambient is chosen. Keys are (y-degree, x-exponent), with
// trailing zero exponents trimmed.
struct PolyExpr {
  std::map<std::pair<std::int64_t, QVec>, CycNum> terms;

  std::size_t dim() const;  // largest variable index used
  std::int64_t y_degree() const;
  bool is_constant() const;
};

struct SeriesLiteral {
  std::int64_t denom = 1;
  std::optional<Rational> precision;
  std::vector<std::pair<IVec, CycNum>> terms;

  std::size_t dim() const;
};

struct ConeLiteral {
  std::vector<IVec> generators;
  std::size_t dim() const { return generators.empty() ? 0 : generators.front().size(); }
};

// One job's worth of input lines.
struct ParsedInput {
  std::optional<PolyExpr> polynomial;
  std::optional<SeriesLiteral> series;
  std::optional<ConeLiteral> cone;
  std::optional<Rational> precision;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> d;
  std::optional<std::size_t> e;
  std::vector<IVec> elements;

  std::size_t dim() const;
};

PolyExpr parse_polynomial(const std::string& text);
SeriesLiteral parse_series(const std::string& text);
ConeLiteral parse_cone(const std::string& text);
CycNum parse_constant(const std::string& text);

// Items are one per line: a polynomial, a series literal, a cone literal,
// or a directive "precision = P/Q", "n = N", "d = D", "e = E",
// "element = (a,b,...)". '#' starts a comment. `first_line` offsets the
// reported positions.
ParsedInput parse_input(const std::string& text, std::size_t first_line = 1);

struct JobText {
  std::string text;
  std::size_t first_line = 1;
};

// Splits a document into jobs at lines consisting of "---".
std::vector<JobText> split_jobs(const std::string& document);

SeriesPoly to_series_poly(const PolyExpr& p, const Ambient& ambient);
FracSeries to_frac_series(const SeriesLiteral& s, const Ambient& ambient);
Cone to_cone(const ConeLiteral& c);

std::string cone_literal(const Cone& c);

}  // namespace freepoly

#pragma once

#include "freepoly/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freepoly {

// A polynomial in y whose coefficients are series over one ambient;
// coeffs()[k] multiplies y^k.
class SeriesPoly {
 public:
  explicit SeriesPoly(Ambient ambient);
  SeriesPoly(Ambient ambient, std::vector<FracSeries> coeffs);

  static SeriesPoly constant(const FracSeries& c);
  static SeriesPoly y_power(const Ambient& ambient, std::size_t k);

  const Ambient& ambient() const { return ambient_; }
  std::size_t dim() const { return ambient_.dim(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FracSeries>& coeffs() const { return coeffs_; }
  FracSeries coeff(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  bool is_exact() const;
  bool has_integer_exponents() const;
  std::optional<Rational> precision() const;

  SeriesPoly derivative() const;
  SeriesPoly with_precision(const std::optional<Rational>& bound) const;
  SeriesPoly rebased(const Ambient& target) const;

  FracSeries eval_at(const FracSeries& z) const;

  SeriesPoly operator-() const;
  SeriesPoly& operator+=(const SeriesPoly& rhs);
  SeriesPoly& operator-=(const SeriesPoly& rhs);
  SeriesPoly& operator*=(const FracSeries& c);

  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(SeriesPoly a, const FracSeries& c) { return a *= c; }
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b);

  // Expression text, e.g. "y^2 - x1*x2".
  std::string to_string() const;

 private:
  void trim();

  Ambient ambient_;
  std::vector<FracSeries> coeffs_;
};

// Expression text of a series, e.g. "x1^(1/2)*x2^(1/2) + x1^(3/4)*x2^(3/4)".
std::string series_expression(const FracSeries& s);

FracSeries eval_at(const SeriesPoly& f, const FracSeries& z);

// Res_y(f, g) as the determinant of the Sylvester matrix, expanded without
// division. With `cap`, every entry and product is truncated below that
// weight; the result is then exact below the cap.
FracSeries resultant_y(const SeriesPoly& f, const SeriesPoly& g, const std::optional<Rational>& cap = std::nullopt);
FracSeries discriminant_y(const SeriesPoly& f);

// Order of Res_y(f, g), found with successively larger caps. Throws DividesF
// when the resultant vanishes.
QVec resultant_order(const SeriesPoly& f, const SeriesPoly& g);

// Division by a monic polynomial: a = q*g + r with deg r < deg g.
std::pair<SeriesPoly, SeriesPoly> divmod_monic(const SeriesPoly& a, const SeriesPoly& g);

// f = g^d + a_1 g^(d-1) + ... + a_d; returns (a_1, ..., a_d).
std::vector<SeriesPoly> g_adic_expansion(const SeriesPoly& f, const SeriesPoly& g, std::int64_t d);
SeriesPoly tschirnhausen(const SeriesPoly& f, const SeriesPoly& g, std::int64_t d);
SeriesPoly approximate_root(const SeriesPoly& f, std::int64_t d);

// Expansion of g in products G_1^b_1 ... G_k^b_k with series coefficients.
// The polynomials must have strictly increasing degrees, each dividing the
// next; the last one (typically f) may carry an unbounded exponent when
// `last_unbounded` is set, otherwise deg g must stay below deg G_k times
// deg G_k / deg G_(k-1).
using GAdicExpansion = std::map<IVec, FracSeries>;
GAdicExpansion G_adic_expansion(const SeriesPoly& g, const std::vector<SeriesPoly>& G, bool last_unbounded = false);
SeriesPoly reconstruct(const GAdicExpansion& expansion, const std::vector<SeriesPoly>& G, const Ambient& ambient);

// Product of (Y - z) over the distinct conjugates z of y.
SeriesPoly minimal_polynomial(const FracSeries& y, std::int64_t n);
SeriesPoly polynomial_from_roots(const Ambient& ambient, const std::vector<FracSeries>& roots);

}  // namespace freepoly

#pragma once

#include "freepoly/cone.hpp"
#include "freepoly/cyclotomic.hpp"
#include "freepoly/types.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace freepoly {

// Leading data of a series: O(z), LM(z) = x^exponent/denom, LC(z).
struct OrderData {
  bool minus_infinity = false;  // z == 0 exactly
  QVec order;
  IVec exponent;
  std::int64_t denom = 1;
  CycNum lc;
};

// A truncated series sum c_p x^(p/denom) with p in the ambient cone and
// coefficients in Q(zeta). Every term of weight below `precision` is present
// and exact; nothing is asserted at or above it. An absent precision means
// the series is exact (finite support).
class FracSeries {
 public:
  using Terms = std::map<IVec, CycNum>;

  explicit FracSeries(Ambient ambient, std::int64_t denom = 1);

  static FracSeries constant(const Ambient& ambient, const CycNum& c);
  static FracSeries monomial(const Ambient& ambient, const IVec& p, std::int64_t denom, const CycNum& c);

  const Ambient& ambient() const { return ambient_; }
  const OrderSpec& order() const { return ambient_.order(); }
  std::size_t dim() const { return ambient_.dim(); }
  std::int64_t denom() const { return denom_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_exact() const { return !precision_.has_value(); }
  const std::optional<Rational>& precision() const { return precision_; }

  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  bool has_no_terms() const { return terms_.empty(); }

  // Adds c*x^(p/denom), checking cone membership; terms at or above the
  // precision are dropped.
  void add_term(const IVec& p, const CycNum& c);
  CycNum coefficient(const IVec& p) const;

  Rational term_weight(const IVec& p) const;
  // Weight of O(z); for a series without terms, its precision (or nullopt
  // when exactly zero).
  std::optional<Rational> valuation_bound() const;

  FracSeries with_precision(const std::optional<Rational>& bound) const;
  FracSeries with_denom(std::int64_t denom) const;
  FracSeries with_min_denom() const;
  bool has_integer_exponents() const;

  // Same exponents read in another ambient (the cone must contain them).
  // The precision is rescaled so the guarantee stays sound.
  FracSeries rebased(const Ambient& target) const;

  // Applies an integer linear map to every exponent numerator. The caller
  // supplies the resulting precision.
  FracSeries transformed(const Ambient& target, const std::function<IVec(const IVec&)>& map,
                         std::optional<Rational> precision) const;

  OrderData order_data() const;

  FracSeries truncate_below(const QVec& m) const;

  // theta(x_i^(1/denom)) = omega_i x_i^(1/denom), omega_i a denom-th root of
  // unity.
  FracSeries apply_automorphism(std::span<const CycNum> omega) const;
  // Same action with omega_i = zeta_n^k_i; the denominator must divide n.
  FracSeries apply_root_action(std::span<const std::int64_t> k, std::int64_t n) const;

  FracSeries operator-() const;
  FracSeries& operator+=(const FracSeries& rhs);
  FracSeries& operator-=(const FracSeries& rhs);
  FracSeries& operator*=(const FracSeries& rhs);
  FracSeries& operator*=(const CycNum& c);

  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  // Product with every term of weight >= cap discarded (and the precision
  // lowered to cap accordingly).
  friend FracSeries multiply(const FracSeries& a, const FracSeries& b, const std::optional<Rational>& cap);
  friend FracSeries operator*(FracSeries a, const CycNum& c) { return a *= c; }

  // Structural equality: same terms (after a common denominator) and same
  // precision.
  friend bool operator==(const FracSeries& a, const FracSeries& b);

  // Series literal, e.g. "series(n=4; (2,2) -> 1; (3,3) -> 1)".
  std::string to_string() const;

 private:
  void check_compatible(const FracSeries& rhs) const;
  void drop_at_or_above_precision();

  Ambient ambient_;
  std::int64_t denom_ = 1;
  Terms terms_;
  std::optional<Rational> precision_;
};

FracSeries multiply(const FracSeries& a, const FracSeries& b, const std::optional<Rational>& cap);

// Agreement on the region both series guarantee.
bool equal_to_precision(const FracSeries& a, const FracSeries& b);

OrderData order_data(const FracSeries& z);

enum class SeriesOp { Add, Mul };
FracSeries series_arith(SeriesOp op, const FracSeries& a, const FracSeries& b);

FracSeries truncate_below(const FracSeries& y, const QVec& m);
FracSeries apply_automorphism(const FracSeries& y, std::span<const CycNum> omega);

// Distinct images of y under all n^e automorphisms, y first. Images that
// agree on the guaranteed region are identified.
std::vector<FracSeries> conjugates(const FracSeries& y, std::int64_t n);

// Enumerates every k in [0, n)^e in lexicographic order.
void for_each_root_action(std::size_t e, std::int64_t n, const std::function<void(const IVec&)>& visit);

}  // namespace freepoly

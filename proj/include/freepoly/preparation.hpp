#pragma once

#include "freepoly/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace freepoly {

struct HomogeneousParts {
  std::int64_t a = 0;                          // lowest degree with a nonzero part
  std::map<std::int64_t, FracSeries> parts;    // complete parts only, by total degree
};

// Splits a series with integer exponents in the orthant by total degree.
// Throws PrecisionExhausted when the lowest part is not fully known.
HomogeneousParts homogeneous_parts(const FracSeries& delta);

struct QuasiOrdinary {
  bool quasi_ordinary = false;
  std::optional<IVec> alpha;  // Delta = x^alpha * unit
  bool exact = true;          // false when decided only below the precision
};

QuasiOrdinary is_quasi_ordinary(const SeriesPoly& f);

struct PrepResult {
  std::int64_t t = 0;
  SeriesPoly sheared = SeriesPoly(Ambient::orthant(1));
  std::int64_t a = 0;
  CycNum epsilon_a_at_t;
  FracSeries u_a = FracSeries(Ambient::orthant(1));
};

// x_i -> x_i + t x_1 (i >= 2), applied to every coefficient.
SeriesPoly shear(const SeriesPoly& f, std::int64_t t);
PrepResult prepare_shear(const SeriesPoly& f);

// F(X, y) = f(X_1, X_2 X_1, ..., X_e X_1, y); throws
// NotQuasiOrdinaryAfterBlowup when F fails the quasi-ordinary test.
SeriesPoly blowup(const SeriesPoly& f);
SeriesPoly blowup_unchecked(const SeriesPoly& f);

// Exponent (a_1, ..., a_e) -> (a_1 - (a_2 + ... + a_e), a_2, ..., a_e), landing
// in the standard blowup cone.
FracSeries unblow_series(const FracSeries& Y);
FracSeries unblow_series(const FracSeries& Y, const Ambient& target);
SeriesPoly unblow_poly(const SeriesPoly& F, const Ambient& target);

// A root of a quasi-ordinary F in K[[X^(1/n)]], with every term of weight
// below T present. Exact when the expansion terminates.
FracSeries qo_root_expand(const SeriesPoly& F, const Rational& T);

struct Certificate {
  bool free = false;
  std::int64_t n = 0;
  std::optional<Rational> precision;
  std::vector<Check> checks;
  std::size_t conjugate_count = 0;
  std::vector<SeriesPoly> factors;  // orbit factorization when not free
};

Certificate free_certificate(const SeriesPoly& f, std::int64_t n, const FracSeries& root);
// Throws NotFree naming the failing check.
Certificate certify_free(const SeriesPoly& f, std::int64_t n, const FracSeries& root);

// The route from an input polynomial over the orthant to a root in an
// ambient where f is free.
struct Pipeline {
  SeriesPoly input = SeriesPoly(Ambient::orthant(1));
  bool input_quasi_ordinary = false;
  std::optional<PrepResult> prep;
  std::optional<SeriesPoly> blown;
  std::optional<FracSeries> blown_root;
  SeriesPoly f = SeriesPoly(Ambient::orthant(1));  // prepared f, in the root's ambient
  FracSeries root = FracSeries(Ambient::orthant(1));
};

Pipeline run_pipeline(const SeriesPoly& f, const Rational& T);

struct AppCheck {
  SeriesPoly app = SeriesPoly(Ambient::orthant(1));
  SeriesPoly app_via_blowup = SeriesPoly(Ambient::orthant(1));
  bool transformed = false;
  Certificate certificate;
};

// App(f, d) computed directly and through the blowup; throws AppMismatch if
// they differ, then certifies App(f, d) free.
AppCheck free_approximate_root_check(const SeriesPoly& f, std::int64_t d, const Rational& T);

// Default precision: 4 * (largest weight of an input exponent + 1).
Rational default_precision(const SeriesPoly& f);

}  // namespace freepoly

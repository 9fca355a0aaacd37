#pragma once

#include "freepoly/parser.hpp"
#include "freepoly/preparation.hpp"

#include <string>

namespace freepoly::testing {

inline SeriesPoly poly(const std::string& text, std::size_t e) {
  return to_series_poly(parse_polynomial(text), Ambient::orthant(e));
}

inline SeriesPoly poly(const std::string& text, const Ambient& ambient) {
  return to_series_poly(parse_polynomial(text), ambient);
}

inline FracSeries series(const std::string& text, const Ambient& ambient) {
  return to_frac_series(parse_series(text), ambient);
}

inline FracSeries series(const std::string& text, std::size_t e) { return series(text, Ambient::orthant(e)); }

inline QVec qv(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline QVec qv(std::initializer_list<Rational> v) { return QVec(v); }

}  // namespace freepoly::testing

#include "doctest.h"

#include "support.hpp"

#include "freepoly/errors.hpp"

using namespace freepoly;
using namespace freepoly::testing;

TEST_CASE("arithmetic and evaluation") {
  const SeriesPoly f = poly("y^2 - x1*x2", 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_monic());
  const FracSeries y = series("series(n=2; (1,1) -> 1)", 2);
  CHECK(f.eval_at(y).is_exact_zero());
  CHECK(poly("(y - x1)*(y + x1)", 2) == poly("y^2 - x1^2", 2));
  CHECK(poly("y^3 + x1*y", 1).derivative() == poly("3*y^2 + x1", 1));
}

TEST_CASE("resultants and discriminants") {
  CHECK(discriminant_y(poly("y^2 - x^3", 1)) == series("series(n=1; (3) -> -4)", 1));
  CHECK(discriminant_y(poly("y^2 - x2", 2)) == series("series(n=1; (0,1) -> -4)", 2));
  const SeriesPoly f = poly("y^2 - x^3", 1);
  CHECK(resultant_y(f, poly("y", 1)) == series("series(n=1; (3) -> -1)", 1));
  CHECK(resultant_order(f, poly("y", 1)) == QVec{3});
  CHECK(resultant_order(f, poly("y^2 - x^2", 1)) == QVec{4});
  CHECK_THROWS_AS(resultant_order(f, f), Error);
}

TEST_CASE("resultant equals the product over roots") {
  // Res(f, g) = prod g(root) for monic f.
  const Ambient a = Ambient::orthant(1);
  const FracSeries y = series("series(n=3; (2) -> 1; (4) -> 1)", a);
  const SeriesPoly f = minimal_polynomial(y, 3);
  const SeriesPoly g = poly("y^2 + x*y - x^3", a);
  FracSeries prod = FracSeries::constant(a, CycNum(1));
  for (const auto& z : conjugates(y, 3)) prod = prod * g.eval_at(z);
  CHECK(resultant_y(f, g) == prod.with_min_denom());
}

TEST_CASE("Sylvester and multiplication-matrix routes agree") {
  // Res(c f, g) = c^deg g Res(f, g); a non-monic first argument takes the
  // Sylvester determinant.
  const Ambient a = Ambient::orthant(2);
  const SeriesPoly f = poly("y^3 - x1*y + x2^2", a);
  const SeriesPoly g = poly("y^2 + x1*x2*y - x1^3", a);
  const SeriesPoly f2 = f * FracSeries::constant(a, CycNum(2));
  CHECK(resultant_y(f2, g) == resultant_y(f, g) * CycNum(4));
  CHECK(resultant_y(f, g, Rational(7)) == resultant_y(f, g).with_precision(Rational(7)));
}

TEST_CASE("euclidean division") {
  const SeriesPoly a = poly("y^5 + x1*y^2 + 3", 1);
  const SeriesPoly g = poly("y^2 - x1", 1);
  const auto [q, r] = divmod_monic(a, g);
  CHECK(r.degree() < 2);
  CHECK(q * g + r == a);
}

TEST_CASE("g-adic expansion and Tschirnhausen") {
  const SeriesPoly f = poly("y^4 - 2*x1*x2*y^2 - 4*x1^2*x2^2*y + x1^2*x2^2 - x1^3*x2^3", 2);
  const SeriesPoly g = poly("y^2 - x1*x2", 2);
  const auto as = g_adic_expansion(f, g, 2);
  REQUIRE(as.size() == 2);
  CHECK(as[0].degree() < 2);
  CHECK(as[0].is_zero());
  CHECK(g * g + as[1] == f);
  CHECK(approximate_root(f, 2) == g);
  CHECK(approximate_root(f, 4) == poly("y", 2));
  CHECK(approximate_root(f, 1) == f);
}

TEST_CASE("approximate root of a shifted square") {
  // App((y^2 + x y)^2 + x^5, 2) = y^2 + x y.
  const SeriesPoly f = poly("(y^2 + x*y)^2 + x^5", 1);
  CHECK(approximate_root(f, 2) == poly("y^2 + x*y", 1));
  CHECK(approximate_root(f, 4) == poly("y + 1/2*x", 1));
}

TEST_CASE("multi-adic expansion reconstructs") {
  const Ambient a = Ambient::orthant(2);
  const SeriesPoly f = poly("y^4 - 2*x1*x2*y^2 - 4*x1^2*x2^2*y + x1^2*x2^2 - x1^3*x2^3", a);
  const std::vector<SeriesPoly> G{poly("y", a), poly("y^2 - x1*x2", a), f};
  const SeriesPoly g = poly("y^7 + x1*y^3 - x2", a);
  const GAdicExpansion ex = G_adic_expansion(g, G, true);
  CHECK(reconstruct(ex, G, a) == g);
  for (const auto& [b, c] : ex) {
    CHECK(b[0] < 2);
    CHECK(b[1] < 2);
  }
}

TEST_CASE("minimal polynomials") {
  const FracSeries y = series("series(n=4; (2,2) -> 1; (3,3) -> 1)", 2);
  CHECK(minimal_polynomial(y, 4) == poly("y^4 - 2*x1*x2*y^2 - 4*x1^2*x2^2*y + x1^2*x2^2 - x1^3*x2^3", 2));
  CHECK(minimal_polynomial(series("series(n=2; (3) -> 1)", 1), 2) == poly("y^2 - x^3", 1));
  CHECK(polynomial_from_roots(Ambient::orthant(1), {series("series(n=1; (1) -> 1)", 1)}) == poly("y - x", 1));
}

TEST_CASE("text round trip") {
  for (const char* s : {"y^2 - x1*x2", "y^3 - 1/2*x1^2*y + zeta(3)*x2", "y^2 - x1^(1/2)*x2"}) {
    const SeriesPoly f = poly(s, 2);
    CHECK(poly(f.to_string(), 2) == f);
  }
}

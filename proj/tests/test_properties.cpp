#include "doctest.h"

#include "random_suite.hpp"
#include "support.hpp"

using namespace freepoly;
using namespace freepoly::testing;

TEST_CASE("random free polynomials satisfy every identity") {
  Rng rng(20240611);
  std::map<std::pair<std::int64_t, std::size_t>, int> seen;
  int blown = 0;
  for (int t = 0; t < 240; ++t) {
    const RandomCase rc = random_case(rng);
    ++seen[{rc.n, rc.e}];
    blown += rc.blowup_cone;
    for (const auto& msg : check_case(rc, rng)) FAIL_CHECK(msg);
  }
  CHECK(seen.size() == 12);
  CHECK(blown > 0);
}

TEST_CASE("series arithmetic is a commutative ring") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Ambient a = t % 2 ? Ambient::orthant(2) : Ambient::blowup(2);
    const FracSeries p = random_integer_series(rng, a, 3), q = random_integer_series(rng, a, 3),
                     s = random_integer_series(rng, a, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p + q) - q == p);
  }
}

TEST_CASE("order of a product is the sum of orders") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Ambient a = t % 2 ? Ambient::orthant(3) : Ambient::blowup(3);
    const FracSeries p = random_integer_series(rng, a, 3), q = random_integer_series(rng, a, 3);
    if (p.has_no_terms() || q.has_no_terms()) continue;
    CHECK((p * q).order_data().order == add(p.order_data().order, q.order_data().order));
  }
}

TEST_CASE("compatible order is additive and positive on cone points") {
  Rng rng(8);
  for (std::size_t e = 1; e <= 4; ++e) {
    const Ambient a = Ambient::blowup(e);
    const IVec zero(e, 0);
    for (int t = 0; t < 250; ++t) {
      const IVec p = cone_point(rng, a, 4), q = cone_point(rng, a, 4), s = cone_point(rng, a, 4);
      if (p != zero) CHECK(a.order().compare(p, zero) > 0);
      CHECK(a.order().compare(p, q) == a.order().compare(add(p, s), add(q, s)));
    }
  }
}

TEST_CASE("blowup of prepared polynomials is quasi-ordinary and unblows to the input") {
  Rng rng(9);
  int prepared = 0;
  for (int t = 0; t < 60; ++t) {
    // y^2 - (s^2 x1^a + c x2^a + higher), with a random degree a.
    const std::int64_t a = 1 + t % 3;
    const Ambient orth = Ambient::orthant(2);
    FracSeries c0(orth);
    const Rational s = random_coefficient(rng);
    c0.add_term(IVec{a, 0}, CycNum(-s * s));
    c0.add_term(IVec{0, a}, CycNum(random_coefficient(rng)));
    if (rng() % 2) c0.add_term(IVec{a, 1}, CycNum(random_coefficient(rng)));
    std::vector<FracSeries> c{c0, FracSeries(orth), FracSeries::constant(orth, CycNum(1))};
    const SeriesPoly f(orth, c);
    const PrepResult p = prepare_shear(f);
    const SeriesPoly F = blowup(p.sheared);
    CHECK(is_quasi_ordinary(F).quasi_ordinary);
    CHECK(unblow_poly(F, Ambient::blowup(2)) == p.sheared.rebased(Ambient::blowup(2)));
    prepared += p.t == 0;
    const Pipeline pl = run_pipeline(f, 10);
    for (const auto& [e, v] : pl.root.terms()) CHECK(standard_blowup_cone(2).contains(e));
    const FracSeries res = pl.f.eval_at(pl.root);
    CHECK(res.has_no_terms());
    REQUIRE(pl.blown_root);
    const FracSeries up = pl.blown->eval_at(*pl.blown_root);
    CHECK(*up.valuation_bound() >= 10);
  }
  CHECK(prepared > 0);
}

TEST_CASE("printed polynomials and series parse back") {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const Ambient a = Ambient::orthant(1 + t % 3);
    const SeriesPoly g = random_test_polynomial(rng, a, 4);
    CHECK(poly(g.to_string(), a) == g);
    const RandomCase rc = random_case(rng);
    CHECK(series(rc.y.to_string(), rc.ambient) == rc.y);
  }
}

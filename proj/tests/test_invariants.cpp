#include "doctest.h"

#include "support.hpp"

#include "freepoly/errors.hpp"

using namespace freepoly;
using namespace freepoly::testing;

namespace {

const char* kF3 = "y^4 - 2*x1*x2*y^2 - 4*x1^2*x2^2*y + x1^2*x2^2 - x1^3*x2^3";
const char* kF3Root = "series(n=4; (2,2) -> 1; (3,3) -> 1)";

}  // namespace

TEST_CASE("characteristic exponents") {
  const FracSeries y = series(kF3Root, 2);
  const CharData cd = characteristic_data(y, 4);
  CHECK(cd.m == std::vector<IVec>{{2, 2}, {3, 3}});
  CHECK(characteristic_data_by_lattice(y, 4).m == characteristic_data_by_conjugates(y, 4).m);
  const FracSeries z = series("series(n=4; (2,0) -> 1; (0,2) -> 1; (1,3) -> 1)", 2);
  CHECK(characteristic_data(z, 4).m == std::vector<IVec>{{0, 2}, {2, 0}, {1, 3}});
}

TEST_CASE("minor gcd and sequences") {
  CHECK(minor_gcd(4, 2, {}) == 16);
  CHECK(minor_gcd(4, 2, {{2, 2}}) == 8);
  CHECK(minor_gcd(4, 2, {{2, 2}, {3, 3}}) == 4);
  const SequencePack s = gcd_sequences(4, 2, {{2, 2}, {3, 3}});
  CHECK(s.D == std::vector<std::int64_t>{16, 8, 4});
  CHECK(s.d == std::vector<std::int64_t>{4, 2, 1});
  CHECK(s.e_seq == std::vector<std::int64_t>{2, 2});
  CHECK(s.r == std::vector<IVec>{{2, 2}, {5, 5}});
  CHECK(s.generators() == std::vector<IVec>{{4, 0}, {0, 4}, {2, 2}, {5, 5}});
  CHECK_THROWS_AS(gcd_sequences(4, 2, {{2, 2}, {4, 4}}), Error);
}

TEST_CASE("lattice membership") {
  const auto m = lattice_membership(4, {{2, 2}}, IVec{5, 5});
  CHECK_FALSE(m.member);
  CHECK(m.multiple == 2);
  CHECK(lattice_membership(4, {{2, 2}}, IVec{6, 2}).member);
  CHECK(lattice_membership(2, {}, IVec{3}).multiple == 2);
}

TEST_CASE("galois counts against a direct count") {
  const FracSeries y = series(kF3Root, 2);
  const CharData cd = characteristic_data(y, 4);
  const SequencePack seq = gcd_sequences(4, 2, cd.m);
  const GaloisCounts g = galois_counts(y, cd, seq);
  CHECK(g.R == std::vector<std::int64_t>{16, 8});
  CHECK(g.S == std::vector<std::int64_t>{8, 4});
  CHECK(g.R_tilde == std::vector<std::int64_t>{4, 2});
  CHECK(g.S_tilde == std::vector<std::int64_t>{2, 1});
  // Direct: theta fixes x^(2/4) (x1 x2) iff k1 + k2 is even, and x^(3/4) part iff 3(k1+k2) = 0 mod 4.
  std::int64_t r2 = 0;
  for (int k1 = 0; k1 < 4; ++k1) {
    for (int k2 = 0; k2 < 4; ++k2) r2 += (2 * (k1 + k2)) % 4 == 0;
  }
  CHECK(r2 == 8);
}

TEST_CASE("order pairs and pseudo-roots") {
  const Ambient a = Ambient::orthant(2);
  const FracSeries y = series(kF3Root, a);
  const CharData cd = characteristic_data(y, 4);
  CHECK(pseudo_root(y, cd, 1) == poly("y", a));
  CHECK(pseudo_root(y, cd, 2) == poly("y^2 - x1*x2", a));
  CHECK(order_pair(y, 4, poly("y^2 - x1*x2", a)) == qv({5, 5}));
  CHECK(order_pair(y, 4, poly("y", a)) == qv({2, 2}));
  CHECK_THROWS_AS(order_pair(y, 4, poly(kF3, a)), Error);
}

TEST_CASE("semigroup representation") {
  const FreeAnalysis an = analyze_free(poly(kF3, 2), series(kF3Root, 2));
  REQUIRE(an.all_pass());
  const SemigroupDesc s = semigroup_generators(an);
  const auto rep = semigroup_representation(s, IVec{6, 6});
  REQUIRE(rep);
  CHECK(semigroup_element(s, *rep) == IVec{6, 6});
  CHECK_FALSE(semigroup_representation(s, IVec{1, 1}));
  CHECK_FALSE(semigroup_representation(s, IVec{3, 3}));
  CHECK(semigroup_representation(s, IVec{7, 7}));
  for (const auto& g : s.generators()) CHECK(semigroup_representation(s, g));
}

TEST_CASE("expansion order") {
  const Ambient a = Ambient::orthant(2);
  const FreeAnalysis an = analyze_free(poly(kF3, a), series(kF3Root, a));
  std::vector<SeriesPoly> G = an.pseudo_roots;
  const SeriesPoly g = poly("y^3 + x1^2*x2*y", a);
  CHECK(expansion_order(an.root, 4, G, an.seq, an.f, g) == order_pair(an.root, 4, g));
}

TEST_CASE("full analysis of small cases") {
  const FreeAnalysis cusp = analyze_free(poly("y^2 - x^3", 1), series("series(n=2; (3) -> 1)", 1));
  CHECK(cusp.all_pass());
  CHECK(cusp.seq.generators() == std::vector<IVec>{{2}, {3}});
  const FreeAnalysis qo = analyze_free(poly("y^2 - x1*x2", 2), series("series(n=2; (1,1) -> 1)", 2));
  CHECK(qo.all_pass());
  CHECK(qo.seq.D == std::vector<std::int64_t>{4, 2});
  const FreeAnalysis lin = analyze_free(poly("y - x1", 1), series("series(n=1; (1) -> 1)", 1));
  CHECK(lin.chars.h() == 0);
  CHECK(lin.all_pass());
}

TEST_CASE("wrong root is caught") {
  const FreeAnalysis bad = analyze_free(poly("y^2 - x^3", 1), series("series(n=2; (3) -> 2)", 1));
  CHECK_FALSE(bad.all_pass());
  CHECK_THROWS_AS(semigroup_generators(bad), Error);
}

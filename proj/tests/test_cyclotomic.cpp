#include "doctest.h"

#include "freepoly/cyclotomic.hpp"
#include "freepoly/errors.hpp"

#include <random>

using namespace freepoly;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::int64_t n = 1; n <= 30; ++n) {
    CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }
}

TEST_CASE("roots of unity") {
  const CycNum i = root_of_unity(1, 4);
  CHECK(i * i == CycNum(-1));
  CHECK(root_of_unity(3, 12).pow(4) == CycNum(1));
  CHECK(root_of_unity(2, 4) == CycNum(-1));
  const CycNum w = root_of_unity(1, 3);
  CHECK(CycNum(1) + w + w * w == CycNum(0));
  CHECK(root_of_unity(2, 6) == w.lifted(6));
  CHECK((w * w.inverse()).is_one());
  CHECK(root_of_unity(5, 12).pow(12).is_one());
  CHECK(root_of_unity(7, 12).pow(-1) == root_of_unity(5, 12));
}

TEST_CASE("mixed conductors lift to the lcm") {
  const CycNum a = root_of_unity(1, 4) + root_of_unity(1, 3);
  CHECK(a.conductor() == 12);
  CHECK((a - root_of_unity(1, 3)) == root_of_unity(1, 4));
  CHECK((root_of_unity(1, 4) * root_of_unity(1, 4)).lowered().conductor() == 1);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(CycNum(0).inverse(), Error);
  try {
    (void)(CycNum(3) / CycNum(0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  const std::int64_t conductors[] = {1, 3, 4, 5, 8, 12};
  auto random_element = [&](std::int64_t n) {
    std::vector<Rational> c;
    for (std::int64_t k = 0; k < euler_phi(n); ++k) c.push_back(make_rational(coef(rng), 1 + (coef(rng) + 5) % 3));
    return CycNum(n, c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = conductors[trial % 6];
    const CycNum a = random_element(n), b = random_element(n), c = random_element(n);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == CycNum(0));
  }
}

TEST_CASE("rational times root of unity") {
  Rational r;
  std::int64_t s = 0, m = 0;
  CHECK(split_rational_times_root_of_unity(CycNum(make_rational(-3, 2)), r, s, m));
  CHECK(r * Rational(1) == (r > 0 ? make_rational(3, 2) : make_rational(-3, 2)));
  const CycNum v = root_of_unity(1, 3) * CycNum(5);
  REQUIRE(split_rational_times_root_of_unity(v, r, s, m));
  CHECK(root_of_unity(s, m) * CycNum(r) == v);
  CHECK_FALSE(split_rational_times_root_of_unity(CycNum(1) + root_of_unity(1, 5), r, s, m));
}

TEST_CASE("text") {
  CHECK(CycNum(make_rational(1, 2)).to_string() == "1/2");
  CHECK(root_of_unity(1, 4).to_string().find("zeta(4)") != std::string::npos);
}

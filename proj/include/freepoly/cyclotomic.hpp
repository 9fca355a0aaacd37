#pragma once

#include "freepoly/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freepoly {

std::int64_t euler_phi(std::int64_t n);

// Integer coefficients of the N-th cyclotomic polynomial, constant term
// first. Memoized; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

// An exact element of Q(zeta_N), stored as its residue modulo Phi_N in the
// power basis 1, zeta_N, ..., zeta_N^(phi(N)-1).
//
// Arithmetic on operands of different conductors lifts both to the lcm. The
// conductor of a result is never lowered implicitly; `lowered()` does so
// explicitly when the value is rational.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)
  CycNum(std::int64_t conductor, std::vector<Rational> coeffs);

  static CycNum root_of_unity(std::int64_t k, std::int64_t conductor);

  std::int64_t conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& rational_value() const;

  CycNum lifted(std::int64_t conductor) const;
  CycNum lowered() const;

  CycNum inverse() const;
  CycNum pow(std::int64_t k) const;
  CycNum times_root_of_unity(std::int64_t k, std::int64_t conductor) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  // Text in the input grammar, e.g. "1/2 - 3*zeta(4)".
  std::string to_string() const;

 private:
  std::int64_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

CycNum root_of_unity(std::int64_t k, std::int64_t conductor);

enum class CycOp { Add, Sub, Mul, Div };
CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum& b);

// Finds s and a rational r with value == r * zeta_M^s for some M dividing
// 2*conductor; returns false when value is not of that shape.
bool split_rational_times_root_of_unity(const CycNum& value, Rational& r, std::int64_t& s,
                                        std::int64_t& m);

}  // namespace freepoly

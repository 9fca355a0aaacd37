#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace freepoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vectors. Series exponents are stored as integer vectors over a
// shared denominator; rational vectors appear at API boundaries.
using IVec = std::vector<std::int64_t>;
using QVec = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

QVec to_qvec(const IVec& v, std::int64_t denom = 1);
bool is_integral(const QVec& v);
IVec to_ivec(const QVec& v);  // requires is_integral(v)

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, std::int64_t k);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rational& k);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

}  // namespace freepoly

#include "freepoly/types.hpp"

#include "freepoly/errors.hpp"

#include <numeric>

namespace freepoly {

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    fail(ErrorKind::InvalidArgument, "not a rational literal: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

QVec to_qvec(const IVec& v, std::int64_t denom) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) {
    out.push_back(make_rational(x, denom));
  }
  return out;
}

bool is_integral(const QVec& v) {
  for (const auto& q : v) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

IVec to_ivec(const QVec& v) {
  IVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      fail(ErrorKind::InvalidArgument, "vector component " + to_string(q) + " is not a machine integer");
    }
    out.push_back(q.get_num().get_si());
  }
  return out;
}

IVec add(const IVec& a, const IVec& b) {
  IVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

IVec scale(const IVec& a, std::int64_t k) {
  IVec out(a);
  for (auto& x : out) x *= k;
  return out;
}

QVec add(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

QVec scale(const QVec& a, const Rational& k) {
  QVec out(a);
  for (auto& x : out) x *= k;
  return out;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace freepoly

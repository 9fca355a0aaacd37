#include "freepoly/cyclotomic.hpp"

#include "freepoly/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace freepoly {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces p in place modulo the monic integer polynomial `mod`, leaving
// exactly deg(mod) coefficients.
void reduce_mod(QPoly& p, const std::vector<std::int64_t>& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod[j] != 0) p[k - deg + j] -= c * static_cast<long>(mod[j]);
    }
    p[k] = 0;
  }
  p.resize(deg);
}

std::int64_t normalize_exponent(std::int64_t k, std::int64_t n) {
  k %= n;
  return k < 0 ? k + n : k;
}

// q, r with a = q*b + r over Q; b nonzero.
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  QPoly bb = b;
  trim(bb);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Rational(0));
  while (r.size() >= bb.size() && !r.empty()) {
    const std::size_t shift = r.size() - bb.size();
    const Rational c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] -= c * bb[j];
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "euler_phi of non-positive integer");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<const std::vector<std::int64_t>>> table;
  if (n < 1) fail(ErrorKind::InvalidArgument, "cyclotomic polynomial of non-positive index");
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(n); it != table.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d; all divisors are
  // monic so the division stays in Z[x].
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const std::int64_t c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = table.emplace(n, std::make_unique<const std::vector<std::int64_t>>(std::move(num)));
  return *it->second;
}

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_{value} {}

CycNum::CycNum(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor < 1) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  const auto& phi = cyclotomic_polynomial(conductor);
  if (coeffs_.size() > phi.size() - 1) {
    reduce_mod(coeffs_, phi);
  } else {
    coeffs_.resize(phi.size() - 1, Rational(0));
  }
}

CycNum CycNum::root_of_unity(std::int64_t k, std::int64_t conductor) {
  if (conductor < 1) fail(ErrorKind::InvalidArgument, "root_of_unity needs N >= 1");
  k = normalize_exponent(k, conductor);
  std::vector<Rational> p(static_cast<std::size_t>(k) + 1, Rational(0));
  p[static_cast<std::size_t>(k)] = 1;
  return CycNum(conductor, std::move(p));
}

CycNum root_of_unity(std::int64_t k, std::int64_t conductor) { return CycNum::root_of_unity(k, conductor); }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

const Rational& CycNum::rational_value() const {
  if (!is_rational()) fail(ErrorKind::InvalidArgument, "cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

CycNum CycNum::lifted(std::int64_t conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    fail(ErrorKind::InvalidArgument, "cannot lift conductor " + std::to_string(conductor_) + " to " +
                                         std::to_string(conductor));
  }
  const std::int64_t step = conductor / conductor_;
  std::vector<Rational> p(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * static_cast<std::size_t>(step)] = coeffs_[k];
  return CycNum(conductor, std::move(p));
}

CycNum CycNum::lowered() const {
  if (conductor_ == 1 || !is_rational()) return *this;
  return CycNum(coeffs_[0]);
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  const std::int64_t m = std::lcm(conductor_, rhs.conductor_);
  *this = lifted(m);
  const CycNum b = rhs.lifted(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  if (rhs.conductor_ == 1 || rhs.conductor_ == conductor_) {
    if (rhs.is_rational()) {
      const Rational s = rhs.coeffs_[0];
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
  }
  if (conductor_ == 1 && coeffs_.size() == 1) {
    const Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const std::int64_t m = std::lcm(conductor_, rhs.conductor_);
  const CycNum a = lifted(m);
  const CycNum b = rhs.lifted(m);
  QPoly prod = poly_mul(a.coeffs_, b.coeffs_);
  reduce_mod(prod, cyclotomic_polynomial(m));
  conductor_ = m;
  coeffs_ = std::move(prod);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (is_rational()) {
    CycNum out(*this);
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid: s*a + t*Phi = 1, so s = a^-1 mod Phi.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  QPoly phi(phi_int.begin(), phi_int.end());
  QPoly r0 = phi;
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q;
    QPoly r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi is irreducible.
  const Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return CycNum(conductor_, std::move(s0));
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

CycNum CycNum::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum result = CycNum(1).lifted(conductor_);
  CycNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CycNum CycNum::times_root_of_unity(std::int64_t k, std::int64_t conductor) const {
  if (normalize_exponent(k, conductor) == 0) return *this;
  return *this * root_of_unity(k, conductor);
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::int64_t m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string CycNum::to_string() const {
  std::string out;
  const std::string zeta = "zeta(" + std::to_string(conductor_) + ")";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = freepoly::to_string(mag);
    } else {
      const std::string power = k == 1 ? zeta : zeta + "^" + std::to_string(k);
      term = mag == 1 ? power : freepoly::to_string(mag) + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum& b) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
    case CycOp::Div: return a / b;
  }
  fail(ErrorKind::InvalidArgument, "unknown cyclotomic operation");
}

bool split_rational_times_root_of_unity(const CycNum& value, Rational& r, std::int64_t& s, std::int64_t& m) {
  if (value.is_zero()) return false;
  m = std::lcm(value.conductor(), std::int64_t{2});
  for (std::int64_t k = 0; k < m; ++k) {
    const CycNum t = value.times_root_of_unity(-k, m);
    if (t.is_rational()) {
      r = t.rational_value();
      s = k;
      return true;
    }
  }
  return false;
}

}  // namespace freepoly

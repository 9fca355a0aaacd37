#include "freepoly/series.hpp"

#include "freepoly/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace freepoly {

namespace {

using Bound = std::optional<Rational>;  // nullopt is +infinity

Bound min_bound(const Bound& a, const Bound& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

Bound add_bound(const Bound& a, const Bound& b) {
  if (!a || !b) return std::nullopt;
  return Rational(*a + *b);
}

// Largest integer weight numerator w (over `denom`) with w/denom < bound.
std::optional<std::int64_t> weight_limit(const Bound& bound, std::int64_t denom) {
  if (!bound) return std::nullopt;
  const Rational scaled = *bound * denom;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  c -= 1;
  if (!c.fits_slong_p()) {
    if (c > 0) return std::nullopt;
    return std::numeric_limits<std::int64_t>::min();
  }
  return c.get_si();
}

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FracSeries::FracSeries(Ambient ambient, std::int64_t denom) : ambient_(std::move(ambient)), denom_(denom) {
  if (denom <= 0) fail(ErrorKind::InvalidArgument, "series denominator must be positive");
}

FracSeries FracSeries::constant(const Ambient& ambient, const CycNum& c) {
  FracSeries out(ambient);
  out.add_term(IVec(ambient.dim(), 0), c);
  return out;
}

FracSeries FracSeries::monomial(const Ambient& ambient, const IVec& p, std::int64_t denom, const CycNum& c) {
  FracSeries out(ambient, denom);
  out.add_term(p, c);
  return out;
}

void FracSeries::add_term(const IVec& p, const CycNum& c) {
  if (p.size() != dim()) fail(ErrorKind::InvalidArgument, "exponent has wrong dimension");
  if (c.is_zero()) return;
  if (!ambient_.cone().contains(p)) {
    std::ostringstream msg;
    msg << "exponent (";
    for (std::size_t i = 0; i < p.size(); ++i) msg << (i ? "," : "") << p[i];
    msg << ")/" << denom_ << " lies outside the ambient cone";
    fail(ErrorKind::InvalidArgument, msg.str());
  }
  if (precision_ && !(term_weight(p) < *precision_)) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycNum FracSeries::coefficient(const IVec& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? CycNum() : it->second;
}

Rational FracSeries::term_weight(const IVec& p) const { return make_rational(order().weight_of(p), denom_); }

std::optional<Rational> FracSeries::valuation_bound() const {
  if (terms_.empty()) return precision_;
  return term_weight(order_data().exponent);
}

void FracSeries::drop_at_or_above_precision() {
  const auto lim = weight_limit(precision_, denom_);
  if (!lim) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (order().weight_of(it->first) > *lim) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

FracSeries FracSeries::with_precision(const std::optional<Rational>& bound) const {
  FracSeries out(*this);
  out.precision_ = min_bound(precision_, bound);
  out.drop_at_or_above_precision();
  return out;
}

FracSeries FracSeries::with_denom(std::int64_t denom) const {
  if (denom == denom_) return *this;
  if (denom <= 0 || denom % denom_ != 0) {
    fail(ErrorKind::InvalidArgument,
         "denominator " + std::to_string(denom) + " is not a multiple of " + std::to_string(denom_));
  }
  const std::int64_t k = denom / denom_;
  FracSeries out(ambient_, denom);
  out.precision_ = precision_;
  for (const auto& [p, c] : terms_) out.terms_.emplace(scale(p, k), c);
  return out;
}

FracSeries FracSeries::with_min_denom() const {
  std::int64_t g = denom_;
  for (const auto& [p, c] : terms_) {
    for (auto v : p) g = gcd_i64(g, v);
  }
  if (g == 1) return *this;
  FracSeries out(ambient_, denom_ / g);
  out.precision_ = precision_;
  for (const auto& [p, c] : terms_) {
    IVec q(p);
    for (auto& v : q) v /= g;
    out.terms_.emplace(std::move(q), c);
  }
  return out;
}

bool FracSeries::has_integer_exponents() const { return with_min_denom().denom() == 1; }

FracSeries FracSeries::rebased(const Ambient& target) const {
  if (target.dim() != dim()) fail(ErrorKind::InvalidArgument, "rebase across dimensions");
  if (target == ambient_) return *this;
  FracSeries out(target, denom_);
  if (precision_) {
    for (const auto& g : ambient_.cone().generators()) {
      if (target.order().weight_of(g) <= 0) {
        fail(ErrorKind::InvalidArgument, "target order is not positive on the source cone");
      }
    }
    out.precision_ = transfer_weight_bound(ambient_.cone(), order().weight(), target.order().weight(), *precision_);
  }
  for (const auto& [p, c] : terms_) out.add_term(p, c);
  return out;
}

FracSeries FracSeries::transformed(const Ambient& target, const std::function<IVec(const IVec&)>& map,
                                   std::optional<Rational> precision) const {
  FracSeries out(target, denom_);
  out.precision_ = std::move(precision);
  for (const auto& [p, c] : terms_) out.add_term(map(p), c);
  return out;
}

OrderData FracSeries::order_data() const {
  OrderData out;
  out.denom = denom_;
  if (terms_.empty()) {
    if (is_exact()) {
      out.minus_infinity = true;
      return out;
    }
    fail(ErrorKind::PrecisionExhausted,
         "no term is known below weight " + freepoly::to_string(*precision_) + "; the order cannot be decided");
  }
  const IVec* best = nullptr;
  for (const auto& [p, c] : terms_) {
    if (best == nullptr || order().compare(p, *best) < 0) best = &p;
  }
  out.exponent = *best;
  out.order = to_qvec(*best, denom_);
  out.lc = terms_.at(*best);
  return out;
}

FracSeries FracSeries::truncate_below(const QVec& m) const {
  if (m.size() != dim()) fail(ErrorKind::InvalidArgument, "truncation bound has wrong dimension");
  FracSeries out(ambient_, denom_);
  const Rational wm = order().weight_of(m);
  if (precision_ && !(wm < *precision_)) out.precision_ = precision_;
  for (const auto& [p, c] : terms_) {
    if (order().compare(to_qvec(p, denom_), m) < 0) out.terms_.emplace(p, c);
  }
  return out;
}

FracSeries FracSeries::apply_automorphism(std::span<const CycNum> omega) const {
  if (omega.size() != dim()) fail(ErrorKind::InvalidArgument, "automorphism has wrong dimension");
  for (const auto& w : omega) {
    if (!w.pow(denom_).is_one()) {
      fail(ErrorKind::InvalidArgument, w.to_string() + " is not a root of unity of order dividing " +
                                           std::to_string(denom_));
    }
  }
  FracSeries out(ambient_, denom_);
  out.precision_ = precision_;
  for (const auto& [p, c] : terms_) {
    CycNum f = c;
    for (std::size_t i = 0; i < p.size(); ++i) f *= omega[i].pow(mod_nonneg(p[i], denom_));
    out.terms_.emplace(p, std::move(f));
  }
  return out;
}

FracSeries FracSeries::apply_root_action(std::span<const std::int64_t> k, std::int64_t n) const {
  if (k.size() != dim()) fail(ErrorKind::InvalidArgument, "automorphism has wrong dimension");
  if (n <= 0 || n % denom_ != 0) {
    fail(ErrorKind::InvalidArgument, "denominator " + std::to_string(denom_) + " does not divide " + std::to_string(n));
  }
  const std::int64_t step = n / denom_;
  FracSeries out(ambient_, denom_);
  out.precision_ = precision_;
  for (const auto& [p, c] : terms_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s = mod_nonneg(s + mod_nonneg(k[i], n) * mod_nonneg(p[i] * step, n), n);
    out.terms_.emplace(p, c.times_root_of_unity(s, n));
  }
  return out;
}

void FracSeries::check_compatible(const FracSeries& rhs) const {
  if (!(ambient_ == rhs.ambient_)) fail(ErrorKind::InvalidArgument, "series live in different ambients");
}

FracSeries FracSeries::operator-() const {
  FracSeries out(*this);
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

FracSeries& FracSeries::operator+=(const FracSeries& rhs) {
  check_compatible(rhs);
  const std::int64_t n = lcm_i64(denom_, rhs.denom_);
  if (n != denom_) *this = with_denom(n);
  const FracSeries b = rhs.with_denom(n);
  for (const auto& [p, c] : b.terms_) {
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  precision_ = min_bound(precision_, b.precision_);
  drop_at_or_above_precision();
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& rhs) { return *this += -rhs; }

FracSeries operator*(const FracSeries& a, const FracSeries& b) { return multiply(a, b, std::nullopt); }

FracSeries multiply(const FracSeries& a0, const FracSeries& b0, const std::optional<Rational>& cap) {
  a0.check_compatible(b0);
  const std::int64_t n = lcm_i64(a0.denom_, b0.denom_);
  const FracSeries a = a0.with_denom(n);
  const FracSeries b = b0.with_denom(n);
  FracSeries out(a.ambient_, n);
  out.precision_ = min_bound(add_bound(a.precision_, b.valuation_bound()), add_bound(b.precision_, a.valuation_bound()));
  out.precision_ = min_bound(out.precision_, cap);
  const auto lim = weight_limit(out.precision_, n);
  const OrderSpec& o = a.order();
  std::vector<std::pair<std::int64_t, const FracSeries::Terms::value_type*>> bw;
  bw.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bw.emplace_back(o.weight_of(t.first), &t);
  std::sort(bw.begin(), bw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  IVec key(a.dim());
  for (const auto& [pa, ca] : a.terms_) {
    const std::int64_t wa = o.weight_of(pa);
    for (const auto& [wb, tb] : bw) {
      if (lim && wa + wb > *lim) break;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = pa[i] + tb->first[i];
      CycNum prod = ca * tb->second;
      auto [it, inserted] = out.terms_.try_emplace(key, std::move(prod));
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

FracSeries& FracSeries::operator*=(const FracSeries& rhs) { return *this = *this * rhs; }

FracSeries& FracSeries::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    precision_.reset();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool operator==(const FracSeries& a, const FracSeries& b) {
  if (!(a.ambient_ == b.ambient_) || a.precision_ != b.precision_) return false;
  const std::int64_t n = lcm_i64(a.denom_, b.denom_);
  return a.with_denom(n).terms_ == b.with_denom(n).terms_;
}

std::string FracSeries::to_string() const {
  std::ostringstream out;
  out << "series(n=" << denom_;
  if (precision_) out << "; prec=" << freepoly::to_string(*precision_);
  std::vector<const Terms::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [this](const auto* x, const auto* y) { return order().compare(x->first, y->first) < 0; });
  for (const auto* t : sorted) {
    out << "; (";
    for (std::size_t i = 0; i < t->first.size(); ++i) out << (i ? "," : "") << t->first[i];
    out << ") -> " << t->second.to_string();
  }
  out << ")";
  return out.str();
}

bool equal_to_precision(const FracSeries& a, const FracSeries& b) { return (a - b).has_no_terms(); }

OrderData order_data(const FracSeries& z) { return z.order_data(); }

FracSeries series_arith(SeriesOp op, const FracSeries& a, const FracSeries& b) {
  return op == SeriesOp::Add ? a + b : a * b;
}

FracSeries truncate_below(const FracSeries& y, const QVec& m) { return y.truncate_below(m); }

FracSeries apply_automorphism(const FracSeries& y, std::span<const CycNum> omega) {
  return y.apply_automorphism(omega);
}

void for_each_root_action(std::size_t e, std::int64_t n, const std::function<void(const IVec&)>& visit) {
  IVec k(e, 0);
  while (true) {
    visit(k);
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++k[i] < n) break;
      k[i] = 0;
      if (i == 0) return;
    }
    if (e == 0) return;
  }
}

std::vector<FracSeries> conjugates(const FracSeries& y, std::int64_t n) {
  if (n <= 0 || n % y.denom() != 0) {
    fail(ErrorKind::InvalidArgument,
         "series denominator " + std::to_string(y.denom()) + " does not divide " + std::to_string(n));
  }
  std::vector<FracSeries> out;
  for_each_root_action(y.dim(), n, [&](const IVec& k) {
    FracSeries img = y.apply_root_action(k, n);
    for (const auto& seen : out) {
      if (equal_to_precision(seen, img)) return;
    }
    out.push_back(std::move(img));
  });
  return out;
}

}  // namespace freepoly

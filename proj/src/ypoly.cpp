#include "freepoly/ypoly.hpp"

#include "freepoly/errors.hpp"

#include <algorithm>
#include <sstream>

namespace freepoly {

namespace {

FracSeries zero_like(const Ambient& ambient) { return FracSeries(ambient); }

bool has_no_terms(const SeriesPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const FracSeries& c) { return c.has_no_terms(); });
}

std::string monomial_text(const IVec& p, std::int64_t denom) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    const Rational q = make_rational(p[i], denom);
    if (q == 1) continue;
    if (q.get_den() == 1 && q > 0) {
      out += "^" + q.get_num().get_str();
    } else {
      out += "^(" + to_string(q) + ")";
    }
  }
  return out;
}

bool is_single_token(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == ' ') return false;
  }
  return true;
}

// Appends c*mono to a running sum, folding a leading minus sign into the
// separator.
void append_term(std::string& out, const CycNum& c, const std::string& mono) {
  bool negative = false;
  std::string body;
  if (c.is_rational()) {
    const Rational& q = c.rational_value();
    negative = q < 0;
    const Rational mag = abs(q);
    if (mono.empty()) {
      body = to_string(mag);
    } else {
      body = mag == 1 ? mono : to_string(mag) + "*" + mono;
    }
  } else {
    std::string text = c.to_string();
    if (is_single_token(text)) {
      if (text[0] == '-') {
        negative = true;
        text.erase(0, 1);
      }
    } else {
      text = "(" + text + ")";
    }
    body = mono.empty() ? text : text + "*" + mono;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::vector<std::pair<IVec, CycNum>> sorted_terms(const FracSeries& s) {
  std::vector<std::pair<IVec, CycNum>> terms(s.terms().begin(), s.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return s.order().compare(a.first, b.first) < 0; });
  return terms;
}

FracSeries capped(const FracSeries& s, const std::optional<Rational>& cap) { return cap ? s.with_precision(cap) : s; }

// Division-free determinant (Berkowitz): the characteristic polynomial is
// assembled from the trailing principal submatrices, and det is read off its
// constant term.
FracSeries berkowitz_det(const std::vector<std::vector<FracSeries>>& a, const Ambient& ambient,
                         const std::optional<Rational>& cap) {
  const std::size_t n = a.size();
  const FracSeries one = capped(FracSeries::constant(ambient, CycNum(1)), cap);
  if (n == 0) return FracSeries::constant(ambient, CycNum(1));
  // Characteristic polynomial of the trailing 1x1 block, highest degree first.
  std::vector<FracSeries> p{one, -a[n - 1][n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t m = n - k;  // size of the current block
    std::vector<FracSeries> t;
    t.reserve(m + 1);
    t.push_back(one);
    t.push_back(-a[k][k]);
    std::vector<FracSeries> col;
    col.reserve(m - 1);
    for (std::size_t i = k + 1; i < n; ++i) col.push_back(a[i][k]);
    for (std::size_t j = 0; j + 2 <= m; ++j) {
      FracSeries dot = zero_like(ambient);
      for (std::size_t i = 0; i < m - 1; ++i) dot += multiply(a[k][k + 1 + i], col[i], cap);
      t.push_back(-dot);
      if (j + 2 == m) break;
      std::vector<FracSeries> next;
      next.reserve(m - 1);
      for (std::size_t r = 0; r < m - 1; ++r) {
        FracSeries acc = zero_like(ambient);
        for (std::size_t i = 0; i < m - 1; ++i) acc += multiply(a[k + 1 + r][k + 1 + i], col[i], cap);
        next.push_back(std::move(acc));
      }
      col = std::move(next);
    }
    std::vector<FracSeries> q;
    q.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      FracSeries acc = zero_like(ambient);
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) acc += multiply(t[i - j], p[j], cap);
      q.push_back(std::move(acc));
    }
    p = std::move(q);
  }
  FracSeries det = p.back();
  if (n % 2 == 1) det = -det;
  return det;
}

// For monic f, Res(f, g) = det of multiplication by g on K[[x]][y]/(f) in the
// basis 1, y, ..., y^(n-1); column j holds y^j g mod f.
FracSeries multiplication_det(const SeriesPoly& f, const SeriesPoly& g, const std::optional<Rational>& cap) {
  const Ambient& ambient = f.ambient();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  auto capped = [&](const FracSeries& s) { return cap ? s.with_precision(cap) : s; };
  std::vector<FracSeries> col(n, FracSeries(ambient));
  for (std::size_t k = 0; k < n; ++k) col[k] = capped(g.coeff(k));
  std::vector<std::vector<FracSeries>> m(n, std::vector<FracSeries>(n, FracSeries(ambient)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    if (j + 1 == n) break;
    // col <- y * col mod f
    const FracSeries top = col[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = FracSeries(ambient);
    if (!top.is_exact_zero()) {
      for (std::size_t i = 0; i < n; ++i) col[i] -= multiply(top, f.coeff(i), cap);
    }
  }
  return berkowitz_det(m, ambient, cap);
}

}  // namespace

SeriesPoly::SeriesPoly(Ambient ambient) : ambient_(std::move(ambient)) {}

SeriesPoly::SeriesPoly(Ambient ambient, std::vector<FracSeries> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.ambient() == ambient_)) fail(ErrorKind::InvalidArgument, "coefficient lives in a different ambient");
  }
  trim();
}

SeriesPoly SeriesPoly::constant(const FracSeries& c) { return SeriesPoly(c.ambient(), {c}); }

SeriesPoly SeriesPoly::y_power(const Ambient& ambient, std::size_t k) {
  std::vector<FracSeries> coeffs(k + 1, FracSeries(ambient));
  coeffs[k] = FracSeries::constant(ambient, CycNum(1));
  return SeriesPoly(ambient, std::move(coeffs));
}

void SeriesPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

FracSeries SeriesPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FracSeries(ambient_); }

bool SeriesPoly::is_monic() const {
  if (coeffs_.empty()) return false;
  const FracSeries& lc = coeffs_.back();
  return lc.is_exact() && lc.size() == 1 && lc.terms().begin()->first == IVec(dim(), 0) &&
         lc.terms().begin()->second.is_one();
}

bool SeriesPoly::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FracSeries& c) { return c.is_exact(); });
}

bool SeriesPoly::has_integer_exponents() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FracSeries& c) { return c.has_integer_exponents(); });
}

std::optional<Rational> SeriesPoly::precision() const {
  std::optional<Rational> out;
  for (const auto& c : coeffs_) {
    if (c.precision() && (!out || *c.precision() < *out)) out = c.precision();
  }
  return out;
}

SeriesPoly SeriesPoly::derivative() const {
  std::vector<FracSeries> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * CycNum(static_cast<long>(k)));
  return SeriesPoly(ambient_, std::move(out));
}

SeriesPoly SeriesPoly::with_precision(const std::optional<Rational>& bound) const {
  std::vector<FracSeries> out;
  for (const auto& c : coeffs_) out.push_back(c.with_precision(bound));
  return SeriesPoly(ambient_, std::move(out));
}

SeriesPoly SeriesPoly::rebased(const Ambient& target) const {
  std::vector<FracSeries> out;
  for (const auto& c : coeffs_) out.push_back(c.rebased(target));
  return SeriesPoly(target, std::move(out));
}

FracSeries SeriesPoly::eval_at(const FracSeries& z) const {
  if (coeffs_.empty()) return FracSeries(ambient_);
  FracSeries acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

SeriesPoly SeriesPoly::operator-() const {
  std::vector<FracSeries> out;
  for (const auto& c : coeffs_) out.push_back(-c);
  return SeriesPoly(ambient_, std::move(out));
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& rhs) {
  if (!(ambient_ == rhs.ambient_)) fail(ErrorKind::InvalidArgument, "polynomials live in different ambients");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FracSeries(ambient_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& rhs) { return *this += -rhs; }

SeriesPoly& SeriesPoly::operator*=(const FracSeries& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  if (!(a.ambient_ == b.ambient_)) fail(ErrorKind::InvalidArgument, "polynomials live in different ambients");
  if (a.is_zero() || b.is_zero()) return SeriesPoly(a.ambient_);
  std::vector<FracSeries> out(a.coeffs_.size() + b.coeffs_.size() - 1, FracSeries(a.ambient_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return SeriesPoly(a.ambient_, std::move(out));
}

bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
  return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
}

std::string series_expression(const FracSeries& s) {
  std::string out;
  for (const auto& [p, c] : sorted_terms(s)) append_term(out, c, monomial_text(p, s.denom()));
  return out.empty() ? "0" : out;
}

std::string SeriesPoly::to_string() const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    std::string ypow;
    if (k == 1) {
      ypow = "y";
    } else if (k > 1) {
      ypow = "y^" + std::to_string(k);
    }
    for (const auto& [p, c] : sorted_terms(coeffs_[k])) {
      std::string mono = monomial_text(p, coeffs_[k].denom());
      if (!ypow.empty()) mono = mono.empty() ? ypow : mono + "*" + ypow;
      append_term(out, c, mono);
    }
  }
  return out.empty() ? "0" : out;
}

FracSeries eval_at(const SeriesPoly& f, const FracSeries& z) { return f.eval_at(z); }

FracSeries resultant_y(const SeriesPoly& f0, const SeriesPoly& g0, const std::optional<Rational>& cap) {
  if (f0.degree() < 1) fail(ErrorKind::InvalidArgument, "resultant needs deg f >= 1");
  if (!(f0.ambient() == g0.ambient())) fail(ErrorKind::InvalidArgument, "polynomials live in different ambients");
  const Ambient& ambient = f0.ambient();
  SeriesPoly g = g0;
  // For monic f, Res(f, g) = Res(f, g mod f) since both equal the product of
  // g over the roots of f.
  if (f0.is_monic() && g.degree() >= f0.degree()) g = divmod_monic(g, f0).second;
  if (g.is_zero()) return FracSeries(ambient);
  if (f0.is_monic()) return multiplication_det(f0, g, cap);
  const SeriesPoly f = cap ? f0.with_precision(cap) : f0;
  if (cap) g = g.with_precision(cap);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t k = static_cast<std::size_t>(g.degree());
  const std::size_t size = n + k;
  std::vector<std::vector<FracSeries>> m(size, std::vector<FracSeries>(size, FracSeries(ambient)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m[i][i + j] = f.coeff(n - j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= k; ++j) m[k + i][i + j] = g.coeff(k - j);
  }
  return berkowitz_det(m, ambient, cap);
}

FracSeries discriminant_y(const SeriesPoly& f) {
  if (!f.is_monic() || f.degree() < 2) fail(ErrorKind::InvalidArgument, "discriminant needs a monic polynomial of degree >= 2");
  return resultant_y(f, f.derivative());
}

QVec resultant_order(const SeriesPoly& f, const SeriesPoly& g) {
  // Weight bound for the full resultant of exact inputs.
  Rational top = 0;
  std::optional<Rational> limit;
  for (const SeriesPoly* p : {&f, &g}) {
    Rational w = 0;
    for (const auto& c : p->coeffs()) {
      for (const auto& [e, v] : c.terms()) w = std::max(w, c.term_weight(e));
      if (c.precision() && (!limit || *c.precision() < *limit)) limit = c.precision();
    }
    top += w * (f.degree() + std::max(g.degree(), 0));
  }
  Rational cap = 1;
  while (true) {
    const bool last = (limit && cap >= *limit) || (!limit && cap > top);
    if (limit && cap > *limit) cap = *limit;
    const FracSeries r = resultant_y(f, g, cap + 1);
    if (!r.has_no_terms()) return r.order_data().order;
    if (last) {
      if (limit) fail(ErrorKind::PrecisionExhausted, "resultant vanishes below the available precision");
      fail(ErrorKind::DividesF, "the resultant is zero");
    }
    cap = cap * 3 / 2 + 1;
  }
}

std::pair<SeriesPoly, SeriesPoly> divmod_monic(const SeriesPoly& a, const SeriesPoly& g) {
  if (!g.is_monic()) fail(ErrorKind::InvalidArgument, "division by a non-monic polynomial");
  const Ambient& ambient = a.ambient();
  const int m = g.degree();
  if (a.degree() < m) return {SeriesPoly(ambient), a};
  std::vector<FracSeries> r = a.coeffs();
  std::vector<FracSeries> q(static_cast<std::size_t>(a.degree() - m + 1), FracSeries(ambient));
  for (int k = a.degree(); k >= m; --k) {
    const FracSeries c = r[static_cast<std::size_t>(k)];
    const std::size_t shift = static_cast<std::size_t>(k - m);
    q[shift] = c;
    if (!c.is_exact_zero()) {
      for (int j = 0; j < m; ++j) r[shift + static_cast<std::size_t>(j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(k)] = FracSeries(ambient);
  }
  r.resize(static_cast<std::size_t>(m), FracSeries(ambient));
  return {SeriesPoly(ambient, std::move(q)), SeriesPoly(ambient, std::move(r))};
}

std::vector<SeriesPoly> g_adic_expansion(const SeriesPoly& f, const SeriesPoly& g, std::int64_t d) {
  if (d < 1 || g.degree() < 1 || g.degree() * d != f.degree()) {
    fail(ErrorKind::InvalidArgument, "g-adic expansion needs deg f = d * deg g");
  }
  std::vector<SeriesPoly> digits;
  SeriesPoly cur = f;
  for (std::int64_t i = 0; i < d; ++i) {
    auto [q, r] = divmod_monic(cur, g);
    digits.push_back(std::move(r));
    cur = std::move(q);
  }
  if (!cur.is_monic() || cur.degree() != 0) fail(ErrorKind::InvalidArgument, "f is not monic");
  std::vector<SeriesPoly> a;
  for (std::int64_t i = 1; i <= d; ++i) a.push_back(digits[static_cast<std::size_t>(d - i)]);
  return a;
}

SeriesPoly tschirnhausen(const SeriesPoly& f, const SeriesPoly& g, std::int64_t d) {
  const auto a = g_adic_expansion(f, g, d);
  const FracSeries inv_d = FracSeries::constant(f.ambient(), CycNum(make_rational(1, d)));
  return g + a[0] * inv_d;
}

SeriesPoly approximate_root(const SeriesPoly& f, std::int64_t d) {
  if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "approximate roots need a monic polynomial");
  if (d < 1 || f.degree() % d != 0) {
    fail(ErrorKind::InvalidArgument, std::to_string(d) + " does not divide deg f = " + std::to_string(f.degree()));
  }
  const std::int64_t deg = f.degree() / d;
  const FracSeries inv_d = FracSeries::constant(f.ambient(), CycNum(make_rational(1, d)));
  SeriesPoly g = SeriesPoly::y_power(f.ambient(), static_cast<std::size_t>(deg));
  for (std::int64_t iter = 0; iter <= deg + 2; ++iter) {
    const auto a = g_adic_expansion(f, g, d);
    if (has_no_terms(a[0])) return g;
    if (iter == deg + 2) break;
    g += a[0] * inv_d;
  }
  fail(ErrorKind::NoConvergence,
       "Tschirnhausen iteration did not reach a fixpoint within " + std::to_string(deg + 2) + " steps");
}

namespace {

void expand_level(const SeriesPoly& p, std::size_t k, const std::vector<SeriesPoly>& G, IVec& b, GAdicExpansion& out) {
  if (p.is_zero()) return;
  if (k == 0) {
    if (p.degree() > 0) fail(ErrorKind::InvalidArgument, "expansion basis must start in degree 1");
    out.emplace(b, p.coeff(0));
    return;
  }
  SeriesPoly cur = p;
  std::int64_t j = 0;
  while (!cur.is_zero()) {
    auto [q, r] = divmod_monic(cur, G[k - 1]);
    b[k - 1] = j;
    expand_level(r, k - 1, G, b, out);
    cur = std::move(q);
    ++j;
  }
  b[k - 1] = 0;
}

}  // namespace

GAdicExpansion G_adic_expansion(const SeriesPoly& g, const std::vector<SeriesPoly>& G, bool last_unbounded) {
  if (G.empty()) fail(ErrorKind::InvalidArgument, "empty expansion basis");
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].is_monic()) fail(ErrorKind::InvalidArgument, "expansion basis must be monic");
    if (i > 0 && (G[i].degree() <= G[i - 1].degree() || G[i].degree() % G[i - 1].degree() != 0)) {
      fail(ErrorKind::InvalidArgument, "expansion basis degrees must strictly increase by divisibility");
    }
  }
  if (!last_unbounded && G.size() >= 2) {
    const int top = G.back().degree() * (G.back().degree() / G[G.size() - 2].degree());
    if (g.degree() >= top) fail(ErrorKind::InvalidArgument, "degree too large for a bounded expansion");
  }
  GAdicExpansion out;
  IVec b(G.size(), 0);
  expand_level(g, G.size(), G, b, out);
  return out;
}

SeriesPoly reconstruct(const GAdicExpansion& expansion, const std::vector<SeriesPoly>& G, const Ambient& ambient) {
  SeriesPoly out(ambient);
  std::vector<std::vector<SeriesPoly>> powers(G.size());
  for (const auto& [b, c] : expansion) {
    SeriesPoly term = SeriesPoly::constant(c);
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(SeriesPoly::y_power(ambient, 0));
      while (pw.size() <= static_cast<std::size_t>(b[i])) pw.push_back(pw.back() * G[i]);
      term = term * pw[static_cast<std::size_t>(b[i])];
    }
    out += term;
  }
  return out;
}

SeriesPoly polynomial_from_roots(const Ambient& ambient, const std::vector<FracSeries>& roots) {
  SeriesPoly out = SeriesPoly::y_power(ambient, 0);
  for (const auto& z : roots) out = out * SeriesPoly(ambient, {-z, FracSeries::constant(ambient, CycNum(1))});
  return out;
}

SeriesPoly minimal_polynomial(const FracSeries& y, std::int64_t n) {
  const auto conj = conjugates(y, n);
  const SeriesPoly prod = polynomial_from_roots(y.ambient(), conj);
  std::vector<FracSeries> coeffs;
  for (const auto& c : prod.coeffs()) {
    const FracSeries m = c.with_min_denom();
    if (m.denom() != 1) {
      fail(ErrorKind::NotGaloisStable,
           "coefficient " + series_expression(c) + " keeps fractional exponents; the root is not Galois stable");
    }
    FracSeries lowered(m.ambient(), 1);
    for (const auto& [p, v] : m.terms()) lowered.add_term(p, v.lowered());
    coeffs.push_back(lowered.with_precision(m.precision()));
  }
  return SeriesPoly(y.ambient(), std::move(coeffs));
}

}  // namespace freepoly

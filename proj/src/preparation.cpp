#include "freepoly/preparation.hpp"

#include "freepoly/errors.hpp"

#include <algorithm>
#include <numeric>

namespace freepoly {

namespace {

void require_orthant_integral(const FracSeries& s, const char* what) {
  const FracSeries m = s.with_min_denom();
  if (m.denom() != 1) fail(ErrorKind::InvalidArgument, std::string(what) + " must have integer exponents");
  for (const auto& [p, c] : m.terms()) {
    for (auto v : p) {
      if (v < 0) fail(ErrorKind::InvalidArgument, std::string(what) + " must have exponents in the orthant");
    }
  }
}

std::int64_t total_degree(const IVec& p) { return std::accumulate(p.begin(), p.end(), std::int64_t{0}); }

using Matrix = std::vector<IVec>;  // rows

IVec apply_matrix(const Matrix& m, const IVec& p) {
  IVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) out[i] += m[i][j] * p[j];
  }
  return out;
}

// Re-expresses s through an integer exponent map, transferring the precision
// so every term of the image below the new bound is known.
FracSeries map_exponents(const FracSeries& s, const Ambient& target, const Matrix& m) {
  std::optional<Rational> prec;
  if (s.precision()) {
    IVec pulled(s.dim(), 0);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      for (std::size_t i = 0; i < m.size(); ++i) pulled[j] += target.order().weight()[i] * m[i][j];
    }
    prec = transfer_weight_bound(s.ambient().cone(), s.order().weight(), pulled, *s.precision());
  }
  return s.transformed(target, [&](const IVec& p) { return apply_matrix(m, p); }, prec);
}

Matrix blowup_matrix(std::size_t e) {
  Matrix m(e, IVec(e, 0));
  for (std::size_t j = 0; j < e; ++j) m[0][j] = 1;
  for (std::size_t i = 1; i < e; ++i) m[i][i] = 1;
  return m;
}

Matrix unblow_matrix(std::size_t e) {
  Matrix m(e, IVec(e, 0));
  m[0][0] = 1;
  for (std::size_t j = 1; j < e; ++j) m[0][j] = -1;
  for (std::size_t i = 1; i < e; ++i) m[i][i] = 1;
  return m;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool rational_root(const Rational& q, std::int64_t k, Rational& out) {
  Integer num;
  Integer den;
  if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

// A nonzero root of sum_k q[k] c^k. The polynomials met while expanding a
// root of a quasi-ordinary polynomial have the shape A (c^j - beta)^(K/j).
std::optional<CycNum> pick_root(const std::map<std::int64_t, CycNum>& q) {
  const std::int64_t K = q.rbegin()->first;
  const CycNum A = q.rbegin()->second;
  auto coef = [&](std::int64_t k) {
    const auto it = q.find(k);
    return it == q.end() ? CycNum() : it->second;
  };
  for (std::int64_t j = 1; j <= K; ++j) {
    if (K % j != 0) continue;
    const std::int64_t m = K / j;
    const CycNum beta = -coef(K - j) / (A * CycNum(static_cast<long>(m)));
    if (beta.is_zero()) continue;
    bool ok = true;
    for (std::int64_t k = 0; k <= K && ok; ++k) {
      CycNum want;
      if (k % j == 0) {
        const std::int64_t i = k / j;
        want = A * CycNum(Rational(binomial(m, i))) * (-beta).pow(m - i);
      }
      ok = coef(k) == want;
    }
    if (!ok) continue;
    Rational r;
    std::int64_t s = 0;
    std::int64_t mod = 1;
    if (!split_rational_times_root_of_unity(beta, r, s, mod)) return std::nullopt;
    if (r < 0) {
      r = -r;
      s += mod / 2;
    }
    Rational rr;
    if (!rational_root(r, j, rr)) return std::nullopt;
    return CycNum(rr) * root_of_unity(s, mod * j);
  }
  return std::nullopt;
}

FracSeries monomial_power(const Ambient& ambient, const IVec& mu, std::int64_t n, const CycNum& c, std::int64_t k) {
  return FracSeries::monomial(ambient, scale(mu, k), n, c.pow(k));
}

}  // namespace

HomogeneousParts homogeneous_parts(const FracSeries& delta0) {
  require_orthant_integral(delta0, "the discriminant");
  const FracSeries delta = delta0.with_min_denom();
  if (delta.has_no_terms()) {
    if (delta.is_exact()) fail(ErrorKind::InvalidArgument, "the discriminant is zero");
    fail(ErrorKind::PrecisionExhausted, "the discriminant has no known term");
  }
  const auto& w = delta.order().weight();
  const std::int64_t maxw = *std::max_element(w.begin(), w.end());
  auto complete = [&](std::int64_t d) { return delta.is_exact() || Rational(d * maxw) < *delta.precision(); };
  HomogeneousParts out;
  out.a = -1;
  for (const auto& [p, c] : delta.terms()) {
    const std::int64_t d = total_degree(p);
    if (out.a < 0 || d < out.a) out.a = d;
  }
  if (!complete(out.a)) {
    fail(ErrorKind::PrecisionExhausted, "the homogeneous part of degree " + std::to_string(out.a) + " is not fully known");
  }
  for (const auto& [p, c] : delta.terms()) {
    const std::int64_t d = total_degree(p);
    if (!complete(d)) continue;
    auto it = out.parts.try_emplace(d, delta.ambient(), 1).first;
    it->second.add_term(p, c);
  }
  return out;
}

QuasiOrdinary is_quasi_ordinary(const SeriesPoly& f) {
  if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "quasi-ordinary test needs a monic polynomial");
  for (const auto& c : f.coeffs()) require_orthant_integral(c, "coefficients");
  QuasiOrdinary out;
  if (f.degree() <= 1) {
    out.quasi_ordinary = true;
    out.alpha = IVec(f.dim(), 0);
    return out;
  }
  const FracSeries delta = discriminant_y(f).with_min_denom();
  out.exact = delta.is_exact();
  if (delta.has_no_terms()) {
    if (delta.is_exact()) return out;
    fail(ErrorKind::PrecisionExhausted, "the discriminant has no known term");
  }
  IVec alpha = delta.terms().begin()->first;
  for (const auto& [p, c] : delta.terms()) {
    for (std::size_t i = 0; i < p.size(); ++i) alpha[i] = std::min(alpha[i], p[i]);
  }
  out.quasi_ordinary = delta.terms().count(alpha) > 0;
  if (out.quasi_ordinary) out.alpha = alpha;
  return out;
}

SeriesPoly shear(const SeriesPoly& f, std::int64_t t) {
  if (t == 0 || f.dim() == 1) return f;
  std::vector<FracSeries> coeffs;
  for (const auto& c0 : f.coeffs()) {
    require_orthant_integral(c0, "coefficients");
    const FracSeries c = c0.with_min_denom();
    FracSeries out(c.ambient(), 1);
    for (const auto& [p, v] : c.terms()) {
      std::map<IVec, CycNum> acc;
      IVec start(p.size(), 0);
      start[0] = p[0];
      acc.emplace(start, v);
      for (std::size_t i = 1; i < p.size(); ++i) {
        std::map<IVec, CycNum> next;
        for (const auto& [q, u] : acc) {
          for (std::int64_t j = 0; j <= p[i]; ++j) {
            IVec r = q;
            r[i] += j;
            r[0] += p[i] - j;
            Integer tp;
            mpz_pow_ui(tp.get_mpz_t(), Integer(t).get_mpz_t(), static_cast<unsigned long>(p[i] - j));
            const CycNum coef = u * CycNum(Rational(binomial(p[i], j) * tp));
            auto [it, inserted] = next.try_emplace(r, coef);
            if (!inserted) it->second += coef;
          }
        }
        acc = std::move(next);
      }
      for (const auto& [q, u] : acc) out.add_term(q, u);
    }
    coeffs.push_back(out.with_precision(c.precision()));
  }
  return SeriesPoly(f.ambient(), std::move(coeffs));
}

PrepResult prepare_shear(const SeriesPoly& f) {
  if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "preparation needs a monic polynomial");
  PrepResult out;
  out.sheared = f;
  if (f.degree() <= 1) {
    out.epsilon_a_at_t = CycNum(1);
    out.u_a = FracSeries::constant(f.ambient(), CycNum(1));
    return out;
  }
  const HomogeneousParts hp = homogeneous_parts(discriminant_y(f));
  out.a = hp.a;
  out.u_a = hp.parts.at(hp.a);
  IVec lead(f.dim(), 0);
  lead[0] = hp.a;
  out.epsilon_a_at_t = out.u_a.coefficient(lead);
  if (!out.epsilon_a_at_t.is_zero()) return out;
  for (std::int64_t t = 1;; ++t) {
    CycNum eps;
    for (const auto& [p, c] : out.u_a.terms()) {
      Integer tp;
      mpz_pow_ui(tp.get_mpz_t(), Integer(t).get_mpz_t(), static_cast<unsigned long>(hp.a - p[0]));
      eps += c * CycNum(Rational(tp));
    }
    if (!eps.is_zero()) {
      out.t = t;
      out.epsilon_a_at_t = eps;
      out.sheared = shear(f, t);
      return out;
    }
    if (t > hp.a + 1) fail(ErrorKind::InvariantViolation, "no shear parameter found within the degree bound");
  }
}

SeriesPoly blowup_unchecked(const SeriesPoly& f) {
  const Matrix m = blowup_matrix(f.dim());
  std::vector<FracSeries> coeffs;
  for (const auto& c : f.coeffs()) {
    require_orthant_integral(c, "coefficients");
    coeffs.push_back(map_exponents(c, f.ambient(), m));
  }
  return SeriesPoly(f.ambient(), std::move(coeffs));
}

SeriesPoly blowup(const SeriesPoly& f) {
  SeriesPoly F = blowup_unchecked(f);
  if (!is_quasi_ordinary(F).quasi_ordinary) {
    fail(ErrorKind::NotQuasiOrdinaryAfterBlowup, "the blown-up polynomial " + F.to_string() + " is not quasi-ordinary");
  }
  return F;
}

FracSeries unblow_series(const FracSeries& Y, const Ambient& target) {
  return map_exponents(Y, target, unblow_matrix(Y.dim()));
}

FracSeries unblow_series(const FracSeries& Y) { return unblow_series(Y, Ambient::blowup(Y.dim())); }

SeriesPoly unblow_poly(const SeriesPoly& F, const Ambient& target) {
  std::vector<FracSeries> coeffs;
  for (const auto& c : F.coeffs()) coeffs.push_back(unblow_series(c, target));
  return SeriesPoly(target, std::move(coeffs));
}

FracSeries qo_root_expand(const SeriesPoly& F, const Rational& T) {
  if (!F.is_monic() || F.degree() < 1) fail(ErrorKind::InvalidArgument, "root expansion needs a monic polynomial");
  const std::int64_t n = F.degree();
  const Ambient& ambient = F.ambient();
  const OrderSpec& order = ambient.order();
  const Rational W = T * n;
  std::vector<FracSeries> b;
  for (const auto& c : F.coeffs()) b.push_back(c.with_denom(lcm_i64(c.denom(), n)).with_precision(W));
  FracSeries root(ambient, n);
  std::optional<QVec> last;
  for (std::size_t step = 0;; ++step) {
    if (b[0].has_no_terms()) {
      if (F.eval_at(root).is_exact_zero()) return root;
      return root.with_precision(T);
    }
    const OrderData v0 = b[0].order_data();
    std::optional<QVec> mu;
    std::vector<std::optional<QVec>> v(b.size());
    for (std::size_t k = 1; k < b.size(); ++k) {
      if (b[k].has_no_terms()) continue;
      v[k] = b[k].order_data().order;
      const QVec cand = scale(sub(v0.order, *v[k]), make_rational(1, static_cast<std::int64_t>(k)));
      if (!mu || order.compare(cand, *mu) > 0) mu = cand;
    }
    if (!(order.weight_of(*mu) < T)) return root.with_precision(T);
    if ((last && order.compare(*mu, *last) <= 0) || !is_integral(scale(*mu, Rational(n))) ||
        !ambient.cone().contains(*mu)) {
      fail(ErrorKind::NoRootBranch, "the next root exponent leaves the lattice of denominator " + std::to_string(n));
    }
    std::map<std::int64_t, CycNum> q{{0, v0.lc}};
    for (std::size_t k = 1; k < b.size(); ++k) {
      if (v[k] && add(*v[k], scale(*mu, Rational(static_cast<long>(k)))) == v0.order) {
        q.emplace(static_cast<std::int64_t>(k), b[k].order_data().lc);
      }
    }
    const auto c = pick_root(q);
    if (!c) fail(ErrorKind::NoRootBranch, "the initial equation has no root of the form rational times root of unity");
    const IVec mu_num = to_ivec(scale(*mu, Rational(n)));
    root.add_term(mu_num, *c);
    std::vector<FracSeries> powers;
    for (std::int64_t k = 0; k <= n; ++k) powers.push_back(monomial_power(ambient, mu_num, n, *c, k));
    std::vector<FracSeries> shifted;
    for (std::size_t j = 0; j < b.size(); ++j) {
      FracSeries acc(ambient, n);
      for (std::size_t k = j; k < b.size(); ++k) {
        acc += multiply(b[k], powers[k - j], W) * CycNum(Rational(binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j))));
      }
      shifted.push_back(acc.with_precision(W));
    }
    b = std::move(shifted);
    last = mu;
    if (step > 1000000) fail(ErrorKind::NoConvergence, "root expansion did not terminate");
  }
}

Certificate free_certificate(const SeriesPoly& f, std::int64_t n, const FracSeries& root) {
  Certificate cert;
  cert.n = n;
  cert.precision = root.precision();
  const FracSeries residual = f.eval_at(root);
  cert.checks.push_back({"f(root) = 0", residual.has_no_terms(),
                         residual.is_exact() ? "exact" : "below weight " + to_string(*residual.precision())});
  if (n % root.denom() != 0) {
    cert.checks.push_back({"distinct conjugates = n", false,
                           "root denominator " + std::to_string(root.denom()) + " does not divide " + std::to_string(n)});
    return cert;
  }
  const auto conj = conjugates(root, n);
  cert.conjugate_count = conj.size();
  const bool count_ok = static_cast<std::int64_t>(conj.size()) == n;
  cert.checks.push_back({"distinct conjugates = n", count_ok, std::to_string(conj.size()) + " of " + std::to_string(n)});
  const SeriesPoly orbit = polynomial_from_roots(root.ambient(), conj);
  bool match = orbit.degree() == f.degree();
  for (int k = 0; match && k <= f.degree(); ++k) {
    match = equal_to_precision(orbit.coeff(static_cast<std::size_t>(k)), f.coeff(static_cast<std::size_t>(k)));
  }
  cert.checks.push_back({"orbit product = f", match, orbit.to_string()});
  cert.free = std::all_of(cert.checks.begin(), cert.checks.end(), [](const Check& c) { return c.pass; });
  if (!count_ok && cert.checks[0].pass) {
    SeriesPoly g = orbit;
    try {
      g = minimal_polynomial(root, n);
    } catch (const Error&) {
    }
    auto [q, r] = divmod_monic(f, g);
    cert.factors = {g, q};
  }
  return cert;
}

Certificate certify_free(const SeriesPoly& f, std::int64_t n, const FracSeries& root) {
  Certificate cert = free_certificate(f, n, root);
  for (const auto& c : cert.checks) {
    if (!c.pass) fail(ErrorKind::NotFree, c.name + " fails: " + c.witness);
  }
  return cert;
}

Pipeline run_pipeline(const SeriesPoly& f, const Rational& T) {
  if (!(f.ambient() == Ambient::orthant(f.dim()))) {
    fail(ErrorKind::InvalidArgument, "the preparation pipeline starts from a polynomial over the orthant");
  }
  Pipeline p;
  p.input = f;
  p.input_quasi_ordinary = is_quasi_ordinary(f).quasi_ordinary;
  if (p.input_quasi_ordinary) {
    p.f = f;
    p.root = qo_root_expand(f, T);
    return p;
  }
  p.prep = prepare_shear(f);
  p.blown = blowup(p.prep->sheared);
  p.blown_root = qo_root_expand(*p.blown, T);
  const Ambient target = Ambient::blowup(f.dim());
  p.root = unblow_series(*p.blown_root, target);
  p.f = p.prep->sheared.rebased(target);
  return p;
}

AppCheck free_approximate_root_check(const SeriesPoly& f, std::int64_t d, const Rational& T) {
  if (d < 1 || f.degree() % d != 0) fail(ErrorKind::InvalidArgument, "d must divide deg f");
  const std::int64_t m = f.degree() / d;
  AppCheck out;
  if (is_quasi_ordinary(f).quasi_ordinary) {
    out.app = approximate_root(f, d);
    out.app_via_blowup = out.app;
    out.certificate = free_certificate(out.app, m, qo_root_expand(out.app, T));
    return out;
  }
  out.transformed = true;
  const PrepResult prep = prepare_shear(f);
  const SeriesPoly F = blowup(prep.sheared);
  const Ambient target = Ambient::blowup(f.dim());
  out.app = approximate_root(prep.sheared, d).rebased(target);
  const SeriesPoly appF = approximate_root(F, d);
  out.app_via_blowup = unblow_poly(appF, target);
  bool same = out.app.degree() == out.app_via_blowup.degree();
  for (int k = 0; same && k <= out.app.degree(); ++k) {
    same = equal_to_precision(out.app.coeff(static_cast<std::size_t>(k)), out.app_via_blowup.coeff(static_cast<std::size_t>(k)));
  }
  if (!same) {
    fail(ErrorKind::AppMismatch, out.app.to_string() + " differs from the unblown " + out.app_via_blowup.to_string());
  }
  if (!is_quasi_ordinary(appF).quasi_ordinary) {
    fail(ErrorKind::NotQuasiOrdinaryAfterBlowup, "App(F, " + std::to_string(d) + ") is not quasi-ordinary");
  }
  const FracSeries root = unblow_series(qo_root_expand(appF, T), target);
  out.certificate = free_certificate(out.app, m, root);
  return out;
}

Rational default_precision(const SeriesPoly& f) {
  Rational top = 0;
  for (const auto& c : f.coeffs()) {
    for (const auto& [p, v] : c.terms()) top = std::max(top, c.term_weight(p));
  }
  return 4 * (top + 1);
}

}  // namespace freepoly

#include "freepoly/invariants.hpp"

#include "freepoly/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freepoly {

namespace {

std::string vec_text(const IVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string vec_text(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string seq_text(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<IVec> sorted_by_order(std::set<IVec> s, const OrderSpec& o) {
  std::vector<IVec> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [&](const IVec& a, const IVec& b) { return o.compare(a, b) < 0; });
  return out;
}

FracSeries lifted_root(const FracSeries& y, std::int64_t n) {
  if (n <= 0 || n % y.denom() != 0) {
    fail(ErrorKind::InvalidArgument,
         "root denominator " + std::to_string(y.denom()) + " does not divide " + std::to_string(n));
  }
  return y.with_denom(n);
}

// Numerator over n of O(z); nullopt when z vanishes to its precision.
std::optional<IVec> difference_order(const FracSeries& z, std::int64_t n) {
  if (z.has_no_terms()) return std::nullopt;
  const OrderData od = z.order_data();
  return scale(od.exponent, n / od.denom);
}

}  // namespace

CharData characteristic_data_by_conjugates(const FracSeries& y0, std::int64_t n) {
  const FracSeries y = lifted_root(y0, n);
  std::set<IVec> found;
  for_each_root_action(y.dim(), n, [&](const IVec& k) {
    if (auto o = difference_order(y.apply_root_action(k, n) - y, n)) found.insert(*o);
  });
  return CharData{n, y.dim(), sorted_by_order(std::move(found), y.order())};
}

CharData characteristic_data_by_lattice(const FracSeries& y0, std::int64_t n) {
  const FracSeries y = lifted_root(y0, n);
  std::vector<IVec> support;
  for (const auto& [p, c] : y.terms()) support.push_back(p);
  std::sort(support.begin(), support.end(), [&](const IVec& a, const IVec& b) { return y.order().compare(a, b) < 0; });
  CharData cd{n, y.dim(), {}};
  for (const auto& p : support) {
    if (!lattice_membership(n, cd.m, p).member) cd.m.push_back(p);
  }
  return cd;
}

CharData characteristic_data(const FracSeries& y, std::int64_t n) {
  CharData a = characteristic_data_by_conjugates(y, n);
  const CharData b = characteristic_data_by_lattice(y, n);
  if (a.m != b.m) {
    std::ostringstream msg;
    msg << "conjugate differences give";
    for (const auto& v : a.m) msg << " " << vec_text(v);
    msg << " but the support lattice gives";
    for (const auto& v : b.m) msg << " " << vec_text(v);
    fail(ErrorKind::CrossCheckMismatch, msg.str());
  }
  return a;
}

std::vector<IVec> SequencePack::generators() const {
  std::vector<IVec> out = r0;
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::int64_t minor_gcd(std::int64_t n, std::size_t e, const std::vector<IVec>& vectors) {
  std::vector<IVec> cols;
  for (std::size_t i = 0; i < e; ++i) {
    IVec c(e, 0);
    c[i] = n;
    cols.push_back(std::move(c));
  }
  for (const auto& v : vectors) {
    if (v.size() != e) fail(ErrorKind::InvalidArgument, "lattice vector has wrong dimension");
    cols.push_back(v);
  }
  const std::size_t k = cols.size();
  Integer g = 0;
  std::vector<std::size_t> pick(e);
  for (std::size_t i = 0; i < e; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Integer>> mat(e, std::vector<Integer>(e));
    for (std::size_t r = 0; r < e; ++r) {
      for (std::size_t c = 0; c < e; ++c) mat[r][c] = static_cast<long>(cols[pick[c]][r]);
    }
    g = gcd(g, bareiss_det(std::move(mat)));
    if (g == 1) break;
    std::size_t i = e;
    while (i > 0 && pick[i - 1] == k - e + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < e; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g.get_si();
}

SequencePack gcd_sequences(std::int64_t n, std::size_t e, const std::vector<IVec>& m) {
  SequencePack s;
  std::vector<IVec> prefix;
  s.D.push_back(minor_gcd(n, e, prefix));
  for (const auto& v : m) {
    prefix.push_back(v);
    s.D.push_back(minor_gcd(n, e, prefix));
  }
  std::int64_t pow = 1;
  for (std::size_t i = 0; i + 1 < e; ++i) pow *= n;
  if (s.D.back() != pow) {
    fail(ErrorKind::DegenerateCharacteristicData,
         "D_(h+1) = " + std::to_string(s.D.back()) + " but n^(e-1) = " + std::to_string(pow));
  }
  for (auto D : s.D) s.d.push_back(D / pow);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (s.D[i] % s.D[i + 1] != 0 || s.D[i] == s.D[i + 1]) {
      fail(ErrorKind::DegenerateCharacteristicData, "D sequence " + seq_text(s.D) + " is not strictly decreasing");
    }
    s.e_seq.push_back(s.D[i] / s.D[i + 1]);
  }
  for (std::size_t i = 0; i < e; ++i) {
    IVec u(e, 0);
    u[i] = n;
    s.r0.push_back(std::move(u));
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == 0) {
      s.r.push_back(m[0]);
    } else {
      s.r.push_back(add(scale(s.r[i - 1], s.e_seq[i - 1]), sub(m[i], m[i - 1])));
    }
  }
  return s;
}

LatticeMembership lattice_membership(std::int64_t n, const std::vector<IVec>& prefix, const IVec& v) {
  const std::size_t e = v.size();
  const std::int64_t D = minor_gcd(n, e, prefix);
  std::vector<IVec> with(prefix);
  with.push_back(v);
  const std::int64_t Dt = minor_gcd(n, e, with);
  return {D == Dt, D / Dt};
}

GaloisCounts count_orbits(const FracSeries& y0, const CharData& cd) {
  const std::int64_t n = cd.n;
  const FracSeries y = lifted_root(y0, n);
  const OrderSpec& o = y.order();
  const std::size_t h = cd.h();
  GaloisCounts c;
  c.R.assign(h, 0);
  c.S.assign(h, 0);
  c.R_tilde.assign(h, 0);
  c.S_tilde.assign(h, 0);
  auto tally = [&](const std::optional<IVec>& ord, std::vector<std::int64_t>& R, std::vector<std::int64_t>& S) {
    for (std::size_t i = 0; i < h; ++i) {
      if (!ord) {
        ++R[i];
        continue;
      }
      const auto cmp = o.compare(*ord, cd.m[i]);
      if (cmp >= 0) ++R[i];
      if (cmp == 0) ++S[i];
    }
  };
  for_each_root_action(y.dim(), n, [&](const IVec& k) {
    tally(difference_order(y.apply_root_action(k, n) - y, n), c.R, c.S);
  });
  for (const auto& z : conjugates(y, n)) tally(difference_order(z - y, n), c.R_tilde, c.S_tilde);
  return c;
}

GaloisCounts galois_counts(const FracSeries& y, const CharData& cd, const SequencePack& seq) {
  GaloisCounts c = count_orbits(y, cd);
  for (std::size_t i = 0; i < cd.h(); ++i) {
    const bool ok = c.R[i] == seq.D[i] && c.S[i] == seq.D[i] - seq.D[i + 1] && c.R_tilde[i] == seq.d[i] &&
                    c.S_tilde[i] == seq.d[i] - seq.d[i + 1];
    if (!ok) {
      fail(ErrorKind::CountMismatch, "orbit counts at index " + std::to_string(i + 1) + " are #R=" +
                                         std::to_string(c.R[i]) + ", #S=" + std::to_string(c.S[i]) +
                                         ", but D=" + seq_text(seq.D));
    }
  }
  return c;
}

QVec order_pair(const FracSeries& y, std::int64_t n, const SeriesPoly& g) {
  const FracSeries v = g.eval_at(y);
  if (v.has_no_terms()) {
    fail(ErrorKind::DividesF, v.is_exact() ? "g vanishes at the root" : "g vanishes at the root to the available precision");
  }
  return scale(v.order_data().order, Rational(n));
}

SeriesPoly pseudo_root(const FracSeries& y, const CharData& cd, std::size_t i) {
  if (i < 1 || i > cd.h()) fail(ErrorKind::InvalidArgument, "pseudo-root index out of range");
  const FracSeries t = y.truncate_below(cd.exponent(i - 1));
  if (!t.is_exact()) fail(ErrorKind::PrecisionExhausted, "root precision does not reach m_" + std::to_string(i));
  return minimal_polynomial(t, cd.n);
}

std::vector<IVec> SemigroupDesc::generators() const {
  std::vector<IVec> out = r0;
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::optional<SemigroupRepresentation> semigroup_representation(const SemigroupDesc& s, const IVec& a) {
  if (a.size() != s.ambient.dim()) fail(ErrorKind::InvalidArgument, "element has wrong dimension");
  SemigroupRepresentation rep;
  rep.alpha.assign(s.r.size(), 0);
  IVec rest = a;
  for (std::size_t j = s.r.size(); j-- > 0;) {
    const std::vector<IVec> prefix(s.r.begin(), s.r.begin() + static_cast<std::ptrdiff_t>(j));
    bool found = false;
    for (std::int64_t k = 0; k < s.e_seq[j]; ++k) {
      const IVec cand = sub(rest, scale(s.r[j], k));
      if (lattice_membership(s.n, prefix, cand).member) {
        rep.alpha[j] = k;
        rest = cand;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  rep.alpha0.resize(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] % s.n != 0) return std::nullopt;
    rep.alpha0[i] = rest[i] / s.n;
  }
  if (!s.ambient.cone().contains(rep.alpha0)) return std::nullopt;
  return rep;
}

IVec semigroup_element(const SemigroupDesc& s, const SemigroupRepresentation& rep) {
  IVec out = scale(rep.alpha0, s.n);
  for (std::size_t j = 0; j < s.r.size(); ++j) out = add(out, scale(s.r[j], rep.alpha[j]));
  return out;
}

QVec expansion_order(const FracSeries& y, std::int64_t n, const std::vector<SeriesPoly>& G, const SequencePack& seq,
                     const SeriesPoly& f, const SeriesPoly& g) {
  std::vector<SeriesPoly> basis = G;
  basis.push_back(f);
  const GAdicExpansion exp = G_adic_expansion(g, basis, true);
  std::optional<QVec> best;
  bool tie = false;
  const OrderSpec& o = y.order();
  for (const auto& [b, c] : exp) {
    if (b.back() > 0 || c.has_no_terms()) continue;
    QVec v = scale(c.order_data().order, Rational(n));
    for (std::size_t j = 0; j < G.size(); ++j) v = add(v, to_qvec(scale(seq.r[j], b[j])));
    if (!best || o.compare(v, *best) < 0) {
      best = v;
      tie = false;
    } else if (o.compare(v, *best) == 0) {
      tie = true;
    }
  }
  if (!best) fail(ErrorKind::DividesF, "every monomial of the expansion is divisible by f");
  if (tie) fail(ErrorKind::InvariantViolation, "two monomials of the expansion share the minimal order " + vec_text(*best));
  return *best;
}

bool FreeAnalysis::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void add_check(std::vector<Check>& checks, std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

template <typename Fn>
void guarded_check(std::vector<Check>& checks, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    add_check(checks, name, false, err.what());
  }
}

}  // namespace

FreeAnalysis analyze_free(const SeriesPoly& f, const FracSeries& root) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::InvalidArgument, "f must be monic of positive degree");
  FreeAnalysis a;
  a.f = f;
  a.n = f.degree();
  a.root = lifted_root(root, a.n);
  const std::int64_t n = a.n;
  auto& checks = a.checks;

  const FracSeries residual = f.eval_at(a.root);
  add_check(checks, "f(root) = 0", residual.has_no_terms(),
            residual.is_exact() ? "exact" : "below weight " + to_string(*residual.precision()));

  const auto conj = conjugates(a.root, n);
  add_check(checks, "distinct conjugates = n", static_cast<std::int64_t>(conj.size()) == n,
            std::to_string(conj.size()) + " of " + std::to_string(n));

  a.chars = characteristic_data(a.root, n);
  a.seq = gcd_sequences(n, a.root.dim(), a.chars.m);
  const std::size_t h = a.chars.h();
  const auto& seq = a.seq;

  Integer top = 1;
  for (std::size_t k = 1; k < a.root.dim(); ++k) top *= n;
  add_check(checks, "D_(h+1) = n^(e-1)", Integer(seq.D.back()) == top, seq_text(seq.D));

  for (std::size_t i = 0; i < h; ++i) {
    const std::string idx = std::to_string(i + 1);
    IVec lhs = scale(seq.r[i], seq.d[i]);
    IVec rhs = scale(a.chars.m[i], seq.d[i]);
    for (std::size_t k = 0; k < i; ++k) rhs = add(rhs, scale(a.chars.m[k], seq.d[k] - seq.d[k + 1]));
    add_check(checks, "r_" + idx + " d_" + idx + " identity", lhs == rhs, vec_text(lhs) + " vs " + vec_text(rhs));

    const std::vector<IVec> prefix(seq.r.begin(), seq.r.begin() + static_cast<std::ptrdiff_t>(i));
    const LatticeMembership lm = lattice_membership(n, prefix, seq.r[i]);
    add_check(checks, "e_" + idx + " r_" + idx + " in lattice L_" + std::to_string(i), lm.multiple == seq.e_seq[i],
              "least multiple " + std::to_string(lm.multiple) + ", e_" + idx + " = " + std::to_string(seq.e_seq[i]));
  }

  guarded_check(checks, "galois counts", [&] {
    a.counts = count_orbits(a.root, a.chars);
    bool ok = true;
    for (std::size_t i = 0; i < h; ++i) {
      ok = ok && a.counts.R[i] == seq.D[i] && a.counts.S[i] == seq.D[i] - seq.D[i + 1] &&
           a.counts.R_tilde[i] == seq.d[i] && a.counts.S_tilde[i] == seq.d[i] - seq.d[i + 1];
    }
    add_check(checks, "galois counts", ok,
              "#R=" + seq_text(a.counts.R) + " #S=" + seq_text(a.counts.S) + " #R~=" + seq_text(a.counts.R_tilde) +
                  " #S~=" + seq_text(a.counts.S_tilde));
  });

  std::vector<FracSeries> truncations;
  for (std::size_t i = 0; i < h; ++i) {
    const std::string idx = std::to_string(i + 1);
    truncations.push_back(a.root.truncate_below(a.chars.exponent(i)));
    a.pseudo_roots.push_back(pseudo_root(a.root, a.chars, i + 1));
    const SeriesPoly& G = a.pseudo_roots.back();
    add_check(checks, "deg G_" + idx + " = n/d_" + idx, G.degree() == n / seq.d[i],
              std::to_string(G.degree()) + " vs " + std::to_string(n / seq.d[i]));

    guarded_check(checks, "O(f,G_" + idx + ") = r_" + idx, [&] {
      const QVec o = order_pair(a.root, n, G);
      a.pseudo_root_orders.push_back(o);
      add_check(checks, "O(f,G_" + idx + ") = r_" + idx, o == to_qvec(seq.r[i]), vec_text(o));
      if (f.is_exact()) {
        const QVec ro = resultant_order(f, G);
        add_check(checks, "O(Res(f,G_" + idx + ")) = r_" + idx, ro == to_qvec(seq.r[i]), vec_text(ro));
      }
    });

    guarded_check(checks, "O(f,App(f,d_" + idx + ")) = r_" + idx, [&] {
      a.approx_roots.push_back(approximate_root(f, seq.d[i]));
      const QVec o = order_pair(a.root, n, a.approx_roots.back());
      a.approx_root_orders.push_back(o);
      add_check(checks, "O(f,App(f,d_" + idx + ")) = r_" + idx, o == to_qvec(seq.r[i]), vec_text(o));
    });

    guarded_check(checks, "O(f(y_<m_" + idx + ")) = r_" + idx + " d_" + idx + "/n", [&] {
      const FracSeries v = f.eval_at(truncations.back());
      const QVec o = v.order_data().order;
      const QVec want = to_qvec(scale(seq.r[i], seq.d[i]), n);
      add_check(checks, "O(f(y_<m_" + idx + ")) = r_" + idx + " d_" + idx + "/n", o == want, vec_text(o));
    });
  }

  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::string name = "O(G_" + std::to_string(i + 1) + ",G_" + std::to_string(j + 1) + ") = r_" +
                               std::to_string(j + 1) + "/d_" + std::to_string(i + 1);
      guarded_check(checks, name, [&] {
        const QVec o = order_pair(truncations[i], n / seq.d[i], a.pseudo_roots[j]);
        const QVec want = to_qvec(seq.r[j], seq.d[i]);
        add_check(checks, name, o == want, vec_text(o));
      });
    }
  }

  a.semigroup = SemigroupDesc{n, a.root.ambient(), seq.r0, seq.r, seq.e_seq};
  return a;
}

SemigroupDesc semigroup_generators(const FreeAnalysis& analysis) {
  for (const auto& c : analysis.checks) {
    if (!c.pass) fail(ErrorKind::InvariantViolation, c.name + " failed: " + c.witness);
  }
  return analysis.semigroup;
}

}  // namespace freepoly

#include "freepoly/cone.hpp"

#include "freepoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freepoly {

namespace {

// Row r means sum_i r[i]*x_i + r.back() >= 0.
using Row = std::vector<Integer>;

void normalize(Row& r) {
  Integer g = 0;
  for (const auto& c : r) g = gcd(g, c);
  if (g > 1) {
    for (auto& c : r) c /= g;
  }
}

bool is_trivial(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& c) { return c == 0; });
}

std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t var) {
  std::vector<const Row*> pos;
  std::vector<const Row*> neg;
  std::set<Row> out;
  for (const auto& r : rows) {
    const int s = sgn(r[var]);
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else if (!is_trivial(r)) {
      out.insert(r);
    }
  }
  for (const Row* p : pos) {
    for (const Row* q : neg) {
      const Integer a = (*p)[var];
      const Integer b = -(*q)[var];
      Row combo(p->size());
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = b * (*p)[i] + a * (*q)[i];
      normalize(combo);
      if (!is_trivial(combo)) out.insert(std::move(combo));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IVec> facet_inequalities(std::size_t dim, const std::vector<IVec>& gens) {
  const std::size_t k = gens.size();
  const std::size_t width = dim + k + 1;
  std::vector<Row> rows;
  for (std::size_t j = 0; j < k; ++j) {
    Row r(width, 0);
    r[dim + j] = 1;
    rows.push_back(r);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Row r(width, 0);
    r[i] = 1;
    for (std::size_t j = 0; j < k; ++j) r[dim + j] = -static_cast<long>(gens[j][i]);
    rows.push_back(r);
    for (auto& c : r) c = -c;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = k; j-- > 0;) rows = eliminate(rows, dim + j);
  std::vector<IVec> out;
  for (const auto& r : rows) {
    IVec a(dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] = r[i].get_si();
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Cone::Cone(std::size_t dim, std::vector<IVec> generators) {
  if (dim == 0) fail(ErrorKind::InvalidArgument, "cone dimension must be at least 1");
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "cone needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != dim) fail(ErrorKind::InvalidArgument, "cone generator has wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      fail(ErrorKind::InvalidArgument, "cone generators must be nonzero");
    }
  }
  auto ineq = facet_inequalities(dim, generators);
  data_ = std::make_shared<const Data>(Data{dim, std::move(generators), std::move(ineq)});
}

Cone Cone::from_rational(std::size_t dim, const std::vector<QVec>& generators) {
  std::vector<IVec> gens;
  for (const auto& q : generators) {
    Integer l = 1;
    for (const auto& x : q) l = lcm(l, x.get_den());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& x : q) {
      v.push_back(x.get_num() * (l / x.get_den()));
      g = gcd(g, v.back());
    }
    IVec out;
    for (auto& x : v) out.push_back(g == 0 ? 0 : Integer(x / g).get_si());
    gens.push_back(std::move(out));
  }
  return Cone(dim, std::move(gens));
}

bool Cone::contains(const IVec& v) const {
  for (const auto& a : data_->inequalities) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * v[i];
    if (s < 0) return false;
  }
  return true;
}

bool Cone::contains(const QVec& v) const {
  for (const auto& a : data_->inequalities) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * v[i];
    if (s < 0) return false;
  }
  return true;
}

bool operator==(const Cone& a, const Cone& b) {
  return a.data_ == b.data_ || (a.dim() == b.dim() && a.generators() == b.generators());
}

Cone orthant_cone(std::size_t e) {
  std::vector<IVec> gens;
  for (std::size_t i = 0; i < e; ++i) {
    IVec g(e, 0);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  return Cone(e, std::move(gens));
}

Cone standard_blowup_cone(std::size_t e) {
  if (e < 1) fail(ErrorKind::InvalidArgument, "standard_blowup_cone needs e >= 1");
  std::vector<IVec> gens;
  IVec first(e, 0);
  first[0] = 1;
  gens.push_back(first);
  for (std::size_t i = 1; i < e; ++i) {
    IVec g(e, 0);
    g[0] = -1;
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  return Cone(e, std::move(gens));
}

bool is_line_free(const Cone& c) {
  // Feasibility of {w : g.w - 1 >= 0 for every generator g}.
  const std::size_t e = c.dim();
  std::vector<Row> rows;
  for (const auto& g : c.generators()) {
    Row r(e + 1, 0);
    for (std::size_t i = 0; i < e; ++i) r[i] = static_cast<long>(g[i]);
    r[e] = -1;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = e; i-- > 0;) rows = eliminate(rows, i);
  return std::all_of(rows.begin(), rows.end(), [e](const Row& r) { return r[e] >= 0; });
}

bool cone_contains(const Cone& c, const QVec& v) { return c.contains(v); }

std::int64_t OrderSpec::weight_of(const IVec& v) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < weight_.size(); ++i) s += weight_[i] * v[i];
  return s;
}

Rational OrderSpec::weight_of(const QVec& v) const {
  Rational s = 0;
  for (std::size_t i = 0; i < weight_.size(); ++i) s += Rational(static_cast<long>(weight_[i])) * v[i];
  return s;
}

std::strong_ordering OrderSpec::compare(const IVec& a, const IVec& b) const {
  const std::int64_t wa = weight_of(a);
  const std::int64_t wb = weight_of(b);
  if (wa != wb) return wa <=> wb;
  return a <=> b;
}

std::strong_ordering OrderSpec::compare(const QVec& a, const QVec& b) const {
  const Rational wa = weight_of(a);
  const Rational wb = weight_of(b);
  if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const OrderSpec& o, const QVec& a, const QVec& b) { return o.compare(a, b); }

OrderSpec compatible_order(const Cone& c) {
  if (!is_line_free(c)) fail(ErrorKind::NotLineFree, "cone contains a line; no compatible order exists");
  const std::size_t e = c.dim();
  for (std::int64_t m = 1;; ++m) {
    IVec w(e, -m);
    while (true) {
      const bool on_shell = std::any_of(w.begin(), w.end(), [m](std::int64_t x) { return x == m || x == -m; });
      if (on_shell) {
        const bool positive = std::all_of(c.generators().begin(), c.generators().end(), [&](const IVec& g) {
          std::int64_t s = 0;
          for (std::size_t i = 0; i < e; ++i) s += w[i] * g[i];
          return s > 0;
        });
        if (positive) return OrderSpec(w);
      }
      std::size_t i = e;
      while (i > 0 && w[i - 1] == m) {
        w[i - 1] = -m;
        --i;
      }
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

Rational transfer_weight_bound(const Cone& cone, const IVec& from, const IVec& to, const Rational& bound) {
  Rational lambda = 0;
  bool any = false;
  for (const auto& g : cone.generators()) {
    std::int64_t f = 0;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      f += from[i] * g[i];
      t += to[i] * g[i];
    }
    if (t <= 0) fail(ErrorKind::InvalidArgument, "target weight is not positive on the cone");
    const Rational ratio = make_rational(f, t);
    if (!any || ratio > lambda) lambda = ratio;
    any = true;
  }
  if (lambda <= 0) fail(ErrorKind::InvalidArgument, "source weight is not positive on the cone");
  Rational out = bound / lambda;
  out.canonicalize();
  return out;
}

Ambient::Ambient(Cone cone, OrderSpec order) : cone_(std::move(cone)), order_(std::move(order)) {
  if (order_.dim() != cone_.dim()) fail(ErrorKind::InvalidArgument, "order and cone dimensions differ");
  for (const auto& g : cone_.generators()) {
    if (order_.weight_of(g) <= 0) {
      fail(ErrorKind::InvalidArgument, "order weight is not strictly positive on the cone");
    }
  }
}

Ambient::Ambient(Cone cone) : cone_(cone), order_(compatible_order(cone)) {}

}  // namespace freepoly

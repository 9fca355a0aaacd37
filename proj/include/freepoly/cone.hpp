#pragma once

#include "freepoly/types.hpp"

#include <compare>
#include <memory>
#include <vector>

namespace freepoly {

// A finitely generated rational cone in R^e, presented by nonzero integer
// generators. The facet inequalities a.v >= 0 are computed once at
// construction by Fourier-Motzkin elimination, which makes membership exact
// and cheap.
class Cone {
 public:
  Cone(std::size_t dim, std::vector<IVec> generators);
  // Rational generators are scaled to primitive integer vectors.
  static Cone from_rational(std::size_t dim, const std::vector<QVec>& generators);

  std::size_t dim() const { return data_->dim; }
  const std::vector<IVec>& generators() const { return data_->generators; }
  const std::vector<IVec>& inequalities() const { return data_->inequalities; }

  bool contains(const IVec& v) const;
  bool contains(const QVec& v) const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  struct Data {
    std::size_t dim;
    std::vector<IVec> generators;
    std::vector<IVec> inequalities;
  };
  std::shared_ptr<const Data> data_;
};

Cone orthant_cone(std::size_t e);
// {c : c1 >= -(c2 + ... + ce), ci >= 0 for i >= 2}.
Cone standard_blowup_cone(std::size_t e);

bool is_line_free(const Cone& c);
bool cone_contains(const Cone& c, const QVec& v);

// Additive total order on Z^e (and Q^e): compare by weight.v, then
// lexicographically with coordinate 1 most significant.
class OrderSpec {
 public:
  OrderSpec() = default;
  explicit OrderSpec(IVec weight) : weight_(std::move(weight)) {}

  const IVec& weight() const { return weight_; }
  std::size_t dim() const { return weight_.size(); }

  std::int64_t weight_of(const IVec& v) const;
  Rational weight_of(const QVec& v) const;

  std::strong_ordering compare(const IVec& a, const IVec& b) const;
  std::strong_ordering compare(const QVec& a, const QVec& b) const;

  bool less(const QVec& a, const QVec& b) const { return compare(a, b) < 0; }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  IVec weight_;
};

// Smallest-max-norm integer weight strictly positive on every generator;
// ties broken by lexicographically smallest weight. Throws NotLineFree.
OrderSpec compatible_order(const Cone& c);

std::strong_ordering compare(const OrderSpec& o, const QVec& a, const QVec& b);

// Rescales a weight bound across a change of weight: returns the largest T'
// such that every c in `cone` with to.c < T' satisfies from.c < bound.
// Requires `to` positive on the generators of `cone`.
Rational transfer_weight_bound(const Cone& cone, const IVec& from, const IVec& to, const Rational& bound);

// A cone together with its compatible order; the ambient of every series.
class Ambient {
 public:
  Ambient(Cone cone, OrderSpec order);
  explicit Ambient(Cone cone);  // uses compatible_order(cone)

  static Ambient orthant(std::size_t e) { return Ambient(orthant_cone(e)); }
  static Ambient blowup(std::size_t e) { return Ambient(standard_blowup_cone(e)); }

  const Cone& cone() const { return cone_; }
  const OrderSpec& order() const { return order_; }
  std::size_t dim() const { return cone_.dim(); }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.order_ == b.order_ && a.cone_ == b.cone_;
  }

 private:
  Cone cone_;
  OrderSpec order_;
};

}  // namespace freepoly

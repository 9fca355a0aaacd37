#pragma once

#include "freepoly/ypoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freepoly {

// Characteristic exponents m_1 < ... < m_h, stored as numerators over n.
struct CharData {
  std::int64_t n = 1;
  std::size_t e = 0;
  std::vector<IVec> m;

  std::size_t h() const { return m.size(); }
  QVec exponent(std::size_t i) const { return to_qvec(m[i], n); }
};

CharData characteristic_data_by_conjugates(const FracSeries& y, std::int64_t n);
CharData characteristic_data_by_lattice(const FracSeries& y, std::int64_t n);
// Both methods; throws CrossCheckMismatch when they disagree.
CharData characteristic_data(const FracSeries& y, std::int64_t n);

// D, d have h+1 entries, e_seq has h; r0 holds n times the unit vectors and
// r holds r_1..r_h.
struct SequencePack {
  std::vector<std::int64_t> D;
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> e_seq;
  std::vector<IVec> r0;
  std::vector<IVec> r;

  std::vector<IVec> generators() const;
};

// gcd of the maximal minors of the e x (e + k) matrix (n I_e | v_1 ... v_k).
std::int64_t minor_gcd(std::int64_t n, std::size_t e, const std::vector<IVec>& vectors);

SequencePack gcd_sequences(std::int64_t n, std::size_t e, const std::vector<IVec>& m);

struct LatticeMembership {
  bool member = false;
  std::int64_t multiple = 1;  // least k > 0 with k v in the lattice
};

// Membership of v in (n Z)^e + sum prefix_j Z.
LatticeMembership lattice_membership(std::int64_t n, const std::vector<IVec>& prefix, const IVec& v);

struct GaloisCounts {
  std::vector<std::int64_t> R;        // automorphisms with O(theta y - y) >= m_i
  std::vector<std::int64_t> S;        // automorphisms with O(theta y - y) == m_i
  std::vector<std::int64_t> R_tilde;  // conjugates with O(y_k - y) >= m_i
  std::vector<std::int64_t> S_tilde;  // conjugates with O(y_k - y) == m_i
};

// Brute force over all n^e automorphisms. A vanishing difference counts as
// infinitely large. Throws CountMismatch when the counts disagree with D, d.
GaloisCounts galois_counts(const FracSeries& y, const CharData& cd, const SequencePack& seq);
GaloisCounts count_orbits(const FracSeries& y, const CharData& cd);

// n * O(g(y)) for a root y of a degree-n polynomial.
QVec order_pair(const FracSeries& y, std::int64_t n, const SeriesPoly& g);

// Minimal polynomial of the truncation of y below m_i (1-based index).
SeriesPoly pseudo_root(const FracSeries& y, const CharData& cd, std::size_t i);

struct SemigroupDesc {
  std::int64_t n = 1;
  Ambient ambient = Ambient::orthant(1);
  std::vector<IVec> r0;
  std::vector<IVec> r;
  std::vector<std::int64_t> e_seq;

  std::vector<IVec> generators() const;
};

struct SemigroupRepresentation {
  IVec alpha0;
  std::vector<std::int64_t> alpha;
};

// Peels alpha_h, ..., alpha_1 off a; alpha0 must lie in the ambient cone.
// Returns nullopt when a is not in the semigroup.
std::optional<SemigroupRepresentation> semigroup_representation(const SemigroupDesc& s, const IVec& a);
IVec semigroup_element(const SemigroupDesc& s, const SemigroupRepresentation& rep);

// O(f, g) through the (G_1, ..., G_h, f)-adic expansion of g.
QVec expansion_order(const FracSeries& y, std::int64_t n, const std::vector<SeriesPoly>& G,
                     const SequencePack& seq, const SeriesPoly& f, const SeriesPoly& g);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

// Everything computed about a free polynomial f from one of its roots.
struct FreeAnalysis {
  SeriesPoly f = SeriesPoly(Ambient::orthant(1));
  FracSeries root = FracSeries(Ambient::orthant(1));
  std::int64_t n = 1;
  CharData chars;
  SequencePack seq;
  GaloisCounts counts;
  std::vector<SeriesPoly> pseudo_roots;
  std::vector<SeriesPoly> approx_roots;  // App(f, d_i)
  std::vector<QVec> pseudo_root_orders;
  std::vector<QVec> approx_root_orders;
  SemigroupDesc semigroup;
  std::vector<Check> checks;

  bool all_pass() const;
};

FreeAnalysis analyze_free(const SeriesPoly& f, const FracSeries& root);

// Throws InvariantViolation if any check of the analysis failed.
SemigroupDesc semigroup_generators(const FreeAnalysis& analysis);

}  // namespace freepoly

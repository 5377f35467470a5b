#pragma once

#include <map>
#include <vector>

#include "forest_specht/graph.hpp"
#include "forest_specht/numeric.hpp"
#include "forest_specht/partition.hpp"

namespace forest {

using SchurExpansion = std::map<Partition, BigInt, PartitionOrder>;
using ClassFunction = std::map<Partition, BigInt, PartitionOrder>;
/// Monomial expansion in N variables: exponent vector -> coefficient.
using MonomialExpansion = std::map<std::vector<int>, BigInt>;

/// Integer combination of products h_mu = h_{mu_1} h_{mu_2} ... of complete
/// homogeneous symmetric functions. h_() is the unit.
class HPoly {
 public:
  using Terms = std::map<Partition, BigInt, PartitionOrder>;

  HPoly() = default;
  static HPoly h(const Partition& mu, BigInt coeff = 1);
  static HPoly one() { return h({}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous element; -1 if zero, throws if mixed.
  int degree() const;
  bool is_homogeneous() const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add(const Partition& mu, const BigInt& c);
  Terms terms_;
};

HPoly hpoly_mul(const HPoly& a, const HPoly& b);

/// s_G for a forest: white star T_n -> h_n, disjoint union -> product,
/// otherwise s(g) = s(h) - s(gp) via leaf_step.
HPoly s_forest(const BipartiteGraph& g);

/// Semistandard Young tableaux of shape lambda and content mu.
BigInt kostka(const Partition& lambda, const Partition& mu);

/// h_mu = sum_lambda K(lambda, mu) s_lambda applied termwise.
SchurExpansion h_to_schur(const HPoly& p);
/// Inverse of h_to_schur by back-substitution along lexicographic order (a
/// linear extension of dominance).
HPoly schur_to_h(const SchurExpansion& s);

/// h_to_schur(s_forest(g)); throws std::logic_error on a negative
/// coefficient.
SchurExpansion schur_coeffs(const BipartiteGraph& g);

/// n! over the product of hook lengths.
BigInt hook_dim(const Partition& lambda);
/// Standard Young tableaux counted by corner removal.
BigInt syt_count(const Partition& lambda);

/// h_k -> 1/k!.
Rational exp_specialize(const HPoly& p);
/// h_k -> C(k+N-1, k).
BigInt principal_specialize(const HPoly& p, int N);

/// Irreducible character chi^lambda on cycle type rho (Murnaghan-Nakayama).
BigInt mn_char(const Partition& lambda, const Partition& rho);
ClassFunction irreducible_character(const Partition& lambda);

/// Coefficients of sum_lambda c_lambda s_lambda(x_1..x_N) on monomials.
MonomialExpansion monomial_expansion(const SchurExpansion& s, int N);

/// Sum over lambda of c_lambda times the restriction of S^lambda to
/// Sigma_{n-1} (remove one corner box each way).
SchurExpansion restrict_one_box(const SchurExpansion& s);

/// Sum_lambda c_lambda f^lambda.
BigInt schur_dimension(const SchurExpansion& s);

/// Drops zero entries so that expansions compare structurally.
SchurExpansion prune(SchurExpansion s);

}  // namespace forest

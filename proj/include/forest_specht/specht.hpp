#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "forest_specht/diagram.hpp"
#include "forest_specht/echelon.hpp"
#include "forest_specht/permutation.hpp"
#include "forest_specht/symfunc.hpp"

namespace forest {

/// Sparse element of the group algebra of Sigma_n; permutations act on box
/// ids.
struct GroupAlgebraElement {
  int n = 0;
  std::map<Perm, BigInt> terms;
};

/// C(D) R(D): signed column-stabilizer sum times row-stabilizer sum.
/// Throws CapExceeded when |C_D| * |R_D| exceeds symmetrizer_max_terms.
GroupAlgebraElement symmetrizer(const Diagram& d);

struct SpechtReport {
  BigInt dimension;
  ClassFunction character;
  SchurExpansion decomposition;
};

struct TensorReport {
  int N = 0;
  BigInt dimension;
  /// Content vector (length N) -> multiplicity of that weight.
  MonomialExpansion character;
};

/// The left ideal Q[Sigma_n] C(D) R(D) over a prime field. Vectors live in
/// the basis of Q[Sigma_n] R(D) (left cosets of R_D), generated by g C(D) R(D)
/// for one g per left coset of C_D; the span equals that of all sigma C(D) R(D).
class SpechtModule {
 public:
  /// `parallel` selects the OpenMP row generator; the serial path is kept
  /// as the reference. Throws CapExceeded above Config::specht_max_n.
  SpechtModule(const Diagram& d, std::uint32_t prime, bool parallel = true);

  int dimension() const { return basis_.rank(); }
  /// Trace of one permutation per cycle type on the ideal.
  ClassFunction character();
  /// Multiplicities of the irreducibles, from the character.
  SchurExpansion decompose();

  /// Number of coset coordinates and of generators (for diagnostics).
  std::int64_t num_cosets() const { return static_cast<std::int64_t>(row_words_.size()); }
  std::int64_t num_generators() const { return generators_; }

  /// The generator rows, in coset coordinates with signed integer entries.
  static std::vector<std::vector<std::pair<int, std::int64_t>>> generator_rows(const Diagram& d);

 private:
  int n_;
  std::vector<std::uint64_t> row_words_;
  std::int64_t generators_ = 0;
  EchelonBasis basis_;
};

/// Dimension of the Specht module modulo Config::primes[0].
BigInt specht_dim(const Diagram& d);
BigInt specht_dim_mod(const Diagram& d, std::uint32_t prime, bool parallel = true);
/// Exact rank over the rationals; capped at Config::exact_rank_max_n boxes.
BigInt specht_dim_exact(const Diagram& d);
/// Naive route: rank of {sigma * C(D)R(D) : sigma in Sigma_n} in the full
/// group algebra with n! coordinates.
BigInt specht_dim_reference(const Diagram& d, std::uint32_t prime);

ClassFunction specht_character(const Diagram& d);
SchurExpansion specht_decompose(const Diagram& d);
SpechtReport specht_report(const Diagram& d, bool with_character, bool with_decomposition);

/// V^{(x)n} C(D) R(D) for V of dimension N: per-weight ranks of the images of
/// basis tensors. Throws CapExceeded when N^n exceeds Config::tensor_max.
TensorReport schur_tensor_span(const Diagram& d, int N, bool parallel = true);

}  // namespace forest

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forest_specht/numeric.hpp"

namespace forest {

/// Arithmetic modulo a prime below 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t prime() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, p_ - b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;
  /// Symmetric lift into (-p/2, p/2].
  std::int64_t to_signed(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Sparse vector: (column, value) pairs with strictly increasing columns and
/// nonzero values.
using SparseRow = std::vector<std::pair<int, std::uint32_t>>;

/// Row-echelon basis over a prime field, grown one vector at a time. Each
/// stored row has leading entry 1 at its pivot column. Single writer.
class EchelonBasis {
 public:
  EchelonBasis(int num_cols, std::uint32_t prime);

  /// Reduces `v` against the basis and keeps the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(const SparseRow& v);

  int rank() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return num_cols_; }
  bool full() const { return rank() == num_cols_; }
  const PrimeField& field() const { return field_; }

  /// Brings the basis to reduced row-echelon form: every pivot column is
  /// zero outside its own row. Coefficients of a vector in the span can then
  /// be read off at the pivot columns.
  void reduce_fully();
  bool fully_reduced() const { return reduced_; }

  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::uint32_t entry(int row, int col) const;

 private:
  int num_cols_;
  PrimeField field_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_of_pivot_;
  std::vector<std::uint32_t> scratch_;
  bool reduced_ = true;
};

/// Rank over the rationals by exact Gaussian elimination.
int rational_rank(const std::vector<std::vector<std::pair<int, BigInt>>>& rows, int num_cols);

}  // namespace forest

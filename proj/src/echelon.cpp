#include "forest_specht/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace forest {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3) throw std::invalid_argument("prime field modulus too small");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::int64_t PrimeField::to_signed(std::uint32_t a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

EchelonBasis::EchelonBasis(int num_cols, std::uint32_t prime)
    : num_cols_(num_cols), field_(prime), row_of_pivot_(num_cols, -1), scratch_(num_cols, 0) {}

bool EchelonBasis::insert(const SparseRow& v) {
  if (v.empty() || full()) return false;
  auto& acc = scratch_;
  int first = num_cols_;
  for (auto [c, x] : v) {
    acc[c] = x;
    first = std::min(first, c);
  }
  SparseRow out;
  int lead = -1;
  std::uint32_t lead_inv = 0;
  for (int c = first; c < num_cols_; ++c) {
    std::uint32_t x = acc[c];
    if (x == 0) continue;
    acc[c] = 0;
    if (lead < 0) {
      int r = row_of_pivot_[c];
      if (r >= 0) {
        // Row r has its leading 1 at c; it only touches columns >= c.
        for (auto [cc, y] : rows_[r])
          if (cc != c) acc[cc] = field_.sub(acc[cc], field_.mul(x, y));
        continue;
      }
      lead = c;
      lead_inv = field_.inv(x);
      out.emplace_back(c, 1);
    } else {
      out.emplace_back(c, field_.mul(x, lead_inv));
    }
  }
  if (lead < 0) return false;
  row_of_pivot_[lead] = rank();
  pivots_.push_back(lead);
  rows_.push_back(std::move(out));
  reduced_ = false;
  return true;
}

void EchelonBasis::reduce_fully() {
  if (reduced_) return;
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] > pivots_[b]; });
  auto& acc = scratch_;
  for (int r : order) {
    for (auto [c, x] : rows_[r]) acc[c] = x;
    SparseRow out;
    for (int c = pivots_[r]; c < num_cols_; ++c) {
      std::uint32_t x = acc[c];
      if (x == 0) continue;
      acc[c] = 0;
      int other = row_of_pivot_[c];
      if (c != pivots_[r] && other >= 0) {
        // `other` is already reduced: zero at every pivot but its own.
        for (auto [cc, y] : rows_[other])
          if (cc != c) acc[cc] = field_.sub(acc[cc], field_.mul(x, y));
        continue;
      }
      out.emplace_back(c, x);
    }
    rows_[r] = std::move(out);
  }
  reduced_ = true;
}

std::uint32_t EchelonBasis::entry(int row, int col) const {
  const auto& r = rows_.at(row);
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(col, std::uint32_t{0}));
  return it != r.end() && it->first == col ? it->second : 0;
}

int rational_rank(const std::vector<std::vector<std::pair<int, BigInt>>>& rows, int num_cols) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> dense(num_cols, 0);
    for (const auto& [c, v] : r) dense.at(c) += Rational(v);
    m.push_back(std::move(dense));
  }
  int rank = 0;
  for (int c = 0; c < num_cols && rank < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < num_cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace forest

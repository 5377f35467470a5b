#include "forest_specht/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forest {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return normalize_partition(lengths);
}

int sign(const Perm& p) {
  int s = 1;
  for (int len : cycle_type(p))
    if (len % 2 == 0) s = -s;
  return s;
}

std::int64_t perm_index(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::int64_t index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    index = index * (n - i) + smaller;
  }
  return index;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm class_representative(const Partition& rho) {
  Perm p;
  int start = 0;
  for (int len : rho) {
    for (int k = 0; k < len; ++k) p.push_back(start + (k + 1) % len);
    start += len;
  }
  return p;
}

std::vector<std::pair<Perm, int>> block_stabilizer(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<std::pair<Perm, int>> out{{identity_perm(n), 1}};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<std::pair<Perm, int>> next;
    std::vector<int> images = block;
    std::sort(images.begin(), images.end());
    std::vector<std::pair<Perm, int>> local;
    do {
      Perm q = identity_perm(n);
      for (std::size_t k = 0; k < block.size(); ++k) q[block[k]] = images[k];
      local.emplace_back(q, sign(q));
    } while (std::next_permutation(images.begin(), images.end()));
    for (const auto& [p, sp] : out)
      for (const auto& [q, sq] : local) next.emplace_back(compose(p, q), sp * sq);
    out = std::move(next);
  }
  return out;
}

}  // namespace forest

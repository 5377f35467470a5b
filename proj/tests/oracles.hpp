#pragma once
// Brute-force reference computations used only by the tests. None of these
// call into the library's algorithms beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "forest_specht/diagram.hpp"
#include "forest_specht/graph.hpp"
#include "forest_specht/numeric.hpp"

namespace oracle {

using forest::BigInt;
using forest::BipartiteGraph;
using forest::Diagram;

// Endpoint indices per edge, compacted to 0..V-1.
inline std::vector<std::pair<int, int>> edge_slots(const BipartiteGraph& g, std::vector<bool>* white = nullptr) {
  std::map<int, int> slot;
  for (const auto& v : g.vertices()) {
    slot.emplace(v.id, static_cast<int>(slot.size()));
  }
  if (white) {
    white->assign(slot.size(), false);
    for (const auto& v : g.vertices()) (*white)[slot[v.id]] = v.color == forest::Color::white;
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(slot[e.u], slot[e.v]);
  return out;
}

// Calls f on every vector in {0..hi}^n.
inline void for_each_box_point(int n, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> x(n, 0);
  while (true) {
    f(x);
    int i = 0;
    while (i < n && x[i] == hi) x[i++] = 0;
    if (i == n) return;
    ++x[i];
  }
}

// Integer points of t * (matching polytope), by scanning the whole cube.
inline std::uint64_t lattice_points(const BipartiteGraph& g, int t) {
  auto es = edge_slots(g);
  const int vcount = static_cast<int>(g.num_vertices());
  std::uint64_t count = 0;
  for_each_box_point(static_cast<int>(es.size()), t, [&](const std::vector<int>& x) {
    std::vector<int> load(vcount, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      load[es[i].first] += x[i];
      load[es[i].second] += x[i];
    }
    if (std::all_of(load.begin(), load.end(), [&](int l) { return l <= t; })) ++count;
  });
  return count;
}

// n! * volume = n-th forward difference of the Ehrhart polynomial at 0.
inline BigInt volume_by_differences(const BipartiteGraph& g) {
  const int n = g.num_edges();
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt term = forest::binomial(n, k) * BigInt(lattice_points(g, k));
    if ((n - k) % 2) total -= term; else total += term;
  }
  return total;
}

// Weightings with white sums <= N-1 and black sums <= N - degree.
inline std::uint64_t weightings(const BipartiteGraph& g, int N) {
  std::vector<bool> white;
  auto es = edge_slots(g, &white);
  std::vector<int> deg(white.size(), 0);
  for (auto [a, b] : es) ++deg[a], ++deg[b];
  std::uint64_t count = 0;
  if (N < 1) return 0;
  for_each_box_point(static_cast<int>(es.size()), N - 1, [&](const std::vector<int>& x) {
    std::vector<int> load(white.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      load[es[i].first] += x[i];
      load[es[i].second] += x[i];
    }
    for (std::size_t v = 0; v < white.size(); ++v) {
      int cap = white[v] ? N - 1 : N - deg[v];
      if (load[v] > cap) return;
    }
    ++count;
  });
  return count;
}

// Semistandard tableaux of a partition shape with the given content.
inline BigInt kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> fill(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) fill[r].assign(shape[r], 0);
  std::vector<int> left = content;
  BigInt count = 0;
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && fill[r][c - 1] > v) continue;
      if (r > 0 && fill[r - 1][c] >= v) continue;
      fill[r][c] = v;
      --left[v - 1];
      go(k + 1);
      ++left[v - 1];
    }
  };
  go(0);
  return count;
}

inline BigInt standard_young_tableaux(const std::vector<int>& shape) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  return kostka(shape, std::vector<int>(n, 1));
}

// Dense rank modulo p of the rows {sigma * C(D) R(D)} in the full group
// algebra, with the symmetrizer assembled by scanning all of Sigma_n.
inline int specht_rank(const Diagram& d, std::uint32_t p) {
  const int n = d.size();
  if (n == 0) return 1;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(idx); while (std::next_permutation(idx.begin(), idx.end()));
  auto keeps = [&](const std::vector<int>& s, bool rows) {
    for (int b = 0; b < n; ++b) {
      const auto& x = d.box(b);
      const auto& y = d.box(s[b]);
      if (rows ? x.row != y.row : x.col != y.col) return false;
    }
    return true;
  };
  auto parity = [&](const std::vector<int>& s) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += s[i] > s[j];
    return inv % 2 ? -1 : 1;
  };
  std::map<std::vector<int>, int> pos;
  for (std::size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = static_cast<int>(i);
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<std::int64_t> e(perms.size(), 0);
  for (const auto& q : perms) {
    if (!keeps(q, false)) continue;
    for (const auto& r : perms)
      if (keeps(r, true)) e[pos[mul(q, r)]] += parity(q);
  }
  const std::uint64_t P = p;
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& s : perms) {
    std::vector<std::uint64_t> row(perms.size(), 0);
    for (std::size_t j = 0; j < perms.size(); ++j)
      if (e[j]) row[pos[mul(s, perms[j])]] = static_cast<std::uint64_t>(((e[j] % std::int64_t(P)) + std::int64_t(P)) % std::int64_t(P));
    m.push_back(std::move(row));
  }
  auto power = [&](std::uint64_t a, std::uint64_t k) {
    std::uint64_t r = 1;
    for (a %= P; k; k >>= 1, a = a * a % P)
      if (k & 1) r = r * a % P;
    return r;
  };
  int rank = 0;
  const std::size_t cols = perms.size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = power(m[rank][c], P - 2);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (!m[r][c]) continue;
      std::uint64_t f = m[r][c] * inv % P;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + (P - f) * m[rank][k]) % P;
    }
    ++rank;
  }
  return rank;
}

// Dimension of V^{(x)n} C(D) R(D) per weight, spanning the images of all N^n
// basis tensors (no column-strictness shortcut). Exact arithmetic via
// dense elimination mod p on each weight space.
inline std::map<std::vector<int>, int> tensor_weights(const Diagram& d, int N, std::uint32_t p) {
  const int n = d.size();
  std::map<std::vector<int>, int> out;
  if (n == 0) {
    out[std::vector<int>(N, 0)] = 1;
    return out;
  }
  if (N == 0) return out;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> cr;  // (q r, sign q)
  std::vector<std::vector<int>> perms;
  do perms.push_back(idx); while (std::next_permutation(idx.begin(), idx.end()));
  auto keeps = [&](const std::vector<int>& s, bool rows) {
    for (int b = 0; b < n; ++b) {
      if (rows ? d.box(b).row != d.box(s[b]).row : d.box(b).col != d.box(s[b]).col) return false;
    }
    return true;
  };
  for (const auto& q : perms) {
    if (!keeps(q, false)) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += q[i] > q[j];
    for (const auto& r : perms) {
      if (!keeps(r, true)) continue;
      std::vector<int> qr(n);
      for (int i = 0; i < n; ++i) qr[i] = q[r[i]];
      cr.emplace_back(qr, inv % 2 ? -1 : 1);
    }
  }
  // tensors grouped by weight
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_weight;
  for_each_box_point(n, N - 1, [&](const std::vector<int>& t) {
    std::vector<int> w(N, 0);
    for (int v : t) ++w[v];
    by_weight[w].push_back(t);
  });
  const std::uint64_t P = p;
  for (auto& [w, ts] : by_weight) {
    std::map<std::vector<int>, int> col;
    for (auto& t : ts) col.emplace(t, static_cast<int>(col.size()));
    std::vector<std::vector<std::uint64_t>> m;
    for (auto& t : ts) {
      std::vector<std::int64_t> row(col.size(), 0);
      for (auto& [s, sg] : cr) {
        std::vector<int> ts2(n);
        for (int b = 0; b < n; ++b) ts2[b] = t[s[b]];
        row[col.at(ts2)] += sg;
      }
      std::vector<std::uint64_t> r2(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) r2[i] = static_cast<std::uint64_t>(((row[i] % std::int64_t(P)) + std::int64_t(P)) % std::int64_t(P));
      m.push_back(std::move(r2));
    }
    auto power = [&](std::uint64_t a, std::uint64_t k) {
      std::uint64_t r = 1;
      for (a %= P; k; k >>= 1, a = a * a % P)
        if (k & 1) r = r * a % P;
      return r;
    };
    int rank = 0;
    for (std::size_t c = 0; c < col.size() && rank < static_cast<int>(m.size()); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[rank]);
      std::uint64_t inv = power(m[rank][c], P - 2);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        if (!m[r][c]) continue;
        std::uint64_t f = m[r][c] * inv % P;
        for (std::size_t k = c; k < col.size(); ++k) m[r][k] = (m[r][k] + (P - f) * m[rank][k]) % P;
      }
      ++rank;
    }
    if (rank) out[w] = rank;
  }
  return out;
}

}  // namespace oracle

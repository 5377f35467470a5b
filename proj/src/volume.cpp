#include "forest_specht/volume.hpp"

#include <omp.h>

#include <functional>
#include <vector>

#include "forest_specht/config.hpp"
#include "forest_specht/leaf_step.hpp"
#include "forest_specht/memo.hpp"

namespace forest {

namespace {

MemoTable<BigInt> apm_memo;
MemoTable<BigInt> labeling_memo;

void require_forest(const BipartiteGraph& g) {
  if (!g.is_forest()) throw GraphError("input is not a forest");
}

BigInt multinomial_product(const std::vector<std::pair<BigInt, int>>& parts) {
  int total = 0;
  BigInt value = 1;
  for (const auto& [v, n] : parts) {
    total += n;
    value *= v * binomial(total, n);
  }
  return value;
}

BigInt apm_volume(const BipartiteGraph& g) {
  if (g.empty()) return 1;
  std::string key = g.canonical_key();
  if (auto hit = apm_memo.find(key)) return *hit;
  BigInt value;
  if (!g.is_connected()) {
    std::vector<std::pair<BigInt, int>> parts;
    for (const auto& c : g.components()) parts.emplace_back(apm_volume(c), c.num_edges());
    value = multinomial_product(parts);
  } else if (g.is_star()) {
    value = 1;
  } else {
    value = 0;
    for (int e : find_apm(g).edges) value += apm_volume(g.without_edge(e));
  }
  apm_memo.insert(key, value);
  return value;
}

// Enumerates nonnegative integer weightings edge by edge, keeping the
// remaining capacity of every vertex. `cap` is indexed like g.vertices().
struct WeightingCounter {
  std::vector<std::pair<int, int>> ends;  // vertex slots of each edge
  std::vector<int> cap;

  WeightingCounter(const BipartiteGraph& g, const std::function<int(const Vertex&)>& capacity) {
    std::vector<int> ids;
    for (const auto& v : g.vertices()) {
      ids.push_back(v.id);
      cap.push_back(capacity(v));
    }
    auto slot = [&](int id) {
      for (std::size_t k = 0; k < ids.size(); ++k)
        if (ids[k] == id) return static_cast<int>(k);
      return -1;
    };
    for (const auto& e : g.edges()) ends.emplace_back(slot(e.u), slot(e.v));
  }

  bool feasible() const {
    for (int c : cap)
      if (c < 0) return false;
    return true;
  }

  std::uint64_t count_from(std::size_t edge, std::vector<int>& room) const {
    if (edge == ends.size()) return 1;
    auto [a, b] = ends[edge];
    int top = std::min(room[a], room[b]);
    std::uint64_t total = 0;
    for (int w = 0; w <= top; ++w) {
      room[a] -= w;
      room[b] -= w;
      total += count_from(edge + 1, room);
      room[a] += w;
      room[b] += w;
    }
    return total;
  }

  std::uint64_t serial() const {
    if (!feasible()) return 0;
    auto room = cap;
    return count_from(0, room);
  }

  // Splits on the weight of edge 0; each branch enumerates independently.
  std::uint64_t parallel() const {
    if (!feasible()) return 0;
    if (ends.empty()) return 1;
    auto [a, b] = ends[0];
    const int top = std::min(cap[a], cap[b]);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (int w = 0; w <= top; ++w) {
      auto room = cap;
      room[a] -= w;
      room[b] -= w;
      total += count_from(1, room);
    }
    return total;
  }
};

WeightingCounter dilate_counter(const BipartiteGraph& g, int t) {
  return WeightingCounter(g, [t](const Vertex&) { return t; });
}

WeightingCounter m_counter(const BipartiteGraph& g, int N) {
  return WeightingCounter(g, [&](const Vertex& v) {
    return v.color == Color::white ? N - 1 : N - g.degree(v.id);
  });
}

}  // namespace

NormalizedVolume v_apm(const BipartiteGraph& g) {
  require_forest(g);
  return {apm_volume(g)};
}

NormalizedVolume v_leaf(const BipartiteGraph& g) {
  require_forest(g);
  LeafRecurrence<BigInt> rec([](int) { return BigInt(1); }, multinomial_product);
  return {rec(g)};
}

std::uint64_t lattice_count(const BipartiteGraph& g, int t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  return dilate_counter(g, t).parallel();
}

std::uint64_t lattice_count_serial(const BipartiteGraph& g, int t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  return dilate_counter(g, t).serial();
}

NormalizedVolume v_ehrhart(const BipartiteGraph& g) {
  const int n = g.num_edges();
  if (n > config().ehrhart_max_n) throw CapExceeded("ehrhart_max_n", config().ehrhart_max_n, n);
  if (n == 0) return {1};
  // Leading coefficient of the interpolant through (t, L(t)), t = 0..n:
  // sum_t L(t) / prod_{s != t} (t - s).
  Rational lead = 0;
  for (int t = 0; t <= n; ++t) {
    BigInt denom = 1;
    for (int s = 0; s <= n; ++s)
      if (s != t) denom *= (t - s);
    lead += make_rational(BigInt(lattice_count(g, t)), denom);
  }
  Rational v = lead * Rational(factorial(n));
  if (boost::multiprecision::denominator(v) != 1 || v < 0)
    throw std::logic_error("Ehrhart interpolation produced a non-integer volume " + to_string(v));
  return {boost::multiprecision::numerator(v)};
}

std::uint64_t m_count(const BipartiteGraph& g, int N) {
  if (N < 1) throw std::invalid_argument("m_count needs N >= 1");
  return m_counter(g, N).parallel();
}

std::uint64_t m_count_serial(const BipartiteGraph& g, int N) {
  if (N < 1) throw std::invalid_argument("m_count needs N >= 1");
  return m_counter(g, N).serial();
}

BigInt count_standard_labelings(const BipartiteGraph& g, const ApmChoice& choice) {
  require_forest(g);
  if (g.empty()) return 1;
  BigInt total = 0;
  for (int e : choice(g)) total += count_standard_labelings(g.without_edge(e), choice);
  return total;
}

BigInt count_standard_labelings(const BipartiteGraph& g) {
  require_forest(g);
  if (g.empty()) return 1;
  std::string key = g.canonical_key();
  if (auto hit = labeling_memo.find(key)) return *hit;
  BigInt total = 0;
  for (int e : find_apm(g).edges) total += count_standard_labelings(g.without_edge(e));
  labeling_memo.insert(key, total);
  return total;
}

void clear_volume_caches() {
  apm_memo.clear();
  labeling_memo.clear();
}

}  // namespace forest

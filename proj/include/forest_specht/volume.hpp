#pragma once

#include <cstdint>

#include "forest_specht/graph.hpp"
#include "forest_specht/matching.hpp"
#include "forest_specht/numeric.hpp"

namespace forest {

/// n! times the Euclidean volume of the matching polytope; always an
/// integer for bipartite graphs.
struct NormalizedVolume {
  BigInt value;
  friend bool operator==(const NormalizedVolume&, const NormalizedVolume&) = default;
};

/// Almost-perfect-matching recursion: V(G) = sum over e in M of V(G - e),
/// with the multinomial rule for disjoint unions and V = 1 on stars.
NormalizedVolume v_apm(const BipartiteGraph& g);

/// Leaf-recurrence evaluation: white stars are 1, disjoint unions combine
/// with binomial factors, otherwise V(g) = V(h) - V(gp) from leaf_step.
NormalizedVolume v_leaf(const BipartiteGraph& g);

/// n! times the leading coefficient of the Ehrhart polynomial, interpolated
/// exactly through lattice_count(g, 0..n). Throws CapExceeded above
/// Config::ehrhart_max_n edges.
NormalizedVolume v_ehrhart(const BipartiteGraph& g);

/// Integer points of the t-th dilate of the matching polytope.
std::uint64_t lattice_count(const BipartiteGraph& g, int t);
/// Single-threaded enumeration kept as the reference for lattice_count.
std::uint64_t lattice_count_serial(const BipartiteGraph& g, int t);

/// Integer weightings with white vertex sums <= N-1 and black vertex sums
/// <= N - deg(v).
std::uint64_t m_count(const BipartiteGraph& g, int N);
std::uint64_t m_count_serial(const BipartiteGraph& g, int N);

/// Number of standard edge labelings: the largest label sits on an edge of
/// choice(g), and removing it leaves a standard labeling.
BigInt count_standard_labelings(const BipartiteGraph& g, const ApmChoice& choice);
BigInt count_standard_labelings(const BipartiteGraph& g);

/// Drops the process-wide memo tables.
void clear_volume_caches();

}  // namespace forest

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "forest_specht/diagram.hpp"
#include "forest_specht/graph.hpp"
#include "forest_specht/leaf_step.hpp"

namespace forest {

/// Colored trees with exactly `edges` edges, one per isomorphism class.
std::vector<BipartiteGraph> all_trees(int edges);

/// Colored forests with 1..max_edges edges, one per isomorphism class,
/// ordered by edge count then canonical key.
std::vector<BipartiteGraph> all_forests(int max_edges);

/// Diagrams (= bipartite graphs without isolated vertices) with
/// 1..max_boxes boxes, one per equivalence class.
std::vector<Diagram> all_diagrams(int max_boxes);

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] from raw engine output, so results do not
/// depend on the standard library's distribution implementation.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Forest with exactly `edges` edges: vertices are attached one at a time to
/// a random earlier vertex, occasionally starting a new component, then each
/// component is 2-colored from a randomly colored root.
BipartiteGraph random_forest(int edges, Rng& rng);

/// Random leaf-recurrence configuration whose g has at most `max_edges`
/// edges (at least 2).
LeafTriple random_leaf_triple(int max_edges, Rng& rng);

/// Path of `spine` edges with `legs` extra leaves on every spine vertex.
BipartiteGraph make_caterpillar(int spine, int legs);

}  // namespace forest

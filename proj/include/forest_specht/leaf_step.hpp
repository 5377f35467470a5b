#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forest_specht/graph.hpp"

namespace forest {

/// One reduction of a rooted tree g that is not a white star centred at the
/// root. With v1' the least leaf at distance >= 2 from the root, v1 its
/// neighbor and v2 the neighbor of v1 nearest the root:
///   h  = g - v1v2  + pendant at v2   (disconnected)
///   gp = g - v1v1' + pendant at v2   (distance sum one smaller)
/// and every leaf-recurrent function satisfies f(g) = f(h) - f(gp).
struct LeafStep {
  BipartiteGraph h;
  BipartiteGraph gp;
  int leaf;       // v1'
  int pivot;      // v1
  int toward;     // v2
};

/// Throws GraphError("base case") for a white star rooted at its centre and
/// GraphError for disconnected or cyclic input or a non-white root.
LeafStep leaf_step(const BipartiteGraph& g, int root);

/// Sum of distances from `root` to every vertex of a tree.
int distance_sum(const BipartiteGraph& tree, int root);

/// The three graphs of the leaf recurrence built from a base graph H and
/// two vertices v1, v2 in different components of H (either may be a fresh
/// vertex, in which case it must not already exist):
///   g  = H + v1v1' + v2v2',  g1 = H + v1v1' + v1v2,  g2 = H + v2v2' + v1v2.
struct LeafTriple {
  BipartiteGraph g;
  BipartiteGraph g1;
  BipartiteGraph g2;
};
LeafTriple make_leaf_triple(const std::vector<Vertex>& base_vertices, const std::vector<Edge>& base_edges,
                            Vertex v1, Vertex v2);

/// Evaluates the unique function on forests fixed by its values on white
/// stars, a rule for disjoint unions and the leaf recurrence. `unite`
/// receives (value, edge count) per component and must return the unit for
/// an empty list. Values are memoized on canonical graph keys.
template <class T>
class LeafRecurrence {
 public:
  using StarFn = std::function<T(int)>;
  using UnionFn = std::function<T(const std::vector<std::pair<T, int>>&)>;

  LeafRecurrence(StarFn star, UnionFn unite) : star_(std::move(star)), unite_(std::move(unite)) {}

  T operator()(const BipartiteGraph& g) {
    if (!g.is_forest()) throw GraphError("leaf recurrence is defined on forests only");
    return eval(g);
  }

 private:
  T eval(const BipartiteGraph& g) {
    std::string key = g.canonical_key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    T value;
    if (g.empty()) {
      value = unite_({});
    } else if (!g.is_connected()) {
      std::vector<std::pair<T, int>> parts;
      for (const auto& c : g.components()) parts.emplace_back(eval(c), c.num_edges());
      value = unite_(parts);
    } else if (g.is_white_star()) {
      value = star_(g.num_edges());
    } else {
      LeafStep step = leaf_step(g, g.least_white());
      value = eval(step.h) - eval(step.gp);
    }
    memo_.emplace(std::move(key), value);
    return value;
  }

  StarFn star_;
  UnionFn unite_;
  std::unordered_map<std::string, T> memo_;
};

}  // namespace forest

#include "forest_specht/leaf_step.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace forest {

namespace {

// BFS distances and parents from the root.
void bfs(const BipartiteGraph& g, int root, std::map<int, int>& dist, std::map<int, int>& parent) {
  std::queue<int> q;
  dist[root] = 0;
  parent[root] = -1;
  q.push(root);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int e : g.incident(x)) {
      int y = g.other_end(e, x);
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      q.push(y);
    }
  }
}

}  // namespace

int distance_sum(const BipartiteGraph& tree, int root) {
  std::map<int, int> dist, parent;
  bfs(tree, root, dist, parent);
  int s = 0;
  for (auto [v, d] : dist) s += d;
  return s;
}

LeafStep leaf_step(const BipartiteGraph& g, int root) {
  if (g.empty() || !g.is_connected()) throw GraphError("leaf step needs a connected graph");
  if (!g.is_forest()) throw GraphError("leaf step needs a tree");
  if (!g.has_vertex(root) || g.color(root) != Color::white) throw GraphError("leaf step root must be white");
  std::map<int, int> dist, parent;
  bfs(g, root, dist, parent);
  // Vertices are stored in canonical (color, id) order, so the first
  // qualifying leaf is the least one.
  int leaf = -1;
  for (const auto& v : g.vertices())
    if (g.degree(v.id) == 1 && dist[v.id] >= 2) {
      leaf = v.id;
      break;
    }
  if (leaf < 0) throw GraphError("base case");
  const int pivot = parent[leaf];
  const int toward = parent[pivot];

  auto [with_leaf, fresh] = g.with_pendant(toward);
  (void)fresh;
  LeafStep out{with_leaf.without_edge(with_leaf.find_edge(pivot, toward)),
               with_leaf.without_edge(with_leaf.find_edge(pivot, leaf)), leaf, pivot, toward};
  return out;
}

LeafTriple make_leaf_triple(const std::vector<Vertex>& base_vertices, const std::vector<Edge>& base_edges,
                            Vertex v1, Vertex v2) {
  if (v1.id == v2.id) throw GraphError("leaf triple needs distinct vertices");
  if (v1.color == v2.color) throw GraphError("leaf triple vertices must have opposite colors");
  std::vector<Vertex> vs = base_vertices;
  int next = 0;
  for (const auto& v : vs) next = std::max(next, v.id);
  for (const Vertex& x : {v1, v2}) {
    auto it = std::find_if(vs.begin(), vs.end(), [&](const Vertex& v) { return v.id == x.id; });
    if (it == vs.end()) vs.push_back(x);
    else if (it->color != x.color) throw GraphError("leaf triple vertex color mismatch");
    next = std::max(next, x.id);
  }
  const Vertex v1p{next + 1, opposite(v1.color)};
  const Vertex v2p{next + 2, opposite(v2.color)};

  auto build = [&](std::vector<Edge> extra, std::vector<Vertex> extra_vertices) {
    auto all_v = vs;
    all_v.insert(all_v.end(), extra_vertices.begin(), extra_vertices.end());
    auto all_e = base_edges;
    all_e.insert(all_e.end(), extra.begin(), extra.end());
    return BipartiteGraph(std::move(all_v), std::move(all_e));
  };
  return {build({{v1.id, v1p.id}, {v2.id, v2p.id}}, {v1p, v2p}),
          build({{v1.id, v1p.id}, {v1.id, v2.id}}, {v1p}),
          build({{v2.id, v2p.id}, {v1.id, v2.id}}, {v2p})};
}

}  // namespace forest

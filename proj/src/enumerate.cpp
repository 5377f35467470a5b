#include "forest_specht/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace forest {

std::vector<BipartiteGraph> all_trees(int edges) {
  if (edges < 1) return {};
  std::map<std::string, BipartiteGraph> layer;
  BipartiteGraph seed({{1, Color::white}, {2, Color::black}}, {{1, 2}});
  layer.emplace(seed.canonical_key(), seed);
  for (int k = 2; k <= edges; ++k) {
    std::map<std::string, BipartiteGraph> next;
    for (const auto& [key, t] : layer)
      for (const auto& v : t.vertices()) {
        auto grown = t.with_pendant(v.id).first;
        next.emplace(grown.canonical_key(), grown);
      }
    layer = std::move(next);
  }
  std::vector<BipartiteGraph> out;
  for (auto& [key, t] : layer) out.push_back(std::move(t));
  return out;
}

std::vector<BipartiteGraph> all_forests(int max_edges) {
  std::vector<std::vector<BipartiteGraph>> trees(max_edges + 1);
  for (int k = 1; k <= max_edges; ++k) trees[k] = all_trees(k);
  std::vector<BipartiteGraph> out;
  // Multisets of trees as nondecreasing (size, index) sequences.
  std::vector<std::pair<int, int>> pick;
  std::function<void(int, int, int)> rec = [&](int remaining, int min_size, int min_index) {
    if (!pick.empty()) {
      BipartiteGraph g = trees[pick[0].first][pick[0].second];
      for (std::size_t i = 1; i < pick.size(); ++i) g = g.disjoint_union(trees[pick[i].first][pick[i].second]);
      out.push_back(g);
    }
    for (int s = min_size; s <= remaining; ++s)
      for (int i = (s == min_size ? min_index : 0); i < static_cast<int>(trees[s].size()); ++i) {
        pick.emplace_back(s, i);
        rec(remaining - s, s, i);
        pick.pop_back();
      }
  };
  rec(max_edges, 1, 0);
  std::stable_sort(out.begin(), out.end(), [](const BipartiteGraph& a, const BipartiteGraph& b) {
    if (a.num_edges() != b.num_edges()) return a.num_edges() < b.num_edges();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

std::vector<Diagram> all_diagrams(int max_boxes) {
  std::vector<Diagram> out;
  std::map<std::string, Diagram> layer;
  if (max_boxes < 1) return out;
  Diagram seed({{1, 1}});
  layer.emplace(canonical_key(seed), seed);
  for (int k = 1; k <= max_boxes; ++k) {
    for (const auto& [key, d] : layer) out.push_back(d);
    if (k == max_boxes) break;
    std::map<std::string, Diagram> next;
    for (const auto& [key, d] : layer)
      for (int r = 1; r <= d.max_row() + 1; ++r)
        for (int c = 1; c <= d.max_col() + 1; ++c) {
          if (d.contains({r, c})) continue;
          auto bs = d.boxes();
          bs.push_back({r, c});
          Diagram grown(std::move(bs));
          next.emplace(canonical_key(grown), grown);
        }
    layer = std::move(next);
  }
  return out;
}

BipartiteGraph random_forest(int edges, Rng& rng) {
  if (edges < 1) throw GraphError("random forest needs at least one edge");
  // parent[i] = -1 marks a component root.
  std::vector<int> parent{-1, 0};
  for (int k = 1; k < edges; ++k) {
    if (uniform_int(rng, 0, 5) == 0) {
      int root = static_cast<int>(parent.size());
      parent.push_back(-1);
      parent.push_back(root);
    } else {
      int attach = uniform_int(rng, 0, static_cast<int>(parent.size()) - 1);
      parent.push_back(attach);
    }
  }
  std::vector<Color> color(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    color[i] = parent[i] < 0 ? (uniform_int(rng, 0, 1) ? Color::black : Color::white)
                             : opposite(color[parent[i]]);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    vs.push_back({static_cast<int>(i) + 1, color[i]});
    if (parent[i] >= 0) es.push_back({parent[i] + 1, static_cast<int>(i) + 1});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

LeafTriple random_leaf_triple(int max_edges, Rng& rng) {
  if (max_edges < 2) throw GraphError("leaf triple needs room for two edges");
  const int base_edges = uniform_int(rng, 0, max_edges - 2);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  std::vector<std::vector<int>> comps;
  if (base_edges > 0) {
    BipartiteGraph h = random_forest(base_edges, rng);
    vs = h.vertices();
    es = h.edges();
    for (const auto& c : h.components()) {
      std::vector<int> ids;
      for (const auto& v : c.vertices()) ids.push_back(v.id);
      comps.push_back(ids);
    }
  }
  int next = 0;
  for (const auto& v : vs) next = std::max(next, v.id);
  auto color_of = [&](int id) {
    for (const auto& v : vs)
      if (v.id == id) return v.color;
    return Color::white;
  };
  // v1: an existing vertex or a fresh one; v2 must come from another
  // component (or be fresh) so that all three graphs stay forests.
  const int nc = static_cast<int>(comps.size());
  int c1 = uniform_int(rng, 0, nc);  // nc means fresh
  Vertex v1;
  if (c1 < nc) {
    int id = comps[c1][uniform_int(rng, 0, static_cast<int>(comps[c1].size()) - 1)];
    v1 = {id, color_of(id)};
  } else {
    v1 = {++next, uniform_int(rng, 0, 1) ? Color::black : Color::white};
  }
  std::vector<int> candidates;
  for (int c = 0; c < nc; ++c) {
    if (c == c1) continue;
    for (int id : comps[c])
      if (color_of(id) != v1.color) candidates.push_back(id);
  }
  Vertex v2;
  int choice = uniform_int(rng, 0, static_cast<int>(candidates.size()));
  if (choice < static_cast<int>(candidates.size())) v2 = {candidates[choice], opposite(v1.color)};
  else v2 = {++next, opposite(v1.color)};
  return make_leaf_triple(vs, es, v1, v2);
}

BipartiteGraph make_caterpillar(int spine, int legs) {
  if (spine < 1 || legs < 0) throw GraphError("caterpillar needs spine >= 1 and legs >= 0");
  BipartiteGraph g = make_path(spine);
  for (int v = 1; v <= spine + 1; ++v)
    for (int k = 0; k < legs; ++k) g = g.with_pendant(v).first;
  return g;
}

}  // namespace forest

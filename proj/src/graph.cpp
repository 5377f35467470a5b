#include "forest_specht/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace forest {

namespace {

bool vertex_less(const Vertex& a, const Vertex& b) {
  if (a.color != b.color) return a.color < b.color;
  return a.id < b.id;
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end(), vertex_less);
  std::set<int> ids;
  for (const auto& v : vertices_)
    if (!ids.insert(v.id).second) throw GraphError("duplicate vertex id " + std::to_string(v.id));
  build_index();
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw GraphError("edge references unknown vertex");
    if (e.u == e.v) throw GraphError("self loop at vertex " + std::to_string(e.u));
    if (color(e.u) == color(e.v))
      throw GraphError("non-bipartite edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw GraphError("duplicate edge " + std::to_string(key.first) + "-" +
                       std::to_string(key.second));
  }
  incident_.assign(vertices_.size(), {});
  for (int i = 0; i < num_edges(); ++i) {
    incident_[index_of(edges_[i].u)].push_back(i);
    incident_[index_of(edges_[i].v)].push_back(i);
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (incident_[k].empty())
      throw GraphError("isolated vertex " + std::to_string(vertices_[k].id));
}

BipartiteGraph BipartiteGraph::from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::map<int, Color> colors;
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) {
    for (const auto& v : {a, b}) {
      auto [it, inserted] = colors.emplace(v.id, v.color);
      if (!inserted && it->second != v.color)
        throw GraphError("vertex " + std::to_string(v.id) + " given two colors");
    }
    es.push_back({a.id, b.id});
  }
  std::vector<Vertex> vs;
  for (auto [id, c] : colors) vs.push_back({id, c});
  return BipartiteGraph(std::move(vs), std::move(es));
}

void BipartiteGraph::build_index() {
  id_index_.clear();
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    id_index_.emplace_back(vertices_[k].id, static_cast<int>(k));
  std::sort(id_index_.begin(), id_index_.end());
}

int BipartiteGraph::index_of(int id) const {
  auto it = std::lower_bound(id_index_.begin(), id_index_.end(), std::make_pair(id, INT32_MIN));
  if (it == id_index_.end() || it->first != id) throw GraphError("unknown vertex " + std::to_string(id));
  return it->second;
}

bool BipartiteGraph::has_vertex(int id) const {
  auto it = std::lower_bound(id_index_.begin(), id_index_.end(), std::make_pair(id, INT32_MIN));
  return it != id_index_.end() && it->first == id;
}

Color BipartiteGraph::color(int id) const { return vertices_[index_of(id)].color; }
int BipartiteGraph::degree(int id) const { return static_cast<int>(incident_[index_of(id)].size()); }
const std::vector<int>& BipartiteGraph::incident(int id) const { return incident_[index_of(id)]; }

int BipartiteGraph::other_end(int edge, int id) const {
  const Edge& e = edges_.at(edge);
  if (e.u == id) return e.v;
  if (e.v == id) return e.u;
  throw GraphError("vertex not on edge");
}

int BipartiteGraph::white_end(int edge) const {
  const Edge& e = edges_.at(edge);
  return color(e.u) == Color::white ? e.u : e.v;
}

int BipartiteGraph::black_end(int edge) const {
  const Edge& e = edges_.at(edge);
  return color(e.u) == Color::black ? e.u : e.v;
}

int BipartiteGraph::max_vertex_id() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.id);
  return m;
}

int BipartiteGraph::find_edge(int a, int b) const {
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return i;
  }
  return -1;
}

bool BipartiteGraph::is_forest() const {
  // A graph is a forest iff |E| = |V| - #components.
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges_) {
    int a = find(index_of(e.u)), b = find(index_of(e.v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool BipartiteGraph::is_connected() const {
  return components().size() <= 1;
}

bool BipartiteGraph::is_star() const {
  if (empty() || !is_connected()) return false;
  for (const auto& v : vertices_)
    if (degree(v.id) == num_edges()) return true;
  return false;
}

bool BipartiteGraph::is_white_star() const {
  if (empty() || !is_connected()) return false;
  for (const auto& v : vertices_)
    if (v.color == Color::white && degree(v.id) == num_edges()) return true;
  return false;
}

std::vector<BipartiteGraph> BipartiteGraph::components(std::vector<std::vector<int>>* edge_maps) const {
  const int nv = num_vertices();
  std::vector<int> comp(nv, -1);
  int count = 0;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : incident_[x]) {
        int y = index_of(other_end(e, vertices_[x].id));
        if (comp[y] == -1) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  // Order components by their least vertex id.
  std::vector<int> least(count, INT32_MAX);
  for (int k = 0; k < nv; ++k) least[comp[k]] = std::min(least[comp[k]], vertices_[k].id);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return least[a] < least[b]; });

  std::vector<BipartiteGraph> out;
  if (edge_maps) edge_maps->clear();
  for (int c : order) {
    std::vector<Vertex> vs;
    for (int k = 0; k < nv; ++k)
      if (comp[k] == c) vs.push_back(vertices_[k]);
    std::vector<Edge> es;
    std::vector<int> map;
    for (int i = 0; i < num_edges(); ++i)
      if (comp[index_of(edges_[i].u)] == c) {
        es.push_back(edges_[i]);
        map.push_back(i);
      }
    out.emplace_back(std::move(vs), std::move(es));
    if (edge_maps) edge_maps->push_back(std::move(map));
  }
  return out;
}

BipartiteGraph BipartiteGraph::without_edges(const std::vector<int>& removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int e : removed) drop.at(e) = true;
  std::vector<Edge> es;
  std::set<int> used;
  for (int i = 0; i < num_edges(); ++i) {
    if (drop[i]) continue;
    es.push_back(edges_[i]);
    used.insert(edges_[i].u);
    used.insert(edges_[i].v);
  }
  std::vector<Vertex> vs;
  for (const auto& v : vertices_)
    if (used.count(v.id)) vs.push_back(v);
  return BipartiteGraph(std::move(vs), std::move(es));
}

BipartiteGraph BipartiteGraph::without_edge(int edge) const { return without_edges({edge}); }

BipartiteGraph BipartiteGraph::with_edge(int a, int b) const {
  auto es = edges_;
  es.push_back({a, b});
  return BipartiteGraph(vertices_, std::move(es));
}

std::pair<BipartiteGraph, int> BipartiteGraph::with_pendant(int id) const {
  int fresh = max_vertex_id() + 1;
  auto vs = vertices_;
  vs.push_back({fresh, opposite(color(id))});
  auto es = edges_;
  es.push_back({id, fresh});
  return {BipartiteGraph(std::move(vs), std::move(es)), fresh};
}

BipartiteGraph BipartiteGraph::flipped_colors() const {
  auto vs = vertices_;
  for (auto& v : vs) v.color = opposite(v.color);
  return BipartiteGraph(std::move(vs), edges_);
}

BipartiteGraph BipartiteGraph::disjoint_union(const BipartiteGraph& other) const {
  int shift = max_vertex_id();
  auto vs = vertices_;
  auto es = edges_;
  for (const auto& v : other.vertices_) vs.push_back({v.id + shift, v.color});
  for (const auto& e : other.edges_) es.push_back({e.u + shift, e.v + shift});
  return BipartiteGraph(std::move(vs), std::move(es));
}

int BipartiteGraph::least_white() const {
  for (const auto& v : vertices_)
    if (v.color == Color::white) return v.id;
  return -1;
}

namespace {

std::string rooted_code(const BipartiteGraph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int e : g.incident(v)) {
    int w = g.other_end(e, v);
    if (w != parent) kids.push_back(rooted_code(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s(1, g.color(v) == Color::white ? 'w' : 'b');
  s += '(';
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

std::vector<int> tree_centers(const BipartiteGraph& tree) {
  std::vector<int> ids;
  std::map<int, int> deg;
  for (const auto& v : tree.vertices()) deg[v.id] = tree.degree(v.id);
  std::vector<int> layer;
  for (auto [id, d] : deg)
    if (d <= 1) layer.push_back(id);
  int remaining = tree.num_vertices();
  std::set<int> removed;
  while (remaining > 2) {
    std::vector<int> next;
    for (int leaf : layer) {
      removed.insert(leaf);
      --remaining;
      for (int e : tree.incident(leaf)) {
        int w = tree.other_end(e, leaf);
        if (removed.count(w)) continue;
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  for (const auto& v : tree.vertices())
    if (!removed.count(v.id)) ids.push_back(v.id);
  return ids;
}

std::string general_key(const BipartiteGraph& g) {
  std::vector<int> whites, blacks;
  for (const auto& v : g.vertices()) (v.color == Color::white ? whites : blacks).push_back(v.id);
  bool by_white = whites.size() <= blacks.size();
  const auto& side = by_white ? whites : blacks;
  const auto& other = by_white ? blacks : whites;
  if (side.size() > 9) throw GraphError("graph too large for canonical search");
  std::vector<int> perm(side.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> masks;
    for (int o : other) {
      std::uint32_t m = 0;
      for (std::size_t k = 0; k < side.size(); ++k)
        if (g.find_edge(o, side[perm[k]]) >= 0) m |= 1u << k;
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    if (best.empty() || masks < best) best = masks;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::ostringstream os;
  os << (by_white ? 'W' : 'B') << side.size() << ':';
  for (auto m : best) os << m << ',';
  return os.str();
}

}  // namespace

std::string BipartiteGraph::canonical_key() const {
  if (empty()) return "";
  if (!is_forest()) return "G" + general_key(*this);
  std::vector<std::string> codes;
  for (const auto& t : components()) {
    std::string best;
    for (int c : tree_centers(t)) {
      std::string code = rooted_code(t, c, -1);
      if (best.empty() || code < best) best = code;
    }
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());
  std::string key;
  for (const auto& c : codes) key += c + '|';
  return key;
}

std::string BipartiteGraph::describe() const {
  std::ostringstream os;
  for (int i = 0; i < num_edges(); ++i) {
    if (i) os << ' ';
    os << 'w' << white_end(i) << "-b" << black_end(i);
  }
  return os.str();
}

bool same_graph(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.vertices() != b.vertices() || a.num_edges() != b.num_edges()) return false;
  for (int i = 0; i < a.num_edges(); ++i)
    if (std::minmax(a.edges()[i].u, a.edges()[i].v) != std::minmax(b.edges()[i].u, b.edges()[i].v))
      return false;
  return true;
}

GraphInfo inspect(const BipartiteGraph& g) {
  return {g.is_forest(), g.is_connected(), static_cast<int>(g.components().size())};
}

BipartiteGraph make_star(int n, Color center) {
  std::vector<Vertex> vs{{1, center}};
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back({i + 2, opposite(center)});
    es.push_back({1, i + 2});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

BipartiteGraph make_path(int n, Color start) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  Color c = start;
  for (int i = 1; i <= n + 1; ++i) {
    vs.push_back({i, c});
    c = opposite(c);
    if (i > 1) es.push_back({i - 1, i});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

BipartiteGraph make_cycle(int n) {
  if (n < 4 || n % 2) throw GraphError("bipartite cycles need an even length >= 4");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back({i, i % 2 ? Color::white : Color::black});
    es.push_back({i, i % n + 1});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

BipartiteGraph make_matching_graph(int n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back({2 * i + 1, Color::white});
    vs.push_back({2 * i + 2, Color::black});
    es.push_back({2 * i + 1, 2 * i + 2});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

}  // namespace forest

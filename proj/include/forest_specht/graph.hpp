#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forest {

enum class Color : std::uint8_t { white, black };

inline Color opposite(Color c) { return c == Color::white ? Color::black : Color::white; }
inline const char* color_name(Color c) { return c == Color::white ? "white" : "black"; }

struct Vertex {
  int id;
  Color color;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered pair of vertex ids; its position in the edge list is the edge id.
struct Edge {
  int u;
  int v;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 2-colored graph without isolated vertices whose edges all join a white
/// vertex to a black one. Vertices are kept sorted by (color, id), white
/// first; edge ids are list positions and survive every operation that does
/// not delete edges.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Validates and builds. Throws GraphError on a same-colored edge, an
  /// isolated vertex, a duplicate edge, a self loop, an unknown endpoint or
  /// a repeated vertex id.
  BipartiteGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Builds from an edge list plus colors; vertices are exactly the
  /// endpoints, so isolated vertices never arise.
  static BipartiteGraph from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return edges_.empty(); }

  bool has_vertex(int id) const;
  Color color(int id) const;
  int degree(int id) const;
  /// Edge ids incident to a vertex, ascending.
  const std::vector<int>& incident(int id) const;
  int other_end(int edge, int id) const;
  int white_end(int edge) const;
  int black_end(int edge) const;
  int max_vertex_id() const;
  /// Edge id joining the two vertices, or -1.
  int find_edge(int a, int b) const;

  bool is_forest() const;
  bool is_connected() const;
  bool is_star() const;
  /// Star whose center is white (a single edge counts, its white end is the center).
  bool is_white_star() const;

  /// Connected components in order of their least vertex; each keeps the
  /// original vertex ids. `edge_maps[k][i]` is the parent edge id of edge i
  /// of component k.
  std::vector<BipartiteGraph> components(std::vector<std::vector<int>>* edge_maps = nullptr) const;

  /// Removes an edge and drops vertices left isolated; remaining edges keep
  /// their relative order.
  BipartiteGraph without_edge(int edge) const;
  BipartiteGraph without_edges(const std::vector<int>& edges) const;
  /// Adds an edge between existing vertices (appended, id = old n).
  BipartiteGraph with_edge(int a, int b) const;
  /// Adds a leaf of the opposite color at `id`; returns the graph and the
  /// new vertex id (one past the current maximum).
  std::pair<BipartiteGraph, int> with_pendant(int id) const;
  BipartiteGraph flipped_colors() const;
  /// Disjoint union; vertex ids of `other` are shifted past this graph's ids.
  BipartiteGraph disjoint_union(const BipartiteGraph& other) const;

  /// Least white vertex under the canonical order, or -1 when none.
  int least_white() const;

  /// Canonical colored-isomorphism key: equal keys iff the colored graphs
  /// are isomorphic. Forests use rooted-tree codes; other graphs fall back to
  /// a permutation search on the smaller side.
  std::string canonical_key() const;

  /// Human-readable edge listing, for reports.
  std::string describe() const;

 private:
  void build_index();
  int index_of(int id) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::pair<int, int>> id_index_;
};

bool same_graph(const BipartiteGraph& a, const BipartiteGraph& b);

/// Validation entry point used by parsers: builds the graph and fills
/// structural metadata.
struct GraphInfo {
  bool forest;
  bool connected;
  int num_components;
};
GraphInfo inspect(const BipartiteGraph& g);

// Named constructors used throughout tests and generators.
BipartiteGraph make_star(int n, Color center = Color::white);
/// Path with n edges; the first vertex has color `start`.
BipartiteGraph make_path(int n, Color start = Color::white);
/// Cycle with n edges (n even, n >= 4).
BipartiteGraph make_cycle(int n);
/// n disjoint edges.
BipartiteGraph make_matching_graph(int n);

}  // namespace forest

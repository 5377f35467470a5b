#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "forest_specht/graph.hpp"

namespace forest {

/// Box in row `row`, column `col` (both 1-based, row 1 at the top).
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Finite set of boxes. The position of a box in the list is its id; a
/// diagram built from a graph uses the graph's edge ids.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Box> boxes);

  static Diagram from_partition(const std::vector<int>& parts);

  const std::vector<Box>& boxes() const { return boxes_; }
  const Box& box(int id) const { return boxes_.at(id); }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool empty() const { return boxes_.empty(); }
  int find(Box b) const;
  bool contains(Box b) const { return find(b) >= 0; }
  int max_row() const;
  int max_col() const;
  /// Distinct occupied rows / columns, ascending.
  std::vector<int> rows() const;
  std::vector<int> cols() const;

  Diagram transposed() const;
  /// Boxes whose ids are not listed; surviving boxes keep their relative order.
  Diagram without(const std::vector<int>& ids) const;
  /// Same box set, ignoring ids.
  bool same_boxes(const Diagram& other) const;
  /// Boxes sorted row-major.
  std::vector<Box> sorted_boxes() const;

 private:
  std::vector<Box> boxes_;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Box (i,j) for every edge joining the i-th white and j-th black vertex
/// (vertices numbered by ascending id); box id = edge id.
Diagram graph_to_diagram(const BipartiteGraph& g);

/// Rows become white vertices (id = row), columns black vertices
/// (id = max_row + col); edge id = box id. The empty diagram gives the empty graph.
BipartiteGraph diagram_to_graph(const Diagram& d);

/// Diagrams are equivalent when their colored graphs are isomorphic.
bool equivalent(const Diagram& a, const Diagram& b);
std::string canonical_key(const Diagram& d);

/// Row and column splits of a diagram at boxes b1=(i1,j1), b2=(i2,j2) with
/// (i1,j2) and (i2,j1) absent. In the row split, row i1 keeps the columns
/// present in both rows and row i2 takes the columns present in either;
/// the column split does the same to columns j1 and j2.
std::pair<Diagram, Diagram> split_diagram(const Diagram& d, Box b1, Box b2);

/// One text line per row, '#' for a box and '.' for a hole. Box ids are
/// assigned row-major.
Diagram parse_diagram_ascii(const std::string& text);
std::string to_ascii(const Diagram& d);

}  // namespace forest

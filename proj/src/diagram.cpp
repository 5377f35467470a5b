#include "forest_specht/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace forest {

Diagram::Diagram(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::set<Box> seen;
  for (const auto& b : boxes_) {
    if (b.row < 1 || b.col < 1) throw DiagramError("box coordinates must be positive");
    if (!seen.insert(b).second)
      throw DiagramError("duplicate box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
  }
}

Diagram Diagram::from_partition(const std::vector<int>& parts) {
  std::vector<Box> bs;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 1; j <= parts[i]; ++j) bs.push_back({static_cast<int>(i) + 1, j});
  return Diagram(std::move(bs));
}

int Diagram::find(Box b) const {
  for (int i = 0; i < size(); ++i)
    if (boxes_[i] == b) return i;
  return -1;
}

int Diagram::max_row() const {
  int m = 0;
  for (const auto& b : boxes_) m = std::max(m, b.row);
  return m;
}

int Diagram::max_col() const {
  int m = 0;
  for (const auto& b : boxes_) m = std::max(m, b.col);
  return m;
}

std::vector<int> Diagram::rows() const {
  std::set<int> s;
  for (const auto& b : boxes_) s.insert(b.row);
  return {s.begin(), s.end()};
}

std::vector<int> Diagram::cols() const {
  std::set<int> s;
  for (const auto& b : boxes_) s.insert(b.col);
  return {s.begin(), s.end()};
}

Diagram Diagram::transposed() const {
  std::vector<Box> bs;
  for (const auto& b : boxes_) bs.push_back({b.col, b.row});
  return Diagram(std::move(bs));
}

Diagram Diagram::without(const std::vector<int>& ids) const {
  std::vector<bool> drop(boxes_.size(), false);
  for (int id : ids) drop.at(id) = true;
  std::vector<Box> bs;
  for (int i = 0; i < size(); ++i)
    if (!drop[i]) bs.push_back(boxes_[i]);
  return Diagram(std::move(bs));
}

bool Diagram::same_boxes(const Diagram& other) const { return sorted_boxes() == other.sorted_boxes(); }

std::vector<Box> Diagram::sorted_boxes() const {
  auto bs = boxes_;
  std::sort(bs.begin(), bs.end());
  return bs;
}

Diagram graph_to_diagram(const BipartiteGraph& g) {
  std::map<int, int> row_of, col_of;
  for (const auto& v : g.vertices()) {
    auto& m = v.color == Color::white ? row_of : col_of;
    m.emplace(v.id, 0);
  }
  int k = 0;
  for (auto& [id, r] : row_of) r = ++k;
  k = 0;
  for (auto& [id, c] : col_of) c = ++k;
  std::vector<Box> bs;
  for (int e = 0; e < g.num_edges(); ++e) bs.push_back({row_of[g.white_end(e)], col_of[g.black_end(e)]});
  return Diagram(std::move(bs));
}

BipartiteGraph diagram_to_graph(const Diagram& d) {
  if (d.empty()) return BipartiteGraph();
  int shift = d.max_row();
  std::vector<Vertex> vs;
  for (int r : d.rows()) vs.push_back({r, Color::white});
  for (int c : d.cols()) vs.push_back({shift + c, Color::black});
  std::vector<Edge> es;
  for (const auto& b : d.boxes()) es.push_back({b.row, shift + b.col});
  return BipartiteGraph(std::move(vs), std::move(es));
}

std::string canonical_key(const Diagram& d) {
  if (d.empty()) return "";
  return diagram_to_graph(d).canonical_key();
}

bool equivalent(const Diagram& a, const Diagram& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

std::pair<Diagram, Diagram> split_diagram(const Diagram& d, Box b1, Box b2) {
  if (!d.contains(b1) || !d.contains(b2)) throw DiagramError("split boxes must lie in the diagram");
  const int i1 = b1.row, j1 = b1.col, i2 = b2.row, j2 = b2.col;
  if (i1 == i2 || j1 == j2) throw DiagramError("split boxes must lie in distinct rows and columns");
  if (d.contains({i1, j2}) || d.contains({i2, j1}))
    throw DiagramError("split requires (i1,j2) and (i2,j1) to be absent");

  std::vector<Box> row_split, col_split;
  std::set<int> row_cols;
  std::set<int> col_rows;
  for (const auto& b : d.boxes()) {
    if (b.row == i1 || b.row == i2) row_cols.insert(b.col);
    else row_split.push_back(b);
    if (b.col == j1 || b.col == j2) col_rows.insert(b.row);
    else col_split.push_back(b);
  }
  for (int j : row_cols) {
    bool both = d.contains({i1, j}) && d.contains({i2, j});
    if (both) row_split.push_back({i1, j});
    row_split.push_back({i2, j});
  }
  for (int i : col_rows) {
    bool both = d.contains({i, j1}) && d.contains({i, j2});
    if (both) col_split.push_back({i, j1});
    col_split.push_back({i, j2});
  }
  std::sort(row_split.begin(), row_split.end());
  std::sort(col_split.begin(), col_split.end());
  return {Diagram(std::move(row_split)), Diagram(std::move(col_split))};
}

Diagram parse_diagram_ascii(const std::string& text) {
  std::vector<Box> bs;
  std::istringstream in(text);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == '#') bs.push_back({row, static_cast<int>(j) + 1});
      else if (line[j] != '.')
        throw DiagramError("unexpected character '" + std::string(1, line[j]) + "' in diagram");
    }
  }
  return Diagram(std::move(bs));
}

std::string to_ascii(const Diagram& d) {
  std::string out;
  const int rows = d.max_row(), cols = d.max_col();
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) out += d.contains({i, j}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace forest

#pragma once

#include <functional>
#include <vector>

#include "forest_specht/diagram.hpp"
#include "forest_specht/graph.hpp"

namespace forest {

/// Edge subset of a graph together with the outcome of the definitional
/// checks.
struct Matching {
  std::vector<int> edges;
  bool is_matching = false;
  bool is_almost_perfect = false;
  bool is_special = false;
};

Matching classify_matching(const BipartiteGraph& g, std::vector<int> edges);

bool is_matching(const BipartiteGraph& g, const std::vector<int>& edges);
/// Every isolated edge is in the matching and every non-leaf vertex is
/// covered. Throws GraphError when `edges` is not a matching.
bool is_almost_perfect(const BipartiteGraph& g, const std::vector<int>& edges);
/// No cycle of g has half of its edges in the matching. Throws GraphError
/// when `edges` is not a matching.
bool is_special(const BipartiteGraph& g, const std::vector<int>& edges);

/// Almost perfect matching of a forest built greedily from the roots: each
/// tree is rooted at its least white vertex, the least edge at the root is
/// taken, both endpoints are deleted and every remaining piece is handled
/// the same way from the vertex adjacent to the deleted edge.
Matching find_apm(const BipartiteGraph& g);

std::vector<std::vector<int>> all_matchings(const BipartiteGraph& g);
std::vector<std::vector<int>> all_apms(const BipartiteGraph& g);

/// Assigns an almost perfect matching (edge ids) to every forest.
using ApmChoice = std::function<std::vector<int>(const BipartiteGraph&)>;
ApmChoice canonical_apm_choice();
/// Picks the last APM in enumeration order.
ApmChoice last_apm_choice();
/// Pseudo-random but reproducible: the pick depends on the seed and the
/// graph's edge list only.
ApmChoice hashed_apm_choice(std::uint64_t seed);

/// Box ids of a diagram, no two in a row or column. When a diagram is in
/// standard form, `boxes[k]` sits at (k+1, k+1).
struct Transversal {
  std::vector<int> boxes;
};

bool is_transversal(const Diagram& d, const std::vector<int>& boxes);

/// A diagram relabeled so that its transversal occupies (i,i) for
/// 1 <= i <= u with no box (i,j), i < j <= u. Box ids match the source
/// diagram. row_perm[k] / col_perm[k] give the source row / column of new
/// row / column k+1.
struct StandardFormDiagram {
  Diagram diagram;
  Transversal transversal;
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

/// Orders the transversal topologically (a box (r_k, c_l) forces k after l)
/// and moves its rows and columns to the front. Ties follow the order given
/// in `u`, so an order that is already valid is kept. Throws DiagramError if
/// `u` is not a transversal or is not special.
StandardFormDiagram standard_form(const Diagram& d, const Transversal& u);

}  // namespace forest

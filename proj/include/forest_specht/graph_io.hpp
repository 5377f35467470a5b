#pragma once

#include <string>

#include "forest_specht/graph.hpp"

namespace forest {

/// {"vertices":[{"id":1,"color":"white"},...],"edges":[[1,2],...]}
BipartiteGraph parse_graph_json(const std::string& text);

/// Compact form of the same schema; vertices in canonical (color, id) order,
/// edges in id order. parse_graph_json(to_graph_json(g)) reproduces g.
std::string to_graph_json(const BipartiteGraph& g);

std::string read_file(const std::string& path);

}  // namespace forest

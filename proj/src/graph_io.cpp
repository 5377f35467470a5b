#include "forest_specht/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace forest {

BipartiteGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw GraphError("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<Vertex> vs;
  for (const auto& v : j.at("vertices")) {
    if (!v.contains("id") || !v.contains("color")) throw GraphError("vertex needs id and color");
    auto name = v.at("color").get<std::string>();
    Color c;
    if (name == "white") c = Color::white;
    else if (name == "black") c = Color::black;
    else throw GraphError("unknown color \"" + name + "\"");
    vs.push_back({v.at("id").get<int>(), c});
  }
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair of vertex ids");
    es.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return BipartiteGraph(std::move(vs), std::move(es));
}

std::string to_graph_json(const BipartiteGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) {
    nlohmann::ordered_json o;
    o["id"] = v.id;
    o["color"] = color_name(v.color);
    j["vertices"].push_back(o);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace forest

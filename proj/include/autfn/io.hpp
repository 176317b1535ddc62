#pragma once

// JSON file formats for the CLI: simplicial complexes, vertex actions on
// them, and labelled graphs with optional named symmetries.

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "autfn/errors.hpp"
#include "autfn/graph.hpp"
#include "autfn/simplicial.hpp"
#include "json.hpp"

namespace autfn {

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

// ---- complexes -----------------------------------------------------------
// {"vertices": [0,1,2], "maximal_simplices": [[0,1],[1,2]]}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal_simplices"))
    throw error("complex needs 'vertices' and 'maximal_simplices'");
  if (!j["vertices"].is_array() || !j["maximal_simplices"].is_array())
    throw error("complex fields must be arrays");

  std::set<int> declared;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw error("vertices must be integers");
    if (!declared.insert(v.get<int>()).second)
      throw error("vertex " + v.dump() + " listed twice");
  }
  std::vector<Simplex> maximal;
  for (const auto& s : j["maximal_simplices"]) {
    if (!s.is_array()) throw error("each maximal simplex must be an array");
    Simplex simplex;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw error("simplex vertices must be integers");
      if (!declared.count(v.get<int>()))
        throw error("simplex uses undeclared vertex " + v.dump());
      simplex.push_back(v.get<int>());
    }
    maximal.push_back(std::move(simplex));
  }
  SimplicialComplex k = SimplicialComplex::from_maximal(maximal);
  if (k.vertices() != std::vector<int>(declared.begin(), declared.end()))
    throw error("declared vertices do not all appear in simplices");
  return k;
}

inline nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json maximal = nlohmann::json::array();
  for (const Simplex& s : k.maximal_simplices()) maximal.push_back(s);
  return nlohmann::json{{"vertices", k.vertices()},
                        {"maximal_simplices", std::move(maximal)}};
}

// ---- actions -------------------------------------------------------------
// {"vertex_maps": [{"name": "refl", "map": [1,0,2,3,4,5]}]}
// map[i] is the image of the i-th smallest vertex.

inline std::vector<std::pair<std::string, SimplicialMap>> actions_from_json(
    const nlohmann::json& j, const ComplexPtr& k) {
  if (!j.is_object() || !j.contains("vertex_maps") || !j["vertex_maps"].is_array())
    throw error("action file needs a 'vertex_maps' array");
  const std::vector<int>& verts = k->vertices();
  std::vector<std::pair<std::string, SimplicialMap>> out;
  for (const auto& entry : j["vertex_maps"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("map"))
      throw error("each vertex map needs 'name' and 'map'");
    if (!entry["name"].is_string() || !entry["map"].is_array())
      throw error("vertex map fields have the wrong types");
    if (entry["map"].size() != verts.size())
      throw error("map for '" + entry["name"].get<std::string>() + "' must list " +
                  std::to_string(verts.size()) + " images");
    std::map<int, int> m;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (!entry["map"][i].is_number_integer())
        throw error("vertex images must be integers");
      m[verts[i]] = entry["map"][i].get<int>();
    }
    out.emplace_back(entry["name"].get<std::string>(), SimplicialMap(k, k, m));
  }
  if (out.empty()) throw error("action file lists no vertex maps");
  return out;
}

inline nlohmann::json actions_to_json(
    const std::vector<std::pair<std::string, SimplicialMap>>& actions) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& [name, g] : actions)
    maps.push_back({{"name", name}, {"map", g.image_row()}});
  return nlohmann::json{{"vertex_maps", std::move(maps)}};
}

// ---- labelled graphs -----------------------------------------------------
// {"vertices": [...], "edges": [{"id": "t1", "from": 1, "to": 0}, ...],
//  "tree": ["t1"], "labels": {"a1": 1}, "basepoint": 0,
//  "symmetries": [{"name": "r1", "vertices": {"0": 0}, "edges": {"t1": ["t1", false]}}]}

inline LabelledGraph graph_from_json(const nlohmann::json& j) {
  for (const char* key : {"vertices", "edges", "tree", "labels", "basepoint"})
    if (!j.contains(key)) throw error(std::string("graph misses '") + key + "'");

  std::vector<int> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw error("graph vertices must be integers");
    vertices.push_back(v.get<int>());
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("from") || !e.contains("to"))
      throw error("each edge needs 'id', 'from', 'to'");
    edges.push_back({e["id"].get<std::string>(), e["from"].get<int>(), e["to"].get<int>()});
  }
  std::set<std::string> tree;
  for (const auto& t : j["tree"]) tree.insert(t.get<std::string>());
  std::map<std::string, int> labels;
  if (!j["labels"].is_object()) throw error("'labels' must map edge ids to indices");
  for (const auto& [eid, idx] : j["labels"].items()) {
    if (!idx.is_number_integer()) throw error("label indices must be integers");
    labels[eid] = idx.get<int>();
  }
  return LabelledGraph(std::move(vertices), std::move(edges), std::move(tree),
                       std::move(labels), j["basepoint"].get<int>());
}

inline nlohmann::json graph_to_json(const LabelledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : g.edges())
    edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [eid, idx] : g.labels()) labels[eid] = idx;
  return nlohmann::json{{"vertices", g.vertices()},
                        {"edges", std::move(edges)},
                        {"tree", g.tree()},
                        {"labels", std::move(labels)},
                        {"basepoint", g.basepoint()}};
}

inline GraphSymmetry symmetry_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw error("symmetry needs 'vertices' and 'edges' maps");
  GraphSymmetry s;
  for (const auto& [from, to] : j["vertices"].items()) {
    if (!to.is_number_integer()) throw error("symmetry vertex images must be integers");
    s.vertex_map[std::stoi(from)] = to.get<int>();
  }
  for (const auto& [eid, img] : j["edges"].items()) {
    if (!img.is_array() || img.size() != 2 || !img[0].is_string() || !img[1].is_boolean())
      throw error("symmetry edge images must be [id, reversed] pairs");
    s.edge_map[eid] = {img[0].get<std::string>(), img[1].get<bool>()};
  }
  return s;
}

/// Find a named symmetry in the graph file's optional "symmetries" array.
inline GraphSymmetry named_symmetry_from_json(const nlohmann::json& graph_file,
                                              const std::string& name) {
  if (!graph_file.contains("symmetries"))
    throw error("graph file lists no symmetries");
  for (const auto& entry : graph_file["symmetries"])
    if (entry.value("name", "") == name) return symmetry_from_json(entry);
  throw error("no symmetry named '" + name + "' in graph file");
}

}  // namespace autfn

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "autfn/endo.hpp"

namespace autfn {

/// Finite connected graph with a marked spanning tree, a basepoint, and the
/// non-tree edges labelled bijectively by free-group generators.  Parallel
/// edges and loops are allowed, so edges are first-class objects.
struct GraphEdge {
  std::string id;
  int from = 0, to = 0;
};

class LabelledGraph {
 public:
  LabelledGraph(std::vector<int> vertices, std::vector<GraphEdge> edges,
                std::set<std::string> tree, std::map<std::string, int> labels,
                int basepoint)
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        tree_(std::move(tree)),
        labels_(std::move(labels)),
        basepoint_(basepoint) {
    validate();
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::set<std::string>& tree() const { return tree_; }
  const std::map<std::string, int>& labels() const { return labels_; }
  int basepoint() const { return basepoint_; }
  int rank() const { return static_cast<int>(labels_.size()); }

  const GraphEdge& edge(const std::string& id) const {
    for (const GraphEdge& e : edges_)
      if (e.id == id) return e;
    throw error("no edge with id '" + id + "'");
  }

  /// Tree path between two vertices as a list of (edge id, forward?) steps.
  std::vector<std::pair<std::string, bool>> tree_path(int from, int to) const {
    // BFS in the tree.
    std::map<int, std::pair<std::string, bool>> came_from;  // vertex -> step into it
    std::vector<int> queue{from};
    std::set<int> seen{from};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      if (v == to) break;
      for (const GraphEdge& e : edges_) {
        if (!tree_.count(e.id)) continue;
        if (e.from == v && !seen.count(e.to)) {
          came_from[e.to] = {e.id, true};
          seen.insert(e.to);
          queue.push_back(e.to);
        }
        if (e.to == v && !seen.count(e.from)) {
          came_from[e.from] = {e.id, false};
          seen.insert(e.from);
          queue.push_back(e.from);
        }
      }
    }
    if (!seen.count(to)) throw error("tree does not connect the requested vertices");
    std::vector<std::pair<std::string, bool>> path;
    int v = to;
    while (v != from) {
      auto step = came_from.at(v);
      path.push_back(step);
      const GraphEdge& e = edge(step.first);
      v = step.second ? e.from : e.to;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  void validate() const {
    std::set<int> vs(vertices_.begin(), vertices_.end());
    if (vs.size() != vertices_.size()) throw error("duplicate vertex");
    if (!vs.count(basepoint_)) throw error("basepoint is not a vertex");
    std::set<std::string> ids;
    for (const GraphEdge& e : edges_) {
      if (!vs.count(e.from) || !vs.count(e.to)) throw error("edge endpoint is not a vertex");
      if (!ids.insert(e.id).second) throw error("duplicate edge id '" + e.id + "'");
    }
    for (const std::string& t : tree_)
      if (!ids.count(t)) throw error("tree references unknown edge '" + t + "'");
    // Tree must span: |V|-1 edges and connect everything.
    if (tree_.size() + 1 != vertices_.size()) throw error("tree edge count must be |V|-1");
    std::set<int> reached{basepoint_};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const GraphEdge& e : edges_) {
        if (!tree_.count(e.id)) continue;
        if (reached.count(e.from) && !reached.count(e.to)) { reached.insert(e.to); grew = true; }
        if (reached.count(e.to) && !reached.count(e.from)) { reached.insert(e.from); grew = true; }
      }
    }
    if (reached.size() != vs.size()) throw error("tree does not span the graph");
    // Labels: bijection from non-tree edges onto 1..rank.
    std::set<int> used;
    for (const auto& [eid, g] : labels_) {
      if (!ids.count(eid)) throw error("label references unknown edge '" + eid + "'");
      if (tree_.count(eid)) throw error("tree edge '" + eid + "' must not carry a label");
      if (!used.insert(g).second) throw error("duplicate generator label");
    }
    for (const GraphEdge& e : edges_)
      if (!tree_.count(e.id) && !labels_.count(e.id))
        throw error("non-tree edge '" + e.id + "' needs a label");
    for (int g = 1; g <= static_cast<int>(labels_.size()); ++g)
      if (!used.count(g)) throw error("labels must cover 1..rank exactly");
  }

  std::vector<int> vertices_;
  std::vector<GraphEdge> edges_;
  std::set<std::string> tree_;
  std::map<std::string, int> labels_;
  int basepoint_;
};

/// Graph symmetry: a vertex bijection plus an explicit edge bijection (edges
/// may map with reversed orientation).  Must fix the basepoint.
struct GraphSymmetry {
  std::map<int, int> vertex_map;
  std::map<std::string, std::pair<std::string, bool>> edge_map;  // id -> (id, reversed?)
};

inline void validate_symmetry(const LabelledGraph& g, const GraphSymmetry& s) {
  std::set<int> vimg;
  for (int v : g.vertices()) {
    auto it = s.vertex_map.find(v);
    if (it == s.vertex_map.end()) throw error("symmetry misses vertex " + std::to_string(v));
    vimg.insert(it->second);
  }
  if (vimg.size() != g.vertices().size()) throw error("symmetry vertex map is not a bijection");
  for (int v : g.vertices())
    if (!vimg.count(v)) throw error("symmetry vertex map is not onto the vertex set");
  if (s.vertex_map.at(g.basepoint()) != g.basepoint())
    throw error("symmetry must fix the basepoint");
  std::set<std::string> eimg;
  for (const GraphEdge& e : g.edges()) {
    auto it = s.edge_map.find(e.id);
    if (it == s.edge_map.end()) throw error("symmetry misses edge '" + e.id + "'");
    const auto& [img_id, reversed] = it->second;
    const GraphEdge& img = g.edge(img_id);
    int want_from = s.vertex_map.at(e.from), want_to = s.vertex_map.at(e.to);
    if (reversed) std::swap(want_from, want_to);
    if (img.from != want_from || img.to != want_to)
      throw error("symmetry does not respect endpoints of edge '" + e.id + "'");
    eimg.insert(img_id);
  }
  if (eimg.size() != g.edges().size()) throw error("symmetry edge map is not a bijection");
}

inline GraphSymmetry inverse_symmetry(const LabelledGraph& g, const GraphSymmetry& s) {
  GraphSymmetry inv;
  for (const auto& [v, w] : s.vertex_map) inv.vertex_map[w] = v;
  for (const auto& [e, img] : s.edge_map) inv.edge_map[img.first] = {e, img.second};
  (void)g;
  return inv;
}

/// The automorphism of pi_1 induced by a basepoint-preserving symmetry.
/// Generator loops run: tree path from the basepoint to the edge's start,
/// across the edge, tree path back; non-tree edges read off their label.
inline Endo graph_induced(const LabelledGraph& g, const GraphSymmetry& s) {
  validate_symmetry(g, s);
  int n = g.rank();

  auto loop_word = [&](const GraphSymmetry& sym, const std::string& gen_edge) {
    const GraphEdge& e = g.edge(gen_edge);
    std::vector<std::pair<std::string, bool>> steps = g.tree_path(g.basepoint(), e.from);
    steps.emplace_back(e.id, true);
    auto back = g.tree_path(e.to, g.basepoint());
    steps.insert(steps.end(), back.begin(), back.end());
    // Apply the symmetry stepwise, then read non-tree edges.
    std::vector<Letter> raw;
    for (const auto& [eid, fwd] : steps) {
      const auto& [img_id, reversed] = sym.edge_map.at(eid);
      bool dir = reversed ? !fwd : fwd;
      auto lab = g.labels().find(img_id);
      if (lab != g.labels().end()) raw.push_back(Letter{lab->second, dir ? 1 : -1});
    }
    return Word::from_letters(n, std::move(raw));
  };

  GraphSymmetry inv = inverse_symmetry(g, s);
  std::vector<std::string> edge_of_gen(static_cast<std::size_t>(n) + 1);
  for (const auto& [eid, gi] : g.labels()) edge_of_gen[static_cast<std::size_t>(gi)] = eid;

  std::vector<Word> im, im_inv;
  for (int k = 1; k <= n; ++k) {
    im.push_back(loop_word(s, edge_of_gen[static_cast<std::size_t>(k)]));
    im_inv.push_back(loop_word(inv, edge_of_gen[static_cast<std::size_t>(k)]));
  }
  return Endo::from_images(n, std::move(im), std::move(im_inv), n % 2 == 0);
}

// ---------------------------------------------------------------------------
// The rose-with-doubled-petals graph used for the rotation subgroup: m+1
// vertices v_0..v_m, and for each i three edges from v_i to v_0 -- an
// unlabelled tree edge t_i and edges labelled a_i (index 2i-1), b_i (2i).

inline LabelledGraph t_graph(int m) {
  if (m < 1) throw error("t_graph needs m >= 1");
  std::vector<int> vertices;
  for (int v = 0; v <= m; ++v) vertices.push_back(v);
  std::vector<GraphEdge> edges;
  std::set<std::string> tree;
  std::map<std::string, int> labels;
  for (int i = 1; i <= m; ++i) {
    std::string si = std::to_string(i);
    edges.push_back({"t" + si, i, 0});
    edges.push_back({"a" + si, i, 0});
    edges.push_back({"b" + si, i, 0});
    tree.insert("t" + si);
    labels["a" + si] = pa(i);
    labels["b" + si] = pb(i);
  }
  return LabelledGraph(std::move(vertices), std::move(edges), std::move(tree),
                       std::move(labels), 0);
}

/// Order-3 rotation of the three parallel edges at v_i: a_i -> b_i -> t_i -> a_i.
inline GraphSymmetry t_graph_rotation(int m, int i) {
  if (i < 1 || i > m) throw error("rotation index out of range");
  GraphSymmetry s;
  for (int v = 0; v <= m; ++v) s.vertex_map[v] = v;
  for (int k = 1; k <= m; ++k) {
    std::string sk = std::to_string(k);
    if (k == i) {
      s.edge_map["a" + sk] = {"b" + sk, false};
      s.edge_map["b" + sk] = {"t" + sk, false};
      s.edge_map["t" + sk] = {"a" + sk, false};
    } else {
      s.edge_map["a" + sk] = {"a" + sk, false};
      s.edge_map["b" + sk] = {"b" + sk, false};
      s.edge_map["t" + sk] = {"t" + sk, false};
    }
  }
  return s;
}

}  // namespace autfn

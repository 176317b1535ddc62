#include <catch2/catch_amalgamated.hpp>

#include "autfn/autgroup.hpp"
#include "autfn/graph.hpp"

using namespace autfn;

namespace {

GraphSymmetry identity_symmetry(const LabelledGraph& g) {
  GraphSymmetry s;
  for (int v : g.vertices()) s.vertex_map[v] = v;
  for (const GraphEdge& e : g.edges()) s.edge_map[e.id] = {e.id, false};
  return s;
}

}  // namespace

TEST_CASE("t_graph shape and validation") {
  LabelledGraph g = t_graph(2);
  CHECK(g.vertices().size() == 3);
  CHECK(g.edges().size() == 6);
  CHECK(g.rank() == 4);
  CHECK(g.basepoint() == 0);
  CHECK(g.tree_path(0, 0).empty());
  auto path = g.tree_path(1, 2);
  REQUIRE(path.size() == 2);  // up t1, down t2

  CHECK_THROWS_AS(t_graph(0), error);
}

TEST_CASE("graph constructor rejects malformed input") {
  std::vector<int> vs = {0, 1};
  std::vector<GraphEdge> es = {{"t", 1, 0}, {"x", 1, 0}};
  // basepoint must be a vertex
  CHECK_THROWS_AS(LabelledGraph(vs, es, {"t"}, {{"x", 1}}, 7), error);
  // tree must have |V|-1 edges
  CHECK_THROWS_AS(LabelledGraph(vs, es, {}, {{"x", 1}, {"t", 2}}, 0), error);
  // non-tree edges all need labels
  CHECK_THROWS_AS(LabelledGraph(vs, es, {"t"}, {}, 0), error);
  // labels must cover 1..rank
  CHECK_THROWS_AS(LabelledGraph(vs, es, {"t"}, {{"x", 2}}, 0), error);
  // duplicate edge ids
  std::vector<GraphEdge> dup = {{"t", 1, 0}, {"t", 1, 0}};
  CHECK_THROWS_AS(LabelledGraph(vs, dup, {"t"}, {{"t", 1}}, 0), error);
  // disconnected tree
  std::vector<int> vs3 = {0, 1, 2};
  std::vector<GraphEdge> es3 = {{"t1", 1, 0}, {"loop", 2, 2}, {"x", 2, 0}, {"y", 1, 0}};
  CHECK_THROWS_AS(LabelledGraph(vs3, es3, {"t1", "loop"}, {{"x", 1}, {"y", 2}}, 0), error);
}

TEST_CASE("symmetry validation") {
  LabelledGraph g = t_graph(1);
  GraphSymmetry s = identity_symmetry(g);
  CHECK_NOTHROW(validate_symmetry(g, s));

  GraphSymmetry missing = s;
  missing.vertex_map.erase(1);
  CHECK_THROWS_AS(validate_symmetry(g, missing), error);

  GraphSymmetry squash = s;
  squash.vertex_map[1] = 0;
  CHECK_THROWS_AS(validate_symmetry(g, squash), error);

  // a two-vertex graph with swappable vertices would move the basepoint
  LabelledGraph h(std::vector<int>{0, 1},
                  {{"t", 1, 0}, {"a", 1, 0}, {"b", 0, 1}},
                  {"t"}, {{"a", 1}, {"b", 2}}, 0);
  GraphSymmetry move;
  move.vertex_map = {{0, 1}, {1, 0}};
  move.edge_map = {{"t", {"t", true}}, {"a", {"b", false}}, {"b", {"a", false}}};
  CHECK_THROWS_AS(validate_symmetry(h, move), error);

  GraphSymmetry bad_endpoints = s;
  bad_endpoints.edge_map["a1"] = {"t1", true};  // reversed t1 runs 0 -> 1, a1 runs 1 -> 0
  bad_endpoints.edge_map["t1"] = {"a1", false};
  CHECK_THROWS_AS(validate_symmetry(g, bad_endpoints), error);
}

TEST_CASE("identity symmetry induces the identity automorphism") {
  LabelledGraph g = t_graph(2);
  Endo f = graph_induced(g, identity_symmetry(g));
  CHECK(f == Endo::identity(4));
}

TEST_CASE("rotation at v_1 realizes R_1 up to orientation convention") {
  LabelledGraph g = t_graph(1);
  Endo psi = graph_induced(g, t_graph_rotation(1, 1));
  Endo r = named(gen::R(1), 2);
  bool matches = psi == r || psi == inverse(r);
  CHECK(matches);
  CHECK_FALSE(psi == Endo::identity(2));
  CHECK(order(psi, 10) == 3);
  // inverse witness is consistent
  CHECK(compose(psi, inverse(psi)) == Endo::identity(2));
}

TEST_CASE("rotations generate T(m) exactly") {
  for (int m = 1; m <= 3; ++m) {
    LabelledGraph g = t_graph(m);
    std::vector<Endo> gens;
    for (int i = 1; i <= m; ++i) {
      Endo psi = graph_induced(g, t_graph_rotation(m, i));
      Endo r = named(gen::R(i), 2 * m);
      bool matches = psi == r || psi == inverse(r);
      CHECK(matches);
      gens.push_back(psi);
    }
    FiniteAutGroup from_graph = generate_aut_group(gens);
    FiniteAutGroup t = build_t_group(m);
    REQUIRE(from_graph.order() == t.order());
    for (std::size_t k = 0; k < t.elements.size(); ++k)
      CHECK(from_graph.elements[k] == t.elements[k]);
  }
}

TEST_CASE("commuting order-3 rotations at rank 4") {
  LabelledGraph g = t_graph(2);
  Endo p1 = graph_induced(g, t_graph_rotation(2, 1));
  Endo p2 = graph_induced(g, t_graph_rotation(2, 2));
  CHECK(order(p1, 10) == 3);
  CHECK(order(p2, 10) == 3);
  CHECK(commutator(p1, p2) == Endo::identity(4));
  CHECK(generate_aut_group({p1, p2}).order() == 9);
}

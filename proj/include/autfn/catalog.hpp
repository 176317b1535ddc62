#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "autfn/simplicial.hpp"

namespace autfn {

/// Boundary of the k-simplex on vertices 0..k.
inline SimplicialComplex simplex_boundary(int k) {
  if (k < 1) throw error("simplex_boundary needs k >= 1");
  std::vector<Simplex> top;
  for (int drop = 0; drop <= k; ++drop) {
    Simplex s;
    for (int v = 0; v <= k; ++v)
      if (v != drop) s.push_back(v);
    top.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(top);
}

inline SimplicialComplex two_points() { return cross_polytope_boundary(1); }
inline SimplicialComplex four_cycle() { return cross_polytope_boundary(2); }
inline SimplicialComplex octahedron() { return cross_polytope_boundary(3); }

/// Cone with a chosen apex vertex (must be fresh).
inline SimplicialComplex cone(const SimplicialComplex& k, int apex) {
  if (std::binary_search(k.vertices().begin(), k.vertices().end(), apex))
    throw error("cone apex already a vertex");
  std::vector<Simplex> top;
  for (const Simplex& s : k.maximal_simplices()) {
    Simplex c = s;
    c.push_back(apex);
    top.push_back(detail::canonical_simplex(std::move(c)));
  }
  if (top.empty()) top.push_back({apex});
  return SimplicialComplex::from_maximal(top);
}

inline SimplicialComplex cone(const SimplicialComplex& k) {
  return cone(k, k.empty() ? 0 : k.vertices().back() + 1);
}

/// Join of two complexes.  Vertices are relabelled densely: the i-th smallest
/// vertex of the left factor becomes i, the j-th smallest of the right factor
/// becomes |V(left)| + j; the maps record this.
struct Join {
  SimplicialComplex complex;
  std::map<int, int> left;
  std::map<int, int> right;
};

inline Join join(const SimplicialComplex& a, const SimplicialComplex& b) {
  Join out;
  int next = 0;
  for (int v : a.vertices()) out.left[v] = next++;
  for (int v : b.vertices()) out.right[v] = next++;
  auto relabel = [](const Simplex& s, const std::map<int, int>& m) {
    Simplex r;
    for (int v : s) r.push_back(m.at(v));
    return r;
  };
  std::vector<Simplex> top;
  if (a.empty() || b.empty()) {
    const SimplicialComplex& k = a.empty() ? b : a;
    const auto& m = a.empty() ? out.right : out.left;
    for (const Simplex& s : k.maximal_simplices()) top.push_back(relabel(s, m));
  } else {
    for (const Simplex& sa : a.maximal_simplices())
      for (const Simplex& sb : b.maximal_simplices()) {
        Simplex s = relabel(sa, out.left);
        for (int v : relabel(sb, out.right)) s.push_back(v);
        top.push_back(detail::canonical_simplex(std::move(s)));
      }
  }
  out.complex = SimplicialComplex::from_maximal(top);
  return out;
}

// ---------------------------------------------------------------------------
// Octahedron symmetries.  Vertices 0..5; the axis pairs are (0,1), (2,3),
// (4,5).  Every signed permutation of the three axes is an automorphism; the
// full symmetry group has order 2^3 * 3! = 48.

inline const std::vector<std::pair<std::string, std::array<int, 6>>>& octahedron_map_table() {
  static const std::vector<std::pair<std::string, std::array<int, 6>>> table = {
      {"refl_x", {1, 0, 2, 3, 4, 5}},     // e1 -> -e1
      {"refl_y", {0, 1, 3, 2, 4, 5}},     // e2 -> -e2
      {"refl_z", {0, 1, 2, 3, 5, 4}},     // e3 -> -e3
      {"pi_rot_z", {1, 0, 3, 2, 4, 5}},   // half turn about the z axis
      {"rot_z90", {2, 3, 1, 0, 4, 5}},    // quarter turn: e1 -> e2 -> -e1
      {"antipodal", {1, 0, 3, 2, 5, 4}},  // x -> -x
      {"rot_face", {2, 3, 4, 5, 0, 1}},   // order 3 about the axis through face (0,2,4)
      {"swap_xy", {2, 3, 0, 1, 4, 5}},    // e1 <-> e2
      {"swap_yz", {0, 1, 4, 5, 2, 3}},    // e2 <-> e3
  };
  return table;
}

inline SimplicialMap octahedron_map(const std::string& name, const ComplexPtr& oct) {
  for (const auto& [key, images] : octahedron_map_table())
    if (key == name) {
      std::map<int, int> m;
      for (int v = 0; v < 6; ++v) m[v] = images[static_cast<std::size_t>(v)];
      return SimplicialMap(oct, oct, m);
    }
  throw error("unknown octahedron map '" + name + "'");
}

/// The full order-48 signed-permutation symmetry group.
inline ActionGroup octahedron_symmetries(const ComplexPtr& oct) {
  return generate_action_group({octahedron_map("refl_x", oct),
                                octahedron_map("swap_xy", oct),
                                octahedron_map("swap_yz", oct)});
}

// ---------------------------------------------------------------------------
// Rank-two 3-group instances.  Two disjoint triangle boundaries joined with a
// suspension pair give a 4-sphere on which (Z_3)^2 acts by rotating the two
// triangles independently; the poles are fixed throughout, and no simplex is
// setwise invariant without being fixed, so the action is already regular.

/// S^4 = (triangle boundary) * (triangle boundary) * S^0; vertices 0..7 with
/// the triangles on 0,1,2 and 3,4,5 and the poles at 6,7.
inline SimplicialComplex z3_sphere() {
  return join(join(simplex_boundary(2), simplex_boundary(2)).complex, two_points()).complex;
}

/// Acyclic companion: cone over (triangle boundary) * (triangle boundary),
/// vertices 0..5 plus apex 6.
inline SimplicialComplex z3_acyclic() {
  return cone(join(simplex_boundary(2), simplex_boundary(2)).complex, 6);
}

/// Rotation of the first triangle 0 -> 1 -> 2 -> 0, everything else fixed.
inline SimplicialMap z3_rotation_first(const ComplexPtr& k) {
  std::map<int, int> m;
  for (int v : k->vertices()) m[v] = v;
  m[0] = 1;
  m[1] = 2;
  m[2] = 0;
  return SimplicialMap(k, k, m);
}

/// Rotation of the second triangle 3 -> 4 -> 5 -> 3.
inline SimplicialMap z3_rotation_second(const ComplexPtr& k) {
  std::map<int, int> m;
  for (int v : k->vertices()) m[v] = v;
  m[3] = 4;
  m[4] = 5;
  m[5] = 3;
  return SimplicialMap(k, k, m);
}

/// The complexes every shared property test runs over.
inline std::vector<std::pair<std::string, SimplicialComplex>> catalog_complexes() {
  return {
      {"two_points", two_points()},
      {"four_cycle", four_cycle()},
      {"octahedron", octahedron()},
      {"boundary_delta3", simplex_boundary(3)},
      {"boundary_delta4", simplex_boundary(4)},
      {"cone_octahedron", cone(octahedron())},
      {"z3_sphere", z3_sphere()},
      {"z3_acyclic", z3_acyclic()},
  };
}

}  // namespace autfn

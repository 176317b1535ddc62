#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "autfn/catalog.hpp"
#include "autfn/simplicial.hpp"

using namespace autfn;

namespace {

// every face of every simplex must itself be stored
bool closed_under_faces(const SimplicialComplex& k) {
  for (int d = 1; d <= k.dim(); ++d) {
    for (const Simplex& s : k.simplices(d)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        if (!k.contains(face)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("from_maximal builds the face closure") {
  SimplicialComplex bd3 = simplex_boundary(3);
  CHECK(bd3.dim() == 2);
  CHECK(bd3.f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(bd3.simplex_count() == 14);
  CHECK(closed_under_faces(bd3));
  CHECK(bd3.contains({0, 2, 3}));
  CHECK(bd3.contains({1}));
  CHECK_FALSE(bd3.contains({0, 1, 2, 3}));
  CHECK_FALSE(bd3.contains({}));

  // faces listed alongside a coface are absorbed, order of vertices ignored
  SimplicialComplex k = SimplicialComplex::from_maximal({{2, 1, 0}, {0, 1}, {2}});
  CHECK(k == SimplicialComplex::from_maximal({{0, 1, 2}}));
  CHECK(k.maximal_simplices() == std::vector<Simplex>{{0, 1, 2}});

  // vertex ids need not be contiguous
  SimplicialComplex sparse = SimplicialComplex::from_maximal({{9, 5}});
  CHECK(sparse.vertices() == std::vector<int>{5, 9});

  SimplicialComplex empty;
  CHECK(empty.empty());
  CHECK(empty.dim() == -1);
  CHECK(empty.f_vector().empty());
  CHECK(empty.simplex_count() == 0);
  CHECK(empty == SimplicialComplex::from_maximal({}));
  CHECK_FALSE(empty.contains({0}));

  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{0, 0, 1}}), error);
  CHECK_THROWS_AS(bd3.index_of({0, 1, 2, 3}), error);
  CHECK(bd3.simplices(7).empty());
  CHECK(bd3.index_of({0, 1}) == 0);
}

TEST_CASE("cross-polytope boundaries") {
  CHECK(two_points().f_vector() == std::vector<std::size_t>{2});
  CHECK(four_cycle().f_vector() == std::vector<std::size_t>{4, 4});
  SimplicialComplex oct = octahedron();
  CHECK(oct.f_vector() == std::vector<std::size_t>{6, 12, 8});
  CHECK(closed_under_faces(oct));
  // vertices 2i, 2i+1 are antipodal and never span an edge
  for (int i = 0; i < 3; ++i) CHECK_FALSE(oct.contains({2 * i, 2 * i + 1}));
  CHECK(oct.maximal_simplices().size() == 8);
  CHECK_THROWS_AS(cross_polytope_boundary(0), error);
}

TEST_CASE("simplicial map validation") {
  ComplexPtr fc = make_complex(four_cycle());
  ComplexPtr s0 = make_complex(two_points());

  SimplicialMap rot(fc, fc, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(rot.is_automorphism());
  CHECK(rot.apply(0) == 2);
  CHECK(rot.apply(Simplex{0, 2}) == Simplex{1, 2});

  // every source vertex needs an image
  CHECK_THROWS_AS(SimplicialMap(fc, fc, {{0, 1}, {1, 0}}), error);
  // images must be vertices of the target
  CHECK_THROWS_AS(SimplicialMap(fc, fc, {{0, 7}, {1, 1}, {2, 2}, {3, 3}}), error);
  // images of simplices must be simplices of the target: {0,3} lands on
  // the missing edge {0,1} of the two-point complex
  CHECK_THROWS_AS(
      SimplicialMap(fc, s0, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}), error);

  // a genuine collapse is fine and drops repeated images
  SimplicialMap fold(s0, s0, {{0, 0}, {1, 0}});
  CHECK_FALSE(fold.is_automorphism());
  CHECK(fold.apply(Simplex{1}) == Simplex{0});
  CHECK(order(fold) == std::nullopt);
  CHECK_THROWS_AS(inverse(fold), error);

  SimplicialMap id = SimplicialMap::identity(fc);
  CHECK(id.is_identity_map());
  CHECK(id.is_automorphism());
}

TEST_CASE("composition runs left to right") {
  ComplexPtr oct = make_complex(octahedron());
  SimplicialMap refl = octahedron_map("refl_x", oct);
  SimplicialMap rot = octahedron_map("rot_face", oct);

  // refl then rot: 0 -> 1 -> 3
  CHECK(compose(refl, rot).apply(0) == 3);
  // rot then refl: 0 -> 2 -> 2
  CHECK(compose(rot, refl).apply(0) == 2);

  CHECK(compose(refl, refl).is_identity_map());
  CHECK(compose(rot, inverse(rot)).is_identity_map());
  CHECK(inverse(inverse(rot)) == rot);

  CHECK(order(refl) == 2);
  CHECK(order(rot) == 3);
  CHECK(order(octahedron_map("rot_z90", oct)) == 4);
  CHECK(order(SimplicialMap::identity(oct)) == 1);

  ComplexPtr fc = make_complex(four_cycle());
  CHECK_THROWS_AS(compose(refl, SimplicialMap::identity(fc)), error);
}

TEST_CASE("action group generation") {
  ComplexPtr oct = make_complex(octahedron());
  ActionGroup sym = octahedron_symmetries(oct);
  CHECK(sym.order() == 48);
  CHECK(sym.contains(SimplicialMap::identity(oct)));
  CHECK(sym.contains(octahedron_map("antipodal", oct)));
  CHECK(sym.contains(octahedron_map("rot_z90", oct)));

  // elements come back sorted by image row and without repeats
  std::set<std::vector<int>> rows;
  for (const SimplicialMap& g : sym.elements) rows.insert(g.image_row());
  CHECK(rows.size() == 48);

  ActionGroup cyc = generate_action_group({octahedron_map("rot_face", oct)});
  CHECK(cyc.order() == 3);

  CHECK_THROWS_AS(generate_action_group({}), error);
  SimplicialMap fold(make_complex(two_points()), make_complex(two_points()),
                     {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(generate_action_group({fold}), error);
  ComplexPtr fc = make_complex(four_cycle());
  CHECK_THROWS_AS(
      generate_action_group(
          {octahedron_map("refl_x", oct), SimplicialMap::identity(fc)}),
      error);
  CHECK_THROWS_AS(
      generate_action_group({octahedron_map("rot_z90", oct)}, 3),
      cap_exceeded);

  CHECK_FALSE(sym.contains(SimplicialMap::identity(fc)));
}

TEST_CASE("regularity of the named octahedron actions") {
  ComplexPtr oct = make_complex(octahedron());
  CHECK(is_regular(generate_action_group({octahedron_map("refl_x", oct)})));
  CHECK(is_regular(generate_action_group({octahedron_map("antipodal", oct)})));
  // swap_xy keeps the edge {0,2} setwise but exchanges its endpoints
  CHECK_FALSE(is_regular(generate_action_group({octahedron_map("swap_xy", oct)})));
  // rot_face cycles the face {0,2,4} onto itself
  CHECK_FALSE(is_regular(generate_action_group({octahedron_map("rot_face", oct)})));
  CHECK_FALSE(is_regular(octahedron_symmetries(oct)));
}

TEST_CASE("fixed subcomplexes of regular actions") {
  ComplexPtr oct = make_complex(octahedron());

  SimplicialComplex fix = fixed_subcomplex(octahedron_map("refl_x", oct));
  CHECK(fix.vertices() == std::vector<int>{2, 3, 4, 5});
  CHECK(fix.f_vector() == std::vector<std::size_t>{4, 4});  // equatorial circle

  SimplicialComplex poles = fixed_subcomplex(octahedron_map("pi_rot_z", oct));
  CHECK(poles == SimplicialComplex::from_maximal({{4}, {5}}));

  CHECK(fixed_subcomplex(octahedron_map("antipodal", oct)).empty());

  ActionGroup id = generate_action_group({SimplicialMap::identity(oct)});
  CHECK(fixed_subcomplex(id) == *oct);

  // the fixed set of a generated group is the intersection over generators
  ActionGroup two = generate_action_group(
      {octahedron_map("refl_x", oct), octahedron_map("refl_y", oct)});
  CHECK(fixed_subcomplex(two) == SimplicialComplex::from_maximal({{4}, {5}}));

  CHECK_THROWS_AS(
      fixed_subcomplex(generate_action_group({octahedron_map("swap_xy", oct)})),
      non_regular_action);
}

TEST_CASE("barycentric subdivision shapes") {
  Subdivision s0 = barycentric_subdivide(two_points());
  CHECK(s0.complex->f_vector() == std::vector<std::size_t>{2});

  Subdivision s1 = barycentric_subdivide(four_cycle());
  CHECK(s1.complex->f_vector() == std::vector<std::size_t>{8, 8});

  Subdivision s2 = barycentric_subdivide(simplex_boundary(3));
  CHECK(s2.complex->f_vector() == std::vector<std::size_t>{14, 36, 24});
  CHECK(closed_under_faces(*s2.complex));

  // one subdivision vertex per base simplex, with a consistent lookup
  CHECK(s2.vertex_simplex.size() == simplex_boundary(3).simplex_count());
  for (std::size_t v = 0; v < s2.vertex_simplex.size(); ++v)
    CHECK(s2.vertex_of(s2.vertex_simplex[v]) == static_cast<int>(v));

  // barycenters of top simplices sit in the last id block
  CHECK(s2.vertex_simplex[13].size() == 3);
  CHECK(s2.vertex_simplex[0].size() == 1);
}

TEST_CASE("induced maps on the subdivision") {
  ComplexPtr oct = make_complex(octahedron());
  Subdivision sd = barycentric_subdivide(oct);

  CHECK(induced_on_subdivision(SimplicialMap::identity(oct), sd).is_identity_map());

  for (const char* name : {"refl_x", "rot_z90", "antipodal", "rot_face"}) {
    SimplicialMap g = octahedron_map(name, oct);
    CHECK(order(induced_on_subdivision(g, sd)) == order(g));
  }

  // subdividing is functorial for our left-to-right composition
  SimplicialMap a = octahedron_map("swap_xy", oct);
  SimplicialMap b = octahedron_map("rot_face", oct);
  CHECK(induced_on_subdivision(compose(a, b), sd) ==
        compose(induced_on_subdivision(a, sd), induced_on_subdivision(b, sd)));
  CHECK(induced_on_subdivision(compose(b, a), sd) ==
        compose(induced_on_subdivision(b, sd), induced_on_subdivision(a, sd)));

  // the antipodal map stays fixed-point free downstairs
  SimplicialMap anti = induced_on_subdivision(octahedron_map("antipodal", oct), sd);
  for (int v : sd.complex->vertices()) CHECK(anti.apply(v) != v);

  ComplexPtr fc = make_complex(four_cycle());
  CHECK_THROWS_AS(induced_on_subdivision(SimplicialMap::identity(fc), sd), error);
}

TEST_CASE("regularize subdivides exactly as needed") {
  ComplexPtr oct = make_complex(octahedron());

  RegularizedAction already =
      regularize(generate_action_group({octahedron_map("refl_x", oct)}));
  CHECK(already.subdivisions == 0);
  CHECK(already.group.complex == oct);

  RegularizedAction rot =
      regularize(generate_action_group({octahedron_map("rot_face", oct)}));
  CHECK(rot.subdivisions == 1);
  CHECK(rot.group.order() == 3);
  CHECK(is_regular(rot.group));
  // the surviving points are the barycenters of the two invariant faces
  Subdivision sd = barycentric_subdivide(oct);
  CHECK(fixed_subcomplex(rot.group) ==
        SimplicialComplex::from_maximal(
            {{sd.vertex_of({0, 2, 4})}, {sd.vertex_of({1, 3, 5})}}));

  RegularizedAction whole = regularize(octahedron_symmetries(oct));
  CHECK(whole.subdivisions == 1);
  CHECK(whole.group.order() == 48);

  CHECK_THROWS_AS(
      regularize(generate_action_group({octahedron_map("swap_xy", oct)}), 0),
      non_regular_action);
}

TEST_CASE("cones and joins") {
  SimplicialComplex oct = octahedron();
  SimplicialComplex c = cone(oct, 6);
  CHECK(c.dim() == 3);
  CHECK(c.f_vector() == std::vector<std::size_t>{7, 18, 20, 8});
  CHECK(c.contains({6}));
  CHECK(c.contains({0, 2, 4, 6}));
  CHECK(closed_under_faces(c));
  CHECK(cone(oct) == c);  // fresh apex defaults to max vertex + 1
  CHECK_THROWS_AS(cone(oct, 3), error);
  CHECK(cone(SimplicialComplex()) == SimplicialComplex::from_maximal({{0}}));

  // S^0 * S^0 is the square
  Join sq = join(two_points(), two_points());
  CHECK(sq.complex == four_cycle());

  Join tt = join(simplex_boundary(2), simplex_boundary(2));
  CHECK(tt.complex.f_vector() == std::vector<std::size_t>{6, 15, 18, 9});
  CHECK(closed_under_faces(tt.complex));

  CHECK(join(SimplicialComplex(), octahedron()).complex == octahedron());

  CHECK(z3_sphere().f_vector() == std::vector<std::size_t>{8, 27, 48, 45, 18});
  CHECK(z3_acyclic().f_vector() == std::vector<std::size_t>{7, 21, 33, 27, 9});
}

TEST_CASE("catalog enumerates the workbench complexes") {
  auto cat = catalog_complexes();
  REQUIRE(cat.size() == 8);
  std::vector<std::string> names;
  for (auto& [name, k] : cat) {
    names.push_back(name);
    CHECK_FALSE(k.empty());
    CHECK(closed_under_faces(k));
  }
  CHECK(names == std::vector<std::string>{"two_points", "four_cycle",
                                          "octahedron", "boundary_delta3",
                                          "boundary_delta4", "cone_octahedron",
                                          "z3_sphere", "z3_acyclic"});
  CHECK_THROWS_AS(octahedron_map("nope", make_complex(octahedron())), error);
}

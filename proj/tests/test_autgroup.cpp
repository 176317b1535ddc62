#include <catch2/catch_amalgamated.hpp>

#include "autfn/autgroup.hpp"

using namespace autfn;

TEST_CASE("T(m) is elementary abelian of order 3^m") {
  std::size_t expect = 1;
  for (int m = 1; m <= 3; ++m) {
    expect *= 3;
    FiniteAutGroup t = build_t_group(m);
    CHECK(t.order() == expect);
    CHECK(elementary_abelian_rank(t, 3) == m);
    CHECK_FALSE(elementary_abelian_rank(t, 2).has_value());
    CHECK(t.contains(named(gen::R(1), 2 * m)));
    CHECK(t.contains(Endo::identity(2 * m)));
  }
  CHECK_THROWS_AS(build_t_group(0), error);
}

TEST_CASE("signed permutation group orders") {
  CHECK(build_swn(3).order() == 24);
  CHECK(build_swn(4).order() == 192);   // 2^3 * 4!
  CHECK(build_swn(5).order() == 1920);  // 2^4 * 5!
  CHECK_THROWS_AS(build_swn(1), error);
}

TEST_CASE("even sign-change subgroup") {
  for (int n : {3, 4, 5}) {
    FiniteAutGroup sn = build_sn_group(n);
    CHECK(sn.order() == (std::size_t{1} << (n - 1)));
    CHECK(elementary_abelian_rank(sn, 2) == n - 1);

    Endo delta = named(gen::delta(), n);
    CHECK(sn.contains(delta) == (n % 2 == 0));
    CHECK(build_swn(n).contains(delta) == (n % 2 == 0));
  }
}

TEST_CASE("generation requires invertibility witnesses and respects caps") {
  CHECK_THROWS_AS(generate_aut_group({named(gen::lambda(1, 2), 3)}, 50), cap_exceeded);
  Endo no_witness = Endo::from_images(2, {parse_word("a2", 2), parse_word("a1", 2)});
  CHECK_FALSE(no_witness.has_inverse());
  CHECK_THROWS_AS(generate_aut_group({no_witness}), error);
  CHECK_THROWS_AS(generate_aut_group({}), error);
}

TEST_CASE("SW_3 is not elementary abelian") {
  FiniteAutGroup sw3 = build_swn(3);
  CHECK_FALSE(elementary_abelian_rank(sw3, 2).has_value());
  CHECK_FALSE(elementary_abelian_rank(sw3, 3).has_value());
}

TEST_CASE("group structure sanity") {
  FiniteAutGroup sw3 = build_swn(3);
  // sorted by canonical key, closed under composition and inverse
  for (std::size_t k = 1; k < sw3.elements.size(); ++k)
    CHECK(sw3.elements[k - 1].key() < sw3.elements[k].key());
  const Endo& a = sw3.elements[3];
  const Endo& b = sw3.elements[17];
  CHECK(sw3.contains(compose(a, b)));
  CHECK(sw3.contains(inverse(a)));
  CHECK(sw3.contains(Endo::identity(3)));
  CHECK_FALSE(sw3.contains(named(gen::e(1), 3)));  // determinant -1
}

TEST_CASE("conjugators inside SW_n") {
  FiniteAutGroup sw3 = build_swn(3);
  Endo x = named(gen::epsilon(1, 2), 3);
  Endo y = named(gen::epsilon(1, 3), 3);
  auto c = find_conjugator(x, y, sw3);
  REQUIRE(c.has_value());
  CHECK(conjugate(x, *c) == y);

  FiniteAutGroup sw5 = build_swn(5);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
  for (auto [i, j] : pairs)
    for (auto [k, l] : pairs) {
      auto w = find_conjugator(named(gen::epsilon(i, j), 5), named(gen::epsilon(k, l), 5), sw5);
      REQUIRE(w.has_value());
      CHECK(conjugate(named(gen::epsilon(i, j), 5), *w) == named(gen::epsilon(k, l), 5));
    }

  // identity pool conjugates an element only to itself
  FiniteAutGroup triv = generate_aut_group({Endo::identity(3)});
  CHECK(find_conjugator(x, x, triv) == Endo::identity(3));
  CHECK_FALSE(find_conjugator(x, y, triv).has_value());
}

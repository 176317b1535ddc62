#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "autfn/endo.hpp"

using namespace autfn;

namespace {

Endo L(int i, int j, int n) { return named(gen::lambda(i, j), n); }
Endo P(int i, int j, int n) { return named(gen::rho(i, j), n); }
Endo E(int i, int n) { return named(gen::e(i), n); }

Endo random_named(std::mt19937_64& rng, int n) {
  switch (rng() % 4) {
    case 0: {
      int i = 1 + static_cast<int>(rng() % n);
      int j = 1 + static_cast<int>(rng() % n);
      if (i == j) j = i % n + 1;
      return L(i, j, n);
    }
    case 1: {
      int i = 1 + static_cast<int>(rng() % n);
      int j = 1 + static_cast<int>(rng() % n);
      if (i == j) j = i % n + 1;
      return P(i, j, n);
    }
    case 2: return E(1 + static_cast<int>(rng() % n), n);
    default: {
      int i = 1 + static_cast<int>(rng() % n);
      int j = 1 + static_cast<int>(rng() % n);
      if (i == j) j = i % n + 1;
      return named(gen::perm({{i, j}}), n);
    }
  }
}

}  // namespace

TEST_CASE("named generator image tables") {
  // lambda_12: a1 -> a2 a1; rho_12: a1 -> a1 a2; everything else fixed.
  REQUIRE(L(1, 2, 3).image(1) == parse_word("a2 a1", 3));
  REQUIRE(L(1, 2, 3).image(2) == parse_word("a2", 3));
  REQUIRE(L(1, 2, 3).image(3) == parse_word("a3", 3));
  REQUIRE(P(1, 2, 3).image(1) == parse_word("a1 a2", 3));
  REQUIRE(E(2, 3).image(2) == parse_word("a2^-1", 3));
  REQUIRE(E(2, 3).image(1) == parse_word("a1", 3));

  Endo eps = named(gen::epsilon(1, 3), 3);
  REQUIRE(eps.image(1) == parse_word("a1^-1", 3));
  REQUIRE(eps.image(2) == parse_word("a2", 3));
  REQUIRE(eps.image(3) == parse_word("a3^-1", 3));

  Endo delta = named(gen::delta(), 3);
  for (int i = 1; i <= 3; ++i)
    REQUIRE(delta.image(i) == Word::generator(3, i, -1));

  // R_i on the paired block: a -> b^-1, b -> b^-1 a.
  Endo r = named(gen::R(1), 2);
  REQUIRE(r.image(1) == parse_word("a2^-1", 2));
  REQUIRE(r.image(2) == parse_word("a2^-1 a1", 2));

  // beta_i: a -> a^-1, b -> a^-1 b^-1 a.
  Endo b = named(gen::beta(1), 2);
  REQUIRE(b.image(1) == parse_word("a1^-1", 2));
  REQUIRE(b.image(2) == parse_word("a1^-1 a2^-1 a1", 2));

  // Transposition swaps the two generators.
  Endo t12 = named(gen::perm({{1, 2}}), 3);
  REQUIRE(t12.image(1) == parse_word("a2", 3));
  REQUIRE(t12.image(2) == parse_word("a1", 3));
  REQUIRE(t12.image(3) == parse_word("a3", 3));
}

TEST_CASE("generator orders") {
  REQUIRE(order(L(1, 2, 2), 10) == std::nullopt);  // infinite order, cap hit
  REQUIRE(*order(E(1, 2)) == 2);
  REQUIRE(*order(named(gen::epsilon(1, 2), 3)) == 2);
  REQUIRE(*order(named(gen::delta(), 4)) == 2);
  REQUIRE(*order(named(gen::R(1), 2)) == 3);
  REQUIRE(*order(named(gen::beta(1), 2)) == 2);
  REQUIRE(*order(named(gen::perm({{1, 2, 3}}), 3)) == 3);
  REQUIRE(*order(Endo::identity(3)) == 1);
}

TEST_CASE("R squared equals R inverse") {
  Endo r = named(gen::R(1), 2);
  Endo r2 = compose(r, r);
  REQUIRE(r2 == inverse(r));
  REQUIRE(r2.image(1) == parse_word("a1^-1 a2", 2));
  REQUIRE(r2.image(2) == parse_word("a1^-1", 2));
  REQUIRE(compose(r, compose(r, r)) == Endo::identity(2));
}

TEST_CASE("composition applies left to right") {
  // a1 under compose(L12, E1): first a1 -> a2 a1, then invert a1.
  Endo f = compose(L(1, 2, 2), E(1, 2));
  REQUIRE(f.image(1) == parse_word("a2 a1^-1", 2));
  // Sign changes compose by XOR of inverted index sets.
  Endo lhs = compose(named(gen::epsilon(1, 2), 3), named(gen::epsilon(2, 3), 3));
  REQUIRE(lhs == named(gen::epsilon(1, 3), 3));
}

TEST_CASE("inverse witnesses verify") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Endo f = Endo::identity(n);
    for (int k = 0; k < 5; ++k) f = compose(f, random_named(rng, n));
    REQUIRE(compose(f, inverse(f)) == Endo::identity(n));
    REQUIRE(compose(inverse(f), f) == Endo::identity(n));
  }
}

TEST_CASE("apply agrees with image composition") {
  Endo f = compose(L(1, 2, 3), P(3, 1, 3));
  Word w = parse_word("a1 a3^-1 a2", 3);
  Word expect = substitute(w, f.images());
  REQUIRE(apply(f, w) == expect);
  // Functoriality: apply(compose(f,g), w) = apply(g, apply(f, w)).
  Endo g = compose(E(2, 3), L(2, 3, 3));
  REQUIRE(apply(compose(f, g), w) == apply(g, apply(f, w)));
}

TEST_CASE("sign conjugation table") {
  // Conjugating lambda_ij by sign automorphisms toggles it through
  // lambda/rho and their inverses according to which of i, j is inverted.
  for (int n : {2, 3, 4}) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Endo lam = L(i, j, n);
        Endo both = compose(E(i, n), E(j, n));
        REQUIRE(conjugate(lam, both) == P(i, j, n));
        REQUIRE(conjugate(lam, E(j, n)) == inverse(lam));
        REQUIRE(conjugate(lam, E(i, n)) == inverse(P(i, j, n)));
      }
  }
}

TEST_CASE("permutations relabel Nielsen moves") {
  // theta_ij conjugated by sigma is theta_{sigma(i) sigma(j)}.
  Endo sigma = named(gen::perm({{1, 2, 3}}), 3);  // 1->2->3->1
  REQUIRE(conjugate(L(1, 2, 3), sigma) == L(2, 3, 3));
  REQUIRE(conjugate(P(3, 1, 3), sigma) == P(1, 2, 3));
  REQUIRE(conjugate(named(gen::epsilon(1, 2), 3), sigma) == named(gen::epsilon(2, 3), 3));
}

TEST_CASE("conjugation chains split") {
  Endo x = L(1, 2, 3);
  Endo c = compose(E(1, 3), named(gen::perm({{2, 3}}), 3));
  Endo d = compose(L(2, 3, 3), E(3, 3));
  REQUIRE(conjugate(x, compose(c, d)) == conjugate(conjugate(x, d), c));
}

TEST_CASE("commutator of overlapping left moves") {
  // [lambda_12, lambda_23] = lambda_13.
  REQUIRE(commutator(L(1, 2, 3), L(2, 3, 3)) == L(1, 3, 3));
  // Disjoint moves commute.
  REQUIRE(commutator(L(1, 2, 4), L(3, 4, 4)) == Endo::identity(4));
}

TEST_CASE("delta swaps left and right moves") {
  for (int n : {2, 3, 4}) {
    Endo d = named(gen::delta(), n);
    REQUIRE(compose(compose(d, L(1, 2, n)), d) == P(1, 2, n));
  }
}

TEST_CASE("conjugating a sign pair moves its support") {
  Endo x = named(gen::epsilon(1, 2), 3);
  Endo c = compose(named(gen::perm({{2, 3}}), 3), E(1, 3));
  REQUIRE(conjugate(x, c) == named(gen::epsilon(1, 3), 3));
}

TEST_CASE("paired display flag") {
  Endo r = named(gen::R(1), 4);
  REQUIRE(r.paired());
  REQUIRE(to_string(r).find("b1") != std::string::npos);
  Endo plain = L(1, 2, 4);
  REQUIRE_FALSE(plain.paired());
  REQUIRE(to_string(plain.with_paired(true)).find("b1") != std::string::npos);
}

TEST_CASE("generator words parse and compose") {
  REQUIRE(parse_generator_word("L12", 3) == L(1, 2, 3));
  REQUIRE(parse_generator_word("P13^-1", 3) == inverse(P(1, 3, 3)));
  REQUIRE(parse_generator_word("E1E2", 3) == compose(E(1, 3), E(2, 3)));
  REQUIRE(parse_generator_word("EPS12", 3) == named(gen::epsilon(1, 2), 3));
  REQUIRE(parse_generator_word("DEL", 3) == named(gen::delta(), 3));
  REQUIRE(parse_generator_word("R1 B2", 4) ==
          compose(named(gen::R(1), 4), named(gen::beta(2), 4)));
  REQUIRE(parse_generator_word("PERM(1 2)(3 4)", 4) ==
          named(gen::perm({{1, 2}, {3, 4}}), 4));
  REQUIRE(parse_generator_word("L12^2", 2) == compose(L(1, 2, 2), L(1, 2, 2)));
  REQUIRE(parse_generator_word("", 3) == Endo::identity(3));
  REQUIRE(parse_generator_word("ID", 3) == Endo::identity(3));
  REQUIRE_THROWS_AS(parse_generator_word("Q7", 3), error);
  REQUIRE_THROWS_AS(parse_generator_word("L11", 3), error);
  REQUIRE_THROWS_AS(parse_generator_word("R1", 3), error);  // odd rank

  REQUIRE(minimal_rank_of_generator_word("R2") == 4);
  REQUIRE(minimal_rank_of_generator_word("L13") == 3);
  REQUIRE(minimal_rank_of_generator_word("E1") == 1);
}

TEST_CASE("round trip of generator name display") {
  for (const GeneratorName& g :
       {gen::lambda(1, 2), gen::rho(2, 3), gen::e(2), gen::epsilon(1, 3),
        gen::R(1), gen::beta(2), gen::delta(),
        gen::perm({{1, 2}, {3, 4}})}) {
    int n = 4;
    REQUIRE(parse_generator_word(to_string(g), n) == named(g, n));
  }
}

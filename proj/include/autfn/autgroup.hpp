#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "autfn/closure.hpp"
#include "autfn/endo.hpp"

namespace autfn {

inline constexpr std::size_t kDefaultAutCap = 1'000'000;

struct FiniteAutGroup {
  int rank = 0;
  std::vector<Endo> elements;  // sorted by key; binary-searchable
  std::vector<Endo> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const Endo& f) const {
    auto cmp = [](const Endo& x, const Endo& y) { return x.key() < y.key(); };
    return std::binary_search(elements.begin(), elements.end(), f, cmp);
  }
};

/// Enumerate the subgroup of Aut(F_n) generated by gens.  Every generator
/// must carry an inverse witness; so does every enumerated element.
inline FiniteAutGroup generate_aut_group(std::vector<Endo> gens,
                                         std::size_t cap = kDefaultAutCap) {
  if (gens.empty()) throw error("automorphism group needs at least one generator");
  int n = gens[0].rank();
  for (const Endo& g : gens) {
    if (g.rank() != n) throw error("generator ranks disagree");
    if (!g.has_inverse()) throw error("generator carries no inverse witness");
  }
  auto elems = bfs_closure<Endo, std::vector<std::int32_t>>(
      Endo::identity(n), gens,
      [](const Endo& a, const Endo& b) { return compose(a, b); },
      [](const Endo& f) { return f.key(); }, cap, "automorphism group");
  std::sort(elems.begin(), elems.end(),
            [](const Endo& x, const Endo& y) { return x.key() < y.key(); });
  return FiniteAutGroup{n, std::move(elems), std::move(gens)};
}

/// Signed-permutation subgroup of determinant +1: generated by e_1 e_2 and
/// every adjacent transposition paired with one sign flip.
inline FiniteAutGroup build_swn(int n, std::size_t cap = kDefaultAutCap) {
  if (n < 2) throw error("build_swn needs rank >= 2");
  std::vector<Endo> gens;
  gens.push_back(compose(named(gen::e(1), n), named(gen::e(2), n)));
  for (int i = 1; i < n; ++i)
    gens.push_back(compose(named(gen::perm({{i, i + 1}}), n), named(gen::e(1), n)));
  return generate_aut_group(std::move(gens), cap);
}

/// Even sign-change subgroup: all products of an even number of e_i.
inline FiniteAutGroup build_sn_group(int n, std::size_t cap = kDefaultAutCap) {
  if (n < 2) throw error("build_sn_group needs rank >= 2");
  std::vector<Endo> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(compose(named(gen::e(i), n), named(gen::e(i + 1), n)));
  return generate_aut_group(std::move(gens), cap);
}

/// Subgroup generated by the order-3 elements R_1..R_m inside rank 2m.
inline FiniteAutGroup build_t_group(int m, std::size_t cap = kDefaultAutCap) {
  if (m < 1) throw error("build_t_group needs m >= 1");
  std::vector<Endo> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(named(gen::R(i), 2 * m));
  return generate_aut_group(std::move(gens), cap);
}

/// Rank r when the group is elementary abelian of exponent p; else nullopt.
inline std::optional<int> elementary_abelian_rank(const FiniteAutGroup& H, int p) {
  if (p < 2) throw error("exponent must be a prime");
  std::size_t pw = 1;
  int r = 0;
  while (pw < H.order()) {
    pw *= static_cast<std::size_t>(p);
    ++r;
  }
  if (pw != H.order()) return std::nullopt;
  for (const Endo& a : H.generators)
    for (const Endo& b : H.generators)
      if (!(compose(a, b) == compose(b, a))) return std::nullopt;
  Endo id = Endo::identity(H.rank);
  for (const Endo& x : H.elements)
    if (!(endo_pow(x, p) == id)) return std::nullopt;
  return r;
}

/// First element c of the pool (in canonical order) with c x c^{-1} = y.
inline std::optional<Endo> find_conjugator(const Endo& x, const Endo& y,
                                           const FiniteAutGroup& pool) {
  for (const Endo& c : pool.elements)
    if (conjugate(x, c) == y) return c;
  return std::nullopt;
}

}  // namespace autfn

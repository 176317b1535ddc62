#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "autfn/closure.hpp"
#include "autfn/linear.hpp"

namespace autfn {

inline constexpr std::size_t kDefaultMatrixCap = 10'000'000;

/// Inverse over F_p by Gauss-Jordan.  Throws if singular.
inline ModPMatrix inverse_p(const ModPMatrix& m) {
  int n = m.size(), p = m.p();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][static_cast<std::size_t>(n + i)] = 1;
  }
  auto inv_mod = [&](int x) {
    int r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) throw error("matrix is singular mod p");
    std::swap(a[k], a[piv]);
    int f = inv_mod(a[k][k]);
    for (int c = 0; c < 2 * n; ++c) a[k][c] = a[k][c] * f % p;
    for (int r = 0; r < n; ++r) {
      if (r == k || a[r][k] == 0) continue;
      int g = a[r][k];
      for (int c = 0; c < 2 * n; ++c) a[r][c] = ((a[r][c] - g * a[k][c]) % p + p) % p;
    }
  }
  ModPMatrix out(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = static_cast<std::uint8_t>(a[i][static_cast<std::size_t>(n + j)]);
  return out;
}

struct FiniteMatrixGroup {
  int n = 0;
  int p = 2;
  std::vector<ModPMatrix> elements;  // sorted; binary-searchable
  std::vector<ModPMatrix> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const ModPMatrix& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
  }
};

/// Enumerate the subgroup of GL(n, p) generated by gens.
inline FiniteMatrixGroup enumerate_matrix_group(std::vector<ModPMatrix> gens,
                                                std::size_t cap = kDefaultMatrixCap) {
  if (gens.empty()) throw error("matrix group needs at least one generator");
  int n = gens[0].size(), p = gens[0].p();
  for (const ModPMatrix& g : gens) {
    if (g.size() != n || g.p() != p) throw error("generator shapes disagree");
    if (det_p(g) == 0) throw error("generator is singular mod p");
  }
  auto elems = bfs_closure<ModPMatrix, std::vector<std::uint8_t>>(
      ModPMatrix::identity(n, p), gens,
      [](const ModPMatrix& a, const ModPMatrix& b) { return a * b; },
      [](const ModPMatrix& m) { return m.data(); }, cap, "matrix group");
  std::sort(elems.begin(), elems.end());
  return FiniteMatrixGroup{n, p, std::move(elems), std::move(gens)};
}

/// Subgroup of SL(n, p) generated by all elementary matrices.
inline FiniteMatrixGroup special_linear_group(int n, int p,
                                              std::size_t cap = kDefaultMatrixCap) {
  std::vector<ModPMatrix> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(elementary(i, j, n, p));
  return enumerate_matrix_group(std::move(gens), cap);
}

/// Smallest normal subgroup of G containing the seeds.
inline FiniteMatrixGroup normal_closure(std::vector<ModPMatrix> seeds,
                                        const FiniteMatrixGroup& G,
                                        std::size_t cap = kDefaultMatrixCap) {
  for (const ModPMatrix& s : seeds)
    if (!G.contains(s)) throw error("normal closure seed lies outside the group");
  std::vector<ModPMatrix> gen_invs;
  for (const ModPMatrix& g : G.generators) gen_invs.push_back(inverse_p(g));
  std::vector<ModPMatrix> L = std::move(seeds);
  if (L.empty()) L.push_back(ModPMatrix::identity(G.n, G.p));
  while (true) {
    FiniteMatrixGroup H = enumerate_matrix_group(L, cap);
    std::vector<ModPMatrix> missing;
    for (const ModPMatrix& l : L)
      for (std::size_t gi = 0; gi < G.generators.size(); ++gi) {
        ModPMatrix c = G.generators[gi] * l * gen_invs[gi];
        if (!H.contains(c)) missing.push_back(c);
      }
    if (missing.empty()) return H;
    L.insert(L.end(), missing.begin(), missing.end());
  }
}

/// Conjugacy classes, each sorted, listed by their minimal representative.
inline std::vector<std::vector<ModPMatrix>> conjugacy_classes(const FiniteMatrixGroup& G) {
  std::vector<ModPMatrix> gen_invs;
  for (const ModPMatrix& g : G.generators) gen_invs.push_back(inverse_p(g));
  std::vector<bool> done(G.elements.size(), false);
  std::vector<std::vector<ModPMatrix>> classes;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    if (done[i]) continue;
    std::vector<ModPMatrix> orbit{G.elements[i]};
    std::vector<ModPMatrix> queue{G.elements[i]};
    auto mark = [&](const ModPMatrix& m) {
      auto it = std::lower_bound(G.elements.begin(), G.elements.end(), m);
      if (it == G.elements.end() || !(*it == m))
        throw error("conjugate escaped the group; generators inconsistent");
      std::size_t idx = static_cast<std::size_t>(it - G.elements.begin());
      if (done[idx]) return false;
      done[idx] = true;
      return true;
    };
    done[i] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      ModPMatrix x = queue[qi];
      for (std::size_t gi = 0; gi < G.generators.size(); ++gi) {
        ModPMatrix c = G.generators[gi] * x * gen_invs[gi];
        if (mark(c)) {
          orbit.push_back(c);
          queue.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

/// Simplicity test: the normal closure of every nontrivial element is the
/// whole group.  By default one representative per conjugacy class is tried
/// (conjugates generate equal closures); exhaustive mode tries every element.
inline bool is_simple(const FiniteMatrixGroup& G, bool exhaustive = false,
                      std::size_t cap = kDefaultMatrixCap) {
  if (G.order() <= 1) return false;
  ModPMatrix id = ModPMatrix::identity(G.n, G.p);
  std::vector<ModPMatrix> reps;
  if (exhaustive) {
    reps = G.elements;
  } else {
    for (const auto& cls : conjugacy_classes(G)) reps.push_back(cls.front());
  }
  for (const ModPMatrix& r : reps) {
    if (r == id) continue;
    FiniteMatrixGroup N = normal_closure({r}, G, cap);
    if (N.order() != G.order()) return false;
  }
  return true;
}

/// Rank r when H is elementary abelian of exponent p (so H = (Z_p)^r);
/// nullopt otherwise.  The trivial group gets rank 0.
inline std::optional<int> elementary_abelian_rank(const FiniteMatrixGroup& H) {
  int p = H.p;
  std::size_t pw = 1;
  int r = 0;
  while (pw < H.order()) {
    pw *= static_cast<std::size_t>(p);
    ++r;
  }
  if (pw != H.order()) return std::nullopt;
  for (const ModPMatrix& a : H.generators)
    for (const ModPMatrix& b : H.generators)
      if (!(a * b == b * a)) return std::nullopt;
  ModPMatrix id = ModPMatrix::identity(H.n, H.p);
  for (const ModPMatrix& x : H.elements) {
    ModPMatrix xp = id;
    for (int t = 0; t < p; ++t) xp = xp * x;
    if (!(xp == id)) return std::nullopt;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Integer matrix groups taken modulo the sign {±I}: elements are stored as
// canonical representatives (first nonzero entry positive), and every product
// is canonicalized.  This is how projective images are compared without any
// coset machinery.

inline IntMatrix sign_canonical(IntMatrix m) {
  for (std::int64_t v : m.data()) {
    if (v > 0) return m;
    if (v < 0) {
      IntMatrix out(m.size());
      for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out.at(i, j) = -m.at(i, j);
      return out;
    }
  }
  return m;
}

struct SignQuotientGroup {
  int n = 0;
  std::vector<IntMatrix> elements;  // canonical representatives, sorted
  std::vector<IntMatrix> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const IntMatrix& m) const {
    return std::binary_search(elements.begin(), elements.end(), sign_canonical(m));
  }
};

inline SignQuotientGroup enumerate_mod_sign(std::vector<IntMatrix> gens,
                                            std::size_t cap = kDefaultMatrixCap) {
  if (gens.empty()) throw error("matrix group needs at least one generator");
  int n = gens[0].size();
  for (IntMatrix& g : gens) {
    if (g.size() != n) throw error("generator shapes disagree");
    std::int64_t d = det(g);
    if (d != 1 && d != -1) throw error("generator is not invertible over the integers");
    g = sign_canonical(g);
  }
  auto elems = bfs_closure<IntMatrix, std::vector<std::int64_t>>(
      IntMatrix::identity(n), gens,
      [](const IntMatrix& a, const IntMatrix& b) { return sign_canonical(a * b); },
      [](const IntMatrix& m) { return m.data(); }, cap, "sign-quotient group");
  std::sort(elems.begin(), elems.end());
  return SignQuotientGroup{n, std::move(elems), std::move(gens)};
}

/// Elementary abelian rank of a sign-quotient group (exponent p, abelian,
/// order p^r), or nullopt.
inline std::optional<int> elementary_abelian_rank_mod_sign(const SignQuotientGroup& H, int p) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  std::size_t pw = 1;
  int r = 0;
  while (pw < H.order()) {
    pw *= static_cast<std::size_t>(p);
    ++r;
  }
  if (pw != H.order()) return std::nullopt;
  for (const IntMatrix& a : H.elements)
    for (const IntMatrix& b : H.elements)
      if (!(sign_canonical(a * b) == sign_canonical(b * a))) return std::nullopt;
  IntMatrix id = IntMatrix::identity(H.n);
  for (const IntMatrix& x : H.elements) {
    IntMatrix xp = id;
    for (int t = 0; t < p; ++t) xp = xp * x;
    if (!(sign_canonical(xp) == id)) return std::nullopt;
  }
  return r;
}

/// Mod-p image of an automorphism.
inline ModPMatrix rep_mod_p(const Endo& f, int p) { return mod_p(abelianize(f), p); }

}  // namespace autfn

#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "autfn/linear.hpp"
#include "autfn/simplicial.hpp"

namespace autfn {

/// Column-sparse matrix over F_p; entries are (row, coefficient) with rows
/// ascending and coefficients in 1..p-1.
struct BoundaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> col;
};

/// Simplicial chain complex mod p.  boundary[k] sends k-chains to
/// (k-1)-chains for k >= 1; boundary[0] is the zero map.
struct ChainComplex {
  int p = 2;
  std::vector<std::size_t> ranks;  // simplex counts per dimension
  std::vector<BoundaryMatrix> boundary;

  int dim() const { return static_cast<int>(ranks.size()) - 1; }
};

namespace detail {

inline int inv_mod(int a, int p) {
  int r = 1, base = a % p, e = p - 2;  // p prime, a nonzero
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

inline std::vector<std::pair<int, int>> axpy_mod(
    const std::vector<std::pair<int, int>>& x, int scale,
    const std::vector<std::pair<int, int>>& y, int p) {
  std::vector<std::pair<int, int>> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, x[i].second * scale % p);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j]);
      ++j;
    } else {
      int v = (x[i].second * scale + y[j].second) % p;
      if (v) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Rank over F_p by left-to-right column reduction: repeatedly cancel the
/// lowest entry of a column against the stored column owning that row.
inline int rank_mod_p(const BoundaryMatrix& m, int p) {
  std::unordered_map<int, std::vector<std::pair<int, int>>> owner_of_low;
  int rank = 0;
  for (const auto& original : m.col) {
    std::vector<std::pair<int, int>> cur = original;
    while (!cur.empty()) {
      auto it = owner_of_low.find(cur.back().first);
      if (it == owner_of_low.end()) break;
      const auto& pivot = it->second;
      int scale = (p - cur.back().second) % p * detail::inv_mod(pivot.back().second, p) % p;
      cur = detail::axpy_mod(pivot, scale, cur, p);
    }
    if (!cur.empty()) {
      ++rank;
      owner_of_low.emplace(cur.back().first, std::move(cur));
    }
  }
  return rank;
}

inline ChainComplex chain_complex(const SimplicialComplex& k, int p) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  ChainComplex c;
  c.p = p;
  c.ranks = k.f_vector();
  c.boundary.resize(c.ranks.size());
  if (c.dim() >= 0) c.boundary[0].cols = static_cast<int>(c.ranks[0]);
  for (int d = 1; d <= c.dim(); ++d) {
    BoundaryMatrix& m = c.boundary[static_cast<std::size_t>(d)];
    m.rows = static_cast<int>(c.ranks[static_cast<std::size_t>(d - 1)]);
    m.cols = static_cast<int>(c.ranks[static_cast<std::size_t>(d)]);
    m.col.resize(static_cast<std::size_t>(m.cols));
    for (const Simplex& s : k.simplices(d)) {
      auto& column = m.col[k.index_of(s)];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        int sign = (drop % 2 == 0) ? 1 : p - 1;
        column.emplace_back(static_cast<int>(k.index_of(face)), sign % p);
      }
      std::sort(column.begin(), column.end());
      if (p == 2) {
        for (auto& e : column) e.second = 1;
      }
    }
  }
  return c;
}

/// Check the defining identity of a chain complex.
inline bool boundary_square_is_zero(const ChainComplex& c) {
  for (int d = 2; d <= c.dim(); ++d) {
    const BoundaryMatrix& outer = c.boundary[static_cast<std::size_t>(d - 1)];
    const BoundaryMatrix& inner = c.boundary[static_cast<std::size_t>(d)];
    for (const auto& column : inner.col) {
      std::vector<std::pair<int, int>> acc;
      for (auto [row, coeff] : column) acc = detail::axpy_mod(outer.col[static_cast<std::size_t>(row)], coeff, acc, c.p);
      if (!acc.empty()) return false;
    }
  }
  return true;
}

struct BettiVector {
  int p = 2;
  std::vector<int> b;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// b_k = dim ker boundary_k - rank boundary_{k+1}; the empty complex gets the
/// empty vector (the (-1)-sphere convention).
inline BettiVector betti(const SimplicialComplex& k, int p) {
  ChainComplex c = chain_complex(k, p);
  BettiVector out;
  out.p = p;
  if (c.dim() < 0) return out;
  std::vector<int> rk(c.ranks.size() + 1, 0);
  for (int d = 1; d <= c.dim(); ++d)
    rk[static_cast<std::size_t>(d)] = rank_mod_p(c.boundary[static_cast<std::size_t>(d)], p);
  for (int d = 0; d <= c.dim(); ++d)
    out.b.push_back(static_cast<int>(c.ranks[static_cast<std::size_t>(d)]) -
                    rk[static_cast<std::size_t>(d)] - rk[static_cast<std::size_t>(d) + 1]);
  return out;
}

/// r for the sphere betti pattern: empty -> -1, two points -> 0, and
/// (1,0,...,0,1) in top dimension d -> d.  Anything else -> nullopt.
inline std::optional<int> is_sphere_mod_p(const SimplicialComplex& k, int p) {
  BettiVector bv = betti(k, p);
  if (bv.b.empty()) return -1;
  if (bv.b.size() == 1) return bv.b[0] == 2 ? std::optional<int>(0) : std::nullopt;
  if (bv.b.front() != 1 || bv.b.back() != 1) return std::nullopt;
  for (std::size_t i = 1; i + 1 < bv.b.size(); ++i)
    if (bv.b[i] != 0) return std::nullopt;
  return static_cast<int>(bv.b.size()) - 1;
}

inline bool is_acyclic_mod_p(const SimplicialComplex& k, int p) {
  BettiVector bv = betti(k, p);
  if (bv.b.empty() || bv.b[0] != 1) return false;
  for (std::size_t i = 1; i < bv.b.size(); ++i)
    if (bv.b[i] != 0) return false;
  return true;
}

inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  long long sign = 1;
  for (std::size_t count : k.f_vector()) {
    chi += sign * static_cast<long long>(count);
    sign = -sign;
  }
  return chi;
}

}  // namespace autfn

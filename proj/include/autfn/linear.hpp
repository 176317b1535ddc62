#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "autfn/endo.hpp"

namespace autfn {

// ---------------------------------------------------------------------------
// Square integer matrices.

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw error("matrix size must be positive");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& data() const { return a_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.a_ < y.a_;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw error("matrix product: size mismatch");
    IntMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        std::int64_t v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j) out.at(i, j) += v * y.at(k, j);
      }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Exact determinant (fraction-free Gaussian elimination).
inline std::int64_t det(const IntMatrix& m) {
  int n = m.size();
  std::vector<std::vector<__int128>> a(static_cast<std::size_t>(n),
                                       std::vector<__int128>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return static_cast<std::int64_t>(d);
}

/// Abelianization: row i lists the exponent sums of each generator in the
/// image of a_i, so the matrix of a composite is the product of the matrices.
inline IntMatrix abelianize(const Endo& f) {
  IntMatrix m(f.rank());
  for (int i = 1; i <= f.rank(); ++i)
    for (const Letter& l : f.image(i).letters())
      m.at(i - 1, l.index - 1) += l.sign;
  return m;
}

// ---------------------------------------------------------------------------
// Matrices over a prime field.

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class ModPMatrix {
 public:
  ModPMatrix() = default;
  ModPMatrix(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw error("matrix size must be positive");
    if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  }

  static ModPMatrix identity(int n, int p) {
    ModPMatrix m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  int p() const { return p_; }
  std::uint8_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::uint8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::uint8_t>& data() const { return a_; }

  friend bool operator==(const ModPMatrix&, const ModPMatrix&) = default;
  friend bool operator<(const ModPMatrix& x, const ModPMatrix& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.a_ < y.a_;
  }

  friend ModPMatrix operator*(const ModPMatrix& x, const ModPMatrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_) throw error("matrix product: shape mismatch");
    ModPMatrix out(x.n_, x.p_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        int v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j)
          out.at(i, j) = static_cast<std::uint8_t>((out.at(i, j) + v * y.at(k, j)) % x.p_);
      }
    return out;
  }

 private:
  int n_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> a_;
};

inline ModPMatrix mod_p(const IntMatrix& m, int p) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  ModPMatrix out(m.size(), p);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      std::int64_t v = m.at(i, j) % p;
      if (v < 0) v += p;
      out.at(i, j) = static_cast<std::uint8_t>(v);
    }
  return out;
}

/// det over F_p by elimination.
inline int det_p(const ModPMatrix& m) {
  int n = m.size(), p = m.p();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  auto inv_mod = [&](int x) {
    int r = 1, e = p - 2;  // Fermat
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  int d = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = (p - d) % p;
    }
    d = d * a[k][k] % p;
    int ipiv = inv_mod(a[k][k]);
    for (int r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      int f = a[r][k] * ipiv % p;
      for (int c = k; c < n; ++c) a[r][c] = ((a[r][c] - f * a[k][c]) % p + p) % p;
    }
  }
  return d;
}

/// Elementary matrix I + unit at (i, j), 1-based, over F_p.  Matches the
/// mod-p abelianization of the left Nielsen move on (i, j).
inline ModPMatrix elementary(int i, int j, int n, int p) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw error("elementary matrix needs distinct indices in range");
  ModPMatrix m = ModPMatrix::identity(n, p);
  m.at(i - 1, j - 1) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Text form: rows separated by ';', entries by whitespace.

inline std::string to_string(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

inline std::string to_string(const ModPMatrix& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(static_cast<int>(m.at(i, j)));
    }
  }
  return out;
}

inline IntMatrix parse_int_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::stringstream rs(row);
    std::vector<std::int64_t> vals;
    std::int64_t v;
    while (rs >> v) vals.push_back(v);
    if (!vals.empty()) rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw error("parse matrix: no rows");
  int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw error("parse matrix: must be square");
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace autfn

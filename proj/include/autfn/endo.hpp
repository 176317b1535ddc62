#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autfn/word.hpp"

namespace autfn {

/// Paired-basis index helpers: in even rank 2m the basis is read as
/// a_1, b_1, ..., a_m, b_m with a_i at position 2i-1 and b_i at 2i.
inline int pa(int i) { return 2 * i - 1; }
inline int pb(int i) { return 2 * i; }

// ---------------------------------------------------------------------------
// Named generators.

struct GeneratorName {
  enum class Kind { Rho, Lambda, E, Perm, Epsilon, R, Beta, Delta, Id };
  Kind kind = Kind::Id;
  int i = 0, j = 0;
  std::vector<std::vector<int>> cycles;  // Perm only
};

namespace gen {
inline GeneratorName rho(int i, int j) { return {GeneratorName::Kind::Rho, i, j, {}}; }
inline GeneratorName lambda(int i, int j) { return {GeneratorName::Kind::Lambda, i, j, {}}; }
inline GeneratorName e(int i) { return {GeneratorName::Kind::E, i, 0, {}}; }
inline GeneratorName perm(std::vector<std::vector<int>> cycles) {
  return {GeneratorName::Kind::Perm, 0, 0, std::move(cycles)};
}
inline GeneratorName epsilon(int i, int j) { return {GeneratorName::Kind::Epsilon, i, j, {}}; }
inline GeneratorName R(int i) { return {GeneratorName::Kind::R, i, 0, {}}; }
inline GeneratorName beta(int i) { return {GeneratorName::Kind::Beta, i, 0, {}}; }
inline GeneratorName delta() { return {GeneratorName::Kind::Delta, 0, 0, {}}; }
inline GeneratorName id() { return {GeneratorName::Kind::Id, 0, 0, {}}; }
}  // namespace gen

inline std::string to_string(const GeneratorName& g) {
  using K = GeneratorName::Kind;
  auto ij = [&] {
    if (g.i > 9 || g.j > 9)
      return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    return std::to_string(g.i) + std::to_string(g.j);
  };
  switch (g.kind) {
    case K::Rho: return "P" + ij();
    case K::Lambda: return "L" + ij();
    case K::E: return "E" + std::to_string(g.i);
    case K::Epsilon: return "EPS" + ij();
    case K::R: return "R" + std::to_string(g.i);
    case K::Beta: return "B" + std::to_string(g.i);
    case K::Delta: return "DEL";
    case K::Id: return "ID";
    case K::Perm: {
      std::string s = "PERM";
      for (const auto& c : g.cycles) {
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (k) s += ' ';
          s += std::to_string(c[k]);
        }
        s += ')';
      }
      return s;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Endomorphisms given by generator images.  Invertibility is witnessed: an
// Endo built from named generators, compositions of such, or graph symmetries
// carries materialized inverse images.

class Endo {
 public:
  Endo() = default;

  static Endo identity(int rank) {
    std::vector<Word> im, inv;
    for (int i = 1; i <= rank; ++i) {
      im.push_back(Word::generator(rank, i));
      inv.push_back(Word::generator(rank, i));
    }
    return Endo(rank, std::move(im), std::move(inv), false);
  }

  static Endo from_images(int rank, std::vector<Word> images,
                          std::optional<std::vector<Word>> inverse_images = std::nullopt,
                          bool paired = false) {
    return Endo(rank, std::move(images), std::move(inverse_images), paired);
  }

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i) - 1); }
  bool has_inverse() const { return inverse_images_.has_value(); }
  const std::vector<Word>& inverse_images() const {
    if (!inverse_images_) throw error("endomorphism carries no inverse witness");
    return *inverse_images_;
  }
  bool paired() const { return paired_; }
  Endo with_paired(bool paired) const {
    Endo out = *this;
    out.paired_ = paired && rank_ % 2 == 0;
    return out;
  }

  friend bool operator==(const Endo& x, const Endo& y) {
    return x.rank_ == y.rank_ && x.images_ == y.images_;
  }

  /// Flat integer encoding; equal endomorphisms get equal keys and the
  /// lexicographic key order is a total order used for canonical listings.
  std::vector<std::int32_t> key() const {
    std::vector<std::int32_t> k;
    k.push_back(rank_);
    for (const Word& w : images_) {
      for (const Letter& l : w.letters()) k.push_back(l.sign * l.index);
      k.push_back(0);
    }
    return k;
  }

 private:
  Endo(int rank, std::vector<Word> images, std::optional<std::vector<Word>> inv, bool paired)
      : rank_(rank),
        images_(std::move(images)),
        inverse_images_(std::move(inv)),
        paired_(paired && rank % 2 == 0) {
    if (static_cast<int>(images_.size()) != rank_)
      throw error("endomorphism needs exactly one image per generator");
    for (const Word& w : images_)
      if (w.rank() != rank_) throw error("endomorphism image has wrong rank");
    if (inverse_images_) {
      if (static_cast<int>(inverse_images_->size()) != rank_)
        throw error("inverse witness needs exactly one image per generator");
      for (const Word& w : *inverse_images_)
        if (w.rank() != rank_) throw error("inverse witness image has wrong rank");
    }
  }

  int rank_ = 0;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
  bool paired_ = false;
};

/// Apply f to a word.
inline Word apply(const Endo& f, const Word& w) {
  if (w.rank() != f.rank()) throw error("apply: rank mismatch");
  return substitute(w, f.images());
}

/// compose(f, g) = "f then g": a_i goes to g(f(a_i)).
inline Endo compose(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) throw error("compose: rank mismatch");
  std::vector<Word> im;
  im.reserve(static_cast<std::size_t>(f.rank()));
  for (const Word& w : f.images()) im.push_back(substitute(w, g.images()));
  std::optional<std::vector<Word>> inv;
  if (f.has_inverse() && g.has_inverse()) {
    std::vector<Word> iv;
    iv.reserve(static_cast<std::size_t>(f.rank()));
    for (const Word& w : g.inverse_images()) iv.push_back(substitute(w, f.inverse_images()));
    inv = std::move(iv);
  }
  return Endo::from_images(f.rank(), std::move(im), std::move(inv),
                           f.paired() || g.paired());
}

inline Endo inverse(const Endo& f) {
  return Endo::from_images(f.rank(), f.inverse_images(), f.images(), f.paired());
}

/// conjugate(x, c) = c x c^{-1}, applied left to right.
inline Endo conjugate(const Endo& x, const Endo& c) {
  return compose(compose(c, x), inverse(c));
}

/// commutator(x, y) = x y x^{-1} y^{-1}.
inline Endo commutator(const Endo& x, const Endo& y) {
  return compose(compose(compose(x, y), inverse(x)), inverse(y));
}

inline Endo endo_pow(const Endo& f, int k) {
  Endo base = k >= 0 ? f : inverse(f);
  Endo acc = Endo::identity(f.rank());
  for (int t = 0, n = k >= 0 ? k : -k; t < n; ++t) acc = compose(acc, base);
  return acc.with_paired(f.paired());
}

/// Least k >= 1 with f^k = id, or nullopt if none is found within cap steps.
inline std::optional<int> order(const Endo& f, int cap = 1000) {
  Endo g = f;
  Endo id = Endo::identity(f.rank());
  for (int k = 1; k <= cap; ++k) {
    if (g == id) return k;
    g = compose(g, f);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Named generator construction.

namespace detail {
inline std::vector<int> perm_from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n) + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (const auto& cyc : cycles) {
    if (cyc.empty()) continue;
    std::vector<int> next = sigma;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n)
        throw error("permutation cycle entry out of range");
      next[static_cast<std::size_t>(from)] = sigma[static_cast<std::size_t>(to)];
    }
    sigma = std::move(next);
  }
  return sigma;
}
}  // namespace detail

/// Build the automorphism of F_n a named generator denotes, together with its
/// inverse witness.  R and beta demand even rank and a block index i <= n/2.
inline Endo named(const GeneratorName& g, int n) {
  using K = GeneratorName::Kind;
  auto unit = [&](int i, int sign = 1) { return Word::generator(n, i, sign); };
  auto check_pair = [&](int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw error("generator " + to_string(g) + " needs distinct indices in 1.." + std::to_string(n));
  };
  std::vector<Word> im, inv;
  im.reserve(static_cast<std::size_t>(n));
  inv.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    im.push_back(unit(k));
    inv.push_back(unit(k));
  }
  bool paired = false;
  switch (g.kind) {
    case K::Id:
      break;
    case K::Rho:  // a_i -> a_i a_j
      check_pair(g.i, g.j);
      im[g.i - 1] = concat(unit(g.i), unit(g.j));
      inv[g.i - 1] = concat(unit(g.i), unit(g.j, -1));
      break;
    case K::Lambda:  // a_i -> a_j a_i
      check_pair(g.i, g.j);
      im[g.i - 1] = concat(unit(g.j), unit(g.i));
      inv[g.i - 1] = concat(unit(g.j, -1), unit(g.i));
      break;
    case K::E:
      if (g.i < 1 || g.i > n) throw error("E index out of range");
      im[g.i - 1] = unit(g.i, -1);
      inv[g.i - 1] = unit(g.i, -1);
      break;
    case K::Epsilon:
      check_pair(g.i, g.j);
      im[g.i - 1] = unit(g.i, -1);
      im[g.j - 1] = unit(g.j, -1);
      inv = im;
      break;
    case K::Delta:
      for (int k = 1; k <= n; ++k) im[k - 1] = unit(k, -1);
      inv = im;
      break;
    case K::Perm: {
      std::vector<int> sigma = detail::perm_from_cycles(g.cycles, n);
      std::vector<int> sigma_inv(static_cast<std::size_t>(n) + 1);
      for (int k = 1; k <= n; ++k) sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = k;
      for (int k = 1; k <= n; ++k) {
        im[k - 1] = unit(sigma_inv[static_cast<std::size_t>(k)]);
        inv[k - 1] = unit(sigma[static_cast<std::size_t>(k)]);
      }
      break;
    }
    case K::R: {
      if (n % 2 != 0) throw error("R needs even rank");
      if (g.i < 1 || 2 * g.i > n) throw error("R block index out of range");
      int a = pa(g.i), b = pb(g.i);
      im[a - 1] = unit(b, -1);                       // a -> b^-1
      im[b - 1] = concat(unit(b, -1), unit(a));      // b -> b^-1 a
      inv[a - 1] = concat(unit(a, -1), unit(b));     // a -> a^-1 b
      inv[b - 1] = unit(a, -1);                      // b -> a^-1
      paired = true;
      break;
    }
    case K::Beta: {
      if (n % 2 != 0) throw error("beta needs even rank");
      if (g.i < 1 || 2 * g.i > n) throw error("beta block index out of range");
      int a = pa(g.i), b = pb(g.i);
      im[a - 1] = unit(a, -1);
      im[b - 1] = concat(concat(unit(a, -1), unit(b, -1)), unit(a));
      inv = im;
      paired = true;
      break;
    }
  }
  return Endo::from_images(n, std::move(im), std::move(inv), paired);
}

inline std::string to_string(const Endo& f) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    if (!out.empty()) out += ", ";
    out += letter_name(i, f.paired()) + " -> " + to_string(f.image(i), f.paired());
  }
  return out.empty() ? "(rank 0)" : out;
}

// ---------------------------------------------------------------------------
// Generator-word parsing: "L12 P13^-1 E2 EPS12 R1 B2 DEL PERM(1 2)(3 4)^-1".
// Tokens may be juxtaposed without spaces; composition is left to right.

namespace detail {

struct GenTokenizer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool eat(const char* lit) {
    std::size_t len = std::string::traits_type::length(lit);
    if (s.compare(pos, len, lit) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw error("generator word: expected a number at '" + s.substr(start) + "'");
    return std::stoi(s.substr(start, pos - start));
  }
  int digit() {
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      return s[pos++] - '0';
    throw error("generator word: expected a digit at '" + s.substr(pos) + "'");
  }
  // Two indices: either two adjacent digits (L12) or parenthesized (L(10,2)).
  std::pair<int, int> index_pair() {
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      int i = number();
      skip_ws();
      if (pos >= s.size() || s[pos] != ',') throw error("generator word: expected ','");
      ++pos;
      int j = number();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') throw error("generator word: expected ')'");
      ++pos;
      return {i, j};
    }
    int i = digit();
    int j = digit();
    return {i, j};
  }
  std::vector<std::vector<int>> cycles() {
    std::vector<std::vector<int>> out;
    skip_ws();
    while (pos < s.size() && s[pos] == '(') {
      ++pos;
      std::vector<int> cyc;
      skip_ws();
      while (pos < s.size() && s[pos] != ')') {
        cyc.push_back(number());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos >= s.size()) throw error("generator word: unterminated cycle");
      ++pos;
      out.push_back(std::move(cyc));
      skip_ws();
    }
    if (out.empty()) throw error("generator word: PERM needs at least one cycle");
    return out;
  }
};

}  // namespace detail

/// Parse a generator word into the automorphism it spells.
inline Endo parse_generator_word(const std::string& text, int n) {
  detail::GenTokenizer tk{text};
  Endo acc = Endo::identity(n);
  while (!tk.done()) {
    GeneratorName g;
    if (tk.eat("EPS")) {
      auto [i, j] = tk.index_pair();
      g = gen::epsilon(i, j);
    } else if (tk.eat("PERM")) {
      g = gen::perm(tk.cycles());
    } else if (tk.eat("DEL")) {
      g = gen::delta();
    } else if (tk.eat("ID")) {
      g = gen::id();
    } else if (tk.eat("E")) {
      g = gen::e(tk.number());
    } else if (tk.eat("L")) {
      auto [i, j] = tk.index_pair();
      g = gen::lambda(i, j);
    } else if (tk.eat("P")) {
      auto [i, j] = tk.index_pair();
      g = gen::rho(i, j);
    } else if (tk.eat("R")) {
      g = gen::R(tk.number());
    } else if (tk.eat("B")) {
      g = gen::beta(tk.number());
    } else {
      throw error("generator word: unknown token at '" + text.substr(tk.pos) + "'");
    }
    int exp = 1;
    if (tk.pos < text.size() && text[tk.pos] == '^') {
      ++tk.pos;
      exp = tk.number();
    }
    acc = compose(acc, endo_pow(named(g, n), exp));
  }
  return acc;
}

/// Smallest rank on which every token of a generator word is defined.
inline int minimal_rank_of_generator_word(const std::string& text) {
  // Parse attempts at increasing rank; names only bound indices so ranks
  // beyond 2*max_index are never needed.
  for (int n = 1; n <= 64; ++n) {
    try {
      parse_generator_word(text, n);
      return n;
    } catch (const error&) {
      continue;
    }
  }
  throw error("generator word: no rank up to 64 fits '" + text + "'");
}

}  // namespace autfn

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "autfn/errors.hpp"

namespace autfn {

/// A single letter a_i^{±1} of a free group word.
struct Letter {
  int index;  // 1-based generator index
  int sign;   // +1 or -1

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in F_n.  Immutable after construction; every
/// constructor reduces its input and validates letters against the rank.
class Word {
 public:
  Word() = default;  // empty word of rank 0, only useful as a placeholder

  static Word identity(int rank) { return Word(rank, {}); }

  /// Reduce an arbitrary letter sequence.
  static Word from_letters(int rank, std::vector<Letter> raw) {
    return Word(rank, std::move(raw));
  }

  /// Single generator a_i.
  static Word generator(int rank, int index, int sign = 1) {
    return Word(rank, {Letter{index, sign}});
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

  /// Total order: by rank, then length, then letterwise (index, sign).
  friend bool operator<(const Word& x, const Word& y) {
    if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
    if (x.letters_.size() != y.letters_.size())
      return x.letters_.size() < y.letters_.size();
    for (std::size_t k = 0; k < x.letters_.size(); ++k) {
      const Letter &a = x.letters_[k], &b = y.letters_[k];
      if (a.index != b.index) return a.index < b.index;
      if (a.sign != b.sign) return a.sign > b.sign;  // positive first
    }
    return false;
  }

 private:
  Word(int rank, std::vector<Letter> raw) : rank_(rank) {
    if (rank < 0) throw error("word rank must be nonnegative");
    letters_.reserve(raw.size());
    for (const Letter& l : raw) {
      if (l.index < 1 || l.index > rank)
        throw error("letter index " + std::to_string(l.index) +
                    " out of range for rank " + std::to_string(rank));
      if (l.sign != 1 && l.sign != -1)
        throw error("letter sign must be +1 or -1");
      if (!letters_.empty() && letters_.back().index == l.index &&
          letters_.back().sign == -l.sign) {
        letters_.pop_back();  // cancel adjacent inverse pair
      } else {
        letters_.push_back(l);
      }
    }
  }

  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence.
inline Word reduce(int rank, std::vector<Letter> raw) {
  return Word::from_letters(rank, std::move(raw));
}

/// Concatenate and reduce.  Ranks must agree.
inline Word concat(const Word& x, const Word& y) {
  if (x.rank() != y.rank()) throw error("concat: rank mismatch");
  std::vector<Letter> raw = x.letters();
  raw.insert(raw.end(), y.letters().begin(), y.letters().end());
  return Word::from_letters(x.rank(), std::move(raw));
}

/// Inverse word: reversed letters with flipped signs.
inline Word invert(const Word& x) {
  std::vector<Letter> raw;
  raw.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it)
    raw.push_back(it->inverse());
  return Word::from_letters(x.rank(), std::move(raw));
}

/// Replace each a_i by images[i-1] (computed on the reduced input, then
/// reduced).  All images must share a rank m; the result lives in rank m.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw error("substitute: need exactly one image per generator");
  int m = images.empty() ? 0 : images[0].rank();
  for (const Word& im : images)
    if (im.rank() != m) throw error("substitute: image ranks disagree");
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    const Word& im = images[static_cast<std::size_t>(l.index) - 1];
    if (l.sign > 0) {
      raw.insert(raw.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        raw.push_back(it->inverse());
    }
  }
  return Word::from_letters(m, std::move(raw));
}

inline Word word_pow(const Word& w, int k) {
  Word acc = Word::identity(w.rank());
  Word base = k >= 0 ? w : invert(w);
  for (int t = 0, n = k >= 0 ? k : -k; t < n; ++t) acc = concat(acc, base);
  return acc;
}

// ---------------------------------------------------------------------------
// Text form.  Plain basis: a1 a2^-1.  Paired basis (even rank): generator
// 2i-1 prints as ai, generator 2i prints as bi.

inline std::string letter_name(int index, bool paired) {
  if (!paired) return "a" + std::to_string(index);
  if (index % 2 == 1) return "a" + std::to_string((index + 1) / 2);
  return "b" + std::to_string(index / 2);
}

inline std::string to_string(const Word& w, bool paired = false) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += letter_name(l.index, paired);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

/// Parse the text form.  Plain mode reads ai as index i and rejects b-names;
/// paired mode reads ai as index 2i-1 and bi as index 2i.  "1" or an empty
/// string denotes the identity.
inline Word parse_word(const std::string& text, int rank, bool paired = false) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '1') {
      ++pos;
      skip_ws();
      continue;
    }
    if (c != 'a' && c != 'b')
      throw error("parse_word: expected generator name at '" + text.substr(pos) + "'");
    if (c == 'b' && !paired)
      throw error("parse_word: b-names are only valid in the paired basis");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw error("parse_word: generator name needs an index");
    int num = std::stoi(text.substr(start, pos - start));
    if (num < 1) throw error("parse_word: generator index must be positive");
    int index;
    if (!paired) index = num;
    else if (c == 'a') index = 2 * num - 1;
    else index = 2 * num;
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t es = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (es == pos) throw error("parse_word: malformed exponent");
      exp = std::stoi(text.substr(es, pos - es));
    }
    int sign = exp >= 0 ? 1 : -1;
    for (int t = 0; t < (exp >= 0 ? exp : -exp); ++t)
      raw.push_back(Letter{index, sign});
    skip_ws();
  }
  return Word::from_letters(rank, std::move(raw));
}

}  // namespace autfn

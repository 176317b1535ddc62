#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "autfn/errors.hpp"

namespace autfn {

namespace detail {
// FNV-1a over an integer sequence.
template <class Seq>
std::size_t seq_hash(const Seq& seq) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : seq) {
    std::uint64_t x = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

struct VecKeyHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const {
    return seq_hash(v);
  }
};
}  // namespace detail

/// Breadth-first closure of a generator list under a binary operation.
/// KeyFn must map equal elements to equal hashable keys.  The identity is
/// always included.  Throws cap_exceeded when the closure grows past cap.
template <class Elem, class Key, class Mult, class KeyFn>
std::vector<Elem> bfs_closure(const Elem& identity, const std::vector<Elem>& gens,
                              Mult mult, KeyFn key_of, std::size_t cap,
                              const std::string& what) {
  std::vector<Elem> elems;
  std::unordered_map<Key, std::size_t, detail::VecKeyHash> seen;
  auto push = [&](const Elem& e) -> bool {
    Key k = key_of(e);
    if (seen.count(k)) return false;
    if (elems.size() >= cap)
      throw cap_exceeded(what + ": enumeration exceeded cap of " + std::to_string(cap));
    seen.emplace(std::move(k), elems.size());
    elems.push_back(e);
    return true;
  };
  push(identity);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const Elem& g : gens) {
      Elem next = mult(elems[qi], g);
      push(next);
    }
  }
  return elems;
}

}  // namespace autfn

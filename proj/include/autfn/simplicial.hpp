#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autfn/closure.hpp"
#include "autfn/errors.hpp"

namespace autfn {

/// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

namespace detail {

inline Simplex canonical_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw error("simplex repeats a vertex");
  return s;
}

}  // namespace detail

/// Finite abstract simplicial complex.  Simplices are stored face-closed,
/// bucketed by dimension, each bucket sorted lexicographically.  The empty
/// complex is legal and has dimension -1.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Build from a list of generating simplices (faces are filled in).  A
  /// generator contained in another is absorbed silently.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal) {
    std::vector<std::set<Simplex>> buckets;
    for (const Simplex& raw : maximal) {
      Simplex top = detail::canonical_simplex(raw);
      if (top.empty()) throw error("empty vertex list is not a simplex");
      int m = static_cast<int>(top.size());
      if (static_cast<int>(buckets.size()) < m) buckets.resize(static_cast<std::size_t>(m));
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Simplex face;
        for (int b = 0; b < m; ++b)
          if (mask & (1u << b)) face.push_back(top[static_cast<std::size_t>(b)]);
        buckets[face.size() - 1].insert(std::move(face));
      }
    }
    SimplicialComplex k;
    for (auto& bucket : buckets)
      k.by_dim_.emplace_back(bucket.begin(), bucket.end());
    if (!k.by_dim_.empty())
      for (const Simplex& v : k.by_dim_[0]) k.vertices_.push_back(v[0]);
    return k;
  }

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }
  const std::vector<int>& vertices() const { return vertices_; }

  const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim()) return none;
    return by_dim_[static_cast<std::size_t>(k)];
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& bucket : by_dim_) f.push_back(bucket.size());
    return f;
  }

  std::size_t simplex_count() const {
    std::size_t total = 0;
    for (const auto& bucket : by_dim_) total += bucket.size();
    return total;
  }

  bool contains(const Simplex& s) const {
    Simplex c = detail::canonical_simplex(s);
    int k = static_cast<int>(c.size()) - 1;
    if (k < 0 || k > dim()) return false;
    const auto& bucket = by_dim_[static_cast<std::size_t>(k)];
    return std::binary_search(bucket.begin(), bucket.end(), c);
  }

  /// Index of a simplex within its dimension bucket.
  std::size_t index_of(const Simplex& s) const {
    Simplex c = detail::canonical_simplex(s);
    int k = static_cast<int>(c.size()) - 1;
    if (k < 0 || k > dim()) throw error("simplex not in complex");
    const auto& bucket = by_dim_[static_cast<std::size_t>(k)];
    auto it = std::lower_bound(bucket.begin(), bucket.end(), c);
    if (it == bucket.end() || *it != c) throw error("simplex not in complex");
    return static_cast<std::size_t>(it - bucket.begin());
  }

  /// Simplices with no proper coface.
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
      std::set<Simplex> facets_above;
      for (const Simplex& s : simplices(k + 1))
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
          facets_above.insert(std::move(f));
        }
      for (const Simplex& s : simplices(k))
        if (!facets_above.count(s)) out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr make_complex(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

/// Boundary of the k-dimensional cross-polytope: 2k vertices, the pair
/// (2i, 2i+1) being an antipodal axis pair, 2^k top simplices; triangulates
/// the (k-1)-sphere.  k = 3 is the octahedron.
inline SimplicialComplex cross_polytope_boundary(int k) {
  if (k < 1) throw error("cross_polytope_boundary needs k >= 1");
  std::vector<Simplex> top;
  for (unsigned pick = 0; pick < (1u << k); ++pick) {
    Simplex s;
    for (int i = 0; i < k; ++i) s.push_back(2 * i + ((pick >> i) & 1u));
    top.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(top);
}

/// Simplicial map determined by a vertex map.  Validated on construction:
/// the map must cover exactly the source vertices, land in the target
/// vertices, and send every simplex to a simplex.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr src, ComplexPtr dst, const std::map<int, int>& vertex_map)
      : src_(std::move(src)), dst_(std::move(dst)) {
    if (!src_ || !dst_) throw error("simplicial map needs source and target");
    const std::vector<int>& sv = src_->vertices();
    if (vertex_map.size() != sv.size()) throw error("vertex map must cover the source vertices");
    images_.reserve(sv.size());
    for (int v : sv) {
      auto it = vertex_map.find(v);
      if (it == vertex_map.end()) throw error("vertex map must cover the source vertices");
      images_.push_back(it->second);
    }
    for (int w : images_)
      if (!std::binary_search(dst_->vertices().begin(), dst_->vertices().end(), w))
        throw error("vertex map leaves the target vertex set");
    for (int k = 0; k <= src_->dim(); ++k)
      for (const Simplex& s : src_->simplices(k)) {
        Simplex im = apply(s);
        if (!dst_->contains(im))
          throw error("image of a simplex is not a simplex of the target");
      }
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    automorphism_ = same_complex(*src_, *dst_) && sorted == dst_->vertices();
  }

  static SimplicialMap identity(const ComplexPtr& k) {
    std::map<int, int> m;
    for (int v : k->vertices()) m[v] = v;
    return SimplicialMap(k, k, m);
  }

  const ComplexPtr& source() const { return src_; }
  const ComplexPtr& target() const { return dst_; }

  int apply(int v) const {
    const std::vector<int>& sv = src_->vertices();
    auto it = std::lower_bound(sv.begin(), sv.end(), v);
    if (it == sv.end() || *it != v) throw error("vertex not in source complex");
    return images_[static_cast<std::size_t>(it - sv.begin())];
  }

  Simplex apply(const Simplex& s) const {
    Simplex im;
    im.reserve(s.size());
    for (int v : s) im.push_back(apply(v));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  /// Images of the sorted source vertices, in order; the canonical sort key.
  const std::vector<int>& image_row() const { return images_; }

  bool is_automorphism() const { return automorphism_; }

  bool is_identity_map() const {
    return automorphism_ && images_ == src_->vertices();
  }

  static bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    return &a == &b || a == b;
  }

 private:
  ComplexPtr src_, dst_;
  std::vector<int> images_;
  bool automorphism_ = false;
};

inline bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
  return SimplicialMap::same_complex(*f.source(), *g.source()) &&
         SimplicialMap::same_complex(*f.target(), *g.target()) &&
         f.image_row() == g.image_row();
}

/// f then g.
inline SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  if (!SimplicialMap::same_complex(*f.target(), *g.source()))
    throw error("composition needs matching middle complex");
  std::map<int, int> m;
  for (int v : f.source()->vertices()) m[v] = g.apply(f.apply(v));
  return SimplicialMap(f.source(), g.target(), m);
}

inline SimplicialMap inverse(const SimplicialMap& f) {
  if (!f.is_automorphism()) throw error("only automorphisms invert");
  std::map<int, int> m;
  const std::vector<int>& sv = f.source()->vertices();
  for (std::size_t i = 0; i < sv.size(); ++i) m[f.image_row()[i]] = sv[i];
  return SimplicialMap(f.target(), f.source(), m);
}

inline std::optional<int> order(const SimplicialMap& f, int cap = 1000) {
  if (!f.is_automorphism()) return std::nullopt;
  SimplicialMap power = f;
  for (int k = 1; k <= cap; ++k) {
    if (power.is_identity_map()) return k;
    power = compose(power, f);
  }
  return std::nullopt;
}

inline constexpr std::size_t kDefaultActionCap = 100'000;

/// A finite group of simplicial automorphisms of one complex.
struct ActionGroup {
  ComplexPtr complex;
  std::vector<SimplicialMap> elements;  // sorted by image row
  std::vector<SimplicialMap> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const SimplicialMap& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g.image_row(),
                               [](const SimplicialMap& e, const std::vector<int>& row) {
                                 return e.image_row() < row;
                               });
    return it != elements.end() && *it == g;
  }
};

inline ActionGroup generate_action_group(std::vector<SimplicialMap> gens,
                                         std::size_t cap = kDefaultActionCap) {
  if (gens.empty()) throw error("action group needs at least one generator");
  ComplexPtr k = gens[0].source();
  for (const SimplicialMap& g : gens) {
    if (!g.is_automorphism()) throw error("action group generators must be automorphisms");
    if (!SimplicialMap::same_complex(*g.source(), *k))
      throw error("action group generators must act on one complex");
  }
  auto elems = bfs_closure<SimplicialMap, std::vector<int>>(
      SimplicialMap::identity(k), gens,
      [](const SimplicialMap& a, const SimplicialMap& b) { return compose(a, b); },
      [](const SimplicialMap& g) { return g.image_row(); }, cap, "action group");
  std::sort(elems.begin(), elems.end(),
            [](const SimplicialMap& a, const SimplicialMap& b) {
              return a.image_row() < b.image_row();
            });
  return ActionGroup{std::move(k), std::move(elems), std::move(gens)};
}

/// Regularity: whenever a group element maps a simplex onto itself setwise,
/// it must fix that simplex vertexwise.  Exactly then does the subcomplex of
/// vertexwise-fixed simplices capture the whole fixed set.
inline bool is_regular(const ActionGroup& G) {
  for (const SimplicialMap& g : G.elements) {
    if (g.is_identity_map()) continue;
    for (int k = 0; k <= G.complex->dim(); ++k)
      for (const Simplex& s : G.complex->simplices(k)) {
        if (g.apply(s) != s) continue;
        for (int v : s)
          if (g.apply(v) != v) return false;
      }
  }
  return true;
}

/// Subcomplex of simplices fixed vertexwise by every generator (equivalently
/// every element).  Requires a regular action; otherwise this subcomplex
/// undercounts the fixed set and the caller should subdivide first.
inline SimplicialComplex fixed_subcomplex(const ActionGroup& G) {
  if (!is_regular(G))
    throw non_regular_action(
        "fixed subcomplex of a non-regular action; barycentrically subdivide first");
  std::vector<int> fixed;
  for (int v : G.complex->vertices()) {
    bool ok = true;
    for (const SimplicialMap& g : G.generators)
      if (g.apply(v) != v) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(v);
  }
  std::vector<Simplex> kept;
  for (int k = 0; k <= G.complex->dim(); ++k)
    for (const Simplex& s : G.complex->simplices(k))
      if (std::includes(fixed.begin(), fixed.end(), s.begin(), s.end()))
        kept.push_back(s);
  return SimplicialComplex::from_maximal(kept);
}

inline SimplicialComplex fixed_subcomplex(const SimplicialMap& g,
                                          std::size_t cap = kDefaultActionCap) {
  return fixed_subcomplex(generate_action_group({g}, cap));
}

/// Barycentric subdivision.  Vertex v of the subdivision stands for the
/// simplex vertex_simplex[v] of the base; ids run through the base simplices
/// by dimension, then lexicographically.
struct Subdivision {
  ComplexPtr base;
  ComplexPtr complex;
  std::vector<Simplex> vertex_simplex;
  std::vector<std::size_t> dim_offset;

  int vertex_of(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    return static_cast<int>(dim_offset[static_cast<std::size_t>(k)] + base->index_of(s));
  }
};

inline Subdivision barycentric_subdivide(ComplexPtr base) {
  if (!base) throw error("barycentric_subdivide needs a complex");
  Subdivision sd;
  sd.base = base;
  sd.dim_offset.assign(1, 0);
  for (int k = 0; k <= base->dim(); ++k) {
    sd.dim_offset.push_back(sd.dim_offset.back() + base->simplices(k).size());
    for (const Simplex& s : base->simplices(k)) sd.vertex_simplex.push_back(s);
  }
  std::vector<Simplex> flags;
  for (const Simplex& top : base->maximal_simplices()) {
    Simplex perm = top;
    std::sort(perm.begin(), perm.end());
    do {
      Simplex flag;
      Simplex prefix;
      for (int v : perm) {
        prefix.push_back(v);
        Simplex sorted_prefix = prefix;
        std::sort(sorted_prefix.begin(), sorted_prefix.end());
        flag.push_back(sd.vertex_of(sorted_prefix));
      }
      flags.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex = make_complex(SimplicialComplex::from_maximal(flags));
  return sd;
}

inline Subdivision barycentric_subdivide(const SimplicialComplex& base) {
  return barycentric_subdivide(make_complex(base));
}

/// Transport an automorphism of the base to the subdivision: the vertex
/// standing for sigma goes to the vertex standing for g(sigma).
inline SimplicialMap induced_on_subdivision(const SimplicialMap& g, const Subdivision& sd) {
  if (!g.is_automorphism()) throw error("only automorphisms descend to the subdivision");
  if (!SimplicialMap::same_complex(*g.source(), *sd.base))
    throw error("map and subdivision disagree about the base complex");
  std::map<int, int> m;
  for (std::size_t v = 0; v < sd.vertex_simplex.size(); ++v)
    m[static_cast<int>(v)] = sd.vertex_of(g.apply(sd.vertex_simplex[v]));
  return SimplicialMap(sd.complex, sd.complex, m);
}

/// Subdivide until the action is regular (at most max_subdivisions times).
struct RegularizedAction {
  ActionGroup group;
  int subdivisions = 0;
};

inline RegularizedAction regularize(ActionGroup G, int max_subdivisions = 2,
                                    std::size_t cap = kDefaultActionCap) {
  int done = 0;
  while (!is_regular(G)) {
    if (done >= max_subdivisions)
      throw non_regular_action("action still not regular after " +
                               std::to_string(max_subdivisions) + " subdivisions");
    Subdivision sd = barycentric_subdivide(G.complex);
    std::vector<SimplicialMap> gens;
    gens.reserve(G.generators.size());
    for (const SimplicialMap& g : G.generators) gens.push_back(induced_on_subdivision(g, sd));
    G = generate_action_group(std::move(gens), cap);
    ++done;
  }
  return RegularizedAction{std::move(G), done};
}

}  // namespace autfn

#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "autfn/homology.hpp"
#include "autfn/simplicial.hpp"

namespace autfn {

/// Outcome of one executable fixed-point-theory check.
struct SmithVerdict {
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
  int subdivisions = 0;
};

namespace detail {

inline std::string betti_text(const BettiVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.b.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b.b[i]);
  }
  return out + ")";
}

// Mod-p kind of the ambient complex: sphere dimension, or dim K for the
// acyclic pattern.  Throws when neither pattern matches.
struct AmbientKind {
  bool sphere = false;
  int m = -1;
};

inline AmbientKind ambient_kind(const SimplicialComplex& k, int p) {
  if (auto r = is_sphere_mod_p(k, p)) return {true, *r};
  if (is_acyclic_mod_p(k, p)) return {false, k.dim()};
  throw error("complex is neither a mod-" + std::to_string(p) +
              " sphere nor mod-" + std::to_string(p) + " acyclic");
}

}  // namespace detail

/// The fixed set of an order-p automorphism of a mod-p sphere is a sphere of
/// dimension r <= m-1 (r <= m-2 and m-r even when p is odd); on a mod-p
/// acyclic complex it is nonempty and acyclic with the same dimension bounds.
inline SmithVerdict smith_fixed_check(const SimplicialMap& g, int p,
                                      int max_subdivisions = 2) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  if (order(g) != p)
    throw error("automorphism must have order exactly " + std::to_string(p));
  detail::AmbientKind amb = detail::ambient_kind(*g.source(), p);

  SmithVerdict v;
  std::ostringstream claim;
  claim << "smith_fixed p=" << p << " on " << (amb.sphere ? "sphere m=" : "acyclic m=")
        << amb.m;
  v.claim = claim.str();

  RegularizedAction ra = regularize(generate_action_group({g}), max_subdivisions);
  v.subdivisions = ra.subdivisions;
  SimplicialComplex fix = fixed_subcomplex(ra.group);
  BettiVector fb = betti(fix, p);

  std::ostringstream obs;
  obs << "fixed set betti " << detail::betti_text(fb) << ", dim " << fix.dim();
  v.observed = obs.str();

  if (amb.sphere) {
    std::ostringstream exp;
    exp << "generalized r-sphere, r <= " << amb.m - 1;
    if (p != 2) exp << ", r <= " << amb.m - 2 << " with m-r even";
    v.expected = exp.str();
    std::optional<int> r = is_sphere_mod_p(fix, p);
    v.pass = r.has_value() && *r <= amb.m - 1 &&
             (p == 2 || (*r <= amb.m - 2 && (amb.m - *r) % 2 == 0));
  } else {
    std::ostringstream exp;
    exp << "nonempty acyclic fixed set, dim <= " << amb.m - 1;
    if (p != 2) exp << ", dim <= " << amb.m - 2;
    v.expected = exp.str();
    v.pass = !fix.empty() && is_acyclic_mod_p(fix, p) && fix.dim() <= amb.m - 1 &&
             (p == 2 || fix.dim() <= amb.m - 2);
  }
  return v;
}

/// Borel's dimension formula n - r = sum over the nontrivial cyclic C < A of
/// (r_C - r), for A an elementary abelian p-group of rank two with nonempty
/// fixed set.
inline SmithVerdict borel_check(const ActionGroup& A, int p, int max_subdivisions = 2) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  if (A.order() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p))
    throw error("Borel check needs A of order p^2");
  for (const SimplicialMap& x : A.elements) {
    if (!x.is_identity_map() && order(x) != p)
      throw error("Borel check needs A elementary abelian of exponent p");
    for (const SimplicialMap& y : A.elements)
      if (!(compose(x, y) == compose(y, x)))
        throw error("Borel check needs A abelian");
  }

  RegularizedAction ra = regularize(A, max_subdivisions);
  SimplicialComplex fix_all = fixed_subcomplex(ra.group);
  if (fix_all.empty()) throw error("Borel formula requires a nonempty global fixed set");

  int n = ra.group.complex->dim();
  int r = fix_all.dim();
  std::set<std::vector<std::vector<int>>> seen;
  int rhs = 0;
  std::vector<int> dims;
  for (const SimplicialMap& x : ra.group.elements) {
    if (x.is_identity_map()) continue;
    std::vector<std::vector<int>> key;
    SimplicialMap pw = x;
    for (int e = 1; e < p; ++e) {
      key.push_back(pw.image_row());
      pw = compose(pw, x);
    }
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) continue;
    int rc = fixed_subcomplex(generate_action_group({x})).dim();
    dims.push_back(rc);
    rhs += rc - r;
  }

  SmithVerdict v;
  v.claim = "borel p=" + std::to_string(p);
  v.subdivisions = ra.subdivisions;
  v.expected = "n - r = sum(r_C - r) over the " + std::to_string(p + 1) +
               " nontrivial cyclic subgroups";
  std::ostringstream obs;
  obs << "n=" << n << " r=" << r << " r_C=";
  for (std::size_t i = 0; i < dims.size(); ++i) obs << (i ? "," : "") << dims[i];
  obs << " lhs=" << n - r << " rhs=" << rhs;
  v.observed = obs.str();
  v.pass = seen.size() == static_cast<std::size_t>(p) + 1 && (n - r == rhs);
  return v;
}

/// On a mod-2 sphere or mod-2 acyclic complex, two commuting involutions
/// with the same fixed set must be equal.
inline SmithVerdict involution_pair_check(const SimplicialMap& a, const SimplicialMap& b,
                                          int max_subdivisions = 2) {
  if (order(a) != 2 || order(b) != 2) throw error("involution pair needs two order-2 maps");
  if (!(compose(a, b) == compose(b, a))) throw error("involution pair must commute");
  detail::AmbientKind amb = detail::ambient_kind(*a.source(), 2);

  RegularizedAction ra = regularize(generate_action_group({a, b}), max_subdivisions);
  const SimplicialMap& ta = ra.group.generators[0];
  const SimplicialMap& tb = ra.group.generators[1];
  SimplicialComplex fa = fixed_subcomplex(generate_action_group({ta}));
  SimplicialComplex fb = fixed_subcomplex(generate_action_group({tb}));

  SmithVerdict v;
  v.claim = std::string("involution_pair on ") + (amb.sphere ? "sphere" : "acyclic");
  v.subdivisions = ra.subdivisions;
  v.expected = "equal fixed sets force equal involutions";
  bool same_fix = fa == fb;
  bool same_map = ta == tb;
  v.observed = std::string("fixed sets ") + (same_fix ? "equal" : "different") +
               ", maps " + (same_map ? "equal" : "different");
  v.pass = !same_fix || same_map;
  return v;
}

/// Scan every commuting pair of involutions in a group for a counterexample.
inline SmithVerdict involution_pair_scan(const ActionGroup& G, int max_subdivisions = 2) {
  detail::AmbientKind amb = detail::ambient_kind(*G.complex, 2);
  RegularizedAction ra = regularize(G, max_subdivisions);

  std::vector<const SimplicialMap*> invs;
  for (const SimplicialMap& x : ra.group.elements)
    if (!x.is_identity_map() && compose(x, x).is_identity_map()) invs.push_back(&x);

  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t j = i; j < invs.size(); ++j) {
      if (!(compose(*invs[i], *invs[j]) == compose(*invs[j], *invs[i]))) continue;
      ++pairs;
      SimplicialComplex fa = fixed_subcomplex(generate_action_group({*invs[i]}));
      SimplicialComplex fb = fixed_subcomplex(generate_action_group({*invs[j]}));
      if (fa == fb && !(*invs[i] == *invs[j])) ++bad;
    }

  SmithVerdict v;
  v.claim = std::string("involution_pair_scan on ") + (amb.sphere ? "sphere" : "acyclic");
  v.subdivisions = ra.subdivisions;
  v.expected = "no commuting involution pair shares a fixed set without being equal";
  v.observed = std::to_string(pairs) + " commuting pairs, " + std::to_string(bad) +
               " counterexamples";
  v.pass = bad == 0;
  return v;
}

/// Z_p x Z_p cannot act freely on a mod-p sphere: every rank-two elementary
/// abelian subgroup of G must contain a nontrivial element with a nonempty
/// fixed set.
inline SmithVerdict no_free_rank2_check(const ActionGroup& G, int p,
                                        int max_subdivisions = 2) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  if (!is_sphere_mod_p(*G.complex, p))
    throw error("free-action check needs a mod-" + std::to_string(p) + " sphere");
  RegularizedAction ra = regularize(G, max_subdivisions);

  std::vector<const SimplicialMap*> order_p;
  for (const SimplicialMap& x : ra.group.elements)
    if (!x.is_identity_map() && order(x) == p) order_p.push_back(&x);

  std::set<std::set<std::vector<int>>> subgroups;
  for (std::size_t i = 0; i < order_p.size(); ++i)
    for (std::size_t j = i + 1; j < order_p.size(); ++j) {
      const SimplicialMap& x = *order_p[i];
      const SimplicialMap& y = *order_p[j];
      if (!(compose(x, y) == compose(y, x))) continue;
      bool y_in_x = false;
      SimplicialMap pw = x;
      for (int e = 1; e < p; ++e) {
        if (pw == y) y_in_x = true;
        pw = compose(pw, x);
      }
      if (y_in_x) continue;
      ActionGroup sub = generate_action_group({x, y});
      if (sub.order() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p)) continue;
      std::set<std::vector<int>> key;
      for (const SimplicialMap& e : sub.elements) key.insert(e.image_row());
      subgroups.insert(std::move(key));
    }

  std::size_t failures = 0;
  for (const auto& key : subgroups) {
    bool some_fixed = false;
    for (const auto& row : key) {
      const std::vector<int>& vs = ra.group.complex->vertices();
      bool identity = true, fixed = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (row[i] != vs[i]) identity = false;
        if (row[i] == vs[i]) fixed = true;
      }
      if (!identity && fixed) {
        some_fixed = true;
        break;
      }
    }
    if (!some_fixed) ++failures;
  }

  SmithVerdict v;
  v.claim = "no_free_rank2 p=" + std::to_string(p);
  v.subdivisions = ra.subdivisions;
  v.expected = "every (Z_p)^2 subgroup has a nontrivial element with fixed points";
  v.observed = std::to_string(subgroups.size()) + " rank-2 subgroups, " +
               std::to_string(failures) + " acting freely";
  v.pass = failures == 0;
  return v;
}

// ---------------------------------------------------------------------------
// Effectiveness bounds and the rigidity verdict oracle.

struct SpaceKind {
  enum class Kind { sphere, acyclic };
  Kind kind = Kind::sphere;
  int dim = 0;  // sphere dimension (>= -1) or manifold dimension (>= 0)
  int p = 2;
};

inline SpaceKind sphere_space(int d, int p) {
  if (d < -1) throw error("sphere dimension must be at least -1");
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  return {SpaceKind::Kind::sphere, d, p};
}

inline SpaceKind acyclic_space(int d, int p) {
  if (d < 0) throw error("acyclic manifold dimension must be at least 0");
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  return {SpaceKind::Kind::acyclic, d, p};
}

struct EffectiveBound {
  bool ruled_out = false;
  std::string clause;
  int m = 0;  // the theorem's m: sphere dimension, or acyclic dimension - 1
};

/// Can (Z_p)^d act effectively on the given space?  Ruled out iff m < d-1
/// (p = 2) or m < 2d-1 (p odd), with m the sphere dimension or one less than
/// the acyclic manifold dimension.
inline EffectiveBound effective_bound(int d, const SpaceKind& space) {
  if (d < 1) throw error("group rank must be at least 1");
  EffectiveBound out;
  out.m = space.kind == SpaceKind::Kind::sphere ? space.dim : space.dim - 1;
  if (space.p == 2) {
    out.ruled_out = out.m < d - 1;
    out.clause = out.ruled_out ? "m < d-1" : "m >= d-1; no obstruction from this bound";
  } else {
    out.ruled_out = out.m < 2 * d - 1;
    out.clause = out.ruled_out ? "m < 2d-1 and p odd" : "m >= 2d-1; no obstruction from this bound";
  }
  return out;
}

enum class GroupFamily { SAut, Aut, SL, GL };

inline GroupFamily parse_group_family(const std::string& name) {
  if (name == "saut") return GroupFamily::SAut;
  if (name == "aut") return GroupFamily::Aut;
  if (name == "sl") return GroupFamily::SL;
  if (name == "gl") return GroupFamily::GL;
  throw error("unknown group family '" + name + "' (expected saut, aut, sl, gl)");
}

struct OracleVerdict {
  std::string verdict;  // trivial_forced | determinant_only | not_ruled_out | not_covered
  std::string theorem;  // sphere_Z2 | acyclic_Z2 | sphere_Z3 | acyclic_Z3 | ""
  std::string citation;
};

namespace detail {

inline const char* kSphereZ2 =
    "If n >= 3 and d < n-1, then any action of SAut(F_n) by homeomorphisms on a "
    "generalized d-sphere over Z_2 is trivial, and hence Aut(F_n) can act only via "
    "the determinant map.";
inline const char* kAcyclicZ2 =
    "If n >= 3 and d < n, then any action of SAut(F_n) by homeomorphisms on a "
    "d-dimensional Z_2-acyclic homology manifold over Z_2 is trivial, and hence "
    "Aut(F_n) can act only via the determinant map.";
inline const char* kSlZ2 =
    "If n >= 3 and d < n, then SL(n,Z) cannot act non-trivially by homeomorphisms on "
    "any generalized (d-1)-sphere over Z_2, or on any d-dimensional homology manifold "
    "over Z_2 that is Z_2-acyclic. Hence GL(n,Z) can act on such spaces only via the "
    "determinant map.";
inline const char* kSphereZ3 =
    "If n > 3 is even and d < n-1, then any action of SAut(F_n) by homemorphisms on a "
    "generalized d-sphere over Z_3 is trivial.";
inline const char* kAcyclicZ3 =
    "If n > 3 is even and d < n, then any action of SAut(F_n) by homemorphisms on a "
    "d-dimensional Z_3-acyclic homology manifold over Z_3 is trivial.";
inline const char* kStandardAction =
    "The standard action of SL(n,Z) on R^n induces non-trivial actions of SAut(F_n) "
    "on R^n and on the sphere S^{n-1}.";

}  // namespace detail

/// Decide whether the headline theorems force an action to be trivial (or to
/// factor through the determinant).  Hypotheses are encoded exactly as
/// stated; parameter ranges the theorems do not address return not_covered.
inline OracleVerdict rigidity_oracle(GroupFamily family, int n, const SpaceKind& space) {
  if (n < 2) throw error("rank n must be at least 2");
  bool sphere = space.kind == SpaceKind::Kind::sphere;
  int d = space.dim;

  if (space.p == 2) {
    bool covered = n >= 3 && (sphere ? d < n - 1 : d < n);
    if (!covered) return {"not_ruled_out", "", detail::kStandardAction};
    std::string thm = sphere ? "sphere_Z2" : "acyclic_Z2";
    switch (family) {
      case GroupFamily::SAut:
        return {"trivial_forced", thm, sphere ? detail::kSphereZ2 : detail::kAcyclicZ2};
      case GroupFamily::SL:
        return {"trivial_forced", thm, detail::kSlZ2};
      case GroupFamily::Aut:
        return {"determinant_only", thm, sphere ? detail::kSphereZ2 : detail::kAcyclicZ2};
      case GroupFamily::GL:
        return {"determinant_only", thm, detail::kSlZ2};
    }
    throw error("unhandled group family");
  }

  if (space.p == 3) {
    if (family != GroupFamily::SAut)
      return {"not_covered", "", "the mod-3 theorems are stated for SAut(F_n) only"};
    if (n <= 3 || n % 2 != 0)
      return {"not_covered", "", "the mod-3 theorems require n > 3 even"};
    bool covered = sphere ? d < n - 1 : d < n;
    if (!covered) return {"not_ruled_out", "", detail::kStandardAction};
    return sphere ? OracleVerdict{"trivial_forced", "sphere_Z3", detail::kSphereZ3}
                  : OracleVerdict{"trivial_forced", "acyclic_Z3", detail::kAcyclicZ3};
  }

  return {"not_covered", "",
          "no theorem addresses coefficients mod " + std::to_string(space.p)};
}

}  // namespace autfn

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "autfn/autgroup.hpp"
#include "autfn/endo.hpp"
#include "autfn/errors.hpp"
#include "autfn/linear.hpp"
#include "autfn/matgroup.hpp"

// Data-driven relation suite.  Each check verifies one displayed identity by
// exact Endo (or abelianized matrix) arithmetic and carries its source
// locator plus the identity as quoted there, so reports are auditable
// without the source tree.

namespace autfn {

struct CheckOutcome {
  bool pass = true;
  std::string witness;  // set on failure
};

struct RelationCheck {
  std::string id;
  std::string ref;
  std::string quote;
  std::function<CheckOutcome()> run;
};

struct CheckRecord {
  std::string id;
  std::string ref;
  std::string quote;
  std::string status;  // "pass" | "fail" | "skip"
  std::string witness;
  double millis = 0.0;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckRecord> records;  // sorted by id
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool ok() const { return failed == 0; }
};

/// Shell-style glob over check ids: '*' matches any run, '?' one character.
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0;
  std::size_t star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace detail {

inline CheckOutcome expect_equal(const Endo& lhs, const Endo& rhs) {
  if (lhs.rank() != rhs.rank())
    return {false, "ranks differ: lhs " + std::to_string(lhs.rank()) + ", rhs " +
                       std::to_string(rhs.rank())};
  bool paired = lhs.paired() || rhs.paired();
  for (int i = 1; i <= lhs.rank(); ++i) {
    if (!(lhs.image(i) == rhs.image(i))) {
      std::string name = letter_name(i, paired);
      return {false, "images differ at " + name + ": lhs sends it to " +
                         to_string(lhs.image(i), paired) + ", rhs to " +
                         to_string(rhs.image(i), paired)};
    }
  }
  return {};
}

inline CheckOutcome expect_equal(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs == rhs) return {};
  return {false, "matrices differ: lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs)};
}

inline Endo mul(std::initializer_list<Endo> factors) {
  auto it = factors.begin();
  Endo acc = *it;
  for (++it; it != factors.end(); ++it) acc = compose(acc, *it);
  return acc;
}

/// Permutation automorphism a_k -> a_{sigma^{-1}(k)} from one-line sigma
/// (sigma[k-1] = sigma(k)), with its inverse witness.
inline Endo perm_endo(const std::vector<int>& sigma, int n) {
  std::vector<Word> im(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
  std::vector<int> sigma_inv(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k) - 1])] = k;
  for (int k = 1; k <= n; ++k) {
    im[static_cast<std::size_t>(k) - 1] = Word::generator(n, sigma_inv[static_cast<std::size_t>(k)]);
    inv[static_cast<std::size_t>(k) - 1] = Word::generator(n, sigma[static_cast<std::size_t>(k) - 1]);
  }
  return Endo::from_images(n, std::move(im), std::move(inv));
}

struct SignedPerm {
  std::vector<int> tau;   // image index per position, 1-based
  std::vector<int> sign;  // +1 / -1 per position
};

inline std::optional<SignedPerm> signed_perm_of(const Endo& w) {
  SignedPerm sp;
  int n = w.rank();
  sp.tau.assign(static_cast<std::size_t>(n) + 1, 0);
  sp.sign.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    const Word& im = w.image(k);
    if (im.length() != 1) return std::nullopt;
    sp.tau[static_cast<std::size_t>(k)] = im.letters()[0].index;
    sp.sign[static_cast<std::size_t>(k)] = im.letters()[0].sign;
  }
  return sp;
}

}  // namespace detail

struct SuiteParams {
  int max_n = 5;  // plain ranks 2..max_n
  int max_m = 3;  // paired ranks 2m, m = 1..max_m
};

inline std::vector<RelationCheck> build_relation_checks(const SuiteParams& params = {}) {
  std::vector<RelationCheck> checks;
  auto add = [&checks](std::string id, std::string ref, std::string quote,
                       std::function<CheckOutcome()> run) {
    checks.push_back({std::move(id), std::move(ref), std::move(quote), std::move(run)});
  };

  // (a) the conjugation table, all four sign cases, all ordered pairs
  for (int n = 2; n <= params.max_n; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        static const struct {
          int ei, ej;
          const char* quote;
        } kCases[] = {
            {0, 0, "\\lambda_{ij}^{\\alpha}=\\lambda_{ij} if \\epsilon_i=\\epsilon_j=0"},
            {1, 1, "\\lambda_{ij}^{\\alpha}=\\rho_{ij} if \\epsilon_i=\\epsilon_j=1"},
            {0, 1, "\\lambda_{ij}^{\\alpha}=\\lambda_{ij}^{-1} if \\epsilon_i=0 and \\epsilon_j=1"},
            {1, 0, "\\lambda_{ij}^{\\alpha}=\\rho_{ij}^{-1} if \\epsilon_i=1 and \\epsilon_j=0"},
        };
        for (const auto& c : kCases) {
          std::string id = "eq1.n" + std::to_string(n) + ".i" + std::to_string(i) + "j" +
                           std::to_string(j) + ".s" + std::to_string(c.ei) + std::to_string(c.ej);
          int ei = c.ei, ej = c.ej;
          add(id, "eq (conjugation)", c.quote, [n, i, j, ei, ej]() {
            Endo alpha = Endo::identity(n);
            if (ei) alpha = compose(alpha, named(gen::e(i), n));
            if (ej) alpha = compose(alpha, named(gen::e(j), n));
            Endo lam = named(gen::lambda(i, j), n);
            Endo expected = ei == ej ? (ei ? named(gen::rho(i, j), n) : lam)
                                     : (ei ? inverse(named(gen::rho(i, j), n)) : inverse(lam));
            return detail::expect_equal(conjugate(lam, alpha), expected);
          });
        }
      }

  // (b) relabelling under every permutation of S_4, both Nielsen families
  {
    std::vector<int> sigma = {1, 2, 3, 4};
    do {
      for (bool is_rho : {false, true}) {
        std::string id = "relabel.n4.p";
        for (int v : sigma) id += std::to_string(v);
        id += is_rho ? ".rho" : ".lambda";
        std::vector<int> sig = sigma;
        add(id, "prop p:quots proof",
            "\\theta_{ij}^{\\sigma} = \\theta_{\\sigma(i)\\sigma(j)}", [sig, is_rho]() {
              const int n = 4;
              Endo s = detail::perm_endo(sig, n);
              for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                  if (i == j) continue;
                  Endo theta = named(is_rho ? gen::rho(i, j) : gen::lambda(i, j), n);
                  int si = sig[static_cast<std::size_t>(i) - 1];
                  int sj = sig[static_cast<std::size_t>(j) - 1];
                  Endo expected = named(is_rho ? gen::rho(si, sj) : gen::lambda(si, sj), n);
                  CheckOutcome out = detail::expect_equal(conjugate(theta, s), expected);
                  if (!out.pass) {
                    out.witness = "pair (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                  "): " + out.witness;
                    return out;
                  }
                }
              return CheckOutcome{};
            });
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  // (c) the commutator formula
  for (int n = 3; n <= params.max_n; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          std::string id = "lambda_comm.n" + std::to_string(n) + "." + std::to_string(i) +
                           std::to_string(j) + std::to_string(k);
          add(id, "sec s:quots notation", "[\\lambda_{ij},\\lambda_{jk}]=\\lambda_{ik}",
              [n, i, j, k]() {
                return detail::expect_equal(
                    commutator(named(gen::lambda(i, j), n), named(gen::lambda(j, k), n)),
                    named(gen::lambda(i, k), n));
              });
        }

  // (d) Delta conjugation
  for (int n = 2; n <= params.max_n; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        std::string id =
            "delta_rho.n" + std::to_string(n) + "." + std::to_string(i) + std::to_string(j);
        add(id, "prop p:quots proof", "\\Delta \\lambda_{ij} \\Delta = \\rho_{ij}", [n, i, j]() {
          Endo d = named(gen::delta(), n);
          return detail::expect_equal(detail::mul({d, named(gen::lambda(i, j), n), d}),
                                      named(gen::rho(i, j), n));
        });
      }

  // (e) the epsilon word
  add("eps_word.n5", "thm t:smooth proof",
      "\\varepsilon_{12}\\varepsilon_{45}\\varepsilon_{23}\\varepsilon_{45}=\\varepsilon_{13}",
      []() {
        const int n = 5;
        return detail::expect_equal(
            detail::mul({named(gen::epsilon(1, 2), n), named(gen::epsilon(4, 5), n),
                         named(gen::epsilon(2, 3), n), named(gen::epsilon(4, 5), n)}),
            named(gen::epsilon(1, 3), n));
      });

  // (f)-(i) the four routine-calculation relations
  for (int m = 1; m <= params.max_m; ++m) {
    int n = 2 * m;
    for (int i = 1; i <= m; ++i) {
      std::string suffix = ".m" + std::to_string(m) + ".i" + std::to_string(i);
      add("lemma33.1" + suffix, "lemma 3lem(1)", "R_ie_{a_i}e_{b_i}R_i^{-1}=\\beta_i",
          [n, i]() {
            Endo r = named(gen::R(i), n);
            return detail::expect_equal(
                detail::mul({r, named(gen::e(pa(i)), n), named(gen::e(pb(i)), n), inverse(r)}),
                named(gen::beta(i), n));
          });
      add("lemma33.3" + suffix, "lemma 3lem(3)", "R_ie_{b_i} R_i^{-1}e_{a_i}=\\lambda_{b_ia_i}^2",
          [n, i]() {
            Endo r = named(gen::R(i), n);
            return detail::expect_equal(
                detail::mul({r, named(gen::e(pb(i)), n), inverse(r), named(gen::e(pa(i)), n)}),
                endo_pow(named(gen::lambda(pb(i), pa(i)), n), 2));
          });
      add("lemma33.4" + suffix, "lemma 3lem(4)", "R_i^{-1}e_{a_i} R_ie_{b_i}=\\lambda_{a_ib_i}^2",
          [n, i]() {
            Endo r = named(gen::R(i), n);
            return detail::expect_equal(
                detail::mul({inverse(r), named(gen::e(pa(i)), n), r, named(gen::e(pb(i)), n)}),
                endo_pow(named(gen::lambda(pa(i), pb(i)), n), 2));
          });
    }
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        std::string suffix =
            ".m" + std::to_string(m) + ".i" + std::to_string(i) + "j" + std::to_string(j);
        add("lemma33.2" + suffix, "lemma 3lem(2)", "[R_j,e_{a_i}]=[R_j,e_{b_i}]=1 if j\\neq i",
            [n, i, j]() {
              Endo rj = named(gen::R(j), n);
              Endo idn = Endo::identity(n);
              CheckOutcome out =
                  detail::expect_equal(commutator(rj, named(gen::e(pa(i)), n)), idn);
              if (!out.pass) {
                out.witness = "[R_j,e_{a_i}]: " + out.witness;
                return out;
              }
              out = detail::expect_equal(commutator(rj, named(gen::e(pb(i)), n)), idn);
              if (!out.pass) out.witness = "[R_j,e_{b_i}]: " + out.witness;
              return out;
            });
      }
  }

  // (j) the SAut-level relation
  for (int m = 2; m <= params.max_m; ++m) {
    int n = 2 * m;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        std::string suffix =
            ".m" + std::to_string(m) + ".i" + std::to_string(i) + "j" + std::to_string(j);
        add("saut_rel" + suffix, "prop p:3quots proof",
            "R_i^{-1}e_{a_i}e_{a_j} R_ie_{b_i}e_{a_j}=\\lambda_{a_ib_i}^2", [n, i, j]() {
              Endo r = named(gen::R(i), n);
              Endo eaj = named(gen::e(pa(j)), n);
              return detail::expect_equal(
                  detail::mul({inverse(r), named(gen::e(pa(i)), n), eaj, r,
                               named(gen::e(pb(i)), n), eaj}),
                  endo_pow(named(gen::lambda(pa(i), pb(i)), n), 2));
            });
      }
  }

  // (k), (l) the t-relations
  for (int m = 2; m <= params.max_m; ++m) {
    int n = 2 * m;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        std::string suffix =
            ".m" + std::to_string(m) + ".i" + std::to_string(i) + "j" + std::to_string(j);
        if (i < j)
          add("trel.sum" + suffix, "prop p:3quots proof",
              "t^{-1}e_{a_i}e_{a_j}te_{b_i}e_{b_j}= \\lambda_{a_ib_i}^2 \\lambda_{a_jb_j}^2 "
              "(t=R_iR_j)",
              [n, i, j]() {
                Endo t = compose(named(gen::R(i), n), named(gen::R(j), n));
                return detail::expect_equal(
                    detail::mul({inverse(t), named(gen::e(pa(i)), n), named(gen::e(pa(j)), n), t,
                                 named(gen::e(pb(i)), n), named(gen::e(pb(j)), n)}),
                    compose(endo_pow(named(gen::lambda(pa(i), pb(i)), n), 2),
                            endo_pow(named(gen::lambda(pa(j), pb(j)), n), 2)));
              });
        // The product below follows from 3lem(3) at i and 3lem(4) at j; the
        // source display transposes the subscripts of both factors.
        add("trel.mix" + suffix, "prop p:3quots proof",
            "te_{b_i}e_{a_j}t^{-1}e_{a_i}e_{b_j}= \\lambda_{b_ia_i}^2 \\lambda_{a_jb_j}^2 "
            "(t=R_iR_j^{-1}; display reads \\lambda_{a_ib_i}^2 \\lambda_{b_ja_j}^2 but the "
            "subscripts follow 3lem(3),(4) as checked here)",
            [n, i, j]() {
              Endo t = compose(named(gen::R(i), n), inverse(named(gen::R(j), n)));
              return detail::expect_equal(
                  detail::mul({t, named(gen::e(pb(i)), n), named(gen::e(pa(j)), n), inverse(t),
                               named(gen::e(pa(i)), n), named(gen::e(pb(j)), n)}),
                  compose(endo_pow(named(gen::lambda(pb(i), pa(i)), n), 2),
                          endo_pow(named(gen::lambda(pa(j), pb(j)), n), 2)));
            });
      }
  }

  // (m) the two pair facts used right after the t-relations
  for (int m = 1; m <= params.max_m; ++m) {
    int n = 2 * m;
    for (int i = 1; i <= m; ++i) {
      std::string suffix = ".m" + std::to_string(m) + ".i" + std::to_string(i);
      add("pair.conj" + suffix, "prop p:3quots proof",
          "e_{a_i}e_{b_i} conjugates \\lambda_{a_ib_i} to \\rho_{a_ib_i}", [n, i]() {
            Endo c = compose(named(gen::e(pa(i)), n), named(gen::e(pb(i)), n));
            return detail::expect_equal(conjugate(named(gen::lambda(pa(i), pb(i)), n), c),
                                        named(gen::rho(pa(i), pb(i)), n));
          });
      add("pair.comm" + suffix, "prop p:3quots proof",
          "\\beta_i commutes with \\lambda_{a_ib_i}", [n, i]() {
            return detail::expect_equal(
                commutator(named(gen::beta(i), n), named(gen::lambda(pa(i), pb(i)), n)),
                Endo::identity(n));
          });
    }
  }

  // (n) the combined rule over every element of SW_n, n = 3, 4
  for (int n : {3, 4}) {
    if (n > params.max_n) continue;
    auto swn = std::make_shared<const FiniteAutGroup>(build_swn(n));
    for (std::size_t idx = 0; idx < swn->elements.size(); ++idx) {
      const Endo& w = swn->elements[idx];
      auto sp = detail::signed_perm_of(w);
      if (!sp) throw error("signed-permutation group contains a non-signed element");
      std::string id = "swn.n" + std::to_string(n) + ".t";
      for (int k = 1; k <= n; ++k) id += std::to_string(sp->tau[static_cast<std::size_t>(k)]);
      id += ".s";
      for (int k = 1; k <= n; ++k) id += sp->sign[static_cast<std::size_t>(k)] > 0 ? 'p' : 'm';
      add(id, "prop p:quots proof",
          "\\lambda_{ij}^{\\alpha\\sigma} = \\theta_{\\sigma(i)\\sigma(j)}^{\\pm 1}",
          [n, swn, idx]() {
            const Endo& w2 = swn->elements[idx];
            auto sp2 = detail::signed_perm_of(w2);
            std::vector<int> tau_inv(static_cast<std::size_t>(n) + 1, 0);
            for (int k = 1; k <= n; ++k)
              tau_inv[static_cast<std::size_t>(sp2->tau[static_cast<std::size_t>(k)])] = k;
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int k0 = tau_inv[static_cast<std::size_t>(i)];
                int l0 = tau_inv[static_cast<std::size_t>(j)];
                int sk = sp2->sign[static_cast<std::size_t>(k0)];
                int sl = sp2->sign[static_cast<std::size_t>(l0)];
                Endo theta = named(sk > 0 ? gen::lambda(k0, l0) : gen::rho(k0, l0), n);
                Endo expected = sk == sl ? theta : inverse(theta);
                CheckOutcome out =
                    detail::expect_equal(conjugate(named(gen::lambda(i, j), n), w2), expected);
                if (!out.pass) {
                  out.witness = "pair (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                "): " + out.witness;
                  return out;
                }
              }
            return CheckOutcome{};
          });
    }
  }

  // (o) SN maps to the identity mod 2
  for (int n = 3; n <= params.max_n; ++n) {
    add("sn_mod2.n" + std::to_string(n), "prop p:quots proof",
        "The image of \\SN is trivial under this map", [n]() {
          FiniteAutGroup sn = build_sn_group(n);
          ModPMatrix one = mod_p(IntMatrix::identity(n), 2);
          for (const Endo& x : sn.elements) {
            ModPMatrix img = rep_mod_p(x, 2);
            if (!(img == one))
              return CheckOutcome{false, "element " + to_string(x) +
                                             " maps to " + to_string(img)};
          }
          return CheckOutcome{};
        });
  }

  // (p) the sign-quotient subgroup of rank four
  add("psl4.rank16", "sec p:2sphere",
      "contains a subgroup isomorphic to (\\mathbb Z_2)^4 generated by e_1e_2, e_2e_3, "
      "\\sigma=(12)(34), and \\tau=(13)(24)",
      []() {
        const int n = 4;
        std::vector<IntMatrix> gens = {
            abelianize(compose(named(gen::e(1), n), named(gen::e(2), n))),
            abelianize(compose(named(gen::e(2), n), named(gen::e(3), n))),
            abelianize(named(gen::perm({{1, 2}, {3, 4}}), n)),
            abelianize(named(gen::perm({{1, 3}, {2, 4}}), n))};
        SignQuotientGroup q = enumerate_mod_sign(gens);
        if (q.order() != 16)
          return CheckOutcome{false,
                              "sign-quotient subgroup has order " + std::to_string(q.order())};
        std::optional<int> r = elementary_abelian_rank_mod_sign(q, 2);
        if (!r || *r != 4)
          return CheckOutcome{false, r ? "elementary abelian of rank " + std::to_string(*r)
                                       : std::string("not elementary abelian")};
        return CheckOutcome{};
      });

  // (q) the two integer-matrix relations, sub-basis {a_i, b_i, a_j, b_j}
  add("sl4z.comm", "prop p:3quots proof",
      "[\\overline\\lambda_{a_ib_i}^2,\\overline\\lambda_{b_ib_j}]= \\overline\\lambda_{a_ib_j}^2",
      []() {
        const int n = 4;
        Endo l_aibi = named(gen::lambda(pa(1), pb(1)), n);
        Endo l_bibj = named(gen::lambda(pb(1), pb(2)), n);
        Endo l_aibj = named(gen::lambda(pa(1), pb(2)), n);
        return detail::expect_equal(abelianize(commutator(endo_pow(l_aibi, 2), l_bibj)),
                                    abelianize(endo_pow(l_aibj, 2)));
      });
  add("sl4z.central", "prop p:3quots proof",
      "[\\overline\\lambda_{a_jb_j}^2,\\overline\\lambda_{b_ib_j}]=1", []() {
        const int n = 4;
        Endo l_ajbj = named(gen::lambda(pa(2), pb(2)), n);
        Endo l_bibj = named(gen::lambda(pb(1), pb(2)), n);
        return detail::expect_equal(abelianize(commutator(endo_pow(l_ajbj, 2), l_bibj)),
                                    IntMatrix::identity(n));
      });

  return checks;
}

struct RunOptions {
  std::string filter = "*";
  int jobs = 1;
};

/// Run (or skip, per the filter) every check; records come back sorted by id.
inline CheckReport run_checks(const std::vector<RelationCheck>& checks,
                              const RunOptions& options = {}) {
  if (options.jobs < 1) throw error("jobs must be at least 1");
  bool any = false;
  for (const RelationCheck& c : checks)
    if (glob_match(options.filter, c.id)) any = true;
  if (!any) throw error("no check matches '" + options.filter + "'");

  std::vector<CheckRecord> records(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= checks.size()) return;
      const RelationCheck& c = checks[k];
      CheckRecord& rec = records[k];
      rec.id = c.id;
      rec.ref = c.ref;
      rec.quote = c.quote;
      if (!glob_match(options.filter, c.id)) {
        rec.status = "skip";
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      CheckOutcome out = c.run();
      auto t1 = std::chrono::steady_clock::now();
      rec.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
      rec.status = out.pass ? "pass" : "fail";
      rec.witness = out.witness;
    }
  };
  if (options.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(options.jobs));
    for (int t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::sort(records.begin(), records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  CheckReport report;
  report.suite = "relations";
  for (const CheckRecord& r : records) {
    if (r.status == "pass") ++report.passed;
    else if (r.status == "fail") ++report.failed;
    else ++report.skipped;
  }
  report.records = std::move(records);
  return report;
}

inline CheckReport run_relation_suite(const SuiteParams& params = {},
                                      const RunOptions& options = {}) {
  return run_checks(build_relation_checks(params), options);
}

}  // namespace autfn

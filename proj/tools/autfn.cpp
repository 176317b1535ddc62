// Command-line front end.  Subcommands wrap the library checks and emit
// either a human-readable table or the JSON report documented in schemas/.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "autfn/autgroup.hpp"
#include "autfn/catalog.hpp"
#include "autfn/endo.hpp"
#include "autfn/graph.hpp"
#include "autfn/homology.hpp"
#include "autfn/io.hpp"
#include "autfn/linear.hpp"
#include "autfn/matgroup.hpp"
#include "autfn/relations.hpp"
#include "autfn/report.hpp"
#include "autfn/simplicial.hpp"
#include "autfn/smith.hpp"

namespace {

using nlohmann::json;

std::size_t cap_or_env(std::size_t flag_value, std::size_t fallback) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("AUTFN_CAP")) {
    try {
      std::size_t v = std::stoull(env);
      if (v == 0) throw autfn::error("AUTFN_CAP must be positive");
      return v;
    } catch (const autfn::error&) {
      throw;
    } catch (const std::exception&) {
      throw autfn::error(std::string("AUTFN_CAP is not a number: '") + env + "'");
    }
  }
  return fallback;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int emit_report(const autfn::ReportDocument& doc, const std::string& format) {
  if (format == "json")
    std::cout << autfn::report_to_json(doc).dump(2) << "\n";
  else
    std::cout << autfn::report_to_text(doc);
  return doc.exit_code();
}

void emit_plain(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": ";
    if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else if (value.is_array()) {
      bool first = true;
      for (const auto& item : value) {
        if (!first) std::cout << ' ';
        first = false;
        std::cout << (item.is_string() ? item.get<std::string>() : item.dump());
      }
    } else {
      std::cout << value.dump();
    }
    std::cout << "\n";
  }
}

// Report-row anchors for the checks the CLI itself assembles.  Quotes are
// reproduced verbatim (whitespace collapsed) from the cited statements.
const char* kQuoteFixedSphere =
    "If $X$ is a generalized $m$-sphere over $\\mathbb Z_p$, the fixed point set of "
    "any homeomorphism of order $p$ is a (possibly empty) generalized $r$-sphere, "
    "with $r\\leq m-1$. If $p$ is odd, $r\\leq m-2$.";
const char* kQuoteFixedAcyclic =
    "If $X$ is $\\mathbb Z_p$-acyclic, the fixed point set of any homeomorphism of "
    "order $p$ is a (non-empty) $\\mathbb Z_p$-acyclic $r$-{\\rm{hm}}$_{\\mathbb Z_p}$, "
    "for some $r\\leq m-1$. If $p$ is odd, $r\\leq m-2$.";
const char* kQuoteBorel =
    "provides a formula relating the dimensions of the fixed point sets of elements "
    "of $A$: writing $n={\\rm{dim}}_p(X), r={\\rm{dim}}_p({\\rm{Fix}}(A))$, and "
    "$r_C={\\rm{dim}}_p({\\rm{Fix}}(C))$ for each cyclic subgroup $C< A$, we have "
    "$n-r=\\sum (r_C-r)$";
const char* kQuotePairs =
    "let $a$ and $b$ be commuting homeomorphisms of $X$, each of order $2$, with "
    "fixed point sets $F_a$ and $F_b$. If $F_a=F_b$ then $a=b$.";
const char* kQuoteFree =
    "$\\mathbb Z_p\\times\\mathbb Z_p$ cannot act freely on a generalized sphere "
    "over $\\mathbb Z_p$";
const char* kQuoteSimple =
    "Since ${\\rm{SL}}(n,\\mathbb Z_2)$ is simple, the image of $\\phi$ is either "
    "trivial or isomorphic to $\\rm{SL}(n,\\mathbb Z_2)$.";
const char* kQuoteClosure =
    "the quotient of {\\rm{SAut}}$(F_n)$ by the normal closure of any "
    "$\\varepsilon_{ij}$ is ${\\rm{SL}}(n,\\mathbb Z_2)$, which is a simple group";
const char* kQuotePsi =
    "$R_i$ is the image under $\\psi$ of the symmetry of order 3 that cyclically "
    "permutes the edges joining $v_i$ to $v_0$";
const char* kQuoteTgraph = "Graph realizing the subgroup $T$";

autfn::CheckRecord verdict_row(std::string id, std::string ref, std::string quote,
                               const autfn::SmithVerdict& v, double millis) {
  autfn::CheckRecord r;
  r.id = std::move(id);
  r.ref = std::move(ref);
  r.quote = std::move(quote);
  r.status = v.pass ? "pass" : "fail";
  r.witness = v.observed +
              (v.subdivisions > 0
                   ? " (after " + std::to_string(v.subdivisions) + " subdivision(s))"
                   : "");
  r.millis = millis;
  return r;
}

// ---- subcommand bodies ----------------------------------------------------

int run_relations(int max_n, int max_m, const std::string& filter, int jobs,
                  const std::string& format) {
  autfn::SuiteParams params{max_n, max_m};
  autfn::RunOptions options{filter, jobs};
  autfn::CheckReport suite = autfn::run_relation_suite(params, options);
  // jobs and format affect execution only, never content: leave them out of
  // the echo so reports stay byte-comparable across thread counts.
  std::string echo = "relations --n " + std::to_string(max_n) + " --m " +
                     std::to_string(max_m) + " --check " + filter;
  return emit_report(autfn::make_report(echo, suite), format);
}

int run_subgroup(const std::vector<std::string>& words, int rank, std::size_t cap,
                 const std::string& format) {
  int n = rank;
  if (n == 0)
    for (const std::string& w : words)
      n = std::max(n, autfn::minimal_rank_of_generator_word(w));
  std::vector<autfn::Endo> gens;
  for (const std::string& w : words) gens.push_back(autfn::parse_generator_word(w, n));
  autfn::FiniteAutGroup G = autfn::generate_aut_group(gens, cap);

  json structure = json::array();
  for (int p : {2, 3, 5, 7})
    if (auto m = autfn::elementary_abelian_rank(G, p))
      structure.push_back({{"p", p}, {"rank", *m}});
  json elements = json::array();
  for (const autfn::Endo& f : G.elements) elements.push_back(autfn::to_string(f));
  emit_plain(json{{"rank", n},
                  {"order", G.order()},
                  {"elementary_abelian", structure},
                  {"elements", elements}},
             format);
  return 0;
}

int run_matrix_group(const std::string& named, int n, int p,
                     const std::vector<std::string>& gen_texts, bool check_simple,
                     const std::string& closure_seed, std::size_t cap,
                     const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  autfn::FiniteMatrixGroup G;
  std::string source;
  if (!named.empty()) {
    if (named != "sl") throw autfn::error("unknown named group '" + named + "'");
    if (n < 2) throw autfn::error("--named sl needs --n at least 2");
    G = autfn::special_linear_group(n, p, cap);
    source = "SL(" + std::to_string(n) + ", " + std::to_string(p) + ")";
  } else {
    if (gen_texts.empty()) throw autfn::error("need --named sl or at least one --gen");
    std::vector<autfn::ModPMatrix> gens;
    for (const std::string& text : gen_texts)
      gens.push_back(autfn::mod_p(autfn::parse_int_matrix(text), p));
    G = autfn::enumerate_matrix_group(gens, cap);
    source = std::to_string(gen_texts.size()) + " generator(s)";
  }

  std::vector<autfn::CheckRecord> rows;
  {
    autfn::CheckRecord r;
    r.id = "matgroup.enumerate";
    r.ref = "invented (plumbing)";
    r.status = "pass";
    r.witness = source + ", order " + std::to_string(G.order());
    r.millis = ms_since(t0);
    rows.push_back(std::move(r));
  }
  if (check_simple) {
    auto t1 = std::chrono::steady_clock::now();
    bool simple = autfn::is_simple(G);
    autfn::CheckRecord r;
    r.id = "matgroup.simple";
    r.ref = "prop p:quots";
    r.quote = kQuoteSimple;
    r.status = simple ? "pass" : "fail";
    r.witness = simple ? "no proper nontrivial normal subgroup"
                       : "a proper nontrivial normal subgroup exists";
    r.millis = ms_since(t1);
    rows.push_back(std::move(r));
  }
  if (!closure_seed.empty()) {
    auto t1 = std::chrono::steady_clock::now();
    autfn::ModPMatrix seed = autfn::mod_p(autfn::parse_int_matrix(closure_seed), p);
    autfn::FiniteMatrixGroup H = autfn::normal_closure({seed}, G, cap);
    bool whole = H.order() == G.order();
    autfn::CheckRecord r;
    r.id = "matgroup.normal_closure";
    r.ref = "sec s:smooth";
    r.quote = kQuoteClosure;
    r.status = whole ? "pass" : "fail";
    r.witness = "closure order " + std::to_string(H.order()) + " of group order " +
                std::to_string(G.order());
    r.millis = ms_since(t1);
    rows.push_back(std::move(r));
  }

  std::string echo = "matrix-group" + (named.empty() ? "" : " --named " + named) +
                     " --n " + std::to_string(n) + " --p " + std::to_string(p);
  return emit_report(autfn::make_report(echo, std::move(rows)), format);
}

int run_homology(const std::string& input, int p, const std::string& format) {
  autfn::SimplicialComplex k =
      autfn::complex_from_json(autfn::load_json_file(input));
  autfn::BettiVector b = autfn::betti(k, p);
  emit_plain(json{{"p", p}, {"betti", b.b}}, format);
  return 0;
}

int run_smith(const std::string& input, const std::string& action_file, int p,
              const std::string& check, const std::string& only_name,
              int max_subdivisions, std::size_t cap, const std::string& format) {
  autfn::ComplexPtr k = autfn::make_complex(
      autfn::complex_from_json(autfn::load_json_file(input)));
  auto actions = autfn::actions_from_json(autfn::load_json_file(action_file), k);

  std::vector<autfn::CheckRecord> rows;
  if (check == "fixed") {
    bool matched = false;
    for (const auto& [name, g] : actions) {
      if (!only_name.empty() && name != only_name) continue;
      matched = true;
      auto t0 = std::chrono::steady_clock::now();
      autfn::SmithVerdict v = autfn::smith_fixed_check(g, p, max_subdivisions);
      bool sphere = v.claim.find("sphere") != std::string::npos;
      rows.push_back(verdict_row("smith.fixed." + name, "corollary smith",
                                 sphere ? kQuoteFixedSphere : kQuoteFixedAcyclic, v,
                                 ms_since(t0)));
    }
    if (!matched) throw autfn::error("no action named '" + only_name + "'");
  } else {
    std::vector<autfn::SimplicialMap> gens;
    for (const auto& [name, g] : actions) gens.push_back(g);
    autfn::ActionGroup G = autfn::generate_action_group(gens, cap);
    auto t0 = std::chrono::steady_clock::now();
    if (check == "borel") {
      autfn::SmithVerdict v = autfn::borel_check(G, p, max_subdivisions);
      rows.push_back(
          verdict_row("smith.borel", "thm Smith proof", kQuoteBorel, v, ms_since(t0)));
    } else if (check == "pairs") {
      autfn::SmithVerdict v = autfn::involution_pair_scan(G, max_subdivisions);
      rows.push_back(
          verdict_row("smith.pairs", "theorem fthree", kQuotePairs, v, ms_since(t0)));
    } else if (check == "free") {
      autfn::SmithVerdict v = autfn::no_free_rank2_check(G, p, max_subdivisions);
      rows.push_back(verdict_row("smith.free", "sec s:sphere (Smith theory)",
                                 kQuoteFree, v, ms_since(t0)));
    } else {
      throw autfn::error("--check must be fixed, borel, pairs, or free");
    }
  }

  std::string echo = "smith --check " + check + " --p " + std::to_string(p) +
                     (only_name.empty() ? "" : " --name " + only_name);
  return emit_report(autfn::make_report(echo, std::move(rows)), format);
}

int run_oracle(const std::string& group, int n, const std::string& space, int dim,
               int p, const std::string& format) {
  autfn::GroupFamily family = autfn::parse_group_family(group);
  autfn::SpaceKind kind = space == "sphere"    ? autfn::sphere_space(dim, p)
                          : space == "acyclic" ? autfn::acyclic_space(dim, p)
                                               : throw autfn::error(
                                                     "--space must be sphere or acyclic");
  autfn::OracleVerdict v = autfn::rigidity_oracle(family, n, kind);
  emit_plain(json{{"verdict", v.verdict}, {"theorem", v.theorem}, {"citation", v.citation}},
             format);
  return 0;
}

int run_graph_aut(const std::string& graph_file, int tm, const std::string& symmetry,
                  std::size_t cap, const std::string& format) {
  std::unique_ptr<autfn::LabelledGraph> g;
  autfn::GraphSymmetry s;
  if (tm > 0) {
    g = std::make_unique<autfn::LabelledGraph>(autfn::t_graph(tm));
    if (symmetry.size() < 2 || symmetry[0] != 'r')
      throw autfn::error("symmetries of the rose graph are named r1..r" +
                         std::to_string(tm));
    s = autfn::t_graph_rotation(tm, std::stoi(symmetry.substr(1)));
  } else {
    json file = autfn::load_json_file(graph_file);
    g = std::make_unique<autfn::LabelledGraph>(autfn::graph_from_json(file));
    s = autfn::named_symmetry_from_json(file, symmetry);
  }

  auto t0 = std::chrono::steady_clock::now();
  autfn::Endo psi = autfn::graph_induced(*g, s);
  std::vector<autfn::CheckRecord> rows;
  {
    autfn::CheckRecord r;
    r.id = "graphaut.induced";
    r.ref = "sec 3.3 (Tgraph)";
    r.quote = kQuotePsi;
    r.status = "pass";
    r.witness = autfn::to_string(psi);
    r.millis = ms_since(t0);
    rows.push_back(std::move(r));
  }
  {
    auto t1 = std::chrono::steady_clock::now();
    autfn::CheckRecord r;
    r.id = "graphaut.t_membership";
    r.ref = "figure Tgraph";
    r.quote = kQuoteTgraph;
    if (g->rank() % 2 != 0) {
      r.status = "skip";
      r.witness = "rank " + std::to_string(g->rank()) + " is odd; T needs rank 2m";
    } else {
      autfn::FiniteAutGroup t = autfn::build_t_group(g->rank() / 2, cap);
      bool member = t.contains(psi);
      r.status = member ? "pass" : "fail";
      r.witness = member ? "lies in T(" + std::to_string(g->rank() / 2) + ")"
                         : "not in T(" + std::to_string(g->rank() / 2) + ")";
    }
    r.millis = ms_since(t1);
    rows.push_back(std::move(r));
  }

  std::string echo = "graph-aut " +
                     (tm > 0 ? "--tm " + std::to_string(tm) : "--graph " + graph_file) +
                     " --symmetry " + symmetry;
  return emit_report(autfn::make_report(echo, std::move(rows)), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for automorphism groups of free groups"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* relations = app.add_subcommand("relations", "run the relation check suite");
  int rel_n = 5, rel_m = 3, rel_jobs = 1;
  std::string rel_filter = "*";
  relations->add_option("--n", rel_n, "largest plain rank")->check(CLI::Range(2, 8));
  relations->add_option("--m", rel_m, "largest paired rank 2m")->check(CLI::Range(1, 4));
  relations->add_option("--check", rel_filter, "id glob filter");
  relations->add_option("--jobs", rel_jobs, "worker threads")->check(CLI::Range(1, 64));

  auto* subgroup = app.add_subcommand("subgroup", "enumerate a subgroup of Aut(F_n)");
  std::vector<std::string> sub_words;
  int sub_rank = 0;
  std::size_t sub_cap = 0;
  subgroup->add_option("words", sub_words, "generator words, e.g. R1 EPS12 E1E2")
      ->required();
  subgroup->add_option("--n", sub_rank, "rank (default: smallest that fits)");
  subgroup->add_option("--cap", sub_cap, "enumeration cap");

  auto* matrix = app.add_subcommand("matrix-group", "enumerate a subgroup of GL(n, p)");
  std::string mat_named;
  int mat_n = 0, mat_p = 2;
  std::vector<std::string> mat_gens;
  bool mat_simple = false;
  std::string mat_closure;
  std::size_t mat_cap = 0;
  matrix->add_option("--named", mat_named, "named group: sl");
  matrix->add_option("--n", mat_n, "matrix size");
  matrix->add_option("--p", mat_p, "prime modulus")->capture_default_str();
  matrix->add_option("--gen", mat_gens, "generator matrix, rows ';'-separated");
  matrix->add_flag("--simple", mat_simple, "check simplicity");
  matrix->add_option("--normal-closure", mat_closure,
                     "check that this seed normally generates the whole group");
  matrix->add_option("--cap", mat_cap, "enumeration cap");

  auto* homology = app.add_subcommand("homology", "betti numbers of a complex");
  std::string hom_input;
  int hom_p = 2;
  homology->add_option("--input", hom_input, "complex JSON file")->required();
  homology->add_option("--p", hom_p, "prime modulus")->capture_default_str();

  auto* smith = app.add_subcommand("smith", "fixed-point checks on a complex");
  std::string smith_input, smith_action, smith_check, smith_name;
  int smith_p = 2, smith_subdiv = 2;
  std::size_t smith_cap = 0;
  smith->add_option("--input", smith_input, "complex JSON file")->required();
  smith->add_option("--action", smith_action, "action JSON file")->required();
  smith->add_option("--p", smith_p, "prime modulus")->capture_default_str();
  smith->add_option("--check", smith_check, "fixed | borel | pairs | free")->required();
  smith->add_option("--name", smith_name, "restrict --check fixed to one named map");
  smith->add_option("--max-subdivisions", smith_subdiv, "regularization budget")
      ->capture_default_str();
  smith->add_option("--cap", smith_cap, "action group cap");

  auto* oracle = app.add_subcommand("oracle", "rigidity verdict for a parameter set");
  std::string ora_group, ora_space;
  int ora_n = 0, ora_dim = 0, ora_p = 2;
  oracle->add_option("--group", ora_group, "saut | aut | sl | gl")->required();
  oracle->add_option("--n", ora_n, "free group rank")->required();
  oracle->add_option("--space", ora_space, "sphere | acyclic")->required();
  oracle->add_option("--dim", ora_dim, "space dimension")->required();
  oracle->add_option("--p", ora_p, "coefficient prime")->capture_default_str();

  auto* graphaut = app.add_subcommand("graph-aut", "automorphism induced by a symmetry");
  std::string ga_graph, ga_symmetry;
  int ga_tm = 0;
  std::size_t ga_cap = 0;
  graphaut->add_option("--graph", ga_graph, "graph JSON file");
  graphaut->add_option("--tm", ga_tm, "use the rose graph with m petal pairs");
  graphaut->add_option("--symmetry", ga_symmetry, "symmetry name")->required();
  graphaut->add_option("--cap", ga_cap, "T enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*relations) return run_relations(rel_n, rel_m, rel_filter, rel_jobs, format);
    if (*subgroup)
      return run_subgroup(sub_words, sub_rank,
                          cap_or_env(sub_cap, autfn::kDefaultAutCap), format);
    if (*matrix)
      return run_matrix_group(mat_named, mat_n, mat_p, mat_gens, mat_simple,
                              mat_closure, cap_or_env(mat_cap, autfn::kDefaultMatrixCap),
                              format);
    if (*homology) return run_homology(hom_input, hom_p, format);
    if (*smith)
      return run_smith(smith_input, smith_action, smith_p, smith_check, smith_name,
                       smith_subdiv, cap_or_env(smith_cap, autfn::kDefaultActionCap),
                       format);
    if (*oracle) return run_oracle(ora_group, ora_n, ora_space, ora_dim, ora_p, format);
    if (*graphaut)
      return run_graph_aut(ga_graph, ga_tm, ga_symmetry,
                           cap_or_env(ga_cap, autfn::kDefaultAutCap), format);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const autfn::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

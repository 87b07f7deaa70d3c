// Command-line front end: one subcommand per operation, plus the verification
// suite. Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 budget.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/conjugacy.hpp"
#include "garside/curves.hpp"
#include "garside/family.hpp"
#include "garside/io.hpp"
#include "garside/verify.hpp"

using namespace garside;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  int n = 0;
  std::vector<int> ns;
  std::vector<int> ks;
  std::string word, x, y, matrix, dot;
  std::optional<int> b;
  bool json = false, force = false, oracle = false, tau_side = false;
  std::size_t budget_states = 5'000'000, budget_nodes = 1'000'000;
  std::uint64_t seed = 1;
  int samples = 10;
};

Braid read_braid(const Options& o, const std::string& text) {
  if (o.n < 2) throw CLI::ValidationError("--n", "a strand count of at least 2 is required");
  return parse_braid(StrandCount(o.n), text);
}

std::string slurp_or_inline(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyElement read_element(const Options& o) {
  if (o.matrix.empty()) throw CLI::ValidationError("--matrix", "a matrix is required");
  const std::string text = slurp_or_inline(o.matrix);
  const auto first = text.find_first_not_of(" \t\r\n");
  ParsedMatrix m = first != std::string::npos && text[first] == '{'
                       ? matrix_from_json(nlohmann::json::parse(text))
                       : parse_matrix(text);
  if (o.b) m.b = o.b;
  FamilyElement e = make_element(m.rows, m.b);
  return o.tau_side ? e.with_side(Side::kTau) : e;
}

void emit(const Options& o, const nlohmann::json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

SearchBudget budget(const Options& o) { return {o.budget_states, o.budget_nodes}; }

void write_dot(const Options& o, const ConjugacyGraph& g) {
  if (o.dot.empty()) return;
  std::ofstream out(o.dot);
  if (!out) throw std::runtime_error("cannot write " + o.dot);
  out << to_dot(g);
}

int cmd_nf(const Options& o) {
  const Braid x = read_braid(o, o.word);
  emit(o, to_json(x), to_text(x) + "\n");
  return kOk;
}

int cmd_rigid(const Options& o) {
  const Braid x = read_braid(o, o.word);
  const bool r = is_rigid(x);
  emit(o, {{"braid", to_json(x)}, {"rigid", r}}, std::string(r ? "rigid" : "not rigid") + "\n");
  return kOk;
}

int cmd_cycle(const Options& o, bool de) {
  const Braid x = read_braid(o, o.word);
  nlohmann::json j;
  std::string text;
  if (de) {
    const DecyclingResult r = decycling(x);
    j = {{"result", to_json(r.result)}, {"conjugator", to_json(r.conjugator)}};
    text = to_text(r.result) + "\nconjugator " + to_text(r.conjugator) + "\n";
  } else {
    const CyclingResult r = cycling(x);
    j = {{"result", to_json(r.result)}, {"conjugator", r.conjugator.word()}};
    text = to_text(r.result) + "\nconjugator " + word_to_string(r.conjugator.word()) + "\n";
  }
  emit(o, j, text);
  return kOk;
}

int cmd_summit(const Options& o) {
  const Braid x = read_braid(o, o.word);
  const SummitCertificate s = to_super_summit(x, SummitBudget{o.budget_states});
  emit(o,
       {{"representative", to_json(s.representative)},
        {"conjugator", to_json(s.conjugator)},
        {"inf_s", s.inf_s},
        {"sup_s", s.sup_s}},
       to_text(s.representative) + "\ninf_s " + std::to_string(s.inf_s) + " sup_s " +
           std::to_string(s.sup_s) + "\nconjugator " + to_text(s.conjugator) + "\n");
  return kOk;
}

int cmd_conjugate(const Options& o) {
  const Braid x = read_braid(o, o.x);
  const Braid y = read_braid(o, o.y);
  const ConjugacyAnswer a = is_conjugate(x, y, budget(o), Execution::kParallel);
  nlohmann::json j = {{"conjugate", a.conjugate}};
  std::string text = a.conjugate ? "conjugate\n" : "not conjugate\n";
  if (a.witness) {
    j["witness"] = to_json(*a.witness);
    text += "witness " + to_text(*a.witness) + "\n";
  }
  emit(o, j, text);
  return kOk;
}

int cmd_check_reduction(const Options& o) {
  const Braid x = o.matrix.empty() ? read_braid(o, o.word) : alpha(read_element(o));
  const auto found = find_standard_reduction(x, Execution::kParallel);
  nlohmann::json list = nlohmann::json::array();
  std::string text;
  for (const auto& pc : found) {
    nlohmann::json orbit = nlohmann::json::array();
    std::string line = to_string(pc.curve) + " orbit";
    for (const auto& c : pc.orbit) {
      orbit.push_back({c.lo, c.hi});
      line += " " + to_string(c);
    }
    list.push_back({{"curve", {pc.curve.lo, pc.curve.hi}}, {"orbit", orbit}, {"compatible", pc.compatible}});
    text += line + (pc.compatible ? "" : " (incompatible)") + "\n";
  }
  if (found.empty()) text = "no standard reduction system\n";
  emit(o, {{"periodic_curves", list}}, text);
  return kOk;
}

int cmd_family_build(const Options& o) {
  const FamilyElement e = read_element(o);
  const Braid x = alpha(e);
  const bool m0 = is_m0(e);
  nlohmann::json j = {{"element", to_json(e)}, {"braid", to_json(x)}, {"restricted", m0},
                      {"strands", e.strands()}, {"cycling_order", cycling_order(e.rows())}};
  std::string text = matrix_to_text(e) + "n = " + std::to_string(e.strands()) + ", restricted class: " +
                     (m0 ? "yes" : "no") + "\n" + to_text(x) + "\n";
  if (m0) {
    const FamilyElement hat = transform(e, Transform::kHat), check = transform(e, Transform::kCheck);
    j["hat"] = to_json(hat);
    j["check"] = to_json(check);
    j["rho"] = to_json(rho_path(e));
    text += "hat\n" + matrix_to_text(hat) + "check\n" + matrix_to_text(check) + "rho " + to_text(rho_path(e)) + "\n";
  }
  emit(o, j, text);
  return kOk;
}

int cmd_family_rset(const Options& o) {
  const FamilyElement e = read_element(o);
  const FamilyGraph g = family_rigid_graph(e, Execution::kParallel);
  const auto& st = g.stats;
  const std::size_t predicted = predicted_rigid_set_size(e.k(), e.p());
  nlohmann::json j = to_json(g.graph);
  j["stats"] = {{"nodes", st.nodes},
                {"predicted", predicted},
                {"plain_nodes", st.plain_nodes},
                {"tau_nodes", st.tau_nodes},
                {"aliased_elements", st.aliased_elements},
                {"cycling_edges", st.cycling_edges},
                {"switching_edges", st.switching_edges},
                {"initializing_edges", st.initializing_edges},
                {"lattice_sizes", st.lattice_sizes},
                {"strongly_connected", st.strongly_connected}};
  std::ostringstream text;
  text << "nodes " << st.nodes << " (predicted " << predicted << ")\n"
       << "edges: cycling " << st.cycling_edges << ", switching " << st.switching_edges
       << ", initializing " << st.initializing_edges << "\n"
       << "lattices " << st.lattice_sizes.size() << ", strongly connected "
       << (st.strongly_connected ? "yes" : "no") << "\n";
  if (st.aliased_elements) text << "aliased elements " << st.aliased_elements << "\n";
  write_dot(o, g.graph);
  emit(o, j, text.str());
  return kOk;
}

int cmd_rset(const Options& o) {
  const bool from_matrix = !o.matrix.empty();
  if (!from_matrix && !o.oracle) {
    throw CLI::ValidationError("--oracle", "a braid word needs generic enumeration (--oracle)");
  }
  if (from_matrix && !o.oracle) return cmd_family_rset(o);
  const Braid x = from_matrix ? alpha(read_element(o)) : read_braid(o, o.word);
  if (x.strands() > 11 && !o.force) {
    throw CLI::ValidationError("--oracle", "generic enumeration is limited to n <= 11; pass --force");
  }
  const ConjugacyGraph g = enumerate_class(x, budget(o), Execution::kParallel);
  nlohmann::json j = to_json(g);
  j["states"] = g.states;
  write_dot(o, g);
  emit(o, j,
       "nodes " + std::to_string(g.size()) + ", edges " + std::to_string(g.edges().size()) + ", states " +
           std::to_string(g.states) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  if (!o.ns.empty()) v.n_values = o.ns;
  if (!o.ks.empty()) v.k_values = o.ks;
  v.samples = o.samples;
  v.seed = o.seed;
  v.budget = budget(o);
  if (o.force) v.oracle_max_n = 64;
  const VerificationReport r = verify_suite(v);
  std::ostringstream text;
  for (const auto& c : r.checks) {
    text << to_string(c.status) << "  " << c.name << " " << c.parameters.dump() << "  " << c.details << "\n";
  }
  text << r.count(CheckStatus::kPass) << " passed, " << r.count(CheckStatus::kFail) << " failed, "
       << r.count(CheckStatus::kSkipped) << " skipped\n";
  emit(o, r.to_json(), text.str());
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside normal forms, rigid conjugacy sets and the binary-matrix braid family"};
  app.require_subcommand(1);
  Options o;

  auto braid_opts = [&](CLI::App* c) {
    c->add_option("--n", o.n, "strand count")->required();
    c->add_option("--word,-w", o.word, "signed letters, e.g. \"1 -2 3\"; D^k for Delta powers")->required();
    c->add_flag("--json", o.json, "JSON output");
  };
  auto matrix_opts = [&](CLI::App* c, bool required) {
    auto* m = c->add_option("--matrix", o.matrix, "file or inline rows (0/1, ',' between rows, a '|' at column b)");
    if (required) m->required();
    c->add_option("--b", o.b, "vertical-strand slot (odd strand counts)");
    c->add_flag("--tau", o.tau_side, "use the tau-side braid of the matrix");
    c->add_flag("--json", o.json, "JSON output");
  };
  auto budget_opts = [&](CLI::App* c) {
    c->add_option("--budget-states", o.budget_states, "prefix-lattice state cap per search")->capture_default_str();
    c->add_option("--budget-nodes", o.budget_nodes, "node cap for enumeration")->capture_default_str();
  };

  auto* nf = app.add_subcommand("nf", "left canonical form of a word");
  braid_opts(nf);
  auto* rigid = app.add_subcommand("rigid", "rigidity test");
  braid_opts(rigid);
  auto* cyc = app.add_subcommand("cycle", "cycling with its conjugator");
  braid_opts(cyc);
  auto* decyc = app.add_subcommand("decycle", "decycling with its conjugator");
  braid_opts(decyc);
  auto* summit = app.add_subcommand("summit", "conjugate into the super summit set");
  braid_opts(summit);
  summit->add_option("--budget-states", o.budget_states, "operation cap")->capture_default_str();

  auto* conj = app.add_subcommand("conjugate", "decide conjugacy of two braids with a witness");
  conj->add_option("--n", o.n, "strand count")->required();
  conj->add_option("--x", o.x, "first braid word")->required();
  conj->add_option("--y", o.y, "second braid word")->required();
  conj->add_flag("--json", o.json, "JSON output");
  budget_opts(conj);

  auto* red = app.add_subcommand("check-reduction", "periodic standard curves of a braid or family matrix");
  red->add_option("--n", o.n, "strand count");
  red->add_option("--word,-w", o.word, "braid word");
  matrix_opts(red, false);

  auto* fam = app.add_subcommand("family", "binary-matrix family");
  fam->require_subcommand(1);
  auto* build = fam->add_subcommand("build", "validate a matrix and show its braid");
  matrix_opts(build, true);
  auto* frset = fam->add_subcommand("rset", "closed-form rigid conjugacy graph");
  matrix_opts(frset, true);
  frset->add_option("--dot", o.dot, "write the graph in DOT format");

  auto* rset = app.add_subcommand("rset", "rigid conjugacy set");
  rset->add_flag("--oracle", o.oracle, "generic exhaustive enumeration");
  rset->add_flag("--force", o.force, "allow generic enumeration above 11 strands");
  rset->add_option("--n", o.n, "strand count (with --word)");
  rset->add_option("--word,-w", o.word, "braid word");
  rset->add_option("--dot", o.dot, "write the graph in DOT format");
  matrix_opts(rset, false);
  budget_opts(rset);

  auto* ver = app.add_subcommand("verify", "structural checks of the family");
  ver->add_option("--n", o.ns, "strand counts (default 10 14)");
  ver->add_option("--k", o.ks, "row counts (default 2)");
  ver->add_option("--samples", o.samples, "matrices sampled per check")->capture_default_str();
  ver->add_option("--seed", o.seed, "random seed")->capture_default_str();
  ver->add_flag("--force", o.force, "run generic-enumeration checks at every n");
  ver->add_flag("--json", o.json, "JSON report");
  budget_opts(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*nf) return cmd_nf(o);
    if (*rigid) return cmd_rigid(o);
    if (*cyc) return cmd_cycle(o, false);
    if (*decyc) return cmd_cycle(o, true);
    if (*summit) return cmd_summit(o);
    if (*conj) return cmd_conjugate(o);
    if (*red) return cmd_check_reduction(o);
    if (*build) return cmd_family_build(o);
    if (*frset) return cmd_family_rset(o);
    if (*rset) return cmd_rset(o);
    if (*ver) return cmd_verify(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const NotSupported& e) {
    std::cerr << "not supported: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

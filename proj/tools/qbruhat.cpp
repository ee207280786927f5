#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbruhat/bruhat_graph.hpp"
#include "qbruhat/error.hpp"
#include "qbruhat/quantum.hpp"
#include "qbruhat/root_system.hpp"
#include "qbruhat/schubert.hpp"
#include "qbruhat/serialize.hpp"
#include "qbruhat/verify.hpp"

using namespace qbruhat;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kOverflow = 3, kBound = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> n;
  std::optional<std::string> type;
  bool json = false;
  bool dot = false;
  std::optional<int> max_len;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 20240501;
  std::optional<int> max_n;
  std::size_t node_budget = kDefaultNodeBudget;
  std::vector<std::string> args;
};

constexpr int kDefaultMaxN = 6;

// Permutations from positional arguments, all of size n (inferred when
// --n is absent).
std::vector<Permutation> permutations(const Options& o, std::size_t count, int& n) {
  if (o.args.size() != count)
    throw UsageError("expected " + std::to_string(count) + " permutation argument(s)");
  std::vector<Permutation> out;
  for (const auto& a : o.args) out.push_back(Permutation::parse(a));
  n = o.n.value_or(out.front().size());
  for (const auto& w : out)
    if (w.size() != n) throw UsageError("permutation " + w.to_string() + " is not in S_" + std::to_string(n));
  const int max_n = o.max_n.value_or(kDefaultMaxN);
  if (n > max_n) throw BoundExceeded("n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
  return out;
}

int cmd_product(const Options& o) {
  int n = 0;
  const auto w = permutations(o, 2, n);
  const auto table = gw_invariants(w[0], w[1], n);
  if (o.json)
    std::cout << gw_table_to_json(table).dump() << "\n";
  else
    std::cout << format_product(table.product()) << "\n";
  return kOk;
}

// The graph selected by --type or --n, and a vertex lookup accepting
// permutations (type A) or Weyl words.
struct GraphChoice {
  QBGraph graph;
  std::optional<WeylGroup> group;
  int vertex(const std::string& text) const {
    if (graph.on_permutations()) return graph.vertex(Permutation::parse(text));
    return graph.vertex(group->name(group->parse(text)));
  }
};

GraphChoice choose_graph(const Options& o) {
  if (o.type) {
    const auto rs = RootSystem::parse(*o.type);
    if (rs.type() == 'A') return {build_graph(rs.rank() + 1), std::nullopt};
    auto group = weyl_group(rs);
    auto g = build_graph(group);
    return {std::move(g), std::move(group)};
  }
  if (o.n) return {build_graph(*o.n), std::nullopt};
  throw UsageError("one of --type or --n is required");
}

int cmd_dmin(const Options& o) {
  if (o.args.size() != 2) throw UsageError("expected two elements");
  Options sized = o;
  if (!o.type && !o.n) sized.n = Permutation::parse(o.args[0]).size();
  const auto choice = choose_graph(sized);
  const auto md = min_degree(choice.graph, choice.vertex(o.args[0]), choice.vertex(o.args[1]));
  std::cout << "d_min=" << md.degree.to_string() << ", len=" << md.length << "\n";
  return kOk;
}

std::string support_text(const std::set<QDegree>& s) {
  std::string out = "{";
  for (const auto& d : s) out += (out.size() > 1 ? ", " : "") + d.to_string();
  return out + "}";
}

int cmd_qsupport(const Options& o) {
  int n = 0;
  const auto w = permutations(o, 2, n);
  std::set<QDegree> product;
  const auto table = gw_invariants(w[0], w[1], n);
  for (const auto& [key, c] : table.product().terms()) product.insert(key.degree);
  const auto g = build_graph(n);
  const auto admissible = admissible_weight_support(g, w[0], Permutation::longest(n) * w[1], o.node_budget);
  const bool match = product == admissible;
  std::cout << "product: " << support_text(product) << "; admissible: " << support_text(admissible) << "; "
            << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kOk : kVerifyFailed;
}

int cmd_graph(const Options& o) {
  if (!o.args.empty() && !(o.args.size() == 1 && o.args[0] == "export"))
    throw UsageError("unexpected argument '" + o.args[0] + "'");
  const auto choice = choose_graph(o);
  if (o.json)
    std::cout << graph_to_json(choice.graph).dump(2) << "\n";
  else
    std::cout << graph_to_dot(choice.graph);
  return kOk;
}

int cmd_pathpoly(const Options& o) {
  int n = 0;
  const auto w = permutations(o, 2, n);
  const auto p = path_schubert_polynomial(w[0], w[1], n);
  std::cout << (o.json ? poly_to_json(p, n).dump() : p.to_string()) << "\n";
  return kOk;
}

int cmd_schubpoly(const Options& o) {
  int n = 0;
  const auto w = permutations(o, 1, n);
  const auto p = schubert_polynomial(w[0], n);
  std::cout << (o.json ? poly_to_json(p, n).dump() : p.to_string()) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.args.size() > 1) throw UsageError("expected at most one suite name");
  const std::string which = o.args.empty() ? "all" : o.args[0];
  std::vector<std::string> suites;
  if (which == "all") {
    suites = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == which;
    if (!known) throw UsageError("unknown suite '" + which + "'");
    suites = {which};
  }
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.type = o.type;
  vo.sample = o.sample;
  vo.seed = o.seed;
  if (o.max_len) vo.slack = *o.max_len;
  vo.node_budget = o.node_budget;
  bool ok = true;
  for (const auto& s : suites) {
    const auto r = run_suite(s, vo);
    if (suites.size() > 1) std::cout << s << ": ";
    std::cout << (r.passed ? "PASS" : "FAIL");
    if (!r.summary.empty()) std::cout << " (" << r.summary << ")";
    std::cout << "\n";
    if (!r.passed) std::cout << "  counterexample: " << r.counterexample << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Size of the symmetric group")->check(CLI::Range(1, kMaxN));
  sub->add_option("--type", o.type, "Root system: A1..A7, B2, B3, C2, C3, G2");
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_flag("--dot", o.dot, "DOT output (graph)");
  sub->add_option("--max-len", o.max_len, "Walk length slack over l(u,v) for lemma-paths")->check(CLI::NonNegativeNumber);
  sub->add_option("--sample", o.sample, "Number of sampled pairs or triples");
  sub->add_option("--seed", o.seed, "Seed for sampling");
  sub->add_option("--max-n", o.max_n, "Largest n to enumerate")->check(CLI::Range(1, kMaxN));
  sub->add_option("--node-budget", o.node_budget, "Search node cap for path enumeration");
  sub->add_option("args", o.args, "Permutations, Weyl words or a suite name");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cohomology of flag manifolds: products, graphs and checks"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const std::vector<Command> commands = {
      {"product", "Quantum product sigma_u * sigma_v", cmd_product},
      {"dmin", "Minimal degree and length of shortest paths u -> v", cmd_dmin},
      {"qsupport", "q-support of sigma_u * sigma_v vs admissible path weights", cmd_qsupport},
      {"graph", "Quantum Bruhat graph as DOT or JSON", cmd_graph},
      {"pathpoly", "Path Schubert polynomial S_{u,v}(y, q)", cmd_pathpoly},
      {"schubpoly", "Schubert polynomial S_w(x)", cmd_schubpoly},
      {"verify", "Run verification suites", cmd_verify},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    subs.emplace_back(sub, c.run);
  }
  subs.front().first->alias("gw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (const auto& [sub, run] : subs)
      if (sub->parsed()) return run(o);
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

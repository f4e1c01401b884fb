#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sigfrust/error.hpp"
#include "sigfrust/io.hpp"
#include "sigfrust/petersen.hpp"
#include "sigfrust/solvers.hpp"
#include "sigfrust/verify.hpp"

namespace sigfrust::cli {

namespace {

struct Options {
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::string signature = "none";
  std::string in;
  std::string out;
  std::string format = "human";
  std::optional<std::uint64_t> budget_states;
  std::optional<std::uint64_t> budget_classes;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::optional<unsigned> workers;
  std::string symmetry = "off";
  std::string config;
  std::string method = "auto";
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InvalidInput("cannot write '" + path + "'");
}

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  if (o.budget_states) s.budget_states = *o.budget_states;
  if (o.budget_classes) s.budget_classes = *o.budget_classes;
  s.workers = o.workers ? *o.workers : workers_from_environment(1);
  s.symmetry = o.symmetry == "on";
  if (o.method == "gray") s.method = SwitchingMethod::kGrayCode;
  if (o.method == "bnb") s.method = SwitchingMethod::kBranchAndBound;
  return s;
}

std::size_t need(const std::optional<std::size_t>& x, const char* flag) {
  if (!x) throw InvalidParameters(std::string("missing ") + flag);
  return *x;
}

PetersenLayout layout_from(const Options& o) { return generate_petersen(need(o.n, "--n"), need(o.k, "--k")); }

SignedGraph input_graph(const Options& o) {
  if (o.in.empty()) throw InvalidParameters("missing --in");
  return parse_signed_graph(read_file(o.in));
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto layout = layout_from(o);
  const std::size_t n = layout.n();
  const std::size_t k = layout.k();
  Signature sig(layout.graph().edge_count());
  if (o.signature == "prism") {
    if (k != 1) throw InvalidParameters("--signature prism needs k = 1");
    sig = extremal_signature_prism(n);
  } else if (o.signature == "k2") {
    if (k != 2 || n % 2 == 0) throw InvalidParameters("--signature k2 needs k = 2 and odd n");
    sig = extremal_signature_k2((n - 1) / 2);
  } else if (o.signature == "k3") {
    if (k != 3 || (n + 1) % 4 != 0) throw InvalidParameters("--signature k3 needs k = 3 and n = 4m-1");
    sig = extremal_signature_k3((n + 1) / 4);
  }
  const std::string text = serialize_signed_graph(SignedGraph(layout.graph_ptr(), sig));
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    write_file(o.out + ".roles", serialize_roles(layout.roles()));
  }
  return kOk;
}

int cmd_balance(const Options& o, std::ostream& out) {
  out << (is_balanced(input_graph(o)) ? "balanced" : "unbalanced") << "\n";
  return kOk;
}

int cmd_frustration(const Options& o, std::ostream& out) {
  const SignedGraph sg = input_graph(o);
  const SolverOptions s = solver_options(o);
  SolveResult r = o.method == "edge-deletion" ? frustration_index_deletion_oracle(sg, s.budget_states)
                                              : frustration_index(sg, s);
  out << format_result(r, parse_output_format(o.format));
  return kOk;
}

int cmd_frustnum(const Options& o, std::ostream& out) {
  const SolverOptions s = solver_options(o);
  out << format_result(frustration_number(input_graph(o), s.budget_states), parse_output_format(o.format));
  return kOk;
}

// The graph for maxfrust/explore: a file (signs ignored) or P(n,k).
template <class Fn>
int with_target_graph(const Options& o, Fn&& fn) {
  SolverOptions s = solver_options(o);
  if (!o.in.empty()) return fn(input_graph(o).graph(), s);
  const auto layout = layout_from(o);
  if (s.symmetry) s.automorphisms = rotation_automorphisms(layout);
  return fn(layout.graph(), s);
}

int cmd_maxfrust(const Options& o, std::ostream& out) {
  return with_target_graph(o, [&](const Graph& g, const SolverOptions& s) {
    out << format_result(max_frustration(g, s), parse_output_format(o.format));
    return kOk;
  });
}

int cmd_explore(const Options& o, std::ostream& out) {
  return with_target_graph(o, [&](const Graph& g, const SolverOptions& s) {
    out << format_result(max_frustration_lower_bound(g, o.trials, o.seed, s), parse_output_format(o.format));
    return kOk;
  });
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config = o.config.empty() ? default_suite_config() : parse_suite_config(read_file(o.config));
  if (o.budget_states) config.options.solver.budget_states = *o.budget_states;
  if (o.budget_classes) config.options.solver.budget_classes = *o.budget_classes;
  if (o.workers) config.options.workers = *o.workers;
  else if (o.config.empty()) config.options.workers = workers_from_environment(config.options.workers);
  if (o.symmetry == "on") config.options.solver.symmetry = true;
  const auto reports = run_full_suite(config);
  out << format_reports(reports, parse_output_format(o.format));
  return suite_passed(reports) ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact frustration computations on signed graphs"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"human", "json", "csv", "md"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--budget-states", o.budget_states, "Search-state budget per solve");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  };
  auto graph_in = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Signed-graph file"); };
  auto petersen = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Generalized Petersen n");
    sub->add_option("--k", o.k, "Generalized Petersen k");
  };
  auto classes = [&](CLI::App* sub) {
    sub->add_option("--budget-classes", o.budget_classes, "Switching-class budget");
    sub->add_option("--symmetry", o.symmetry, "Rotation symmetry pruning")->check(CLI::IsMember({"on", "off"}));
  };

  auto* gen = app.add_subcommand("gen", "Write P(n,k), optionally with an extremal signature");
  petersen(gen);
  gen->add_option("--signature", o.signature, "Signature to attach")->check(CLI::IsMember({"prism", "k2", "k3", "none"}));
  gen->add_option("--out", o.out, "Output file (also writes <out>.roles)");
  gen->add_option("--format", o.format, "Ignored; files use the signed-graph format");

  auto* balance = app.add_subcommand("balance", "Report whether a signed graph is balanced");
  graph_in(balance);

  auto* frustration = app.add_subcommand("frustration", "Frustration index");
  graph_in(frustration);
  common(frustration);
  frustration->add_option("--method", o.method, "Solver")->check(CLI::IsMember({"auto", "gray", "bnb", "edge-deletion"}));

  auto* frustnum = app.add_subcommand("frustnum", "Frustration number");
  graph_in(frustnum);
  common(frustnum);

  auto* maxfrust = app.add_subcommand("maxfrust", "Maximum frustration over all signatures");
  graph_in(maxfrust);
  petersen(maxfrust);
  common(maxfrust);
  classes(maxfrust);
  maxfrust->add_option("--method", o.method, "Per-class solver")->check(CLI::IsMember({"auto", "gray", "bnb"}));

  auto* verify = app.add_subcommand("verify", "Run the bound and exact-value checks");
  common(verify);
  classes(verify);
  verify->add_option("--config", o.config, "key = value file with the check ranges");

  auto* explore = app.add_subcommand("explore", "Lower bound on maximum frustration from sampled classes");
  graph_in(explore);
  petersen(explore);
  common(explore);
  classes(explore);
  explore->add_option("--trials", o.trials, "Sampled classes");
  explore->add_option("--seed", o.seed, "Random seed");

  std::vector<const char*> argv{"sigfrust"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (balance->parsed()) return cmd_balance(o, out);
    if (frustration->parsed()) return cmd_frustration(o, out);
    if (frustnum->parsed()) return cmd_frustnum(o, out);
    if (maxfrust->parsed()) return cmd_maxfrust(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (explore->parsed()) return cmd_explore(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (lower bound " << e.lower_bound() << ")\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sigfrust::cli

#include "sigfrust/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "sigfrust/error.hpp"
#include "sigfrust/petersen.hpp"
#include "sigfrust/signed_graph.hpp"

namespace sigfrust {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

std::string TheoremReport::claim_text() const {
  return (relation == Relation::kAtMost ? "<=" : "=") + std::to_string(claim);
}

std::string TheoremReport::detail(std::string_view key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  return {};
}

Verdict judge(const TheoremReport& r) {
  if (!r.completed) return Verdict::kSkipped;
  bool holds = r.relation == Relation::kAtMost ? r.computed <= r.claim : r.computed == r.claim;
  return holds && r.requirement_met ? Verdict::kPass : Verdict::kFail;
}

namespace {

std::string petersen_name(std::size_t n, std::size_t k) {
  return "P(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

TheoremReport make_report(std::string theorem, std::string instance, std::optional<std::size_t> n,
                          std::optional<std::size_t> k, Relation relation, std::size_t claim) {
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.instance = std::move(instance);
  r.n = n;
  r.k = k;
  r.relation = relation;
  r.claim = claim;
  return r;
}

TheoremReport finish(TheoremReport r) {
  r.verdict = judge(r);
  return r;
}

TheoremReport skip(TheoremReport r, const BudgetExceeded& e) {
  r.completed = false;
  r.verdict = Verdict::kSkipped;
  r.computed = e.lower_bound();
  r.note = std::string("skipped (budget): ") + e.what();
  r.details.emplace_back("lower_bound", std::to_string(e.lower_bound()));
  return r;
}

// D(g) or the budget error that stopped it.
struct MaxOutcome {
  std::optional<SolveResult> result;
  std::optional<BudgetExceeded> error;
};

MaxOutcome compute_max(const Graph& g, const SolverOptions& options) {
  try {
    return {max_frustration(g, options), std::nullopt};
  } catch (const BudgetExceeded& e) {
    return {std::nullopt, e};
  }
}

SolverOptions petersen_solver_options(const PetersenLayout& layout, SolverOptions options) {
  if (options.symmetry) options.automorphisms = rotation_automorphisms(layout);
  return options;
}

void attach(TheoremReport& r, const SolveResult& d) {
  r.computed = d.value;
  r.witness = d.witness;
  r.details.emplace_back("classes_method", d.method);
  r.details.emplace_back("explored", std::to_string(d.explored));
}

// Re-solves the attaining witness with the edge-deletion oracle.
void confirm_witness(TheoremReport& r, const GraphPtr& g, const VerifyOptions& options) {
  Signature sig(g->edge_count(), std::span<const std::size_t>(r.witness));
  try {
    auto check = frustration_index_deletion_oracle(SignedGraph(g, sig), options.oracle_budget);
    r.details.emplace_back("witness_oracle", std::to_string(check.value));
    if (check.value != r.computed) r.requirement_met = false;
  } catch (const BudgetExceeded&) {
    r.details.emplace_back("witness_oracle", "budget");
  }
}

std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (const auto& nb : g.neighbors(e.u)) {
      if (nb.neighbor != e.v && g.find_edge(nb.neighbor, e.v)) {
        std::array<std::size_t, 3> t{e.u, e.v, nb.neighbor};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  }
  return std::nullopt;
}

void require_cubic(const Graph& g, const char* what) {
  if (!g.is_regular(3)) throw InvalidParameters(std::string(what) + " needs a cubic graph");
}

std::string graph_name(const Graph& g) { return "graph(" + std::to_string(g.vertex_count()) + ")"; }

TheoremReport cubic_half_from(const Graph& g, std::string instance, std::optional<std::size_t> n,
                              std::optional<std::size_t> k, const MaxOutcome& d) {
  const std::size_t vertices = g.vertex_count();
  auto r = make_report("thm-cubic-half-bound", std::move(instance), n ? n : vertices, k, Relation::kAtMost, vertices / 2);
  if (d.error) return skip(std::move(r), *d.error);
  attach(r, *d.result);
  return finish(std::move(r));
}

TheoremReport triangle_free_from(const Graph& g, std::string instance, std::optional<std::size_t> n,
                                 std::optional<std::size_t> k, const MaxOutcome& d) {
  const std::size_t vertices = g.vertex_count();
  // D is an integer, so 8 D <= 3 |V|  <=>  D <= floor(3 |V| / 8).
  auto r = make_report("thm-triangle-free-bound", std::move(instance), n ? n : vertices, k, Relation::kAtMost,
                       3 * vertices / 8);
  if (d.error) return skip(std::move(r), *d.error);
  attach(r, *d.result);
  r.details.emplace_back("eight_d_le_three_v", 8 * r.computed <= 3 * vertices ? "true" : "false");
  return finish(std::move(r));
}

// Exact value known for the k = 1, 2, 3 families.
std::optional<std::string> exact_family(std::size_t n, std::size_t k) {
  if (k == 1) return "prism";
  if (k == 2 && n % 2 == 1 && n >= 5) return "k2";
  if (k == 3 && (n + 1) % 4 == 0 && n >= 7 && std::gcd(n, std::size_t{3}) == 1) return "k3";
  return std::nullopt;
}

TheoremReport gcd1_from(const PetersenLayout& layout, const MaxOutcome& d, const VerifyOptions& options) {
  const std::size_t n = layout.n();
  const std::size_t k = layout.k();
  const auto family = exact_family(n, k);
  auto r = make_report("thm-gcd1-bound", petersen_name(n, k), n, k, family ? Relation::kEquals : Relation::kAtMost,
                       n / 2 + 1);
  if (family) r.details.emplace_back("exact_family", *family);
  if (d.error) return skip(std::move(r), *d.error);
  attach(r, *d.result);
  if (family) confirm_witness(r, layout.graph_ptr(), options);
  return finish(std::move(r));
}

TheoremReport gcdd_from(const PetersenLayout& layout, const MaxOutcome& d) {
  const std::size_t n = layout.n();
  const std::size_t k = layout.k();
  const std::size_t dd = layout.d();
  auto r = make_report("thm-gcdd-bound", petersen_name(n, k), n, k, Relation::kAtMost, dd * (n / (2 * dd)) + dd + 1);
  r.details.emplace_back("d", std::to_string(dd));
  if (d.error) return skip(std::move(r), *d.error);
  attach(r, *d.result);
  // Open question data: does D stay within floor(n/2)+1 here as well?
  r.details.emplace_back("half_plus_one", std::to_string(n / 2 + 1));
  r.details.emplace_back("within_half_plus_one", r.computed <= n / 2 + 1 ? "yes" : "no");
  return finish(std::move(r));
}

TheoremReport p3kk_from(std::size_t k, const MaxOutcome& d) {
  const std::size_t n = 3 * k;
  const std::size_t gcdd_bound = k * (n / (2 * k)) + k + 1;
  auto r = make_report("thm-p3kk-bound", petersen_name(n, k), n, k, Relation::kAtMost, 3 * k / 2 + 2);
  r.details.emplace_back("gcdd_bound", std::to_string(gcdd_bound));
  r.requirement_met = r.claim <= gcdd_bound;
  r.details.emplace_back("improves_gcdd_bound", r.claim < gcdd_bound ? "strict" : (r.requirement_met ? "equal" : "no"));
  if (d.error) return skip(std::move(r), *d.error);
  attach(r, *d.result);
  return finish(std::move(r));
}

void require_petersen(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) throw InvalidParameters("P(n,k) needs 2 <= 2k < n");
}

}  // namespace

TheoremReport check_cubic_half_bound(const Graph& g, const VerifyOptions& options) {
  require_cubic(g, "cubic half bound");
  return cubic_half_from(g, graph_name(g), std::nullopt, std::nullopt, compute_max(g, options.solver));
}

TheoremReport check_triangle_free_bound(const Graph& g, const VerifyOptions& options) {
  require_cubic(g, "triangle-free bound");
  if (auto t = find_triangle(g))
    throw InvalidParameters("graph has a triangle " + g.label((*t)[0]) + " " + g.label((*t)[1]) + " " +
                            g.label((*t)[2]));
  return triangle_free_from(g, graph_name(g), std::nullopt, std::nullopt, compute_max(g, options.solver));
}

TheoremReport check_gcd1_bound(std::size_t n, std::size_t k, const VerifyOptions& options) {
  require_petersen(n, k);
  if (std::gcd(n, k) != 1) throw InvalidParameters("gcd(n,k) must be 1 for " + petersen_name(n, k));
  const auto layout = generate_petersen(n, k);
  return gcd1_from(layout, compute_max(layout.graph(), petersen_solver_options(layout, options.solver)), options);
}

TheoremReport check_gcdd_bound(std::size_t n, std::size_t k, const VerifyOptions& options) {
  require_petersen(n, k);
  if (std::gcd(n, k) < 2) throw InvalidParameters("gcd(n,k) must be at least 2 for " + petersen_name(n, k));
  const auto layout = generate_petersen(n, k);
  return gcdd_from(layout, compute_max(layout.graph(), petersen_solver_options(layout, options.solver)));
}

TheoremReport check_p3kk_bound(std::size_t k, const VerifyOptions& options) {
  if (k < 2) throw InvalidParameters("P(3k,k) bound needs k >= 2");
  const auto layout = generate_petersen(3 * k, k);
  return p3kk_from(k, compute_max(layout.graph(), petersen_solver_options(layout, options.solver)));
}

TheoremReport check_lemma_restricted(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                     const VerifyOptions& options) {
  const auto layout = generate_gn(n);
  const GraphPtr& g = layout.graph_ptr();
  const std::size_t m = g->edge_count();
  const VertexSet allowed = layout.u_vertices();
  const bool exhaustive = n <= 8;

  // Combined as max(best_positive, best_negative - 1) <= floor(n/2).
  auto r = make_report("lem-restricted-switching", "G_" + std::to_string(n), n, std::nullopt, Relation::kAtMost, n / 2);
  r.sampled = !exhaustive;

  std::size_t best_pos = 0;
  std::size_t best_neg = 0;
  bool seen_neg = false;
  std::vector<std::size_t> worst_neg;
  auto consider = [&](const Signature& s) {
    bool negative_cycle = false;
    for (std::size_t i = 0; i < n; ++i) negative_cycle ^= s.contains(layout.outer_edge(i));
    auto res = restricted_min_signature(SignedGraph(g, s), allowed, options.solver);
    if (negative_cycle) {
      if (!seen_neg || res.value > best_neg) worst_neg = s.members();
      seen_neg = true;
      best_neg = std::max(best_neg, res.value);
    } else {
      best_pos = std::max(best_pos, res.value);
    }
  };

  if (exhaustive) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      Signature s(m);
      for (std::size_t e = 0; e < m; ++e)
        if ((bits >> e) & 1U) s.insert(e);
      consider(s);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Signature s(m);
      for (std::size_t e = 0; e < m; ++e)
        if (rng() & 1U) s.insert(e);
      consider(s);
    }
  }

  r.computed = std::max(best_pos, best_neg == 0 ? 0 : best_neg - 1);
  r.witness = worst_neg;
  r.details.emplace_back("max_positive", std::to_string(best_pos));
  r.details.emplace_back("max_negative", std::to_string(best_neg));
  r.details.emplace_back("bound_positive", std::to_string(n / 2));
  r.details.emplace_back("bound_negative", std::to_string(n / 2 + 1));
  r.details.emplace_back("tight_positive", best_pos == n / 2 ? "yes" : "no");
  r.details.emplace_back("tight_negative", best_neg == n / 2 + 1 ? "yes" : "no");
  return finish(std::move(r));
}

TheoremReport check_fi_equals_fn(const Graph& g, std::uint64_t samples, std::uint64_t seed,
                                 const VerifyOptions& options) {
  require_cubic(g, "frustration index = frustration number");
  auto shared = std::make_shared<const Graph>(g);
  auto r = make_report("thm-fi-equals-fn", graph_name(g), g.vertex_count(), std::nullopt, Relation::kEquals, samples);
  r.sampled = true;
  std::mt19937_64 rng(seed);
  std::size_t agree = 0;
  try {
    for (std::uint64_t t = 0; t < samples; ++t) {
      Signature s(g.edge_count());
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (rng() & 1U) s.insert(e);
      SignedGraph sg(shared, s);
      auto fi = frustration_index(sg, options.solver);
      auto fn = frustration_number(sg, options.solver.budget_states);
      if (fi.value == fn.value) {
        ++agree;
      } else if (r.witness.empty()) {
        r.witness = s.members();
      }
    }
  } catch (const BudgetExceeded& e) {
    return skip(std::move(r), e);
  }
  r.computed = agree;
  return finish(std::move(r));
}

SuiteConfig default_suite_config() {
  SuiteConfig c;
  for (std::size_t n = 3; n <= 9; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) c.petersen.emplace_back(n, k);
  c.p3kk = {2, 3};
  for (std::size_t n = 3; n <= 8; ++n) c.restricted_n.push_back(n);
  c.fi_fn = {{5, 2}, {6, 2}};
  return c;
}

namespace {

template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& tasks, unsigned workers) {
  std::vector<T> out(tasks.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < tasks.size(); i += workers) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  workers = std::max(1U, workers);
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<TheoremReport> run_full_suite(const SuiteConfig& config) {
  const VerifyOptions& options = config.options;

  // Every distinct P(n,k) whose maximum frustration is needed, computed once.
  std::vector<std::pair<std::size_t, std::size_t>> instances = config.petersen;
  for (std::size_t k : config.p3kk) instances.emplace_back(3 * k, k);
  std::sort(instances.begin(), instances.end());
  instances.erase(std::unique(instances.begin(), instances.end()), instances.end());
  for (const auto& [n, k] : instances) require_petersen(n, k);

  std::vector<std::function<MaxOutcome()>> max_tasks;
  for (const auto& [n, k] : instances) {
    max_tasks.emplace_back([n = n, k = k, &options] {
      const auto layout = generate_petersen(n, k);
      return compute_max(layout.graph(), petersen_solver_options(layout, options.solver));
    });
  }
  const auto maxima = run_parallel(max_tasks, options.workers);
  std::map<std::pair<std::size_t, std::size_t>, MaxOutcome> by_instance;
  for (std::size_t i = 0; i < instances.size(); ++i) by_instance[instances[i]] = maxima[i];

  std::vector<std::function<std::vector<TheoremReport>()>> tasks;
  for (const auto& [n, k] : config.petersen) {
    tasks.emplace_back([n = n, k = k, &by_instance, &options] {
      const auto layout = generate_petersen(n, k);
      const MaxOutcome& d = by_instance.at({n, k});
      const std::string name = petersen_name(n, k);
      std::vector<TheoremReport> out;
      out.push_back(cubic_half_from(layout.graph(), name, n, k, d));
      if (!find_triangle(layout.graph())) out.push_back(triangle_free_from(layout.graph(), name, n, k, d));
      if (layout.d() == 1) {
        out.push_back(gcd1_from(layout, d, options));
      } else {
        out.push_back(gcdd_from(layout, d));
      }
      return out;
    });
  }
  for (std::size_t k : config.p3kk) {
    tasks.emplace_back([k, &by_instance] { return std::vector<TheoremReport>{p3kk_from(k, by_instance.at({3 * k, k}))}; });
  }
  for (std::size_t n : config.restricted_n) {
    tasks.emplace_back([n, &config, &options] {
      return std::vector<TheoremReport>{check_lemma_restricted(n, config.restricted_samples, config.seed, options)};
    });
  }
  for (const auto& [n, k] : config.fi_fn) {
    tasks.emplace_back([n = n, k = k, &config, &options] {
      const auto layout = generate_petersen(n, k);
      auto r = check_fi_equals_fn(layout.graph(), config.fi_fn_samples, config.seed, options);
      r.instance = petersen_name(n, k);
      r.n = n;
      r.k = k;
      return std::vector<TheoremReport>{r};
    });
  }

  std::vector<TheoremReport> reports;
  for (auto& batch : run_parallel(tasks, options.workers))
    for (auto& r : batch) reports.push_back(std::move(r));
  std::stable_sort(reports.begin(), reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
    return std::tie(a.theorem, a.n, a.k) < std::tie(b.theorem, b.n, b.k);
  });
  return reports;
}

bool suite_passed(const std::vector<TheoremReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.verdict == Verdict::kFail; });
}

}  // namespace sigfrust

#include "sigfrust/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <queue>
#include <string>

#include "sigfrust/error.hpp"
#include "switching_search.hpp"

namespace sigfrust {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string kernel_name(SwitchingMethod m, std::size_t free_count) {
  bool gray = m == SwitchingMethod::kGrayCode || (m == SwitchingMethod::kAuto && free_count <= detail::kGrayCodeFreeLimit);
  return gray ? "gray" : "bnb";
}

// Balance test on the subgraph that survives the given deletions.
bool balanced_subgraph(const SignedGraph& sg, const std::vector<std::uint8_t>& edge_gone,
                       const std::vector<std::uint8_t>& vertex_gone) {
  const Graph& g = sg.graph();
  std::vector<int> state(g.vertex_count(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    if (vertex_gone[r] || state[r] != -1) continue;
    state[r] = 0;
    stack.push_back(r);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x)) {
        if (edge_gone[nb.edge] || vertex_gone[nb.neighbor]) continue;
        int want = state[x] ^ (sg.is_negative(nb.edge) ? 1 : 0);
        if (state[nb.neighbor] == -1) {
          state[nb.neighbor] = want;
          stack.push_back(nb.neighbor);
        } else if (state[nb.neighbor] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// Visits the r-subsets of {0..n-1} in lexicographic order until `visit`
// returns true. Returns whether it did.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t r, Visit&& visit) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

unsigned workers_from_environment(unsigned fallback) {
  if (const char* env = std::getenv("SIGFRUST_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return fallback;
}

SolveResult frustration_index(const SignedGraph& sg, const SolverOptions& options) {
  const auto start = Clock::now();
  detail::SwitchProblem problem{&sg.graph(), sg.negatives(), detail::non_root_vertices(sg.graph())};
  auto outcome = detail::minimize_switching(problem, std::nullopt, options.method, options.budget_states, options.workers);
  SolveResult r;
  r.method = "switching-" + kernel_name(options.method, problem.free.size());
  r.value = outcome.value;
  r.witness_kind = WitnessKind::kEdges;
  r.witness = outcome.signature.members();
  r.explored = outcome.explored;
  r.elapsed_ms = ms_since(start);
  return r;
}

SolveResult frustration_index_deletion_oracle(const SignedGraph& sg, std::uint64_t budget) {
  const auto start = Clock::now();
  const Graph& g = sg.graph();
  const std::size_t m = g.edge_count();
  std::vector<std::uint8_t> edge_gone(m, 0);
  const std::vector<std::uint8_t> vertex_gone(g.vertex_count(), 0);
  std::uint64_t tested = 0;
  for (std::size_t r = 0; r <= m; ++r) {
    std::vector<std::size_t> hit;
    bool found = for_each_combination(m, r, [&](const std::vector<std::size_t>& idx) {
      if (++tested > budget)
        throw BudgetExceeded("edge-deletion search exceeded its budget of " + std::to_string(budget) + " subsets", r,
                             tested - 1);
      for (std::size_t e : idx) edge_gone[e] = 1;
      bool ok = balanced_subgraph(sg, edge_gone, vertex_gone);
      for (std::size_t e : idx) edge_gone[e] = 0;
      if (ok) hit = idx;
      return ok;
    });
    if (found) {
      SolveResult res;
      res.method = "edge-deletion";
      res.value = r;
      res.witness = hit;
      res.explored = tested;
      res.elapsed_ms = ms_since(start);
      return res;
    }
  }
  throw std::logic_error("deleting every edge must balance a signed graph");
}

SolveResult frustration_number(const SignedGraph& sg, std::uint64_t budget) {
  const auto start = Clock::now();
  const Graph& g = sg.graph();
  const std::size_t n = g.vertex_count();
  const std::vector<std::uint8_t> edge_gone(g.edge_count(), 0);
  std::vector<std::uint8_t> vertex_gone(n, 0);
  std::uint64_t tested = 0;
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<std::size_t> hit;
    bool found = for_each_combination(n, r, [&](const std::vector<std::size_t>& idx) {
      if (++tested > budget)
        throw BudgetExceeded("vertex-deletion search exceeded its budget of " + std::to_string(budget) + " subsets", r,
                             tested - 1);
      for (std::size_t v : idx) vertex_gone[v] = 1;
      bool ok = balanced_subgraph(sg, edge_gone, vertex_gone);
      for (std::size_t v : idx) vertex_gone[v] = 0;
      if (ok) hit = idx;
      return ok;
    });
    if (found) {
      SolveResult res;
      res.method = "vertex-deletion";
      res.value = r;
      res.witness_kind = WitnessKind::kVertices;
      res.witness = hit;
      res.explored = tested;
      res.elapsed_ms = ms_since(start);
      return res;
    }
  }
  throw std::logic_error("deleting every vertex must balance a signed graph");
}

SolveResult restricted_min_signature(const SignedGraph& sg, const VertexSet& allowed, const SolverOptions& options) {
  const auto start = Clock::now();
  const Graph& g = sg.graph();
  if (allowed.universe() != g.vertex_count()) throw InvalidInput("allowed set universe does not match vertex count");

  // X and its complement within a component give the same signature, so a
  // component lying entirely inside `allowed` keeps its root fixed.
  CycleBasis basis = cycle_basis(g);
  std::vector<bool> whole(basis.component_count(), true);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!allowed.contains(v)) whole[basis.component[v]] = false;

  detail::SwitchProblem problem{&g, sg.negatives(), {}};
  for (std::size_t v : allowed.members()) {
    bool is_root = basis.parent[v] == CycleBasis::kNone;
    if (is_root && whole[basis.component[v]]) continue;
    problem.free.push_back(v);
  }
  auto outcome = detail::minimize_switching(problem, std::nullopt, options.method, options.budget_states, options.workers);
  SolveResult r;
  r.method = "restricted-" + kernel_name(options.method, problem.free.size());
  r.value = outcome.value;
  r.witness_kind = WitnessKind::kVertices;
  r.witness = outcome.switched.members();
  r.explored = outcome.explored;
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<Signature> minimum_signatures(const SignedGraph& sg, const SolverOptions& options) {
  detail::SwitchProblem problem{&sg.graph(), sg.negatives(), detail::non_root_vertices(sg.graph())};
  return detail::all_minimum_signatures(problem, options.budget_states);
}

bool balanced_after_deleting(const SignedGraph& sg, const Signature& deleted_edges) {
  const Graph& g = sg.graph();
  if (deleted_edges.universe() != g.edge_count()) throw InvalidInput("edge set universe does not match edge count");
  std::vector<std::uint8_t> edge_gone(g.edge_count(), 0);
  for (std::size_t e : deleted_edges.members()) edge_gone[e] = 1;
  return balanced_subgraph(sg, edge_gone, std::vector<std::uint8_t>(g.vertex_count(), 0));
}

bool balanced_after_deleting(const SignedGraph& sg, const VertexSet& deleted_vertices) {
  const Graph& g = sg.graph();
  if (deleted_vertices.universe() != g.vertex_count()) throw InvalidInput("vertex set universe does not match vertex count");
  std::vector<std::uint8_t> vertex_gone(g.vertex_count(), 0);
  for (std::size_t v : deleted_vertices.members()) vertex_gone[v] = 1;
  return balanced_subgraph(sg, std::vector<std::uint8_t>(g.edge_count(), 0), vertex_gone);
}

}  // namespace sigfrust

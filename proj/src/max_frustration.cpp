#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "sigfrust/error.hpp"
#include "sigfrust/solvers.hpp"
#include "switching_search.hpp"

namespace sigfrust {

namespace {

using Clock = std::chrono::steady_clock;

// Classes are evaluated in fixed-size batches against the incumbent from the
// start of the batch, which keeps every counter independent of worker count.
constexpr std::size_t kBatch = 64;

// A switching class is identified by its sign pattern on the non-forest edges
// of the deterministic cycle basis (bit j <-> non_forest_edges[j]).
class ClassSpace {
 public:
  ClassSpace(const Graph& g, const SolverOptions& options) : g_(g), options_(options), basis_(cycle_basis(g)) {
    if (basis_.non_forest_edges.size() > 62)
      throw InvalidParameters("cycle space dimension " + std::to_string(basis_.non_forest_edges.size()) +
                              " is too large for class enumeration");
    free_ = detail::non_root_vertices(g);
    if (options.symmetry) prepare_symmetry();
  }

  std::size_t dimension() const { return basis_.non_forest_edges.size(); }

  Signature signature_of(std::uint64_t pattern) const {
    Signature s(g_.edge_count());
    for (std::size_t j = 0; j < dimension(); ++j)
      if ((pattern >> j) & 1U) s.insert(basis_.non_forest_edges[j]);
    return s;
  }

  // False when some automorphism maps the class to one with a smaller pattern.
  bool orbit_minimal(std::uint64_t pattern) const {
    for (const auto& images : images_) {
      std::uint64_t q = 0;
      for (std::size_t j = 0; j < dimension(); ++j)
        if ((pattern >> j) & 1U) q ^= images[j];
      if (q < pattern) return false;
    }
    return true;
  }

  // Exact frustration index of the class when it exceeds `limit`.
  detail::SwitchOutcome evaluate(std::uint64_t pattern, std::optional<std::size_t> limit) const {
    detail::SwitchProblem problem{&g_, signature_of(pattern), free_};
    return detail::minimize_switching(problem, limit, options_.method, options_.budget_states, 1);
  }

 private:
  void prepare_symmetry() {
    // Canonical forms are linear: a tree edge maps to the set of fundamental
    // cycles through it, a non-forest edge to itself.
    std::vector<std::uint64_t> pattern_of_edge(g_.edge_count(), 0);
    for (std::size_t j = 0; j < dimension(); ++j)
      for (std::size_t e : basis_.cycles[j]) pattern_of_edge[e] ^= std::uint64_t{1} << j;
    for (const auto& perm : options_.automorphisms) {
      if (perm.size() != g_.edge_count()) throw InvalidInput("automorphism size does not match edge count");
      std::vector<std::uint64_t> images(dimension());
      for (std::size_t j = 0; j < dimension(); ++j) images[j] = pattern_of_edge.at(perm[basis_.non_forest_edges[j]]);
      images_.push_back(std::move(images));
    }
  }

  const Graph& g_;
  SolverOptions options_;
  CycleBasis basis_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<std::uint64_t>> images_;
};

struct Incumbent {
  bool any = false;
  std::size_t value = 0;
  Signature witness;
};

struct BatchResult {
  bool exceeds = false;
  detail::SwitchOutcome outcome;
};

// Evaluates a batch of patterns against the incumbent and folds the results in
// batch order (strict improvement keeps the earliest maximiser).
std::uint64_t run_batch(const ClassSpace& space, const std::vector<std::uint64_t>& patterns, Incumbent& best,
                        unsigned workers) {
  std::vector<BatchResult> results(patterns.size());
  const std::optional<std::size_t> limit = best.any ? std::optional<std::size_t>(best.value) : std::nullopt;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < patterns.size(); i += workers) {
        results[i].outcome = space.evaluate(patterns[i], limit);
        results[i].exceeds = !results[i].outcome.within_limit;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers <= 1 || patterns.size() <= 1) {
    workers = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t explored = 0;
  for (const auto& r : results) {
    explored += r.outcome.explored;
    if (!r.exceeds) continue;
    if (!best.any || r.outcome.value > best.value) {
      best.any = true;
      best.value = r.outcome.value;
      best.witness = r.outcome.signature;
    }
  }
  return explored;
}

SolveResult finish(const char* method, const Incumbent& best, std::uint64_t explored, Clock::time_point start) {
  SolveResult r;
  r.method = method;
  r.value = best.value;
  r.witness_kind = WitnessKind::kEdges;
  r.witness = best.witness.members();
  r.explored = explored;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

SolveResult max_frustration(const Graph& g, const SolverOptions& options) {
  const auto start = Clock::now();
  ClassSpace space(g, options);
  const std::uint64_t total = std::uint64_t{1} << space.dimension();
  const unsigned workers = std::max(1U, options.workers);

  Incumbent best;
  std::uint64_t explored = 0;
  std::uint64_t evaluated = 0;
  std::vector<std::uint64_t> batch;
  batch.reserve(kBatch);
  auto flush = [&] {
    explored += run_batch(space, batch, best, workers);
    evaluated += batch.size();
    batch.clear();
  };

  for (std::uint64_t p = 0; p < total; ++p) {
    if (options.symmetry && !space.orbit_minimal(p)) continue;
    if (evaluated + batch.size() == options.budget_classes) {
      flush();
      throw BudgetExceeded("maximum frustration needs more than " + std::to_string(options.budget_classes) +
                               " switching classes (2^" + std::to_string(space.dimension()) + " in total)",
                           best.value, evaluated);
    }
    batch.push_back(p);
    if (batch.size() == kBatch) flush();
  }
  flush();
  return finish("class-enumeration", best, explored, start);
}

SolveResult max_frustration_lower_bound(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                        const SolverOptions& options) {
  const auto start = Clock::now();
  ClassSpace probe(g, SolverOptions{});
  if (probe.dimension() < 63 && trials >= (std::uint64_t{1} << probe.dimension())) {
    SolverOptions exhaustive = options;
    exhaustive.budget_classes = std::uint64_t{1} << probe.dimension();
    SolveResult r = max_frustration(g, exhaustive);
    r.method = "class-sampling";
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  }

  SolverOptions plain = options;
  plain.symmetry = false;
  ClassSpace space(g, plain);
  const std::uint64_t mask = (std::uint64_t{1} << space.dimension()) - 1;
  const unsigned workers = std::max(1U, options.workers);
  std::mt19937_64 rng(seed);

  Incumbent best;
  std::uint64_t explored = 0;
  std::vector<std::uint64_t> batch;
  for (std::uint64_t t = 0; t < trials; ++t) {
    batch.push_back(rng() & mask);
    if (batch.size() == kBatch) {
      explored += run_batch(space, batch, best, workers);
      batch.clear();
    }
  }
  if (!batch.empty()) explored += run_batch(space, batch, best, workers);
  if (!best.any) best.witness = Signature(g.edge_count());
  return finish("class-sampling", best, explored, start);
}

}  // namespace sigfrust

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/solvers.hpp"

namespace sigfrust {

enum class Relation {
  kAtMost,  // computed <= claim
  kEquals,  // computed == claim
};

enum class Verdict { kPass, kFail, kSkipped };

std::string_view to_string(Verdict v);

// One checked claim on one instance. The verdict is a pure function of
// (relation, claim, computed) plus the instance-derived extra condition
// recorded in `requirement_met`.
struct TheoremReport {
  std::string theorem;
  std::string instance;          // e.g. "P(7,2)", "G_5", "K_4"
  std::optional<std::size_t> n;  // vertex-index parameter of the family
  std::optional<std::size_t> k;
  Relation relation = Relation::kAtMost;
  std::size_t claim = 0;
  std::size_t computed = 0;
  bool requirement_met = true;  // secondary condition, e.g. a bound comparison
  bool completed = true;        // false when a budget stopped the computation
  Verdict verdict = Verdict::kSkipped;
  bool sampled = false;
  std::vector<std::size_t> witness;  // attaining or counterexample signature
  std::vector<std::pair<std::string, std::string>> details;
  std::string note;

  std::string claim_text() const;
  std::string detail(std::string_view key) const;
};

// Verdict implied by the recorded fields.
Verdict judge(const TheoremReport& report);

struct VerifyOptions {
  SolverOptions solver;
  // Subset budget for re-solving attaining witnesses with the deletion oracle.
  std::uint64_t oracle_budget = std::uint64_t{1} << 22;
  // Instances run concurrently by run_full_suite.
  unsigned workers = 1;
};

// Maximum frustration of a cubic graph is at most |V|/2.
TheoremReport check_cubic_half_bound(const Graph& g, const VerifyOptions& options = {});
// For cubic triangle-free graphs, 8 * D <= 3 |V|. Throws InvalidParameters
// naming a triangle when one exists.
TheoremReport check_triangle_free_bound(const Graph& g, const VerifyOptions& options = {});
// D(P(n,k)) <= floor(n/2)+1 when gcd(n,k) = 1, with equality checked for the
// k = 1, 2, 3 families.
TheoremReport check_gcd1_bound(std::size_t n, std::size_t k, const VerifyOptions& options = {});
// D(P(n,k)) <= d*floor(n/2d) + d + 1 when gcd(n,k) = d >= 2.
TheoremReport check_gcdd_bound(std::size_t n, std::size_t k, const VerifyOptions& options = {});
// D(P(3k,k)) <= floor(3k/2) + 2, and that bound does not exceed the gcd bound.
TheoremReport check_p3kk_bound(std::size_t k, const VerifyOptions& options = {});
// Switching only u-vertices of G_n: minimum signatures have at most floor(n/2)
// edges (outer cycle positive) or floor(n/2)+1 (negative). Exhaustive over all
// signatures for n <= 8, otherwise `trials` seeded samples.
TheoremReport check_lemma_restricted(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                     const VerifyOptions& options = {});
// Frustration index equals frustration number on `samples` seeded random
// signatures of a cubic graph.
TheoremReport check_fi_equals_fn(const Graph& g, std::uint64_t samples, std::uint64_t seed,
                                 const VerifyOptions& options = {});

struct SuiteConfig {
  std::vector<std::pair<std::size_t, std::size_t>> petersen;  // (n,k) instances
  std::vector<std::size_t> p3kk;                              // k values
  std::vector<std::size_t> restricted_n;
  std::uint64_t restricted_samples = 4096;
  std::vector<std::pair<std::size_t, std::size_t>> fi_fn;  // (n,k) instances
  std::uint64_t fi_fn_samples = 50;
  std::uint64_t seed = 1;
  VerifyOptions options;
};

// All P(n,k) with 2 <= 2k < n <= 9, P(3k,k) for k = 2,3, G_n for n = 3..8,
// and frustration index vs number on P(5,2) and P(6,2).
SuiteConfig default_suite_config();

// Every applicable check over the configured ranges, sorted by
// (theorem, n, k). Budget overruns become skipped reports.
std::vector<TheoremReport> run_full_suite(const SuiteConfig& config);

// True iff no report failed (skipped reports do not count).
bool suite_passed(const std::vector<TheoremReport>& reports);

}  // namespace sigfrust

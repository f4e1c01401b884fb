#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/index_set.hpp"
#include "sigfrust/signed_graph.hpp"

namespace sigfrust {

enum class WitnessKind { kEdges, kVertices };

struct SolveResult {
  std::string method;
  std::size_t value = 0;
  WitnessKind witness_kind = WitnessKind::kEdges;
  std::vector<std::size_t> witness;  // sorted indices
  std::uint64_t explored = 0;
  double elapsed_ms = 0.0;

  // Timing is not part of a result's identity.
  bool operator==(const SolveResult& o) const {
    return method == o.method && value == o.value && witness_kind == o.witness_kind && witness == o.witness &&
           explored == o.explored;
  }
};

enum class SwitchingMethod {
  kAuto,            // Gray code for small free-vertex counts, branch and bound otherwise
  kGrayCode,        // every switching, one vertex flip per step
  kBranchAndBound,  // depth-first over vertex states with a per-vertex lower bound
};

struct SolverOptions {
  std::uint64_t budget_states = std::uint64_t{1} << 30;
  std::uint64_t budget_classes = std::uint64_t{1} << 12;
  unsigned workers = 1;
  SwitchingMethod method = SwitchingMethod::kAuto;
  // Deduplicate switching classes of max_frustration under these edge
  // automorphisms (perm[e] = image of e). Results are identical either way.
  bool symmetry = false;
  std::vector<std::vector<std::size_t>> automorphisms;
};

// Worker count from the SIGFRUST_WORKERS environment variable, or `fallback`.
unsigned workers_from_environment(unsigned fallback = 1);

// Minimum number of negative edges over the switching class of sg. The
// witness is the lexicographically smallest minimum signature.
SolveResult frustration_index(const SignedGraph& sg, const SolverOptions& options = {});

// Smallest number of edges whose deletion balances sg, by trying every edge
// subset of size 0, 1, 2, ... . Independent of the switching search.
// `budget` caps the number of subsets tested.
SolveResult frustration_index_deletion_oracle(const SignedGraph& sg, std::uint64_t budget = std::uint64_t{1} << 26);

// Smallest number of vertices whose deletion balances sg. Witness is the
// lexicographically first such vertex set.
SolveResult frustration_number(const SignedGraph& sg, std::uint64_t budget = std::uint64_t{1} << 26);

// Minimum negative-edge count over switchings X contained in `allowed`.
// Witness is the switch set X (vertex indices).
SolveResult restricted_min_signature(const SignedGraph& sg, const VertexSet& allowed, const SolverOptions& options = {});

// Every minimum signature in the switching class of sg, sorted lexicographically.
std::vector<Signature> minimum_signatures(const SignedGraph& sg, const SolverOptions& options = {});

// Maximum frustration index over all signatures of g, one signature per
// switching class. Witness is a signature attaining the maximum.
SolveResult max_frustration(const Graph& g, const SolverOptions& options = {});

// Best frustration index over `trials` random switching classes (seeded).
// When trials covers every class the search is exhaustive.
SolveResult max_frustration_lower_bound(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                        const SolverOptions& options = {});

// Re-evaluates a witness: the size of an edge witness, the balance of sg after
// deleting it, and so on. Used to check results independently of the solver.
bool balanced_after_deleting(const SignedGraph& sg, const Signature& deleted_edges);
bool balanced_after_deleting(const SignedGraph& sg, const VertexSet& deleted_vertices);

}  // namespace sigfrust

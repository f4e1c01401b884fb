#pragma once

// Internal search kernels shared by the solvers. Not installed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/index_set.hpp"
#include "sigfrust/solvers.hpp"

namespace sigfrust::detail {

// Switchings X ⊆ free applied to `base`; every other vertex stays fixed.
struct SwitchProblem {
  const Graph* graph = nullptr;
  Signature base;
  std::vector<std::size_t> free;  // increasing
};

struct SwitchOutcome {
  // Set when a limit was given and some switching reaches it; the remaining
  // fields are then unspecified.
  bool within_limit = false;
  std::size_t value = 0;
  Signature signature;  // lexicographically smallest minimum
  VertexSet switched;   // X producing `signature`
  std::uint64_t explored = 0;
};

// Exact minimum over the problem's switchings. With `limit`, returns as soon
// as some switching has at most `limit` negative edges.
SwitchOutcome minimize_switching(const SwitchProblem& problem, std::optional<std::size_t> limit, SwitchingMethod method,
                                 std::uint64_t budget, unsigned workers);

// All minimum signatures (Gray code only).
std::vector<Signature> all_minimum_signatures(const SwitchProblem& problem, std::uint64_t budget);

// Free vertices for unrestricted switching: everything except the lowest
// vertex of each component.
std::vector<std::size_t> non_root_vertices(const Graph& g);

// Gray code is used up to this many free vertices under SwitchingMethod::kAuto.
inline constexpr std::size_t kGrayCodeFreeLimit = 22;

}  // namespace sigfrust::detail

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/index_set.hpp"

namespace sigfrust {

// A graph together with its set of negative edges. Values are immutable;
// switching produces a new value sharing the same underlying graph.
class SignedGraph {
 public:
  // All-positive signed graph.
  explicit SignedGraph(GraphPtr graph);
  // Throws InvalidInput if the signature is over a different edge universe.
  SignedGraph(GraphPtr graph, Signature negatives);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const Signature& negatives() const noexcept { return negatives_; }

  bool is_negative(std::size_t e) const { return negatives_.contains(e); }
  int sign(std::size_t e) const { return is_negative(e) ? -1 : 1; }

  bool operator==(const SignedGraph& other) const {
    return (graph_ == other.graph_ || *graph_ == *other.graph_) && negatives_ == other.negatives_;
  }

 private:
  GraphPtr graph_;
  Signature negatives_;
};

// Spanning forest built by breadth-first search from the lowest-index vertex
// of each component, neighbours visited in adjacency order. Every non-forest
// edge closes exactly one fundamental cycle.
struct CycleBasis {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent;       // kNone for roots
  std::vector<std::size_t> parent_edge;  // kNone for roots
  std::vector<std::size_t> depth;
  std::vector<std::size_t> component;    // component id per vertex
  std::vector<std::size_t> roots;        // one per component, increasing
  std::vector<bool> is_forest_edge;
  std::vector<std::size_t> non_forest_edges;   // increasing edge index
  std::vector<std::vector<std::size_t>> cycles;  // cycles[i] closes non_forest_edges[i]

  std::size_t component_count() const noexcept { return roots.size(); }
};

CycleBasis cycle_basis(const Graph& g);

// +1 or -1. Throws InvalidInput unless `cycle` is the edge set of a cycle of sg.
int sign_of_cycle(const SignedGraph& sg, std::span<const std::size_t> cycle);

// Flips every edge with exactly one endpoint in x.
SignedGraph switch_at(const SignedGraph& sg, const SwitchSet& x);

bool is_balanced(const SignedGraph& sg);

// Throws InvalidInput when the underlying graphs differ.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// The member of sg's switching class that is positive on every forest edge
// of cycle_basis(sg.graph()). Equal forms <=> switching equivalent.
Signature canonical_class_form(const SignedGraph& sg);
Signature canonical_class_form(const SignedGraph& sg, const CycleBasis& basis);

// Switch set turning sg into its canonical form (roots never switched).
SwitchSet canonicalizing_switch(const SignedGraph& sg, const CycleBasis& basis);

}  // namespace sigfrust

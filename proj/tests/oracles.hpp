#pragma once

// Brute-force helpers written straight from the definitions. They share no
// search code with the library and are only usable on tiny graphs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/index_set.hpp"
#include "sigfrust/signed_graph.hpp"

namespace oracle {

// min over every vertex subset X of |E_- xor delta(X)|, no complement trick.
inline std::size_t frustration(const sigfrust::SignedGraph& sg) {
  const auto& g = sg.graph();
  std::size_t best = g.edge_count();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.vertex_count()); ++x) {
    std::size_t neg = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      bool flipped = (((x >> ed.u) ^ (x >> ed.v)) & 1U) != 0;
      neg += sg.is_negative(e) != flipped ? 1 : 0;
    }
    best = std::min(best, neg);
  }
  return best;
}

// Max of frustration() over all 2^m raw signatures.
inline std::size_t max_frustration(const sigfrust::GraphPtr& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g->edge_count()); ++s) {
    sigfrust::Signature sig(g->edge_count());
    for (std::size_t e = 0; e < g->edge_count(); ++e)
      if ((s >> e) & 1U) sig.insert(e);
    best = std::max(best, frustration(sigfrust::SignedGraph(g, sig)));
  }
  return best;
}

inline sigfrust::Signature signature_from_bits(std::size_t m, std::uint64_t bits) {
  sigfrust::Signature s(m);
  for (std::size_t e = 0; e < m; ++e)
    if ((bits >> e) & 1U) s.insert(e);
  return s;
}

inline sigfrust::Signature random_signature(std::size_t m, std::mt19937_64& rng) {
  sigfrust::Signature s(m);
  for (std::size_t e = 0; e < m; ++e)
    if (rng() & 1U) s.insert(e);
  return s;
}

inline sigfrust::SwitchSet random_switch(std::size_t n, std::mt19937_64& rng) {
  sigfrust::SwitchSet x(n);
  for (std::size_t v = 0; v < n; ++v)
    if (rng() & 1U) x.insert(v);
  return x;
}

inline bool is_matching(const sigfrust::Graph& g, const std::vector<std::size_t>& edges) {
  std::vector<int> used(g.vertex_count(), 0);
  for (std::size_t e : edges) {
    if (used[g.edge(e).u]++ || used[g.edge(e).v]++) return false;
  }
  return true;
}

}  // namespace oracle

#include "sigfrust/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "sigfrust/error.hpp"

namespace sigfrust {

SignedGraph::SignedGraph(GraphPtr graph) : SignedGraph(graph, Signature(graph ? graph->edge_count() : 0)) {}

SignedGraph::SignedGraph(GraphPtr graph, Signature negatives) : graph_(std::move(graph)), negatives_(std::move(negatives)) {
  if (!graph_) throw InvalidInput("signed graph needs an underlying graph");
  if (negatives_.universe() != graph_->edge_count())
    throw InvalidInput("signature universe " + std::to_string(negatives_.universe()) + " does not match edge count " +
                       std::to_string(graph_->edge_count()));
}

CycleBasis cycle_basis(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  CycleBasis b;
  b.parent.assign(n, CycleBasis::kNone);
  b.parent_edge.assign(n, CycleBasis::kNone);
  b.depth.assign(n, 0);
  b.component.assign(n, CycleBasis::kNone);
  b.is_forest_edge.assign(m, false);

  std::queue<std::size_t> q;
  for (std::size_t root = 0; root < n; ++root) {
    if (b.component[root] != CycleBasis::kNone) continue;
    const std::size_t comp = b.roots.size();
    b.roots.push_back(root);
    b.component[root] = comp;
    q.push(root);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (const auto& inc : g.neighbors(x)) {
        if (b.component[inc.neighbor] != CycleBasis::kNone) continue;
        b.component[inc.neighbor] = comp;
        b.parent[inc.neighbor] = x;
        b.parent_edge[inc.neighbor] = inc.edge;
        b.depth[inc.neighbor] = b.depth[x] + 1;
        b.is_forest_edge[inc.edge] = true;
        q.push(inc.neighbor);
      }
    }
  }

  for (std::size_t e = 0; e < m; ++e) {
    if (b.is_forest_edge[e]) continue;
    b.non_forest_edges.push_back(e);
    // Walk u -e-> v, then climb from v to the common ancestor and descend to u.
    std::size_t u = g.edge(e).u;
    std::size_t v = g.edge(e).v;
    std::vector<std::size_t> from_v;
    std::vector<std::size_t> from_u;
    while (b.depth[v] > b.depth[u]) {
      from_v.push_back(b.parent_edge[v]);
      v = b.parent[v];
    }
    while (b.depth[u] > b.depth[v]) {
      from_u.push_back(b.parent_edge[u]);
      u = b.parent[u];
    }
    while (u != v) {
      from_v.push_back(b.parent_edge[v]);
      v = b.parent[v];
      from_u.push_back(b.parent_edge[u]);
      u = b.parent[u];
    }
    std::vector<std::size_t> cycle{e};
    cycle.insert(cycle.end(), from_v.begin(), from_v.end());
    cycle.insert(cycle.end(), from_u.rbegin(), from_u.rend());
    b.cycles.push_back(std::move(cycle));
  }
  return b;
}

int sign_of_cycle(const SignedGraph& sg, std::span<const std::size_t> cycle) {
  const Graph& g = sg.graph();
  if (cycle.size() < 3) throw InvalidInput("a cycle needs at least three edges");

  std::vector<std::size_t> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("cycle repeats an edge");

  // Every touched vertex must have degree two in the edge set, and the edge
  // set must be connected.
  std::map<std::size_t, std::vector<std::size_t>> touching;
  for (std::size_t e : cycle) {
    if (e >= g.edge_count()) throw InvalidInput("cycle edge " + std::to_string(e) + " out of range");
    touching[g.edge(e).u].push_back(e);
    touching[g.edge(e).v].push_back(e);
  }
  for (const auto& [v, es] : touching)
    if (es.size() != 2) throw InvalidInput("edge list is not a cycle: vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(es.size()));
  if (touching.size() != cycle.size()) throw InvalidInput("edge list is not a cycle");

  std::size_t start = touching.begin()->first;
  std::size_t prev_edge = touching.begin()->second.front();
  std::size_t v = start;
  std::size_t walked = 0;
  do {
    const Edge& ed = g.edge(prev_edge);
    v = ed.u == v ? ed.v : ed.u;
    const auto& es = touching[v];
    prev_edge = es[0] == prev_edge ? es[1] : es[0];
    ++walked;
  } while (v != start && walked <= cycle.size());
  if (walked != cycle.size()) throw InvalidInput("edge list is a union of several cycles");

  std::size_t negatives = 0;
  for (std::size_t e : cycle) negatives += sg.is_negative(e) ? 1 : 0;
  return negatives % 2 == 0 ? 1 : -1;
}

SignedGraph switch_at(const SignedGraph& sg, const SwitchSet& x) {
  const Graph& g = sg.graph();
  if (x.universe() != g.vertex_count()) throw InvalidInput("switch set universe does not match vertex count");
  Signature out = sg.negatives();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (x.contains(g.edge(e).u) != x.contains(g.edge(e).v)) out.flip(e);
  }
  return SignedGraph(sg.graph_ptr(), std::move(out));
}

bool is_balanced(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  const std::size_t n = g.vertex_count();
  // state[v] in {0,1}: vertices on a positive edge share a state.
  std::vector<int> state(n, -1);
  std::queue<std::size_t> q;
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != -1) continue;
    state[root] = 0;
    q.push(root);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (const auto& inc : g.neighbors(x)) {
        int want = state[x] ^ (sg.is_negative(inc.edge) ? 1 : 0);
        if (state[inc.neighbor] == -1) {
          state[inc.neighbor] = want;
          q.push(inc.neighbor);
        } else if (state[inc.neighbor] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!(a.graph_ptr() == b.graph_ptr() || a.graph() == b.graph()))
    throw InvalidInput("switching equivalence needs identical underlying graphs");
  return is_balanced(SignedGraph(a.graph_ptr(), a.negatives() ^ b.negatives()));
}

SwitchSet canonicalizing_switch(const SignedGraph& sg, const CycleBasis& basis) {
  const Graph& g = sg.graph();
  SwitchSet x(g.vertex_count());
  // Parents are discovered before children, so a depth-ordered sweep works.
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return basis.depth[a] < basis.depth[b]; });
  for (std::size_t v : order) {
    if (basis.parent[v] == CycleBasis::kNone) continue;
    bool flip = x.contains(basis.parent[v]) != sg.is_negative(basis.parent_edge[v]);
    if (flip) x.insert(v);
  }
  return x;
}

Signature canonical_class_form(const SignedGraph& sg, const CycleBasis& basis) {
  return switch_at(sg, canonicalizing_switch(sg, basis)).negatives();
}

Signature canonical_class_form(const SignedGraph& sg) { return canonical_class_form(sg, cycle_basis(sg.graph())); }

}  // namespace sigfrust

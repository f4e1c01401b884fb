#include "sigfrust/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

#include "sigfrust/error.hpp"

namespace sigfrust {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) throw InvalidInput("label count does not match vertex count");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> deg(n_, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_)
      throw InvalidInput("edge " + std::to_string(e) + " has endpoint out of range");
    if (u == v) throw InvalidInput("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw InvalidInput("edge " + std::to_string(e) + " duplicates an earlier edge " + std::to_string(u) + "-" +
                         std::to_string(v));
    ++deg[u];
    ++deg[v];
  }

  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidences_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    incidences_[fill[u]++] = {v, e};
    incidences_[fill[v]++] = {u, e};
  }
}

std::optional<std::size_t> Graph::find_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  for (const auto& inc : neighbors(u))
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

std::string Graph::label(std::size_t v) const {
  if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool Graph::is_regular(std::size_t d) const {
  for (std::size_t v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(n_, false);
  std::size_t count = 0;
  std::queue<std::size_t> q;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (const auto& inc : neighbors(x)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          q.push(inc.neighbor);
        }
      }
    }
  }
  return count;
}

GraphPtr cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameters("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return make_graph(n, std::move(edges));
}

GraphPtr complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return make_graph(n, std::move(edges));
}

}  // namespace sigfrust

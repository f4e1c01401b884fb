#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigfrust {

struct Edge {
  std::size_t u;
  std::size_t v;

  bool operator==(const Edge&) const = default;
};

struct Incidence {
  std::size_t neighbor;
  std::size_t edge;
};

// Immutable simple graph. Edge indices follow construction order and
// adjacency lists list incident edges in increasing edge index.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidInput on loops, parallel edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Incidence> neighbors(std::size_t v) const {
    return std::span<const Incidence>(incidences_).subspan(offsets_.at(v), offsets_[v + 1] - offsets_[v]);
  }
  std::size_t degree(std::size_t v) const { return offsets_.at(v + 1) - offsets_[v]; }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  // Vertex label, or the decimal index when the graph is unlabelled.
  std::string label(std::size_t v) const;

  bool is_regular(std::size_t degree) const;
  std::size_t component_count() const;

  // Structural equality: same vertex count and the same indexed edge list.
  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
  std::vector<std::string> labels_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {}) {
  return std::make_shared<const Graph>(vertex_count, std::move(edges), std::move(labels));
}

// Small fixtures used across tests and the CLI.
GraphPtr cycle_graph(std::size_t n);
GraphPtr complete_graph(std::size_t n);

}  // namespace sigfrust

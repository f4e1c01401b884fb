#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sigfrust/graph.hpp"
#include "sigfrust/index_set.hpp"

namespace sigfrust {

enum class EdgeRole { kOuter, kSpoke, kInner };

std::string_view to_string(EdgeRole role);
EdgeRole parse_edge_role(std::string_view text);

// Generalized Petersen graph P(n,k) with a fixed indexing:
//   vertex u_i -> i, v_i -> n + i
//   edge i      = u_i u_{i+1}   (outer)
//   edge n + i  = u_i v_i       (spoke)
//   edge 2n + i = v_i v_{i+k}   (inner)
// All subscripts are taken mod n.
class PetersenLayout {
 public:
  PetersenLayout(std::size_t n, std::size_t k, GraphPtr graph);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  // gcd(n, k): the number of inner cycles.
  std::size_t d() const noexcept { return d_; }

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }

  std::size_t u(std::ptrdiff_t i) const noexcept { return wrap(i); }
  std::size_t v(std::ptrdiff_t i) const noexcept { return n_ + wrap(i); }
  std::size_t outer_edge(std::ptrdiff_t i) const noexcept { return wrap(i); }
  std::size_t spoke(std::ptrdiff_t i) const noexcept { return n_ + wrap(i); }
  std::size_t inner_edge(std::ptrdiff_t i) const noexcept { return 2 * n_ + wrap(i); }

  EdgeRole role(std::size_t e) const;
  std::vector<EdgeRole> roles() const;

 private:
  std::size_t wrap(std::ptrdiff_t i) const noexcept {
    auto nn = static_cast<std::ptrdiff_t>(n_);
    return static_cast<std::size_t>(((i % nn) + nn) % nn);
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t d_;
  GraphPtr graph_;
};

// G_n: the outer cycle u_0..u_{n-1} with one pendant spoke u_i v_i per vertex.
// Indexing as in PetersenLayout without inner edges.
class GnLayout {
 public:
  GnLayout(std::size_t n, GraphPtr graph) : n_(n), graph_(std::move(graph)) {}

  std::size_t n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }

  std::size_t u(std::size_t i) const noexcept { return i % n_; }
  std::size_t v(std::size_t i) const noexcept { return n_ + i % n_; }
  std::size_t outer_edge(std::size_t i) const noexcept { return i % n_; }
  std::size_t spoke(std::size_t i) const noexcept { return n_ + i % n_; }

  EdgeRole role(std::size_t e) const;
  // The u-vertices, i.e. the switch sets that keep every v-vertex fixed.
  VertexSet u_vertices() const;

 private:
  std::size_t n_;
  GraphPtr graph_;
};

// Throws InvalidParameters unless 2 <= 2k < n.
PetersenLayout generate_petersen(std::size_t n, std::size_t k);
// Throws InvalidParameters unless n >= 3.
GnLayout generate_gn(std::size_t n);

// The gcd(n,k) inner cycles as vertex sequences; cycle i starts at v_i.
std::vector<std::vector<std::size_t>> inner_cycles(const PetersenLayout& layout);

// Every cycle of exactly `length` edges, once each, as edge-index lists in
// walk order. Supports 3 <= length <= 8.
std::vector<std::vector<std::size_t>> enumerate_cycles_of_length(const Graph& g, std::size_t length);

// Rotations u_i -> u_{i+r}, v_i -> v_{i+r} for r = 0..n-1 as edge permutations
// (perm[e] is the image of edge e).
std::vector<std::vector<std::size_t>> rotation_automorphisms(const PetersenLayout& layout);

// Signature over P(n,1) of size floor(n/2)+1 that makes every quadrangle negative.
Signature extremal_signature_prism(std::size_t n);
// Signature over P(2m+1,2) of size m+1 that makes every pentagon negative.
// m = 2 is found by exhaustive search on the Petersen graph.
Signature extremal_signature_k2(std::size_t m);
// Signature over P(4m-1,3) of size 2m; needs m >= 2 and gcd(4m-1,3) = 1.
Signature extremal_signature_k3(std::size_t m);

}  // namespace sigfrust

#include "sigfrust/petersen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sigfrust/error.hpp"
#include "sigfrust/signed_graph.hpp"
#include "sigfrust/solvers.hpp"

namespace sigfrust {

std::string_view to_string(EdgeRole role) {
  switch (role) {
    case EdgeRole::kOuter:
      return "outer";
    case EdgeRole::kSpoke:
      return "spoke";
    case EdgeRole::kInner:
      return "inner";
  }
  return "?";
}

EdgeRole parse_edge_role(std::string_view text) {
  if (text == "outer") return EdgeRole::kOuter;
  if (text == "spoke") return EdgeRole::kSpoke;
  if (text == "inner") return EdgeRole::kInner;
  throw InvalidInput("unknown edge role '" + std::string(text) + "'");
}

PetersenLayout::PetersenLayout(std::size_t n, std::size_t k, GraphPtr graph)
    : n_(n), k_(k), d_(std::gcd(n, k)), graph_(std::move(graph)) {}

EdgeRole PetersenLayout::role(std::size_t e) const {
  if (e >= 3 * n_) throw InvalidInput("edge " + std::to_string(e) + " out of range");
  if (e < n_) return EdgeRole::kOuter;
  if (e < 2 * n_) return EdgeRole::kSpoke;
  return EdgeRole::kInner;
}

std::vector<EdgeRole> PetersenLayout::roles() const {
  std::vector<EdgeRole> out;
  out.reserve(3 * n_);
  for (std::size_t e = 0; e < 3 * n_; ++e) out.push_back(role(e));
  return out;
}

EdgeRole GnLayout::role(std::size_t e) const {
  if (e >= 2 * n_) throw InvalidInput("edge " + std::to_string(e) + " out of range");
  return e < n_ ? EdgeRole::kOuter : EdgeRole::kSpoke;
}

VertexSet GnLayout::u_vertices() const {
  VertexSet s(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) s.insert(i);
  return s;
}

namespace {

std::vector<std::string> uv_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

PetersenLayout generate_petersen(std::size_t n, std::size_t k) {
  if (k < 1) throw InvalidParameters("P(n,k) needs 2 <= 2k (got k = " + std::to_string(k) + ")");
  if (2 * k >= n)
    throw InvalidParameters("P(n,k) needs 2k < n (got n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({n + i, n + (i + k) % n});
  return PetersenLayout(n, k, make_graph(2 * n, std::move(edges), uv_labels(n)));
}

GnLayout generate_gn(std::size_t n) {
  if (n < 3) throw InvalidParameters("G_n needs n >= 3 (got n = " + std::to_string(n) + ")");
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i});
  return GnLayout(n, make_graph(2 * n, std::move(edges), uv_labels(n)));
}

std::vector<std::vector<std::size_t>> inner_cycles(const PetersenLayout& layout) {
  const std::size_t n = layout.n();
  const std::size_t len = n / layout.d();
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t i = 0; i < layout.d(); ++i) {
    std::vector<std::size_t> c;
    c.reserve(len);
    for (std::size_t step = 0; step < len; ++step) c.push_back(layout.v(static_cast<std::ptrdiff_t>(i + step * layout.k())));
    cycles.push_back(std::move(c));
  }
  return cycles;
}

namespace {

// Cycles are rooted at their smallest vertex and only the orientation whose
// second vertex is smaller than its last is kept.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t length) : g_(g), length_(length), on_path_(g.vertex_count(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      root_ = s;
      path_ = {s};
      edges_.clear();
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return std::move(found_);
  }

 private:
  void extend() {
    const std::size_t tail = path_.back();
    if (path_.size() == length_) {
      if (path_[1] > path_.back()) return;
      if (auto closing = g_.find_edge(tail, root_)) {
        auto cycle = edges_;
        cycle.push_back(*closing);
        found_.push_back(std::move(cycle));
      }
      return;
    }
    for (const auto& inc : g_.neighbors(tail)) {
      if (inc.neighbor <= root_ || on_path_[inc.neighbor]) continue;
      on_path_[inc.neighbor] = true;
      path_.push_back(inc.neighbor);
      edges_.push_back(inc.edge);
      extend();
      edges_.pop_back();
      path_.pop_back();
      on_path_[inc.neighbor] = false;
    }
  }

  const Graph& g_;
  std::size_t length_;
  std::size_t root_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> edges_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_cycles_of_length(const Graph& g, std::size_t length) {
  if (length < 3 || length > 8)
    throw InvalidParameters("cycle length must satisfy 3 <= L <= 8 (got " + std::to_string(length) + ")");
  return CycleSearch(g, length).run();
}

std::vector<std::vector<std::size_t>> rotation_automorphisms(const PetersenLayout& layout) {
  const std::size_t n = layout.n();
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::size_t> perm(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      auto shifted = static_cast<std::ptrdiff_t>(i + r);
      perm[layout.outer_edge(static_cast<std::ptrdiff_t>(i))] = layout.outer_edge(shifted);
      perm[layout.spoke(static_cast<std::ptrdiff_t>(i))] = layout.spoke(shifted);
      perm[layout.inner_edge(static_cast<std::ptrdiff_t>(i))] = layout.inner_edge(shifted);
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

Signature extremal_signature_prism(std::size_t n) {
  if (n < 3) throw InvalidParameters("prism signature needs n >= 3");
  const auto layout = generate_petersen(n, 1);
  Signature s(layout.graph().edge_count());
  if (n % 2 == 1) {
    // n = 2h+1: spokes at 0, 2, ..., 2h-2 and the outer edge u_{2h-1}u_{2h}.
    const std::size_t h = (n - 1) / 2;
    for (std::size_t i = 0; i + 2 <= 2 * h; i += 2) s.insert(layout.spoke(static_cast<std::ptrdiff_t>(i)));
    s.insert(layout.outer_edge(static_cast<std::ptrdiff_t>(2 * h - 1)));
  } else {
    // n = 2h: spokes at 0, 2, ..., 2h-4, outer u_{2h-3}u_{2h-2}, inner v_{2h-2}v_{2h-1}.
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i + 4 <= 2 * h; i += 2) s.insert(layout.spoke(static_cast<std::ptrdiff_t>(i)));
    s.insert(layout.outer_edge(static_cast<std::ptrdiff_t>(2 * h - 3)));
    s.insert(layout.inner_edge(static_cast<std::ptrdiff_t>(2 * h - 2)));
  }
  return s;
}

namespace {

// First size-3 signature of the Petersen graph (edge subsets in lexicographic
// order) whose frustration index is 3.
Signature petersen_frustration_three() {
  const auto layout = generate_petersen(5, 2);
  const std::size_t m = layout.graph().edge_count();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        Signature s(m, {a, b, c});
        if (frustration_index(SignedGraph(layout.graph_ptr(), s)).value == 3) return s;
      }
  throw InvalidParameters("no signature of the Petersen graph reaches frustration index 3");
}

}  // namespace

Signature extremal_signature_k2(std::size_t m) {
  if (m < 2) throw InvalidParameters("k = 2 signature needs m >= 2 (got m = " + std::to_string(m) + ")");
  if (m == 2) {
    static const Signature cached = petersen_frustration_three();
    return cached;
  }
  const auto layout = generate_petersen(2 * m + 1, 2);
  Signature s(layout.graph().edge_count());
  auto spoke = [&](std::size_t i) { s.insert(layout.spoke(static_cast<std::ptrdiff_t>(i))); };
  if (m % 2 == 1) {
    // Spoke pairs {0,1}, {4,5}, ..., {2m-6, 2m-5}; spoke 2m-2; inner v_{2m-3}v_{2m-1}.
    for (std::size_t a = 0; a + 5 <= 2 * m; a += 4) {
      spoke(a);
      spoke(a + 1);
    }
    spoke(2 * m - 2);
    s.insert(layout.inner_edge(static_cast<std::ptrdiff_t>(2 * m - 3)));
  } else {
    // Spoke pairs {0,1}, {4,5}, ..., {2m-4, 2m-3}; inner v_{2m-2}v_{2m}.
    for (std::size_t a = 0; a + 3 <= 2 * m; a += 4) {
      spoke(a);
      spoke(a + 1);
    }
    s.insert(layout.inner_edge(static_cast<std::ptrdiff_t>(2 * m - 2)));
  }
  return s;
}

Signature extremal_signature_k3(std::size_t m) {
  if (m < 2) throw InvalidParameters("k = 3 signature needs m >= 2 (got m = " + std::to_string(m) + ")");
  if (std::gcd(4 * m - 1, std::size_t{3}) != 1)
    throw InvalidParameters("k = 3 signature needs gcd(4m-1, 3) = 1 (got 4m-1 = " + std::to_string(4 * m - 1) + ")");
  const auto layout = generate_petersen(4 * m - 1, 3);
  Signature s(layout.graph().edge_count());
  // Spokes at 0, 2, ..., 4m-4 and the outer edge u_{4m-3}u_{4m-2}.
  for (std::size_t i = 0; i + 4 <= 4 * m; i += 2) s.insert(layout.spoke(static_cast<std::ptrdiff_t>(i)));
  s.insert(layout.outer_edge(static_cast<std::ptrdiff_t>(4 * m - 3)));
  return s;
}

}  // namespace sigfrust

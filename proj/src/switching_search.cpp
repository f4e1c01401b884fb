#include "switching_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <queue>
#include <string>
#include <thread>

#include "sigfrust/error.hpp"
#include "sigfrust/signed_graph.hpp"

namespace sigfrust::detail {

namespace {

// ---------------------------------------------------------------------------
// Edge masks. FixedMask covers graphs with up to 64*W edges; DynMask is the
// fallback for anything larger.

template <std::size_t W>
struct FixedMask {
  std::array<std::uint64_t, W> w{};

  static FixedMask from(std::span<const std::uint64_t> words) {
    FixedMask m;
    for (std::size_t i = 0; i < W && i < words.size(); ++i) m.w[i] = words[i];
    return m;
  }
  void xor_in(const FixedMask& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] ^= o.w[i];
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
    return c;
  }
  std::span<const std::uint64_t> words() const { return w; }
};

struct DynMask {
  std::vector<std::uint64_t> w;

  static DynMask from(std::span<const std::uint64_t> words) { return {std::vector<std::uint64_t>(words.begin(), words.end())}; }
  void xor_in(const DynMask& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::span<const std::uint64_t> words() const { return w; }
};

// For sets of equal size: the one holding the smallest differing index is
// lexicographically smaller.
template <class Mask>
bool same_size_lex_less(const Mask& a, const Mask& b) {
  auto aw = a.words();
  auto bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    std::uint64_t diff = aw[i] ^ bw[i];
    if (diff) return (aw[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

template <class Mask>
struct GrayBest {
  bool within_limit = false;
  bool any = false;
  std::size_t count = 0;
  Mask mask{};
  std::uint64_t code = 0;
  std::uint64_t explored = 0;

  void offer(std::size_t c, const Mask& m, std::uint64_t x) {
    if (!any || c < count || (c == count && same_size_lex_less(m, mask))) {
      any = true;
      count = c;
      mask = m;
      code = x;
    }
  }
};

template <class Mask>
GrayBest<Mask> gray_chunk(const Mask& base, const std::vector<Mask>& toggles, std::size_t low_bits, std::uint64_t chunk,
                          std::optional<std::size_t> limit, const std::atomic<bool>& stop) {
  GrayBest<Mask> best;
  Mask cur = base;
  std::uint64_t code = chunk << low_bits;
  for (std::size_t t = 0; (chunk >> t) != 0; ++t)
    if ((chunk >> t) & 1U) cur.xor_in(toggles[low_bits + t]);

  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t j = 0; j < steps; ++j) {
    if (j != 0) {
      auto b = static_cast<std::size_t>(std::countr_zero(j));
      cur.xor_in(toggles[b]);
      code ^= std::uint64_t{1} << b;
    }
    ++best.explored;
    std::size_t c = cur.popcount();
    if (limit && c <= *limit) {
      best.within_limit = true;
      return best;
    }
    best.offer(c, cur, code);
    if (limit && (j & 0xFFFF) == 0 && stop.load(std::memory_order_relaxed)) return best;
  }
  return best;
}

template <class Mask>
SwitchOutcome gray_search(const SwitchProblem& p, std::optional<std::size_t> limit, unsigned workers) {
  const Graph& g = *p.graph;
  const std::size_t m = g.edge_count();
  const std::size_t f = p.free.size();

  std::vector<Mask> toggles;
  toggles.reserve(f);
  for (std::size_t v : p.free) {
    Signature inc(m);
    for (const auto& nb : g.neighbors(v)) inc.insert(nb.edge);
    toggles.push_back(Mask::from(inc.words()));
  }
  const Mask base = Mask::from(p.base.words());

  std::size_t high_bits = 0;
  if (workers > 1) {
    while ((std::size_t{1} << high_bits) < std::size_t{workers} * 4 && high_bits < f) ++high_bits;
  }
  const std::size_t low_bits = f - high_bits;
  const std::uint64_t chunks = std::uint64_t{1} << high_bits;

  std::vector<GrayBest<Mask>> results(chunks);
  std::atomic<bool> stop{false};
  auto work = [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      if (stop.load()) break;
      results[c] = gray_chunk(base, toggles, low_bits, c, limit, stop);
      if (results[c].within_limit) stop.store(true);
    }
  };
  if (workers <= 1 || chunks == 1) {
    workers = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SwitchOutcome out;
  GrayBest<Mask> best;
  for (const auto& r : results) {
    out.explored += r.explored;
    if (r.within_limit) out.within_limit = true;
    if (r.any) best.offer(r.count, r.mask, r.code);
  }
  if (out.within_limit) return out;

  out.value = best.count;
  out.signature = Signature::from_words(m, best.mask.words());
  out.switched = VertexSet(g.vertex_count());
  for (std::size_t i = 0; i < f; ++i)
    if ((best.code >> i) & 1U) out.switched.insert(p.free[i]);
  return out;
}

template <class Mask>
std::vector<Signature> gray_collect(const SwitchProblem& p) {
  const Graph& g = *p.graph;
  const std::size_t m = g.edge_count();
  std::vector<Mask> toggles;
  for (std::size_t v : p.free) {
    Signature inc(m);
    for (const auto& nb : g.neighbors(v)) inc.insert(nb.edge);
    toggles.push_back(Mask::from(inc.words()));
  }
  Mask cur = Mask::from(p.base.words());
  std::size_t best = cur.popcount();
  std::vector<Mask> keep{cur};
  const std::uint64_t steps = std::uint64_t{1} << p.free.size();
  for (std::uint64_t j = 1; j < steps; ++j) {
    cur.xor_in(toggles[static_cast<std::size_t>(std::countr_zero(j))]);
    std::size_t c = cur.popcount();
    if (c < best) {
      best = c;
      keep.clear();
    }
    if (c == best) keep.push_back(cur);
  }
  std::vector<Signature> out;
  out.reserve(keep.size());
  for (const auto& k : keep) out.push_back(Signature::from_words(m, k.words()));
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) { return lex_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// Branch and bound over vertex states. A vertex in state 1 is switched. The
// bound adds, for every unassigned vertex, the cheaper of its two states
// counted against already-assigned neighbours only, so no edge is counted
// twice.

class BranchAndBound {
 public:
  BranchAndBound(const SwitchProblem& p, std::uint64_t budget)
      : g_(*p.graph), budget_(budget), neg_(g_.edge_count(), 0), free_(g_.vertex_count(), 0) {
    for (std::size_t e : p.base.members()) neg_[e] = 1;
    for (std::size_t v : p.free) free_[v] = 1;
    order_ = bfs_order();
    reset();
  }

  // Greedy descent: switch any free vertex with a negative majority.
  std::size_t greedy_upper_bound() const {
    std::vector<std::uint8_t> s(g_.vertex_count(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
        if (!free_[v]) continue;
        std::size_t bad = 0;
        for (const auto& nb : g_.neighbors(v)) bad += neg_[nb.edge] ^ s[v] ^ s[nb.neighbor];
        if (2 * bad > g_.degree(v)) {
          s[v] ^= 1;
          changed = true;
        }
      }
    }
    std::size_t cost = 0;
    for (std::size_t e = 0; e < g_.edge_count(); ++e) cost += neg_[e] ^ s[g_.edge(e).u] ^ s[g_.edge(e).v];
    return cost;
  }

  bool exists_at_most(std::size_t limit) {
    reset();
    mode_ = Mode::kFeasible;
    limit_ = limit;
    found_ = false;
    dfs(0);
    return found_;
  }

  // Exact minimum given an inclusive upper bound on it.
  void minimize(std::size_t upper) {
    reset();
    mode_ = Mode::kMinimize;
    best_value_ = upper;
    have_best_ = false;
    dfs(0);
    if (!have_best_) throw std::logic_error("branch and bound upper bound below optimum");
  }

  std::size_t best_value() const { return best_value_; }
  const Signature& best_signature() const { return best_sig_; }
  const VertexSet& best_switched() const { return best_x_; }
  std::uint64_t explored() const { return explored_; }
  void set_lower_bound_hint(std::size_t lb) { lower_bound_hint_ = lb; }

 private:
  enum class Mode { kFeasible, kMinimize };

  std::vector<std::size_t> bfs_order() const {
    std::vector<std::size_t> order;
    std::vector<bool> seen(g_.vertex_count(), false);
    std::queue<std::size_t> q;
    for (std::size_t r = 0; r < g_.vertex_count(); ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      q.push(r);
      while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        order.push_back(x);
        for (const auto& nb : g_.neighbors(x)) {
          if (!seen[nb.neighbor]) {
            seen[nb.neighbor] = true;
            q.push(nb.neighbor);
          }
        }
      }
    }
    return order;
  }

  void reset() {
    const std::size_t n = g_.vertex_count();
    assigned_.assign(n, 0);
    state_.assign(n, 0);
    bad0_.assign(n, 0);
    bad1_.assign(n, 0);
    cost_ = 0;
    bound_ = 0;
  }

  std::size_t vertex_min(std::size_t v) const { return std::min(bad0_[v], bad1_[v]); }

  void assign(std::size_t v, std::uint8_t s) {
    assigned_[v] = 1;
    state_[v] = s;
    bound_ -= vertex_min(v);
    cost_ += s ? bad1_[v] : bad0_[v];
    for (const auto& nb : g_.neighbors(v)) {
      std::size_t w = nb.neighbor;
      if (assigned_[w]) continue;
      std::size_t before = vertex_min(w);
      // Edge vw is negative after switching iff neg ^ s ^ state(w) == 1.
      if (neg_[nb.edge] ^ s) ++bad0_[w]; else ++bad1_[w];
      bound_ += vertex_min(w) - before;
    }
  }

  void unassign(std::size_t v) {
    std::uint8_t s = state_[v];
    for (const auto& nb : g_.neighbors(v)) {
      std::size_t w = nb.neighbor;
      if (assigned_[w]) continue;
      std::size_t before = vertex_min(w);
      if (neg_[nb.edge] ^ s) --bad0_[w]; else --bad1_[w];
      bound_ -= before - vertex_min(w);
    }
    cost_ -= s ? bad1_[v] : bad0_[v];
    bound_ += vertex_min(v);
    assigned_[v] = 0;
  }

  bool done() const { return mode_ == Mode::kFeasible && found_; }

  void leaf() {
    if (mode_ == Mode::kFeasible) {
      found_ = true;
      return;
    }
    Signature sig(g_.edge_count());
    for (std::size_t e = 0; e < g_.edge_count(); ++e)
      if (neg_[e] ^ state_[g_.edge(e).u] ^ state_[g_.edge(e).v]) sig.insert(e);
    if (!have_best_ || cost_ < best_value_ || (cost_ == best_value_ && lex_less(sig, best_sig_))) {
      have_best_ = true;
      best_value_ = cost_;
      best_sig_ = std::move(sig);
      best_x_ = VertexSet(g_.vertex_count());
      for (std::size_t v = 0; v < g_.vertex_count(); ++v)
        if (state_[v]) best_x_.insert(v);
    }
  }

  bool pruned() const {
    std::size_t reach = cost_ + bound_;
    return mode_ == Mode::kFeasible ? reach > limit_ : reach > best_value_;
  }

  void dfs(std::size_t pos) {
    if (++explored_ > budget_)
      throw BudgetExceeded("branch and bound exceeded its state budget of " + std::to_string(budget_),
                           lower_bound_hint_, explored_ - 1);
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const std::size_t v = order_[pos];
    if (!free_[v]) {
      assign(v, 0);
      if (!pruned()) dfs(pos + 1);
      unassign(v);
      return;
    }
    std::uint8_t first = bad1_[v] < bad0_[v] ? 1 : 0;
    for (std::uint8_t s : {first, static_cast<std::uint8_t>(first ^ 1)}) {
      assign(v, s);
      if (!pruned()) dfs(pos + 1);
      unassign(v);
      if (done()) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> free_;
  std::vector<std::size_t> order_;

  std::vector<std::uint8_t> assigned_;
  std::vector<std::uint8_t> state_;
  std::vector<std::size_t> bad0_;
  std::vector<std::size_t> bad1_;
  std::size_t cost_ = 0;
  std::size_t bound_ = 0;

  Mode mode_ = Mode::kMinimize;
  std::size_t limit_ = 0;
  bool found_ = false;
  bool have_best_ = false;
  std::size_t best_value_ = 0;
  Signature best_sig_;
  VertexSet best_x_;
  std::uint64_t explored_ = 0;
  std::size_t lower_bound_hint_ = 0;
};

SwitchOutcome bnb_search(const SwitchProblem& p, std::optional<std::size_t> limit, std::uint64_t budget) {
  BranchAndBound bnb(p, budget);
  SwitchOutcome out;
  const std::size_t upper = bnb.greedy_upper_bound();
  if (limit) {
    if (upper <= *limit || bnb.exists_at_most(*limit)) {
      out.within_limit = true;
      out.explored = bnb.explored();
      return out;
    }
    bnb.set_lower_bound_hint(*limit + 1);
  }
  bnb.minimize(upper);
  out.value = bnb.best_value();
  out.signature = bnb.best_signature();
  out.switched = bnb.best_switched();
  out.explored = bnb.explored();
  return out;
}

void check_gray_budget(std::size_t free_count, std::uint64_t budget) {
  if (free_count >= 63 || (std::uint64_t{1} << free_count) > budget)
    throw BudgetExceeded("Gray-code enumeration of 2^" + std::to_string(free_count) +
                             " switchings exceeds the state budget of " + std::to_string(budget),
                         0, 0);
}

}  // namespace

std::vector<std::size_t> non_root_vertices(const Graph& g) {
  CycleBasis basis = cycle_basis(g);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (basis.parent[v] != CycleBasis::kNone) out.push_back(v);
  return out;
}

SwitchOutcome minimize_switching(const SwitchProblem& problem, std::optional<std::size_t> limit, SwitchingMethod method,
                                 std::uint64_t budget, unsigned workers) {
  const std::size_t f = problem.free.size();
  const bool gray = method == SwitchingMethod::kGrayCode || (method == SwitchingMethod::kAuto && f <= kGrayCodeFreeLimit);
  if (!gray) return bnb_search(problem, limit, budget);

  check_gray_budget(f, budget);
  const std::size_t m = problem.graph->edge_count();
  if (m <= 64) return gray_search<FixedMask<1>>(problem, limit, workers);
  if (m <= 128) return gray_search<FixedMask<2>>(problem, limit, workers);
  return gray_search<DynMask>(problem, limit, workers);
}

std::vector<Signature> all_minimum_signatures(const SwitchProblem& problem, std::uint64_t budget) {
  check_gray_budget(problem.free.size(), budget);
  const std::size_t m = problem.graph->edge_count();
  if (m <= 64) return gray_collect<FixedMask<1>>(problem);
  if (m <= 128) return gray_collect<FixedMask<2>>(problem);
  return gray_collect<DynMask>(problem);
}

}  // namespace sigfrust::detail

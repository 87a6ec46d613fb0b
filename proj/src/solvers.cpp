#include "demkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <numeric>

#include "demkit/parallel.hpp"

namespace demkit {

std::string_view to_string(Method m) { return m == Method::Exact ? "exact" : "greedy"; }

double harmonic(int m) {
  double h = 0.0;
  for (int k = 1; k <= m; ++k) h += 1.0 / k;
  return h;
}

namespace {

/// Fixed-width bitset over edge ids.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

  static Bits full(int size) {
    Bits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct CoverInstance {
  int elements = 0;
  std::vector<Bits> sets;                // per vertex
  std::vector<std::vector<int>> owners;  // per element: vertices covering it
};

CoverInstance make_instance(const Graph& g) {
  CoverInstance inst;
  inst.elements = g.size();
  const int n = g.order();
  std::vector<std::vector<int>> ids(static_cast<std::size_t>(n));
  parallel_for(n, [&](int x) { ids[x] = em_edge_ids(g, x); });
  inst.sets.assign(static_cast<std::size_t>(n), Bits(inst.elements));
  inst.owners.assign(static_cast<std::size_t>(inst.elements), {});
  for (int x = 0; x < n; ++x) {
    for (int e : ids[x]) {
      inst.sets[x].set(e);
      inst.owners[e].push_back(x);
    }
  }
  return inst;
}

std::vector<int> greedy_cover(const CoverInstance& inst) {
  Bits uncovered = Bits::full(inst.elements);
  std::vector<int> picked;
  while (!uncovered.none()) {
    int best = -1, best_gain = 0;
    for (int x = 0; x < static_cast<int>(inst.sets.size()); ++x) {
      const int gain = inst.sets[x].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    if (best < 0) throw Error(ErrorCode::BadParameter, "internal: some edge is monitored by no vertex");
    picked.push_back(best);
    uncovered = uncovered.minus(inst.sets[best]);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

struct BudgetHit {};

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, std::optional<std::int64_t> budget) : inst_(inst), budget_(budget) {}

  std::int64_t nodes() const { return nodes_; }

  /// Is there a cover of `uncovered` with at most `limit` non-excluded sets?
  /// On success `chosen` receives the sets used.
  bool feasible(const Bits& uncovered, std::vector<bool> excluded, int limit, std::vector<int>& chosen) {
    if (budget_ && nodes_ >= *budget_) throw BudgetHit{};
    ++nodes_;
    if (uncovered.none()) return true;
    if (limit <= 0) return false;

    const int n = static_cast<int>(inst_.sets.size());
    const int remaining = uncovered.count();
    int max_gain = 0;
    std::vector<int> gain(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
      if (excluded[x]) continue;
      gain[x] = inst_.sets[x].count_and(uncovered);
      max_gain = std::max(max_gain, gain[x]);
    }
    if (max_gain == 0) return false;
    if ((remaining + max_gain - 1) / max_gain > limit) return false;

    // Edges with pairwise disjoint owner sets each need their own monitor.
    // The same pass finds the edge with the fewest live owners to branch on.
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int packing = 0;
    int branch_edge = -1;
    int branch_owners = n + 1;
    bool dead = false;
    uncovered.for_each([&](int e) {
      int live = 0;
      bool clash = false;
      for (int x : inst_.owners[e]) {
        if (excluded[x]) continue;
        ++live;
        if (used[x]) clash = true;
      }
      if (live == 0) dead = true;
      if (live < branch_owners) {
        branch_owners = live;
        branch_edge = e;
      }
      if (!clash && live > 0) {
        ++packing;
        for (int x : inst_.owners[e])
          if (!excluded[x]) used[x] = true;
      }
    });
    if (dead || packing > limit) return false;

    std::vector<int> candidates;
    for (int x : inst_.owners[branch_edge])
      if (!excluded[x]) candidates.push_back(x);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return gain[a] > gain[b]; });

    for (int x : candidates) {
      chosen.push_back(x);
      if (feasible(uncovered.minus(inst_.sets[x]), excluded, limit - 1, chosen)) return true;
      chosen.pop_back();
      excluded[x] = true;
    }
    return false;
  }

 private:
  const CoverInstance& inst_;
  std::optional<std::int64_t> budget_;
  std::int64_t nodes_ = 0;
};

std::vector<Vertex> lift(const BaseGraph& base, const std::vector<int>& picked) {
  std::vector<Vertex> out;
  out.reserve(picked.size());
  for (int x : picked) out.push_back(base.to_original[x]);
  std::sort(out.begin(), out.end());
  return out;
}

// Base vertex each vertex of g hangs from (itself for base vertices).
std::vector<int> base_roots(const Graph& g, const BaseGraph& base) {
  std::vector<int> root(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (base.to_base[v]) {
      root[v] = *base.to_base[v];
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (root[w] >= 0) continue;
      root[w] = root[v];
      queue.push_back(w);
    }
  }
  return root;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

DemResult dem_exact(const Graph& g, const ExactOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_connected(g, "dem_exact");
  DemResult r;
  r.method = Method::Exact;
  r.exact = true;
  if (g.size() == 0) {
    r.certificate = is_monitoring_set(g, r.monitor_set);
    return r;
  }
  if (is_tree(g)) {
    r.value = 1;
    r.monitor_set = {0};
    r.certificate = is_monitoring_set(g, r.monitor_set);
    r.stats.millis = elapsed_ms(start);
    return r;
  }

  const BaseGraph base = base_graph(g);
  const CoverInstance inst = make_instance(base.graph);
  const int n = base.graph.order();
  CoverSearch search(inst, options.budget);
  const Bits all = Bits::full(inst.elements);

  std::vector<int> best = greedy_cover(inst);
  std::optional<std::vector<Vertex>> lexicographic;
  bool proven = false;
  try {
    while (true) {
      std::vector<int> chosen;
      if (!search.feasible(all, std::vector<bool>(static_cast<std::size_t>(n), false),
                           static_cast<int>(best.size()) - 1, chosen)) {
        proven = true;
        break;
      }
      std::sort(chosen.begin(), chosen.end());
      best = std::move(chosen);
    }
    // Lexicographically smallest optimal set over the vertices of g. A
    // stripped vertex monitors the same base edges as its root.
    const std::vector<int> root = base_roots(g, base);
    const int k = static_cast<int>(best.size());
    std::vector<Vertex> prefix;
    Bits uncovered = all;
    for (int pos = 0; pos < k; ++pos) {
      const int from = prefix.empty() ? 0 : prefix.back() + 1;
      bool placed = false;
      for (Vertex v = from; v < g.order() && !placed; ++v) {
        std::vector<bool> excluded(static_cast<std::size_t>(n), true);
        for (Vertex w = v + 1; w < g.order(); ++w) excluded[root[w]] = false;
        std::vector<int> rest;
        const Bits left = uncovered.minus(inst.sets[root[v]]);
        if (search.feasible(left, excluded, k - pos - 1, rest)) {
          prefix.push_back(v);
          uncovered = left;
          placed = true;
        }
      }
      if (!placed) throw Error(ErrorCode::BadParameter, "internal: lexicographic completion failed");
    }
    lexicographic = std::move(prefix);
  } catch (const BudgetHit&) {
    // Keep the incumbent. A proven value stays exact even if the
    // lexicographic pass was cut short.
  }

  r.exact = proven;
  r.monitor_set = lexicographic ? *lexicographic : lift(base, best);
  r.value = static_cast<int>(r.monitor_set.size());
  r.certificate = is_monitoring_set(g, r.monitor_set);
  r.stats.nodes = search.nodes();
  r.stats.millis = elapsed_ms(start);
  return r;
}

DemResult dem_greedy(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  require_connected(g, "dem_greedy");
  DemResult r;
  r.method = Method::Greedy;
  r.exact = false;
  if (g.size() > 0) {
    const CoverInstance inst = make_instance(g);
    r.monitor_set = greedy_cover(inst);
    r.stats.nodes = static_cast<std::int64_t>(r.monitor_set.size());
  }
  r.value = static_cast<int>(r.monitor_set.size());
  r.certificate = is_monitoring_set(g, r.monitor_set);
  r.stats.millis = elapsed_ms(start);
  return r;
}

bool verify_dem_result(const Graph& g, const DemResult& r) {
  if (!is_connected(g)) return false;
  if (r.value != static_cast<int>(r.monitor_set.size())) return false;
  for (Vertex v : r.monitor_set)
    if (!g.contains(v)) return false;
  if (g.size() > 0 && (r.value < 1 || r.value > g.order() - 1)) return false;

  const MonitoringCertificate cert = certify_naive(g, r.monitor_set);
  if (!cert.is_monitoring_set()) return false;
  if (!r.exact || r.method != Method::Exact || g.size() == 0) return true;

  const BaseGraph base = base_graph(g);
  const Graph& gb = base.graph;
  if (base.was_tree) return r.value == 1;
  if (gb.order() > 12) return true;

  // Minimality: no (value - 1)-subset of V(G_b) monitors G_b. K_12 has 66
  // edges, so 128-bit masks suffice.
  const int n = gb.order();
  std::vector<std::bitset<128>> masks(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (const Edge& e : em_set_naive(gb, x).edges) masks[x].set(static_cast<std::size_t>(*gb.edge_id(e)));
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    if (std::popcount(subset) != r.value - 1) continue;
    std::bitset<128> covered;
    for (int x = 0; x < n; ++x)
      if (subset & (1U << x)) covered |= masks[x];
    if (static_cast<int>(covered.count()) == gb.size()) return false;
  }
  return true;
}

}  // namespace demkit

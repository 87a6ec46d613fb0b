#pragma once

// Test-side reference implementations. None of these call into the library's
// BFS, EM or solver code; they work from the edge list alone.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "demkit/graph.hpp"

namespace oracle {

using demkit::Edge;
using demkit::Graph;
using demkit::Vertex;

inline constexpr int kInf = 1 << 28;

using Matrix = std::vector<std::vector<int>>;

/// All-pairs distances by repeated edge relaxation, optionally without one edge.
inline Matrix all_pairs(int n, const std::vector<Edge>& edges, std::optional<Edge> skip = std::nullopt) {
  Matrix d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : edges) {
      if (skip && *skip == e) continue;
      for (int s = 0; s < n; ++s) {
        if (d[s][e.u] + 1 < d[s][e.v]) d[s][e.v] = d[s][e.u] + 1, changed = true;
        if (d[s][e.v] + 1 < d[s][e.u]) d[s][e.u] = d[s][e.v] + 1, changed = true;
      }
    }
  }
  return d;
}

inline Matrix all_pairs(const Graph& g, std::optional<Edge> skip = std::nullopt) {
  return all_pairs(g.order(), g.edges(), skip);
}

/// Distance tables for G and every G - e, computed once per graph.
struct Tables {
  Matrix base;
  std::vector<Matrix> without;  // indexed like g.edges()

  explicit Tables(const Graph& g) : base(all_pairs(g)) {
    for (const Edge& e : g.edges()) without.push_back(all_pairs(g, e));
  }
};

/// EM(x) straight from the definition.
inline std::vector<Edge> em(const Graph& g, const Tables& t, Vertex x) {
  std::vector<Edge> out;
  for (std::size_t id = 0; id < g.edges().size(); ++id)
    if (t.base[x] != t.without[id][x]) out.push_back(g.edges()[id]);
  return out;
}

/// P(M, e) as sorted (monitor, target) pairs.
inline std::vector<std::pair<Vertex, Vertex>> pairs(const Graph& g, const Tables& t, const std::vector<Vertex>& m,
                                                    Edge e) {
  const auto id = static_cast<std::size_t>(std::find(g.edges().begin(), g.edges().end(), e) - g.edges().begin());
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex x : m)
    for (Vertex y = 0; y < g.order(); ++y)
      if (t.base[x][y] != t.without[id][x][y]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

inline int components(int n, const std::vector<Edge>& edges, std::optional<Edge> skip = std::nullopt) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int count = n;
  for (const Edge& e : edges) {
    if (skip && *skip == e) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[a] = b, --count;
  }
  return count;
}

/// Bridges by deleting each edge and counting components.
inline std::vector<Edge> bridges(const Graph& g) {
  const int base = components(g.order(), g.edges());
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (components(g.order(), g.edges(), e) > base) out.push_back(e);
  return out;
}

/// Minimum monitoring set by enumerating subsets in increasing size, then
/// lexicographically. Returns the first (smallest) hit.
inline std::vector<Vertex> min_monitoring_set(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (m == 0) return {};
  Tables t(g);
  std::vector<std::vector<bool>> cover(n, std::vector<bool>(m));
  for (Vertex x = 0; x < n; ++x)
    for (int id = 0; id < m; ++id) cover[x][id] = t.base[x] != t.without[id][x];
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      bool all = true;
      for (int id = 0; id < m && all; ++id) {
        bool hit = false;
        for (int x : pick) hit = hit || cover[x][id];
        all = hit;
      }
      if (all) return std::vector<Vertex>(pick.begin(), pick.end());
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

inline int min_vertex_cover(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      bool ok = true;
      for (const Edge& e : g.edges()) ok = ok && (((mask >> e.u) & 1u) || ((mask >> e.v) & 1u));
      if (ok) return k;
    }
  }
  return n;
}

inline int max_clique(const Graph& g) {
  const int n = g.order();
  int best = n > 0 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (((mask >> a) & 1u) && ((mask >> b) & 1u)) ok = g.has_edge(a, b);
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// --- corpora -----------------------------------------------------------------

inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    Graph g(n, edges);
    if (n == 1 || components(n, g.edges()) == 1) return g;
  }
}

inline Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, edges);
}

/// Random connected graphs with 2..max_n vertices and a random density.
inline std::vector<Graph> random_corpus(std::uint64_t seed, int count, int max_n, int min_n = 2) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) {
    const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    out.push_back(random_connected(rng, n, p));
  }
  return out;
}

/// A random cyclic core with random pendant trees hung on it.
inline Graph core_with_pendants(std::mt19937_64& rng, int core_n, int extra) {
  Graph core;
  do core = random_connected(rng, core_n, 0.5);
  while (core.size() < core_n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : core.edges()) edges.emplace_back(e.u, e.v);
  for (int k = 0; k < extra; ++k) {
    const int v = core_n + k;
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  return Graph(core_n + extra, edges);
}

}  // namespace oracle

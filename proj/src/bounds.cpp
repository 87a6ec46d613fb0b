#include <algorithm>
#include <bit>
#include <cstdint>

#include "demkit/monitor.hpp"
#include "demkit/structural.hpp"

namespace demkit {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g, bool complement) {
  const int n = g.order();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (v == w) continue;
      if (g.has_edge(v, w) != complement) adj[v] |= Mask{1} << w;
    }
  }
  return adj;
}

// Bron-Kerbosch with pivoting, tracking only the best size.
void expand(const std::vector<Mask>& adj, int size, Mask candidates, Mask excluded, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const Mask pool = candidates | excluded;
  int pivot = std::countr_zero(pool);
  int pivot_degree = -1;
  for (Mask p = pool; p; p &= p - 1) {
    const int u = std::countr_zero(p);
    const int d = std::popcount(candidates & adj[u]);
    if (d > pivot_degree) {
      pivot_degree = d;
      pivot = u;
    }
  }
  for (Mask rest = candidates & ~adj[pivot]; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Mask bit = Mask{1} << v;
    expand(adj, size + 1, candidates & adj[v], excluded & adj[v], best);
    candidates &= ~bit;
    excluded |= bit;
  }
}

int max_clique(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  int best = 0;
  expand(adj, 0, all, 0, best);
  return best;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() > kCliqueGuard) throw Error(ErrorCode::TooLarge, "clique_number limited to 64 vertices");
  return max_clique(adjacency_masks(g, false));
}

int independence_number(const Graph& g) {
  if (g.order() > kVertexCoverGuard) throw Error(ErrorCode::TooLarge, "independence_number limited to 40 vertices");
  return max_clique(adjacency_masks(g, true));
}

int vertex_cover_number(const Graph& g) { return g.order() - independence_number(g); }

int BoundsReport::lower_bound() const {
  int lb = density_lb;
  if (clique_lb) lb = std::max(lb, *clique_lb);
  if (regular_lb) lb = std::max(lb, *regular_lb);
  return lb;
}

int BoundsReport::upper_bound() const {
  int ub = std::max(1, n - 1);
  if (vertex_cover_ub) ub = std::min(ub, *vertex_cover_ub);
  if (gallai_ub) ub = std::min(ub, *gallai_ub);
  if (feedback_ub) ub = std::min(ub, *feedback_ub);
  return ub;
}

BoundsReport bounds_report(const Graph& g) {
  require_connected(g, "bounds_report");
  BoundsReport r;
  r.n = g.order();
  r.m = g.size();
  r.density_lb = r.n >= 2 ? ceil_div(r.m, r.n - 1) : 0;
  if (r.n <= kCliqueGuard) {
    r.clique_number = clique_number(g);
    r.clique_lb = ceil_div(*r.clique_number, 2);
  }
  if (r.n <= kVertexCoverGuard) {
    r.independence_number = independence_number(g);
    r.vertex_cover_ub = r.n - *r.independence_number;
    r.gallai_ub = r.n - *r.independence_number;
  }
  if (const int cyclomatic = r.m - r.n + 1; cyclomatic > 0) r.feedback_ub = 2 * cyclomatic;
  if (r.n >= 2 && is_regular(g)) {
    const int degree = g.degree(0);
    r.regular_lb = ceil_div(degree * r.n, 2 * r.n - 2);
  }
  r.em_per_vertex.reserve(static_cast<std::size_t>(r.n));
  for (Vertex v = 0; v < r.n; ++v) r.em_per_vertex.push_back(static_cast<int>(em_edge_ids(g, v).size()));
  return r;
}

EmCardinalityReport em_cardinality_checks(const Graph& g, Vertex v) {
  require_connected(g, "em_cardinality_checks");
  EmCardinalityReport r;
  r.vertex = v;
  r.em_size = static_cast<int>(em_set(g, v).size());
  r.degree = g.degree(v);
  r.min_degree = degree_extremes(g).min_degree;

  std::vector<int> dist;
  bfs_raw(g, v, dist);
  r.unique_parent = true;
  for (Vertex w = 0; w < g.order() && r.unique_parent; ++w) {
    int closer = 0;
    for (Vertex y : g.neighbors(w))
      if (dist[y] == dist[w] - 1) ++closer;
    if (closer >= 2) r.unique_parent = false;
  }
  r.is_k2 = g.order() == 2 && g.size() == 1;
  r.spanning_equivalence_holds = r.unique_parent == (r.em_size == g.order() - 1);
  r.k2_equivalence_holds = (r.em_size == 1) == r.is_k2;
  r.degree_equality = r.em_size == r.degree && r.degree == r.min_degree;
  return r;
}

Em2Verdict verify_em2_family_member(const Graph& g, Vertex v) {
  return {static_cast<int>(em_set(g, v).size()), static_cast<int>(em_set_naive(g, v).size())};
}

}  // namespace demkit

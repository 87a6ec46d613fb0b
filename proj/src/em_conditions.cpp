#include "demkit/em_conditions.hpp"

#include <algorithm>
#include <functional>

namespace demkit {

std::vector<std::vector<int>> shortest_paths(const Graph& g, Vertex x, Vertex y, std::size_t cap) {
  std::vector<int> dist;
  bfs_raw(g, x, dist);
  std::vector<std::vector<int>> out;
  if (dist[y] < 0) return out;

  // Walk back from y through strictly closer neighbours.
  std::vector<int> reversed;
  std::function<void(Vertex)> walk = [&](Vertex w) {
    if (w == x) {
      if (out.size() >= cap) throw Error(ErrorCode::Overflow, "more than " + std::to_string(cap) + " shortest paths");
      out.emplace_back(reversed.rbegin(), reversed.rend());
      return;
    }
    const auto nbrs = g.neighbors(w);
    const auto ids = g.incident_edge_ids(w);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (dist[nbrs[k]] != dist[w] - 1) continue;
      reversed.push_back(ids[k]);
      walk(nbrs[k]);
      reversed.pop_back();
    }
  };
  walk(y);
  return out;
}

bool two_shortest_paths_sharing_at_most(const Graph& g, Vertex x, Vertex y, int max_shared, std::size_t cap) {
  auto paths = shortest_paths(g, x, y, cap);
  for (auto& p : paths) std::sort(p.begin(), p.end());
  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      std::vector<int> shared;
      std::set_intersection(paths[a].begin(), paths[a].end(), paths[b].begin(), paths[b].end(),
                            std::back_inserter(shared));
      if (static_cast<int>(shared.size()) <= max_shared) return true;
    }
  }
  return false;
}

bool incident_only_path_condition(const Graph& g, Vertex x, int max_shared) {
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y == x || g.has_edge(x, y)) continue;
    if (!two_shortest_paths_sharing_at_most(g, x, y, max_shared)) return false;
  }
  return true;
}

std::vector<CycleExclusion> cycle_exclusion_patterns(const Graph& g, Vertex x, Edge uv) {
  const auto uv_id = g.edge_id(uv);
  if (!uv_id) throw Error(ErrorCode::EdgeNotPresent, "cycle_exclusion_patterns");
  const int n = g.order();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) bfs_raw(g, s, dist[s]);
  const auto& dx = dist[x];

  std::vector<CycleExclusion> out;
  std::vector<Vertex> path{uv.v};
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  on_path[uv.v] = true;

  auto examine = [&](const std::vector<Vertex>& cycle) {
    const int len = static_cast<int>(cycle.size());
    const bool odd = len % 2 == 1;
    const int k = len / 2;
    for (Vertex apex : cycle) {
      if (apex == uv.u || apex == uv.v) continue;
      const int du = dist[apex][uv.u];
      const int dv = dist[apex][uv.v];
      const bool placed = odd ? (du == k && dv == k) : ((du == k - 1 && dv == k) || (du == k && dv == k - 1));
      if (!placed) continue;
      // Vertices on shortest x-apex paths must avoid the cycle, apex aside.
      bool isolated = true;
      for (Vertex w : cycle) {
        if (w == apex) continue;
        if (dx[w] + dist[w][apex] == dx[apex]) {
          isolated = false;
          break;
        }
      }
      if (!isolated) continue;
      CycleExclusion hit;
      hit.apex = apex;
      hit.cycle = cycle;
      hit.odd = odd;
      hit.geodesic_through_apex = dx[uv.u] == dx[apex] + du && dx[uv.v] == dx[apex] + dv;
      out.push_back(std::move(hit));
    }
  };

  std::function<void(Vertex)> extend = [&](Vertex w) {
    const auto nbrs = g.neighbors(w);
    const auto ids = g.incident_edge_ids(w);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Vertex next = nbrs[k];
      if (ids[k] == *uv_id) continue;
      if (next == uv.u) {
        path.push_back(next);
        examine(path);
        path.pop_back();
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = true;
      path.push_back(next);
      extend(next);
      path.pop_back();
      on_path[next] = false;
    }
  };
  extend(uv.v);
  return out;
}

}  // namespace demkit

#include "demkit/monitor.hpp"

#include <algorithm>
#include <string>

namespace demkit {

namespace {

std::vector<Vertex> sorted_unique(std::span<const Vertex> vs, const Graph& g) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  for (Vertex v : out)
    if (!g.contains(v)) throw Error(ErrorCode::OutOfRange, "monitor vertex " + std::to_string(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int require_edge(const Graph& g, Edge e) {
  const auto id = g.edge_id(e);
  if (!id)
    throw Error(ErrorCode::EdgeNotPresent,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
  return *id;
}

}  // namespace

bool EmSet::contains(Edge e) const { return std::binary_search(edges.begin(), edges.end(), e); }

bool PairSet::contains(OrderedPair p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

bool PairSet::is_subset_of(const PairSet& other) const {
  return std::includes(other.pairs.begin(), other.pairs.end(), pairs.begin(), pairs.end());
}

bool PairSet::intersects(const PairSet& other) const {
  auto a = pairs.begin();
  auto b = other.pairs.begin();
  while (a != pairs.end() && b != other.pairs.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a;
    else ++b;
  }
  return false;
}

std::vector<int> em_edge_ids(const Graph& g, Vertex x) {
  std::vector<int> dist;
  bfs_raw(g, x, dist);
  std::vector<int> ids;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == x || dist[u] < 0) continue;
    const auto nbrs = g.neighbors(u);
    const auto eids = g.incident_edge_ids(u);
    int parents = 0;
    int parent_edge = -1;
    for (std::size_t k = 0; k < nbrs.size() && parents < 2; ++k) {
      if (dist[nbrs[k]] == dist[u] - 1) {
        ++parents;
        parent_edge = eids[k];
      }
    }
    if (parents == 1) ids.push_back(parent_edge);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

EmSet em_set(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw Error(ErrorCode::OutOfRange, "monitor vertex " + std::to_string(x));
  require_connected(g, "em_set");
  EmSet out{x, {}};
  for (int id : em_edge_ids(g, x)) out.edges.push_back(g.edge(id));
  return out;
}

EmSet em_set_naive(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw Error(ErrorCode::OutOfRange, "monitor vertex " + std::to_string(x));
  require_connected(g, "em_set_naive");
  std::vector<int> before, after;
  bfs_raw(g, x, before);
  EmSet out{x, {}};
  for (int id = 0; id < g.size(); ++id) {
    bfs_raw(g, x, after, id);
    if (after != before) out.edges.push_back(g.edge(id));
  }
  return out;
}

PairSet p_set(const Graph& g, std::span<const Vertex> monitors, Edge e) {
  const int id = require_edge(g, e);
  PairSet out;
  std::vector<int> before, after;
  for (Vertex x : sorted_unique(monitors, g)) {
    bfs_raw(g, x, before);
    bfs_raw(g, x, after, id);
    for (Vertex y = 0; y < g.order(); ++y)
      if (before[y] != after[y]) out.pairs.push_back({x, y});
  }
  return out;
}

bool witness_holds(const Graph& g, Edge e, Witness w) {
  if (!g.contains(w.monitor) || !g.contains(w.target) || !g.edge_id(e)) return false;
  const DistanceLayers before = bfs_distances(g, w.monitor);
  return before.at(w.target) != distance_after_deletion(g, e, w.monitor, w.target);
}

MonitoringCertificate is_monitoring_set(const Graph& g, std::span<const Vertex> monitors) {
  require_connected(g, "is_monitoring_set");
  const auto ms = sorted_unique(monitors, g);
  std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
  for (Vertex x : ms)
    for (int id : em_edge_ids(g, x))
      if (owner[id] < 0) owner[id] = x;

  MonitoringCertificate cert;
  std::vector<int> before, after;
  for (int id = 0; id < g.size(); ++id) {
    const Edge e = g.edge(id);
    if (owner[id] < 0) {
      cert.uncovered.push_back(e);
      continue;
    }
    const Vertex x = owner[id];
    bfs_raw(g, x, before);
    bfs_raw(g, x, after, id);
    for (Vertex y = 0; y < g.order(); ++y) {
      if (before[y] != after[y]) {
        cert.witnesses.emplace(e, Witness{x, y});
        break;
      }
    }
    if (!cert.witnesses.count(e))
      throw Error(ErrorCode::BadParameter, "internal: em_set claimed an edge no distance confirms");
  }
  return cert;
}

MonitoringCertificate certify_naive(const Graph& g, std::span<const Vertex> monitors) {
  require_connected(g, "certify_naive");
  const auto ms = sorted_unique(monitors, g);
  MonitoringCertificate cert;
  std::vector<int> before, after;
  for (int id = 0; id < g.size(); ++id) {
    const Edge e = g.edge(id);
    bool found = false;
    for (Vertex x : ms) {
      bfs_raw(g, x, before);
      bfs_raw(g, x, after, id);
      for (Vertex y = 0; y < g.order() && !found; ++y) {
        if (before[y] != after[y]) {
          cert.witnesses.emplace(e, Witness{x, y});
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) cert.uncovered.push_back(e);
  }
  return cert;
}

ZeroReason p_set_size_zero_reason(const Graph& g, std::span<const Vertex> monitors, Edge e) {
  const int id = require_edge(g, e);
  const auto ms = sorted_unique(monitors, g);
  if (!p_set(g, ms, e).empty())
    throw Error(ErrorCode::NotZero, "P(M, e) is not empty for the given monitors");

  ZeroReason out;
  out.empty_monitor_set = ms.empty();
  out.all_equidistant = true;
  out.all_stable = true;
  std::vector<int> before, after;
  for (Vertex x : ms) {
    bfs_raw(g, x, before);
    if (before[e.u] == before[e.v]) {
      out.per_monitor.emplace_back(x, ZeroStatus::Equidistant);
      continue;
    }
    out.all_equidistant = false;
    const Vertex far = before[e.u] > before[e.v] ? e.u : e.v;
    bfs_raw(g, x, after, id);
    // P(M, e) is empty, so the farther endpoint is necessarily stable.
    if (after[far] != before[far]) out.all_stable = false;
    out.per_monitor.emplace_back(x, ZeroStatus::FartherEndpointStable);
  }
  return out;
}

}  // namespace demkit

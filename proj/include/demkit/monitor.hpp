#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// Edges monitored by a single vertex: e is in the set iff deleting e changes
/// the distance from the monitor to some vertex.
struct EmSet {
  Vertex monitor = 0;
  std::vector<Edge> edges;  // sorted

  std::size_t size() const { return edges.size(); }
  bool contains(Edge e) const;
  friend bool operator==(const EmSet&, const EmSet&) = default;
};

struct OrderedPair {
  Vertex monitor = 0;
  Vertex target = 0;
  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

/// P(M, e): ordered pairs (x, y), x in M, whose distance changes when e fails.
struct PairSet {
  std::vector<OrderedPair> pairs;  // sorted

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  bool contains(OrderedPair p) const;
  bool is_subset_of(const PairSet& other) const;
  bool intersects(const PairSet& other) const;
  friend bool operator==(const PairSet&, const PairSet&) = default;
};

struct Witness {
  Vertex monitor = 0;
  Vertex target = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Per-edge proof that a vertex set monitors the graph.
struct MonitoringCertificate {
  std::map<Edge, Witness> witnesses;
  std::vector<Edge> uncovered;  // sorted

  bool is_monitoring_set() const { return uncovered.empty(); }
};

/// O(n + m): an edge is kept iff its farther endpoint has exactly one
/// neighbour one level closer to x. Throws Disconnected, OutOfRange.
EmSet em_set(const Graph& g, Vertex x);

/// Edge ids of em_set(g, x), ascending. Skips the connectivity check.
std::vector<int> em_edge_ids(const Graph& g, Vertex x);

/// Definitional oracle: one BFS on G - e per edge.
EmSet em_set_naive(const Graph& g, Vertex x);

/// One BFS per monitor on G and on G - e. Throws EdgeNotPresent.
PairSet p_set(const Graph& g, std::span<const Vertex> monitors, Edge e);

/// Unions em_set over `monitors`. Each covered edge gets the smallest
/// monitor that sees it and the smallest target whose distance changes,
/// recomputed on G - e.
MonitoringCertificate is_monitoring_set(const Graph& g, std::span<const Vertex> monitors);

/// Re-derives a certificate purely from the definition (em_set_naive).
MonitoringCertificate certify_naive(const Graph& g, std::span<const Vertex> monitors);

/// Checks a single witness against the definition.
bool witness_holds(const Graph& g, Edge e, Witness w);

/// How each monitor keeps P(M, uv) empty.
enum class ZeroStatus {
  /// d(x, u) = d(x, v)
  Equidistant,
  /// the farther endpoint keeps its distance once uv is deleted
  FartherEndpointStable,
};

struct ZeroReason {
  /// Condition (i): no monitors at all.
  bool empty_monitor_set = false;
  /// Condition (ii): every monitor is equidistant from u and v.
  bool all_equidistant = false;
  /// Condition (iii): every monitor that is not equidistant has a stable
  /// farther endpoint.
  bool all_stable = false;
  std::vector<std::pair<Vertex, ZeroStatus>> per_monitor;
};

/// Classifies why P(M, e) is empty. Throws NotZero when it is not.
ZeroReason p_set_size_zero_reason(const Graph& g, std::span<const Vertex> monitors, Edge e);

}  // namespace demkit

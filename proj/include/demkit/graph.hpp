#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "demkit/error.hpp"

namespace demkit {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has_endpoint(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop distance, or the UNREACHABLE sentinel. `hops()` throws on the sentinel
/// so unreachable values can never leak into arithmetic.
class Distance {
 public:
  static Distance unreachable() { return Distance(); }
  static Distance of(int hops) { return Distance(hops); }

  bool reachable() const { return value_ >= 0; }
  int hops() const {
    if (!reachable()) throw Error(ErrorCode::OutOfRange, "distance is UNREACHABLE");
    return value_;
  }

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance() = default;
  explicit Distance(int hops) : value_(hops) {}
  int value_ = -1;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes `edges`: duplicates collapse, endpoints are ordered.
  /// Throws OutOfRange or SelfLoop.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[check(v)]; }
  /// Edge indices parallel to `neighbors(v)`.
  std::span<const int> incident_edge_ids(Vertex v) const { return incident_ids_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[check(v)].size()); }

  /// Edges sorted lexicographically; an edge's position is its id.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Index of the edge in `edges()`, or nullopt.
  std::optional<int> edge_id(Edge e) const;

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  Vertex check(Vertex v) const;
  void build(int n, std::vector<Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<int>> incident_ids_;
  std::vector<Edge> edges_;
};

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

/// Single-source BFS result. Entries for other components are UNREACHABLE.
class DistanceLayers {
 public:
  DistanceLayers(Vertex source, std::vector<int> raw) : source_(source), raw_(std::move(raw)) {}

  Vertex source() const { return source_; }
  Distance at(Vertex v) const {
    const int d = raw_.at(static_cast<std::size_t>(v));
    return d < 0 ? Distance::unreachable() : Distance::of(d);
  }
  /// Raw hop counts with -1 for unreachable; for tight loops.
  const std::vector<int>& raw() const { return raw_; }
  /// Largest finite distance.
  int eccentricity() const;
  /// Vertices at exactly `hops` from the source, ascending.
  std::vector<Vertex> level(int hops) const;

 private:
  Vertex source_;
  std::vector<int> raw_;
};

DistanceLayers bfs_distances(const Graph& g, Vertex x);

/// Raw BFS into `dist` (-1 = unreachable), optionally ignoring one edge id.
void bfs_raw(const Graph& g, Vertex x, std::vector<int>& dist, int skip_edge = -1);

/// d_{G-e}(x, y). Throws EdgeNotPresent if e is not an edge of g.
Distance distance_after_deletion(const Graph& g, Edge e, Vertex x, Vertex y);

/// Cut edges via a lowpoint DFS, sorted.
std::vector<Edge> bridges(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

struct DegreeExtremes {
  int min_degree = 0;
  int max_degree = 0;
};
DegreeExtremes degree_extremes(const Graph& g);

/// Throws Disconnected with a hint naming the component count.
void require_connected(const Graph& g, const char* operation);

/// Result of iteratively stripping degree-1 vertices.
struct BaseGraph {
  Graph graph;
  /// old vertex -> new vertex, nullopt for stripped vertices.
  std::vector<std::optional<Vertex>> to_base;
  /// new vertex -> old vertex.
  std::vector<Vertex> to_original;
  /// The input was a tree. `graph` is then the single-vertex marker K_1 and
  /// `to_original` holds the last surviving vertex.
  bool was_tree = false;
};

BaseGraph base_graph(const Graph& g);

/// Subgraph induced by `keep` (ascending), renumbered in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// The same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace demkit

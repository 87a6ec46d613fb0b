#pragma once

#include <cstddef>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// Path enumeration stops with Overflow past this many shortest paths.
inline constexpr std::size_t kShortestPathCap = 100000;

/// All shortest x-y paths, each as a list of edge ids from x to y.
/// Throws Overflow if more than `cap` exist.
std::vector<std::vector<int>> shortest_paths(const Graph& g, Vertex x, Vertex y, std::size_t cap = kShortestPathCap);

/// True when two distinct shortest x-y paths share at most `max_shared` edges.
bool two_shortest_paths_sharing_at_most(const Graph& g, Vertex x, Vertex y, int max_shared,
                                        std::size_t cap = kShortestPathCap);

/// The path condition of the incident-only characterization, checked for
/// every y outside N[x]. `max_shared` = 1 is the literal reading, 0 the
/// edge-disjoint reading.
bool incident_only_path_condition(const Graph& g, Vertex x, int max_shared);

/// An odd or even cycle through edge uv with apex x' placed as in the
/// cycle-exclusion rule: for odd length 2k+1 both endpoints are at distance k
/// from x'; for even length 2k the endpoints sit at k-1 and k. No shortest
/// x-x' path touches the cycle except at x'.
struct CycleExclusion {
  Vertex apex = 0;
  std::vector<Vertex> cycle;  // starts at v, ends at u
  bool odd = false;
  /// d(x, u) and d(x, v) both route through the apex. The exclusion is only
  /// sound with this extra property.
  bool geodesic_through_apex = false;
};

/// Enumerates every simple cycle through `uv` and every apex on it that
/// matches the rule. Exponential; meant for n <= 10.
std::vector<CycleExclusion> cycle_exclusion_patterns(const Graph& g, Vertex x, Edge uv);

}  // namespace demkit

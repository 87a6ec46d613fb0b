#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "demkit/graph.hpp"
#include "demkit/monitor.hpp"

namespace demkit {

enum class Method { Exact, Greedy };
std::string_view to_string(Method m);

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

struct SolverStats {
  std::int64_t nodes = 0;
  std::int64_t millis = 0;
};

struct DemResult {
  int value = 0;
  std::vector<Vertex> monitor_set;  // sorted, ids of the input graph
  MonitoringCertificate certificate;
  Method method = Method::Exact;
  /// False for greedy results and for exact runs that hit the node budget.
  bool exact = false;
  SolverStats stats;
};

struct ExactOptions {
  /// Branch-and-bound node limit; nullopt means unlimited.
  std::optional<std::int64_t> budget = kDefaultNodeBudget;
};

/// Minimum distance-edge-monitoring set. Works on the base graph, solves the
/// covering problem with branch and bound, and among minimum sets returns the
/// lexicographically smallest one over the vertices of g.
/// On budget exhaustion the best incumbent is returned with exact = false.
/// Throws Disconnected.
DemResult dem_exact(const Graph& g, const ExactOptions& options = {});

/// Greedy set cover over em_set(g, x); ties go to the lowest vertex id.
DemResult dem_greedy(const Graph& g);

/// Re-derives the certificate from the definition. For exact results with a
/// base graph of at most 12 vertices, also checks that no smaller set works.
bool verify_dem_result(const Graph& g, const DemResult& r);

/// H(m) = 1 + 1/2 + ... + 1/m.
double harmonic(int m);

}  // namespace demkit

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// Distances of a vertex from 2 or 3 sources. Unused axes are 0.
using Cell = std::array<int, 3>;

/// The B_{i,j} / B_{i,j,k} partition of the vertex set.
struct LayerProfile {
  std::vector<Vertex> sources;
  std::vector<Cell> coord;                   // per vertex
  std::map<Cell, std::vector<Vertex>> cells;  // non-empty cells only

  const Cell& of(Vertex v) const { return coord.at(static_cast<std::size_t>(v)); }
  /// Members of a cell; empty for cells with negative or unused indices.
  std::span<const Vertex> cell(const Cell& c) const;
};

/// One BFS per source. Throws OutOfRange, BadParameter (repeated or wrong
/// number of sources), Disconnected.
LayerProfile layer_profile(const Graph& gb, std::span<const Vertex> sources);

struct ConditionResult {
  std::string name;
  bool pass = true;
  /// False when the rule was switched off; skipped rules never fail.
  bool evaluated = true;
  /// Vertices of the offending configuration, starting with the centre x.
  std::optional<std::vector<Vertex>> witness;
};

struct ConditionReport {
  std::vector<Vertex> tuple;
  std::vector<ConditionResult> conditions;
  /// Ground truth: is_monitoring_set(G_b, tuple).
  bool direct_check = false;
  /// The structural verdict disagrees with the direct check.
  bool discrepancy = false;

  bool structural_pass() const;
};

enum class Dem2Reading {
  /// Conditions (1)-(4) word for word.
  AsStated,
  /// Condition (2) no longer rejects two neighbours that both lie in
  /// B_{i-1,j+1} (or both in B_{i+1,j-1}); that case is decided by (3).
  Repaired,
};

/// The four conditions of the two-monitor characterization for (u, v) on a
/// base graph.
ConditionReport dem2_pair_check(const Graph& gb, Vertex u, Vertex v, Dem2Reading reading = Dem2Reading::AsStated);

/// Finds the lexicographically first pair of the base graph passing all four
/// conditions, reported in the input graph's vertex ids. Throws IsTree,
/// Disconnected.
std::optional<std::pair<Vertex, Vertex>> dem_is_2(const Graph& g, Dem2Reading reading = Dem2Reading::AsStated);

/// Names of the rules of the three-monitor characterization, in report order.
const std::vector<std::string>& dem3_rule_names();

/// Evaluates every rule of the three-monitor characterization exactly as
/// written (including its apparent typos) next to the direct check. Rules
/// listed in `disabled` are skipped.
ConditionReport dem3_triple_check(const Graph& gb, Vertex u, Vertex v, Vertex w,
                                  const std::set<std::string>& disabled = {});

struct BoundsReport {
  int n = 0;
  int m = 0;
  /// ceil(m / (n - 1)), the density surrogate for arboricity.
  int density_lb = 0;
  std::optional<int> clique_number;
  /// ceil(omega / 2)
  std::optional<int> clique_lb;
  std::optional<int> vertex_cover_ub;
  std::optional<int> independence_number;
  /// n - alpha
  std::optional<int> gallai_ub;
  /// 2 (m - n + 1); absent for trees.
  std::optional<int> feedback_ub;
  /// ceil(r n / (2n - 2)) for r-regular graphs.
  std::optional<int> regular_lb;
  std::vector<int> em_per_vertex;

  int lower_bound() const;
  /// min of the computed upper bounds, or n - 1.
  int upper_bound() const;
};

inline constexpr int kCliqueGuard = 64;
inline constexpr int kVertexCoverGuard = 40;

/// Maximum clique size. Throws TooLarge above kCliqueGuard vertices.
int clique_number(const Graph& g);
/// Maximum independent set size. Throws TooLarge above kVertexCoverGuard.
int independence_number(const Graph& g);
/// Minimum vertex cover size, n - alpha.
int vertex_cover_number(const Graph& g);

/// Fields whose guard trips are left empty. Throws Disconnected.
BoundsReport bounds_report(const Graph& g);

struct EmCardinalityReport {
  Vertex vertex = 0;
  int em_size = 0;
  int degree = 0;
  int min_degree = 0;
  /// No vertex has two neighbours one step closer to `vertex`.
  bool unique_parent = false;
  bool is_k2 = false;
  /// unique_parent <=> |EM| = n - 1
  bool spanning_equivalence_holds = false;
  /// |EM| = 1 <=> G = K_2
  bool k2_equivalence_holds = false;
  /// |EM| = deg(v) = delta(G); reported, not asserted.
  bool degree_equality = false;
};

EmCardinalityReport em_cardinality_checks(const Graph& g, Vertex v);

struct Em2Verdict {
  int fast_size = 0;
  int naive_size = 0;
  bool is_two() const { return fast_size == 2 && naive_size == 2; }
};

/// Computes |EM(v)| both ways on a family instance. This does not decide
/// family membership.
Em2Verdict verify_em2_family_member(const Graph& g, Vertex v);

}  // namespace demkit

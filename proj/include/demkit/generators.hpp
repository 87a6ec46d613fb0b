#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// A generated graph plus the vertices the theorems talk about.
struct FamilyInstance {
  Graph graph;
  /// role name -> vertex, e.g. "v", "u1", "center1"
  std::map<std::string, Vertex> designated;
  std::string family;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;

  Vertex role(const std::string& name) const;
};

// Canonical labelings:
//   path / cycle       0-1-...-(n-1)
//   star(n)            K_{1,n}, centre 0, leaves 1..n
//   complete_bipartite parts 0..a-1 and a..a+b-1
//   grid(p, q)         vertex r*q + c
//   hypercube(d)       vertex = bit string, edges flip one bit
//   double_star(a, b)  centres 0 and 1, leaves of 0 then leaves of 1
FamilyInstance path(int n);
FamilyInstance cycle(int n);
FamilyInstance complete(int n);
FamilyInstance star(int leaves);
FamilyInstance complete_bipartite(int a, int b);
FamilyInstance grid(int p, int q);
FamilyInstance hypercube(int d);
FamilyInstance petersen();

/// Two stars K_{1,a}, K_{1,b} whose centres are joined. Requires a >= b >= 0.
FamilyInstance double_star(int a, int b);

/// G v H: vertices of g first, then those of h, all cross edges added.
Graph join(const Graph& g, const Graph& h);
/// G v mK_1 with apex vertices designated apex1..apexm. Requires m >= 1.
FamilyInstance join_with_empty(const Graph& g, int m);

/// Vertex v = 0 joined to F_1 = {1..k}; every F_3 vertex (k+1..n-1) attaches
/// to vertices 1 and 2 of F_1. |EM(v)| = k.
FamilyInstance em_k_construction(int n, int k);

/// v = 0, u1 = 1, u2 = 2 and D on vertices 3..n-1, every D vertex adjacent to
/// u1 and u2. D_1 also has the edge u1u2. D defaults to edgeless on n - 3
/// vertices.
FamilyInstance d1_graph(int n, const std::optional<Graph>& d = std::nullopt);
FamilyInstance d2_graph(int n, const std::optional<Graph>& d = std::nullopt);

/// Layered graph around v with B_1 = {u1, u2} and layers B_2..B_d of the
/// given sizes; each layer vertex gets at least two parents in the previous
/// layer. With `intra_edges`, edges inside a layer are added at random.
FamilyInstance a_d_graph(int d, const std::vector<int>& sizes, std::uint64_t seed, bool intra_edges = true);

/// G(n, p) rejection-sampled until connected.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);
/// Uniform random recursive tree: vertex k attaches to a random earlier one.
Graph random_tree(int n, std::uint64_t seed);

/// Re-checks the family constraints on the built graph; throws BadParameter.
void validate(const FamilyInstance& inst);

/// Builds from `family:p1,p2,...`, e.g. `grid:4,4`, `doublestar:3,3`,
/// `ad:3,2,1`, `random:8,0.4`. Throws BadParameter.
FamilyInstance generate(const std::string& spec, std::uint64_t seed = 0);

/// Names accepted by generate().
const std::vector<std::string>& family_names();

}  // namespace demkit

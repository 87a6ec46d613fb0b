#include <doctest.h>

#include <algorithm>
#include <random>

#include "demkit/generators.hpp"
#include "demkit/graph.hpp"
#include "support/oracles.hpp"

using namespace demkit;

namespace {

Graph make(int n, std::vector<std::pair<Vertex, Vertex>> edges) { return build_graph(n, edges); }

std::vector<int> raw_distances(const Graph& g, Vertex x) { return bfs_distances(g, x).raw(); }

}  // namespace

TEST_CASE("build_graph canonicalizes and validates") {
  const Graph k2 = make(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);

  const Graph k4 = complete(4).graph;
  CHECK(k4.size() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  const Graph dup = make(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(dup.size() == 2);
  CHECK(dup.edges()[0] == Edge(0, 1));
  CHECK(dup.has_edge(1, 0));
  CHECK_FALSE(dup.has_edge(0, 2));

  try {
    make(3, {{0, 0}});
    FAIL("expected SelfLoop");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
  }
  try {
    make(3, {{0, 3}});
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("adjacency is symmetric and sorted, m is half the degree sum") {
  for (const Graph& g : oracle::random_corpus(11, 40, 12)) {
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      degree_sum += g.degree(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        CHECK(g.has_edge(nb[k], v));
        CHECK(g.edge(g.incident_edge_ids(v)[k]) == Edge(v, nb[k]));
      }
    }
    CHECK(degree_sum == 2 * g.size());
  }
}

TEST_CASE("bfs_distances") {
  CHECK(raw_distances(path(4).graph, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(raw_distances(complete(4).graph, 2) == std::vector<int>{1, 1, 0, 1});
  CHECK(raw_distances(cycle(6).graph, 0) == std::vector<int>{0, 1, 2, 3, 2, 1});

  const Graph split = make(4, {{0, 1}, {2, 3}});
  const auto layers = bfs_distances(split, 0);
  CHECK(layers.at(1) == Distance::of(1));
  CHECK_FALSE(layers.at(2).reachable());
  CHECK_THROWS_AS((void)layers.at(3).hops(), Error);
  CHECK_THROWS_AS(bfs_distances(split, 4), Error);
}

TEST_CASE("bfs agrees with the relaxation oracle and edges span at most one level") {
  for (const Graph& g : oracle::random_corpus(12, 60, 12)) {
    const auto all = oracle::all_pairs(g);
    for (Vertex x = 0; x < g.order(); ++x) {
      CHECK(raw_distances(g, x) == all[x]);
      const auto d = raw_distances(g, x);
      for (const Edge& e : g.edges()) CHECK(std::abs(d[e.u] - d[e.v]) <= 1);
    }
  }
}

TEST_CASE("distance_after_deletion") {
  CHECK_FALSE(distance_after_deletion(path(2).graph, Edge(0, 1), 0, 1).reachable());
  CHECK(distance_after_deletion(cycle(4).graph, Edge(0, 1), 0, 1) == Distance::of(3));
  const Graph p = petersen().graph;
  for (const Edge& e : p.edges()) {
    const auto oracle = oracle::all_pairs(p, e);
    // Girth 5: the detour has length 4.
    CHECK(oracle[e.u][e.v] == 4);
    CHECK(distance_after_deletion(p, e, e.u, e.v) == Distance::of(4));
  }
  try {
    distance_after_deletion(cycle(4).graph, Edge(0, 2), 0, 1);
    FAIL("expected EdgeNotPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EdgeNotPresent);
  }
}

TEST_CASE("bridges") {
  std::mt19937_64 rng(5);
  const Graph t = oracle::random_tree(rng, 15);
  CHECK(bridges(t) == t.edges());
  CHECK(bridges(cycle(5).graph).empty());
  const Graph ds = double_star(2, 2).graph;
  CHECK(ds.size() == 5);
  CHECK(bridges(ds).size() == 5);
}

TEST_CASE("bridges match the deletion oracle on every graph with n <= 10") {
  auto corpus = oracle::random_corpus(13, 150, 10);
  std::mt19937_64 rng(14);
  for (int k = 0; k < 50; ++k) corpus.push_back(oracle::core_with_pendants(rng, 4 + k % 4, k % 5));
  corpus.push_back(make(6, {{0, 1}, {1, 2}, {3, 4}}));
  for (const Graph& g : corpus) CHECK(bridges(g) == oracle::bridges(g));
}

TEST_CASE("base_graph") {
  const Graph c4_pendant = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  const BaseGraph b = base_graph(c4_pendant);
  CHECK_FALSE(b.was_tree);
  CHECK(b.graph == cycle(4).graph);
  CHECK_FALSE(b.to_base[4].has_value());
  CHECK(b.to_original == std::vector<Vertex>{0, 1, 2, 3});

  const BaseGraph k4 = base_graph(complete(4).graph);
  CHECK(k4.graph == complete(4).graph);

  const BaseGraph p5 = base_graph(path(5).graph);
  CHECK(p5.was_tree);
  CHECK(p5.graph.order() == 1);
  CHECK(p5.graph.size() == 0);

  CHECK_THROWS_AS(base_graph(make(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("base_graph is idempotent, has min degree >= 2 and keeps every cycle") {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 80; ++k) {
    const Graph g = oracle::core_with_pendants(rng, 3 + k % 6, k % 7);
    const BaseGraph b = base_graph(g);
    REQUIRE_FALSE(b.was_tree);
    CHECK(base_graph(b.graph).graph == b.graph);
    CHECK(degree_extremes(b.graph).min_degree >= 2);
    CHECK(b.graph.size() - b.graph.order() == g.size() - g.order());
    for (Vertex v = 0; v < b.graph.order(); ++v) CHECK(b.to_base[b.to_original[v]] == v);
    for (const Edge& e : b.graph.edges()) CHECK(g.has_edge(b.to_original[e.u], b.to_original[e.v]));
  }
}

TEST_CASE("predicates") {
  const Graph s = star(5).graph;
  CHECK(is_tree(s));
  const Graph k6 = complete(6).graph;
  CHECK(is_complete(k6));
  CHECK(degree_extremes(k6).min_degree == 5);
  CHECK(degree_extremes(k6).max_degree == 5);
  const Graph c4 = cycle(4).graph;
  CHECK_FALSE(is_tree(c4));
  CHECK_FALSE(is_complete(c4));
  CHECK(is_regular(c4));
  CHECK_FALSE(is_connected(make(3, {{0, 1}})));
  CHECK(component_count(make(3, {{0, 1}})) == 2);
}

TEST_CASE("relabel is a graph isomorphism") {
  std::mt19937_64 rng(16);
  const Graph g = oracle::random_connected(rng, 8, 0.4);
  std::vector<Vertex> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Graph h = relabel(g, perm);
  CHECK(h.size() == g.size());
  for (const Edge& e : g.edges()) CHECK(h.has_edge(perm[e.u], perm[e.v]));
}

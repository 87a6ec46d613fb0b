#include <doctest.h>

#include <cmath>
#include <random>

#include "demkit/generators.hpp"
#include "demkit/solvers.hpp"
#include "support/oracles.hpp"

using namespace demkit;

TEST_CASE("dem_exact examples") {
  std::mt19937_64 rng(41);
  const DemResult tree = dem_exact(oracle::random_tree(rng, 12));
  CHECK(tree.value == 1);
  CHECK(tree.exact);

  const DemResult k7 = dem_exact(complete(7).graph);
  CHECK(k7.value == 6);
  CHECK(k7.monitor_set == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

  CHECK(dem_exact(complete_bipartite(2, 3).graph).value == 2);
  CHECK(dem_exact(path(1).graph).value == 0);

  const Graph split = build_graph(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  try {
    dem_exact(split);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("dem_greedy examples") {
  const DemResult s = dem_greedy(star(6).graph);
  CHECK(s.value == 1);
  CHECK(s.monitor_set == std::vector<Vertex>{0});
  CHECK(dem_greedy(complete(5).graph).value == 4);
  CHECK(dem_greedy(grid(4, 4).graph).value >= 4);
  CHECK_FALSE(s.exact);
}

TEST_CASE("dem_exact matches subset enumeration and returns the smallest optimal set") {
  for (const Graph& g : oracle::random_corpus(42, 120, 8)) {
    const auto best = oracle::min_monitoring_set(g);
    const DemResult r = dem_exact(g);
    CHECK(r.exact);
    CHECK(r.value == static_cast<int>(best.size()));
    CHECK(r.certificate.uncovered.empty());
    CHECK(verify_dem_result(g, r));
    if (!is_tree(g)) CHECK(r.monitor_set == best);
  }
}

TEST_CASE("DemResult invariants on greedy and exact runs") {
  for (const Graph& g : oracle::random_corpus(43, 80, 11, 2)) {
    const DemResult e = dem_exact(g);
    const DemResult gr = dem_greedy(g);
    CHECK(e.value >= 1);
    CHECK(e.value <= g.order() - 1);
    CHECK(gr.value >= e.value);
    CHECK(gr.value <= harmonic(g.size()) * e.value + 1e-9);
    CHECK(gr.certificate.uncovered.empty());
    CHECK(std::is_sorted(e.monitor_set.begin(), e.monitor_set.end()));
  }
}

TEST_CASE("verify_dem_result rejects wrong claims") {
  std::mt19937_64 rng(44);
  const Graph t = oracle::random_tree(rng, 9);
  CHECK(verify_dem_result(t, dem_exact(t)));

  DemResult k4 = dem_exact(complete(4).graph);
  k4.value = 2;
  k4.monitor_set = {0, 1};
  CHECK_FALSE(verify_dem_result(complete(4).graph, k4));

  const Graph c6 = cycle(6).graph;
  DemResult opposite = dem_exact(c6);
  opposite.monitor_set = {0, 3};
  opposite.certificate = is_monitoring_set(c6, opposite.monitor_set);
  const oracle::Tables tables(c6);
  auto covered = oracle::em(c6, tables, 0);
  for (const Edge& e : oracle::em(c6, tables, 3)) covered.push_back(e);
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  CHECK(covered == c6.edges());
  CHECK(verify_dem_result(c6, opposite));

  DemResult padded = dem_exact(c6);
  padded.value = 3;
  padded.monitor_set = {0, 1, 2};
  padded.certificate = is_monitoring_set(c6, padded.monitor_set);
  CHECK_FALSE(verify_dem_result(c6, padded));
}

TEST_CASE("a tiny budget yields an inexact but valid answer") {
  const DemResult r = dem_exact(petersen().graph, ExactOptions{1});
  CHECK_FALSE(r.exact);
  CHECK(r.certificate.uncovered.empty());
  const DemResult unlimited = dem_exact(hypercube(3).graph, ExactOptions{std::nullopt});
  CHECK(unlimited.exact);
  CHECK(unlimited.value == 4);
}

TEST_CASE("output is deterministic") {
  const Graph g = petersen().graph;
  const DemResult a = dem_exact(g), b = dem_exact(g);
  CHECK(a.monitor_set == b.monitor_set);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("harmonic") {
  CHECK(harmonic(1) == doctest::Approx(1.0));
  CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0));
}

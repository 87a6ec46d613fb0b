#include <doctest.h>

#include "demkit/edge_list.hpp"
#include "demkit/generators.hpp"

using namespace demkit;

TEST_CASE("integer labels in range are used as ids") {
  const LabeledGraph lg = parse_edge_list("# comment\n4 3\n0 1\n2 1\n3 2\n");
  CHECK(lg.graph.order() == 4);
  CHECK(lg.graph.has_edge(1, 2));
  CHECK(lg.label(3) == "3");
}

TEST_CASE("arbitrary labels are numbered by first appearance") {
  const LabeledGraph lg = parse_edge_list("3 2\nrouter-a  r-b\nr-b\tr-c\n");
  CHECK(lg.labels == std::vector<std::string>{"router-a", "r-b", "r-c"});
  CHECK(lg.vertex("r-c") == 2);
  CHECK(lg.graph.has_edge(0, 1));
  CHECK_THROWS_AS(lg.vertex("nope"), Error);
}

TEST_CASE("isolated vertices are padded") {
  const LabeledGraph lg = parse_edge_list("4 1\na b\n");
  CHECK(lg.graph.order() == 4);
  CHECK(lg.labels.size() == 4);
}

TEST_CASE("header comments are kept") {
  const LabeledGraph lg = parse_edge_list("# family=cycle\n# v=0\n3 3\n0 1\n1 2\n2 0\n");
  REQUIRE(lg.header.size() == 2);
  CHECK(lg.header[0] == std::pair<std::string, std::string>{"family", "cycle"});
}

TEST_CASE("malformed input is a parse error") {
  for (std::string text : {"", "3\n", "3 2\n0 1\n", "2 1\n0 0\n", "x y\n", "3 1\n0 1 2\n", "2 1\na b\nc d\n"}) {
    CAPTURE(text);
    try {
      parse_edge_list(text);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("canonical serialization round-trips") {
  LabeledGraph lg = with_index_labels(petersen().graph);
  const std::string text = format_edge_list(lg);
  CHECK(text.rfind("10 15\n0 1\n", 0) == 0);
  const LabeledGraph back = parse_edge_list(text);
  CHECK(back.graph == lg.graph);
  CHECK(format_edge_list(back) == text);
}

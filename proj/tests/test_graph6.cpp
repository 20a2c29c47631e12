#include <doctest.h>

#include "randic/enumeration.hpp"
#include "randic/graph6.hpp"

using namespace randic;

namespace {

Graph random_graph(int n, double density, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < density) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph6 reference strings") {
  CHECK(serialize_graph6(complete_graph(5)) == "D~{");
  CHECK(serialize_graph6(cycle_graph(6)) == "EhEG");
  CHECK(serialize_graph6(path_graph(4)) == "Ch");
  CHECK(serialize_graph6(Graph(1)) == "@");
  CHECK(serialize_graph6(Graph(0)) == "?");
  CHECK(serialize_graph6(complete_graph(2)) == "A_");

  Graph petersen = Graph::from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                          {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  CHECK(serialize_graph6(petersen) == "IheA@GUAo");
  CHECK(parse_graph6("IheA@GUAo") == petersen);
}

TEST_CASE("parse_graph6") {
  Graph b = parse_graph6("B_");
  CHECK(b.order() == 3);
  CHECK(b.size() == 1);
  CHECK(b.adjacent(0, 1));
  CHECK(serialize_graph6(b) == "B_");

  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  CHECK(parse_graph6("Ch\r\n") == path_graph(4));

  CHECK_THROWS_AS(parse_graph6("B`"), FormatError);   // stray padding bit
  CHECK_THROWS_AS(parse_graph6("Ch_"), FormatError);  // too long
  CHECK_THROWS_AS(parse_graph6("D~"), FormatError);   // too short
  CHECK_THROWS_AS(parse_graph6("C "), FormatError);   // byte below 63
  CHECK_THROWS_AS(parse_graph6("~?@?"), FormatError); // long form
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
}

TEST_CASE("serialize_graph6 limits") {
  CHECK_NOTHROW(serialize_graph6(path_graph(62)));
  CHECK_THROWS_AS(serialize_graph6(path_graph(63)), FormatError);
}

TEST_CASE("graph6 round trip on random graphs") {
  Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 63);
    Graph g = random_graph(n, uniform01(rng), rng);
    const std::string text = serialize_graph6(g);
    Graph back = parse_graph6(text);
    REQUIRE(back == g);
    CHECK(serialize_graph6(back) == text);
  }
}

TEST_CASE("serialization is labeling-sensitive") {
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph b = Graph::from_edges(3, {{0, 2}, {1, 2}});
  CHECK(serialize_graph6(a) != serialize_graph6(b));
  CHECK(canonical_key(a) == canonical_key(b));
}

TEST_CASE("parse_sparse6 reference strings") {
  CHECK(parse_sparse6(":Fa@x^") == Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}}));
  CHECK(parse_sparse6(":Da@_Q_QN") == complete_graph(5));
  CHECK(parse_sparse6(":EaYmC") == cycle_graph(6));
  CHECK(parse_sparse6(":Cdv") == path_graph(4));
  CHECK(parse_sparse6(":@") == Graph(1));
  CHECK(parse_sparse6(":An") == complete_graph(2));
  CHECK(parse_sparse6(":?") == Graph(0));
  CHECK(parse_sparse6(":g`?YGU{Pr_N") == Graph::from_edges(40, {{0, 39}, {5, 17}, {17, 30}, {1, 2}}));
  CHECK(parse_sparse6(R"(:}_OWSMHDbPxCeTJeRXs}`PhSydUlVkUZTmx\nV{EFDbqX[u^PhtY|ev\nw[]VNhtz\~Fftz}^)") ==
        path_graph(62));
  CHECK(parse_sparse6(":I`ES@obGkqegW~") == parse_graph6("IheA@GUAo"));
}

TEST_CASE("parse_sparse6 errors") {
  CHECK_THROWS_AS(parse_sparse6("Ch"), FormatError);
  CHECK_THROWS_AS(parse_sparse6(":C d"), FormatError);
  CHECK_THROWS_AS(parse_sparse6(":"), FormatError);
  // n = 2, k = 1: bits 0 0 encode a loop at vertex 0.
  CHECK_THROWS_AS(parse_sparse6(":A?"), FormatError);
}

TEST_CASE("parse_graph_line dispatch and headers") {
  CHECK(parse_graph_line(">>graph6<<Ch") == path_graph(4));
  CHECK(parse_graph_line(">>sparse6<<:Cdv") == path_graph(4));
  CHECK(parse_graph_line(":Cdv\n") == path_graph(4));
  CHECK(strip_format_header(">>graph6<<") == "");
  CHECK_THROWS_AS(parse_graph_line(";Cdv"), FormatError);
  CHECK_THROWS_AS(parse_graph_line("   "), FormatError);
}

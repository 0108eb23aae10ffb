#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "scmlab/enumerate.hpp"
#include "scmlab/graph.hpp"
#include "scmlab/graph6.hpp"
#include "scmlab/util.hpp"

using namespace scmlab;

TEST_CASE("enumeration matches the known isomorphism-class counts", "[enumerate]") {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    REQUIRE(enumerate_graphs(n).size() == all[n - 1]);
    REQUIRE(enumerate_graphs(n, true).size() == connected[n - 1]);
  }
}

TEST_CASE("enumeration output is well formed", "[enumerate]") {
  // every representative has the requested vertex count, and no two are
  // isomorphic (distinct graph6 strings witness at least distinctness)
  std::vector<Graph> graphs = enumerate_graphs(5);
  std::vector<std::string> codes;
  for (const Graph& g : graphs) {
    REQUIRE(g.n() == 5);
    codes.push_back(to_graph6(g));
  }
  std::sort(codes.begin(), codes.end());
  REQUIRE(std::adjacent_find(codes.begin(), codes.end()) == codes.end());

  for (const Graph& g : enumerate_graphs(4, true)) REQUIRE(g.is_connected());
}

TEST_CASE("small connected classes are the expected ones", "[enumerate]") {
  // n = 3 connected: the path and the triangle
  std::vector<Graph> c3 = enumerate_graphs(3, true);
  REQUIRE(c3.size() == 2);
  std::vector<std::size_t> sizes;
  for (const Graph& g : c3) sizes.push_back(g.edge_count());
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<std::size_t>{2, 3});

  REQUIRE(enumerate_graphs(1).size() == 1);
  REQUIRE(enumerate_graphs(1).front().edge_count() == 0);
}

TEST_CASE("enumeration is deterministic", "[enumerate]") {
  std::vector<Graph> a = enumerate_graphs(6);
  std::vector<Graph> b = enumerate_graphs(6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(to_graph6(a[i]) == to_graph6(b[i]));
}

TEST_CASE("enumeration guards its limits", "[enumerate]") {
  REQUIRE_THROWS_AS(enumerate_graphs(8), limit_error);
  REQUIRE_THROWS_AS(enumerate_graphs(0), input_error);
  REQUIRE_THROWS_AS(enumerate_graphs(-3), input_error);
}

TEST_CASE("cumulative enumeration concatenates the layers", "[enumerate]") {
  std::vector<Graph> upto = enumerate_graphs_upto(5);
  REQUIRE(upto.size() == 1 + 2 + 4 + 11 + 34);
  REQUIRE(upto.front().n() == 1);
  REQUIRE(upto.back().n() == 5);

  std::vector<Graph> conn = enumerate_graphs_upto(4, true);
  REQUIRE(conn.size() == 1 + 1 + 2 + 6);
  for (const Graph& g : conn) REQUIRE(g.is_connected());
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "scmlab/graph.hpp"

using namespace scmlab;

namespace {
Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// 5-cycle 0-1-2-3-4 plus the chord {1,4}
Graph house() {
  Graph g = cycle(5);
  g.add_edge(1, 4);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

VertexSet face(std::initializer_list<int> vs) {
  VertexSet f = 0;
  for (int v : vs) f |= bit(v);
  return f;
}
}  // namespace

TEST_CASE("graph construction and editing", "[graph]") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  REQUIRE(g.n() == 4);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(1, 0));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE(g.degree(0) == 1);
  REQUIRE(g.neighbors(0) == face({1}));
  REQUIRE(g.closed_neighborhood(0) == face({0, 1}));
  REQUIRE(g.isolated_vertices() == 0);
  REQUIRE(Graph(3).isolated_vertices() == face({0, 1, 2}));
  REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 0}}), input_error);
  REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 2}}), input_error);
}

TEST_CASE("vertex deletion relabels downward", "[graph]") {
  Graph p = path(3);
  Graph d = p.delete_vertex(1);
  REQUIRE(d.n() == 2);
  REQUIRE(d.edge_count() == 0);

  std::vector<int> labels;
  Graph h = cycle(5).delete_closed_neighborhood(0, &labels);
  REQUIRE(h.n() == 2);
  REQUIRE(h.has_edge(0, 1));       // old vertices 2,3
  REQUIRE(labels == std::vector<int>{2, 3});

  Graph k = cycle(4).induced(face({0, 1, 3}));
  REQUIRE(k.n() == 3);
  REQUIRE(k.edge_count() == 2);  // 01 and 03 survive as {0,1},{0,2}
  REQUIRE(k.has_edge(0, 2));
}

TEST_CASE("connectivity", "[graph]") {
  REQUIRE(cycle(5).is_connected());
  REQUIRE(Graph(1).is_connected());
  REQUIRE(Graph(0).is_connected());
  REQUIRE_FALSE(Graph(2).is_connected());
  REQUIRE_FALSE(Graph::from_edges(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("edge ideal and independence complex", "[graph]") {
  Graph g = path(3);
  MonomialIdeal I = edge_ideal(g);
  REQUIRE(I == MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})}));
  REQUIRE(edge_ideal(Graph(2)).is_zero());

  std::vector<VertexSet> mis = maximal_independent_sets(cycle(4));
  REQUIRE(mis == std::vector<VertexSet>{face({0, 2}), face({1, 3})});
  REQUIRE(independence_complex(Graph(2)) == SimplicialComplex::simplex(2));
}

TEST_CASE("five cycles", "[graph]") {
  REQUIRE(five_cycles(cycle(5)).size() == 1);
  REQUIRE(five_cycles(cycle(5))[0] == FiveCycle{0, 1, 2, 3, 4});
  REQUIRE(five_cycles(cycle(4)).empty());
  REQUIRE(five_cycles(cycle(6)).empty());
  REQUIRE(five_cycles(house()).size() == 1);
  REQUIRE(five_cycles(complete(5)).size() == 12);
  REQUIRE(five_cycles(petersen()).size() == 12);
}

TEST_CASE("basic five cycles", "[graph]") {
  // bare 5-cycle: no degree-3 vertex at all
  REQUIRE(basic_five_cycles(cycle(5)).size() == 1);
  // house: the two degree-3 vertices (1 and 4) are not cycle-consecutive
  REQUIRE(basic_five_cycles(house()).size() == 1);
  REQUIRE(is_basic_five_cycle(house(), five_cycles(house())[0]));
  // one pendant: a single degree-3 vertex is fine
  Graph pend = cycle(5);
  pend = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
  REQUIRE(basic_five_cycles(pend).size() == 1);
  // pendants on two adjacent cycle vertices kill basicness
  Graph two = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}});
  REQUIRE(five_cycles(two).size() == 1);
  REQUIRE(basic_five_cycles(two).empty());
}

TEST_CASE("c5-free means no 5-cycle subgraph", "[graph]") {
  REQUIRE(is_c5_free(cycle(4)));
  REQUIRE(is_c5_free(cycle(6)));
  REQUIRE(is_c5_free(path(6)));
  REQUIRE(is_c5_free(complete(4)));
  REQUIRE_FALSE(is_c5_free(cycle(5)));
  REQUIRE_FALSE(is_c5_free(house()));  // the 5-cycle is a non-induced subgraph
  REQUIRE_FALSE(is_c5_free(complete(5)));
}

TEST_CASE("chordality", "[graph]") {
  REQUIRE(is_chordal(complete(4)));
  REQUIRE(is_chordal(path(5)));
  REQUIRE(is_chordal(star(4)));
  REQUIRE(is_chordal(Graph(3)));
  REQUIRE_FALSE(is_chordal(cycle(4)));
  REQUIRE_FALSE(is_chordal(cycle(5)));
  REQUIRE_FALSE(is_chordal(house()));  // contains the chordless 4-cycle 1-2-3-4
  Graph c4chord = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  REQUIRE(is_chordal(c4chord));
}

TEST_CASE("bipartiteness", "[graph]") {
  REQUIRE(is_bipartite(cycle(4)));
  REQUIRE(is_bipartite(cycle(6)));
  REQUIRE(is_bipartite(path(5)));
  REQUIRE(is_bipartite(star(3)));
  REQUIRE(is_bipartite(Graph(2)));
  REQUIRE_FALSE(is_bipartite(cycle(5)));
  REQUIRE_FALSE(is_bipartite(complete(3)));
}

TEST_CASE("matching numbers", "[graph]") {
  REQUIRE(matching_number(path(4)) == 2);
  REQUIRE(matching_number(star(3)) == 1);
  REQUIRE(matching_number(cycle(5)) == 2);
  REQUIRE(matching_number(cycle(6)) == 3);
  REQUIRE(matching_number(complete(4)) == 2);
  REQUIRE(matching_number(Graph(3)) == 0);
}

TEST_CASE("induced matching numbers", "[graph]") {
  REQUIRE(induced_matching_number(path(2)) == 1);
  REQUIRE(induced_matching_number(path(4)) == 1);
  REQUIRE(induced_matching_number(path(5)) == 2);
  REQUIRE(induced_matching_number(star(4)) == 1);
  REQUIRE(induced_matching_number(cycle(5)) == 1);
  REQUIRE(induced_matching_number(cycle(6)) == 2);
  REQUIRE(induced_matching_number(Graph(3)) == 0);

  Graph p5 = path(5);
  REQUIRE(edges_three_disjoint(p5, {0, 1}, {3, 4}));
  REQUIRE_FALSE(edges_three_disjoint(p5, {0, 1}, {2, 3}));
  REQUIRE_FALSE(edges_three_disjoint(p5, {0, 1}, {1, 2}));
}

TEST_CASE("codominated vertices", "[graph]") {
  // star center dominates each leaf's closed neighbourhood
  REQUIRE(is_codominated(star(3), 0));
  REQUIRE_FALSE(is_codominated(star(3), 1));
  for (int v = 0; v < 5; ++v) REQUIRE_FALSE(is_codominated(cycle(5), v));
  // path: each neighbour of a leaf is codominated
  REQUIRE(is_codominated(path(4), 1));
  REQUIRE_FALSE(is_codominated(path(4), 0));
  // house: vertex 0 is shedding but not codominated (the graph has a
  // 5-cycle, so no contradiction with the C5-free equivalence)
  REQUIRE(is_shedding_vertex(house(), 0));
  REQUIRE_FALSE(is_codominated(house(), 0));
  REQUIRE_FALSE(is_c5_free(house()));
}

TEST_CASE("well covered and very well covered", "[graph]") {
  REQUIRE(is_well_covered(cycle(4)));
  REQUIRE(is_well_covered(cycle(5)));
  REQUIRE(is_well_covered(path(4)));
  REQUIRE(is_well_covered(path(2)));
  REQUIRE_FALSE(is_well_covered(path(3)));
  REQUIRE_FALSE(is_well_covered(cycle(6)));

  REQUIRE(is_very_well_covered(cycle(4)));
  REQUIRE(is_very_well_covered(path(2)));
  REQUIRE(is_very_well_covered(path(4)));
  REQUIRE_FALSE(is_very_well_covered(cycle(5)));  // sizes 2, n = 5
  REQUIRE_FALSE(is_very_well_covered(star(3)));
  Graph lonely(1);
  REQUIRE(is_well_covered(lonely));
  REQUIRE_FALSE(is_very_well_covered(lonely));  // isolated vertex
}

TEST_CASE("cameron-walker predicate", "[graph]") {
  REQUIRE(is_cameron_walker(star(4)));
  REQUIRE(is_cameron_walker(path(2)));
  REQUIRE(is_cameron_walker(complete(3)));  // m = im = 1
  REQUIRE_FALSE(is_cameron_walker(path(4)));
  REQUIRE_FALSE(is_cameron_walker(cycle(5)));
  REQUIRE_THROWS_AS(is_cameron_walker(Graph(3)), input_error);
}

TEST_CASE("vertex decomposability", "[graph]") {
  REQUIRE(is_vertex_decomposable(path(4)));
  REQUIRE(is_vertex_decomposable(path(5)));
  REQUIRE(is_vertex_decomposable(star(4)));
  REQUIRE(is_vertex_decomposable(complete(4)));
  REQUIRE(is_vertex_decomposable(cycle(5)));
  REQUIRE(is_vertex_decomposable(cycle(3)));
  REQUIRE(is_vertex_decomposable(house()));
  REQUIRE(is_vertex_decomposable(Graph(3)));  // full simplex
  REQUIRE_FALSE(is_vertex_decomposable(cycle(4)));
  REQUIRE_FALSE(is_vertex_decomposable(cycle(6)));
}

TEST_CASE("shedding vertices through the graph interface", "[graph]") {
  for (int v = 0; v < 5; ++v) REQUIRE(is_shedding_vertex(cycle(5), v));
  for (int v = 0; v < 4; ++v) REQUIRE_FALSE(is_shedding_vertex(cycle(4), v));
  // the support vertex of a path's leaf is shedding, the leaf is not
  REQUIRE(is_shedding_vertex(path(4), 1));
  REQUIRE_FALSE(is_shedding_vertex(path(4), 0));
}

TEST_CASE("edge mask round trip", "[graph]") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    Graph g = Graph::from_edge_mask(4, mask);
    REQUIRE(g.edge_mask() == mask);
  }
  REQUIRE(Graph::from_edge_mask(3, 0b111).edge_count() == 3);
}

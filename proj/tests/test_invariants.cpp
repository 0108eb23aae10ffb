#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "scmlab/graph.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/stanley_reisner.hpp"

using namespace scmlab;

namespace {
Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

VertexSet face(std::initializer_list<int> vs) {
  VertexSet f = 0;
  for (int v : vs) f |= bit(v);
  return f;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimplicialComplex rp2_six() {
  return SimplicialComplex::from_facets(
      6, {face({0, 1, 2}), face({0, 1, 5}), face({0, 2, 4}), face({0, 3, 4}),
          face({0, 3, 5}), face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}),
          face({2, 3, 5}), face({2, 4, 5})});
}

using Entries = std::map<std::pair<int, int>, std::int64_t>;
}  // namespace

TEST_CASE("cohen-macaulay on small complexes", "[invariants]") {
  REQUIRE(is_cm(SimplicialComplex::empty_complex(2)));
  REQUIRE(is_cm(SimplicialComplex::simplex(3)));
  REQUIRE_THROWS_AS(is_cm(SimplicialComplex::void_complex(2)), input_error);

  REQUIRE(is_cm(independence_complex(cycle(5))));   // circle
  REQUIRE(is_cm(independence_complex(cycle(3))));   // three points
  REQUIRE_FALSE(is_cm(independence_complex(cycle(4))));  // two disjoint edges

  // mixed-dimension complexes are never CM (not even connected enough)
  REQUIRE_FALSE(is_cm(SimplicialComplex::from_facets(3, {face({0, 1}), face({2})})));
}

TEST_CASE("sequentially cohen-macaulay on small complexes", "[invariants]") {
  REQUIRE(is_scm(independence_complex(cycle(5))));
  REQUIRE(is_scm(independence_complex(cycle(3))));
  REQUIRE_FALSE(is_scm(independence_complex(cycle(4))));
  // the mixed complex {01, 2} is SCM though not CM
  REQUIRE(is_scm(SimplicialComplex::from_facets(3, {face({0, 1}), face({2})})));
  REQUIRE_THROWS_AS(is_scm(SimplicialComplex::void_complex(2)), input_error);

  // path x1-x2-x3: SCM but mixed, hence not CM
  MonomialIdeal p3(3, {m({1, 1, 0}), m({0, 1, 1})});
  REQUIRE(is_scm_ideal(p3));
  REQUIRE_FALSE(is_cm_ideal(p3));
  REQUIRE_FALSE(is_unmixed(p3));
}

TEST_CASE("cm equals unmixed and scm on edge-ideal spot checks", "[invariants]") {
  for (int n = 3; n <= 6; ++n) {
    MonomialIdeal I = edge_ideal(cycle(n));
    InvariantContext ctx;
    SimplicialComplex d = stanley_reisner_complex(I);
    REQUIRE(ctx.is_cm(d) == (is_unmixed(I) && ctx.is_scm(d)));
  }
}

TEST_CASE("betti table of the 5-cycle", "[invariants]") {
  BettiTable t = betti_table(edge_ideal(cycle(5)));
  Entries want = {{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}};
  REQUIRE(t.entries == want);
  REQUIRE(t.regularity() == 2);
  REQUIRE(t.proj_dim() == 3);
  REQUIRE(t.depth() == 2);
  REQUIRE(t.beta(1, 2) == 5);
  REQUIRE(t.beta(2, 4) == 0);
}

TEST_CASE("betti table of the path on three vertices", "[invariants]") {
  BettiTable t = betti_table(MonomialIdeal(3, {m({1, 1, 0}), m({0, 1, 1})}));
  Entries want = {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
  REQUIRE(t.entries == want);
  REQUIRE(t.proj_dim() == 2);
  REQUIRE(t.depth() == 1);
  REQUIRE(t.regularity() == 1);
}

TEST_CASE("betti table of the 4-cycle with a pendant", "[invariants]") {
  Graph g = Graph::from_edges(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 4}});
  BettiTable t = betti_table(edge_ideal(g));
  Entries want = {{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 2}};
  REQUIRE(t.entries == want);
  REQUIRE(t.regularity() == 1);
  REQUIRE(t.proj_dim() == 3);
  REQUIRE(t.depth() == 2);
}

TEST_CASE("zero and unit ideal conventions", "[invariants]") {
  BettiTable z = betti_table(MonomialIdeal::zero(4));
  REQUIRE(z.entries == Entries{{{0, 0}, 1}});
  REQUIRE(z.depth() == 4);
  REQUIRE(z.proj_dim() == 0);
  REQUIRE(z.regularity() == 0);
  REQUIRE(is_cm_ideal(MonomialIdeal::zero(3)));
  REQUIRE(is_scm_ideal(MonomialIdeal::zero(3)));

  REQUIRE_THROWS_AS(betti_table(MonomialIdeal::unit_ideal(2)), input_error);
  REQUIRE_THROWS_AS(is_cm_ideal(MonomialIdeal::unit_ideal(2)), input_error);
  REQUIRE_THROWS_AS(is_scm_ideal(MonomialIdeal::unit_ideal(2)), input_error);
}

TEST_CASE("non-square-free ideals go through polarization", "[invariants]") {
  // (x1^2) is artinian in one variable, hence CM
  REQUIRE(is_cm_ideal(MonomialIdeal(1, {m({2})})));
  // (x1^2, x1x2): depth 0 < dim 1
  MonomialIdeal I(2, {m({2, 0}), m({1, 1})});
  REQUIRE_FALSE(is_cm_ideal(I));
  BettiTable t = betti_table(I);
  Entries want = {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
  REQUIRE(t.entries == want);  // same table as its polarization
  REQUIRE(t.nvars == 2);       // reported over the original ring
  REQUIRE(t.depth() == 0);
  REQUIRE(t.regularity() == 1);
}

TEST_CASE("hochster guards", "[invariants]") {
  InvariantContext ctx;
  REQUIRE_THROWS_AS(ctx.betti_hochster(MonomialIdeal(2, {m({2, 0})})), input_error);
  REQUIRE_THROWS_AS(ctx.betti_hochster(MonomialIdeal::unit_ideal(2)), input_error);
}

TEST_CASE("field dependence of cohen-macaulayness", "[invariants]") {
  SimplicialComplex rp2 = rp2_six();
  REQUIRE(is_cm(rp2, FieldSpec::rationals()));
  REQUIRE_FALSE(is_cm(rp2, FieldSpec::prime(2)));
  REQUIRE(is_cm(rp2, FieldSpec::prime(3)));
  // same split for its face ideal through the ideal-side interface
  MonomialIdeal I = stanley_reisner_ideal(rp2);
  REQUIRE(is_cm_ideal(I, FieldSpec::rationals()));
  REQUIRE_FALSE(is_cm_ideal(I, FieldSpec::prime(2)));
  REQUIRE(is_scm_ideal(I, FieldSpec::rationals()));
  REQUIRE_FALSE(is_scm_ideal(I, FieldSpec::prime(2)));
}

TEST_CASE("memoized context matches one-shot calls", "[invariants]") {
  InvariantContext ctx;
  SimplicialComplex d = independence_complex(cycle(5));
  REQUIRE(ctx.is_cm(d));
  REQUIRE(ctx.is_cm(d));  // cached second call
  REQUIRE(ctx.cache_size() > 0);
  REQUIRE(ctx.is_scm(d) == is_scm(d));
  REQUIRE(ctx.betti(edge_ideal(cycle(4))).entries ==
          betti_table(edge_ideal(cycle(4))).entries);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scmlab/field.hpp"
#include "scmlab/graph.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/monomial.hpp"

namespace scmlab {

/// Graph-side facts attached to an InvariantReport when the input was a
/// graph (analyze command).
struct GraphFacts {
  bool connected = false;
  bool chordal = false;
  bool bipartite = false;
  bool c5_free = false;
  bool vertex_decomposable = false;
  std::optional<bool> cameron_walker;  // unset for edgeless graphs
  bool well_covered = false;
  bool very_well_covered = false;
  int matching = 0;
  int induced_matching = 0;
  std::vector<int> shedding_vertices;    // 0-based
  std::vector<int> codominated_vertices;
  std::vector<FiveCycle> basic_cycles;

  bool operator==(const GraphFacts&) const = default;
};

/// Full analysis of one ideal (optionally arising from a graph).
struct InvariantReport {
  std::string source;
  FieldSpec field;
  int nvars = 0;
  std::vector<std::string> generators;  // printed monomials
  int dim = 0;    // Krull dimension of R/I
  int depth = 0;
  int pd = 0;
  int reg = 0;
  bool cm = false;
  bool scm = false;
  bool unmixed = false;
  std::vector<VertexSet> ass_primes;  // variable supports
  std::optional<GraphFacts> graph;

  bool operator==(const InvariantReport&) const = default;
};

/// Builds the ideal-side report; asserts the CM = unmixed ∧ SCM equivalence
/// as an internal consistency check.
inline InvariantReport analyze_ideal(const MonomialIdeal& I, const FieldSpec& field,
                                     std::string source = "") {
  if (I.is_unit()) throw input_error("analyze: unit ideal");
  InvariantReport r;
  r.source = std::move(source);
  r.field = field;
  r.nvars = I.nvars();
  for (const Monomial& g : I.gens()) r.generators.push_back(g.str());
  InvariantContext ctx(field);
  const MonomialIdeal sq = I.is_squarefree() ? I : polarize(I).ideal;
  SimplicialComplex delta = stanley_reisner_complex(sq);
  r.dim = delta.dim() + 1 - (sq.nvars() - I.nvars());  // polarization adds a simplex factor
  BettiTable t = ctx.betti(I);
  r.depth = t.depth();
  r.pd = t.proj_dim();
  r.reg = t.regularity();
  r.cm = ctx.is_cm(delta);
  r.scm = ctx.is_scm(delta);
  if (I.is_squarefree()) {
    r.unmixed = is_unmixed(I);
    r.ass_primes = associated_primes(I);
    if (r.cm != (r.unmixed && r.scm))
      throw std::logic_error("analyze: CM <=> unmixed & SCM consistency violated");
  } else {
    r.unmixed = is_unmixed(sq);
  }
  return r;
}

/// Graph analysis: edge-ideal invariants plus the graph-side predicates.
inline InvariantReport analyze_graph(const Graph& g, const FieldSpec& field,
                                     std::string source = "") {
  InvariantReport r = analyze_ideal(edge_ideal(g), field, std::move(source));
  GraphFacts f;
  f.connected = g.is_connected();
  f.chordal = is_chordal(g);
  f.bipartite = is_bipartite(g);
  f.c5_free = is_c5_free(g);
  f.vertex_decomposable = is_vertex_decomposable(g);
  if (g.edge_count() > 0) f.cameron_walker = is_cameron_walker(g);
  f.well_covered = is_well_covered(g);
  f.very_well_covered = is_very_well_covered(g);
  f.matching = matching_number(g);
  f.induced_matching = induced_matching_number(g);
  SimplicialComplex delta = independence_complex(g);
  for (int v = 0; v < g.n(); ++v) {
    if (is_shedding_vertex(delta, v)) f.shedding_vertices.push_back(v);
    if (is_codominated(g, v)) f.codominated_vertices.push_back(v);
  }
  f.basic_cycles = basic_five_cycles(g);
  r.graph = std::move(f);
  return r;
}

/// One verification failure: the object, what the theorem predicts, what
/// the implementation measured.
struct VerificationFailure {
  std::string object;
  std::string expected;
  std::string got;

  bool operator==(const VerificationFailure&) const = default;
};

struct VerificationSkip {
  std::string object;
  std::string reason;

  bool operator==(const VerificationSkip&) const = default;
};

/// Outcome of one theorem arm over one corpus and one field.
struct VerificationReport {
  std::string theorem;
  FieldSpec field;
  std::string corpus;
  std::uint64_t seed = 0;
  std::int64_t instances_checked = 0;
  std::vector<VerificationFailure> failures;
  std::vector<VerificationSkip> skipped;
  std::vector<std::string> notes;  // findings that are not failures
  double wall_time_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

}  // namespace scmlab

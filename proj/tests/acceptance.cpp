// Acceptance gate: each numbered criterion prints exactly one [PASS]/[FAIL]
// line and exits 0/1.  Run with the criterion number as the only argument,
// or with no arguments to run all seven in order.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "scmlab/enumerate.hpp"
#include "scmlab/field.hpp"
#include "scmlab/gen.hpp"
#include "scmlab/graph.hpp"
#include "scmlab/homology.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/koszul.hpp"
#include "scmlab/monomial.hpp"
#include "scmlab/simplicial_complex.hpp"
#include "scmlab/theorems.hpp"
#include "scmlab/util.hpp"

using namespace scmlab;

namespace {

VertexSet face(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

SimplicialComplex rp2_six() {
  return SimplicialComplex::from_facets(
      6, {face({0, 1, 2}), face({0, 1, 5}), face({0, 2, 4}), face({0, 3, 4}), face({0, 3, 5}),
          face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}), face({2, 3, 5}), face({2, 4, 5})});
}

/// Prints one status line for a finished arm and folds it into `ok`.
bool arm_ok(const VerificationReport& r) {
  std::printf("  %-8s over %-4s checked=%ld skipped=%zu failures=%zu (%.1fs)\n",
              r.theorem.c_str(), r.field.str().c_str(), r.instances_checked, r.skipped.size(),
              r.failures.size(), r.wall_time_seconds);
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
    std::printf("    FAIL %s\n      expected: %s\n      got:      %s\n",
                r.failures[i].object.c_str(), r.failures[i].expected.c_str(),
                r.failures[i].got.c_str());
  return r.passed();
}

// ------------------------------------------------------------ criteria

bool criterion1() {
  VerificationReport rep = run_worked_examples(FieldSpec::rationals());
  bool ok = arm_ok(rep);
  if (rep.wall_time_seconds >= 5.0) {
    std::printf("  worked examples took %.2fs, budget is 5s\n", rep.wall_time_seconds);
    ok = false;
  }
  return ok && rep.instances_checked == 11;
}

/// T1 and its CM corollary over connected graphs with at most 7 vertices.
bool criterion2(const FieldSpec& field, std::vector<VerificationReport>* out) {
  CorpusSpec c;
  c.max_n = 7;
  c.connected_only = true;
  bool ok = true;
  double wall = 0;
  for (TheoremId id : {TheoremId::T1, TheoremId::COR_T1}) {
    VerificationReport rep = verify(id, c, field);
    wall += rep.wall_time_seconds;
    ok = arm_ok(rep) && ok;
    if (out) out->push_back(std::move(rep));
  }
  if (field.is_rationals() && wall >= 600.0) {
    std::printf("  decomposition sweep took %.0fs, budget is 600s\n", wall);
    ok = false;
  }
  return ok;
}

/// reg = induced matching number on the five families (and their union).
bool criterion3(const FieldSpec& field, std::vector<VerificationReport>* out) {
  CorpusSpec c;
  c.max_n = 6;
  bool ok = true;
  for (TheoremId id : {TheoremId::C2I, TheoremId::C2II, TheoremId::C2III, TheoremId::C2IV,
                       TheoremId::C2V, TheoremId::T2}) {
    VerificationReport rep = verify(id, c, field);
    ok = arm_ok(rep) && ok;
    if (out) out->push_back(std::move(rep));
  }
  return ok;
}

/// Hochster-formula Betti tables against the independent Koszul-strand
/// oracle: every labelled edge ideal with n <= 5 plus a seeded random
/// square-free sample.
bool criterion4() {
  InvariantContext ctx(FieldSpec::rationals());
  long checked = 0, mismatched = 0;
  auto check = [&](const MonomialIdeal& I, const std::string& name) {
    BettiTable h = ctx.betti_hochster(I);
    BettiTable k = koszul::betti_koszul_oracle(I, FieldSpec::rationals());
    ++checked;
    if (h.entries != k.entries || h.nvars != k.nvars) {
      ++mismatched;
      if (mismatched <= 5)
        std::printf("    MISMATCH %s\n      hochster:\n%s      koszul:\n%s", name.c_str(),
                    h.triangle().c_str(), k.triangle().c_str());
    }
  };
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      Graph g = Graph::from_edge_mask(n, m);
      check(edge_ideal(g), "edge mask n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform(2, 5);
    MonomialIdeal I = random_squarefree_ideal(rng, n);
    check(I, "rand#" + std::to_string(t) + " I=" + I.str());
  }
  std::printf("  %ld tables compared, %ld mismatches\n", checked, mismatched);
  return mismatched == 0;
}

/// The identity and hypothesis arms, exhaustive where the statements are
/// graded by vertex count and seeded where the corpora are random.
bool criterion5(const FieldSpec& field, std::vector<VerificationReport>* out) {
  bool ok = true;

  // CM <=> unmixed and SCM, directly over every class with n <= 6
  InvariantContext ctx(field);
  int classes = 0, broken = 0;
  for (const Graph& g : enumerate_graphs_upto(6)) {
    MonomialIdeal I = edge_ideal(g);
    ++classes;
    if (ctx.is_cm_ideal(I) != (is_unmixed(I) && ctx.is_scm_ideal(I))) {
      ++broken;
      if (broken <= 5) std::printf("    CM-split broken on %s\n", g.str().c_str());
    }
  }
  std::printf("  CM <=> unmixed & SCM over %s: %d classes, %d violations\n",
              field.str().c_str(), classes, broken);
  ok = ok && broken == 0;

  CorpusSpec c6;
  c6.max_n = 6;
  for (TheoremId id :
       {TheoremId::L0, TheoremId::L2, TheoremId::L3, TheoremId::L4, TheoremId::P2}) {
    VerificationReport rep = verify(id, c6, field);
    ok = arm_ok(rep) && ok;
    if (out) out->push_back(std::move(rep));
  }
  // hypothesis-filtered corpora: enumerated edge ideals + seeded samples
  for (TheoremId id : {TheoremId::L1, TheoremId::C1, TheoremId::P0}) {
    VerificationReport rep = verify(id, c6, field);
    ok = arm_ok(rep) && ok;
    if (out) out->push_back(std::move(rep));
  }
  return ok;
}

/// Structural homology checks on a large random corpus.
bool criterion6() {
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)};
  Rng rng(kDefaultSeed + 100);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = rng.uniform(1, 7);
    SimplicialComplex d = random_complex(rng, n);
    const FieldSpec& f = fields[t % 3];

    if (!boundary_squares_to_zero(build_chain_complex(d))) {
      ++bad;
      std::printf("    boundary does not square to zero on %s\n", d.str().c_str());
      continue;
    }

    // reduced Euler characteristic from face counts vs from homology
    std::int64_t euler_faces = 0;
    for (int k = -1; k <= d.dim(); ++k)
      euler_faces += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d.face_count(k));
    HomologyProfile h = reduced_homology(d, f);
    if (h.reduced_euler() != euler_faces) {
      ++bad;
      std::printf("    Euler identity fails on %s over %s\n", d.str().c_str(), f.str().c_str());
      continue;
    }

    // coning kills all reduced homology
    std::vector<VertexSet> facets;
    for (VertexSet s : d.facets()) facets.push_back(s | bit(n));
    SimplicialComplex cone = SimplicialComplex::from_facets(n + 1, facets);
    if (!reduced_homology(cone, f).trivial()) {
      ++bad;
      std::printf("    cone is not acyclic on %s over %s\n", d.str().c_str(), f.str().c_str());
    }
  }

  // fixed fixture: the hollow triangle is a circle
  SimplicialComplex hollow =
      SimplicialComplex::from_facets(3, {face({0, 1}), face({0, 2}), face({1, 2})});
  HomologyProfile h = reduced_homology(hollow, FieldSpec::rationals());
  bool circle = h.betti(1) == 1 && h.trivial_below(1);
  if (!circle) std::printf("    hollow triangle is not a circle\n");
  std::printf("  1000 random complexes checked, %d violations\n", bad);
  return bad == 0 && circle;
}

/// Sorted failure fingerprints of one report, for cross-field comparison.
std::vector<std::string> failure_keys(const VerificationReport& r) {
  std::vector<std::string> keys;
  for (const VerificationFailure& f : r.failures)
    keys.push_back(f.object + " | " + f.expected + " | " + f.got);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::string> compare_runs(const std::vector<VerificationReport>& a,
                                      const std::vector<VerificationReport>& b) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].instances_checked != b[i].instances_checked)
      out.push_back(a[i].theorem + ": checked " + std::to_string(a[i].instances_checked) +
                    " over " + a[i].field.str() + " vs " +
                    std::to_string(b[i].instances_checked) + " over " + b[i].field.str());
    if (failure_keys(a[i]) != failure_keys(b[i]))
      out.push_back(a[i].theorem + ": failure sets differ between " + a[i].field.str() +
                    " and " + b[i].field.str());
  }
  return out;
}

/// One-instance synthetic arm whose outcome is genuinely field-dependent:
/// the 6-vertex triangulation of the real projective plane is CM in
/// characteristic 0 but not in characteristic 2.
VerificationReport synthetic_rp2_arm(const FieldSpec& field) {
  VerificationReport rep;
  rep.theorem = "SYNTH_RP2";
  rep.field = field;
  rep.corpus = "6-vertex real projective plane";
  InvariantContext ctx(field);
  ++rep.instances_checked;
  if (!ctx.is_cm(rp2_six()))
    rep.failures.push_back({"RP2_6", "is_cm = true", "is_cm = false"});
  return rep;
}

/// Re-runs the exhaustive criteria over F2 and reports where the outcomes
/// deviate from the rational runs.  Completing the sweep and detecting the
/// injected field-sensitive instance is the bar; genuine discrepancies are
/// reported, not failed.
bool criterion7() {
  std::vector<VerificationReport> rational, mod2;
  std::printf(" re-running the decomposition sweep, family sweep, and arm sweep over F2\n");
  bool completed = true;
  completed = criterion2(FieldSpec::rationals(), &rational) && completed;
  completed = criterion2(FieldSpec::prime(2), &mod2) && completed;
  completed = criterion3(FieldSpec::rationals(), &rational) && completed;
  completed = criterion3(FieldSpec::prime(2), &mod2) && completed;
  completed = criterion5(FieldSpec::rationals(), &rational) && completed;
  completed = criterion5(FieldSpec::prime(2), &mod2) && completed;

  std::vector<std::string> diffs = compare_runs(rational, mod2);
  std::printf("  %zu cross-field discrepancies\n", diffs.size());
  for (const std::string& d : diffs) std::printf("    DISCREPANCY %s\n", d.c_str());

  // the detector must fire on a complex that is genuinely field-sensitive
  std::vector<std::string> injected =
      compare_runs({synthetic_rp2_arm(FieldSpec::rationals())},
                   {synthetic_rp2_arm(FieldSpec::prime(2))});
  bool detected = !injected.empty();
  std::printf("  injected projective-plane probe %s\n",
              detected ? "detected" : "NOT detected");
  return completed && detected;
}

const char* kDescription[] = {
    "",
    "worked-example regression over Q inside the 5s budget",
    "decomposition biconditional on connected graphs, n <= 7, both readings",
    "regularity equals induced matching number on the five families, n <= 6",
    "Hochster tables match the Koszul oracle on edge ideals and random ideals",
    "identity and hypothesis arms exhaustive to n <= 6, zero failures",
    "boundary, Euler, and cone checks on 1000 random complexes",
    "F2 re-run with cross-field comparison and injected sensitivity probe",
};

bool run_criterion(int k) {
  switch (k) {
    case 1: return criterion1();
    case 2: return criterion2(FieldSpec::rationals(), nullptr);
    case 3: return criterion3(FieldSpec::rationals(), nullptr);
    case 4: return criterion4();
    case 5: return criterion5(FieldSpec::rationals(), nullptr);
    case 6: return criterion6();
    case 7: return criterion7();
    default:
      std::printf("unknown criterion %d\n", k);
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> todo;
  if (argc >= 2) {
    todo.push_back(std::atoi(argv[1]));
  } else {
    for (int k = 1; k <= 7; ++k) todo.push_back(k);
  }
  bool all_ok = true;
  for (int k : todo) {
    bool ok = run_criterion(k);
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, kDescription[k]);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

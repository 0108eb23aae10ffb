#pragma once

#include <algorithm>
#include <vector>

#include "scmlab/monomial.hpp"
#include "scmlab/simplicial_complex.hpp"

namespace scmlab {

namespace detail {

/// Berge's algorithm: all inclusion-minimal sets hitting every set in
/// `families`.  Result is an antichain; {∅} when families is empty; empty
/// when some family member is ∅ (unhittable).
inline std::vector<VertexSet> minimal_hitting_sets(const std::vector<VertexSet>& families) {
  std::vector<VertexSet> cur = {0};
  for (VertexSet s : families) {
    if (s == 0) return {};
    std::vector<VertexSet> next;
    for (VertexSet h : cur) {
      if (h & s) {
        next.push_back(h);
        continue;
      }
      for (int v : vertices_of(s)) next.push_back(h | bit(v));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<VertexSet> antichain;
    for (VertexSet h : next) {
      bool dominated = false;
      for (VertexSet g : next)
        if (g != h && (g & h) == g) { dominated = true; break; }
      if (!dominated) antichain.push_back(h);
    }
    cur = std::move(antichain);
  }
  return cur;
}

}  // namespace detail

/// Δ(I) for a proper square-free monomial ideal: faces are the square-free
/// monomials not in I.  Facets are computed as complements of the minimal
/// vertex covers of the generator-support hypergraph, so no 2^n sweep is
/// needed.  Zero ideal ↦ full simplex.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw input_error("stanley_reisner: ideal is not square-free");
  if (I.is_unit()) throw input_error("stanley_reisner: unit ideal has no complex");
  int n = I.nvars();
  std::vector<VertexSet> supports;
  supports.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) supports.push_back(g.support());
  std::vector<VertexSet> facets;
  for (VertexSet cover : detail::minimal_hitting_sets(supports))
    facets.push_back(full_set(n) & ~cover);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

/// I(Δ): generated by the minimal non-faces.  Full simplex ↦ zero ideal;
/// the void complex is rejected (no proper ideal corresponds to it).
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d) {
  int n = d.ambient_vertices();
  if (d.is_void()) throw input_error("stanley_reisner: void complex has no ideal");
  if (n > 24) throw limit_error("stanley_reisner: non-face sweep limited to 24 vertices");
  std::vector<Monomial> gens;
  for (VertexSet f = 0;; ++f) {
    if (!d.has_face(f)) {
      // minimal non-face: dropping any one vertex lands back in Δ
      bool minimal = true;
      for (int v : vertices_of(f))
        if (!d.has_face(f & ~bit(v))) { minimal = false; break; }
      if (minimal) gens.push_back(Monomial::squarefree(n, f));
    }
    if (f == full_set(n)) break;
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Associated primes of R/I for square-free I, as variable-support sets:
/// exactly the minimal vertex covers of the generator supports
/// (equivalently the complements of the facets of Δ(I)).  Zero ideal ↦
/// empty list; unit ideal rejected.
inline std::vector<VertexSet> associated_primes(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw input_error("associated_primes: ideal is not square-free");
  if (I.is_unit()) throw input_error("associated_primes: unit ideal");
  if (I.is_zero()) return {};
  std::vector<VertexSet> supports;
  for (const Monomial& g : I.gens()) supports.push_back(g.support());
  std::vector<VertexSet> primes = detail::minimal_hitting_sets(supports);
  std::sort(primes.begin(), primes.end(), face_lex_less);
  return primes;
}

/// Unmixed: all associated primes have equal height (⇔ Δ(I) pure).
/// Zero ideal counts as unmixed.
inline bool is_unmixed(const MonomialIdeal& I) {
  if (I.is_unit()) throw input_error("is_unmixed: unit ideal");
  if (I.is_zero()) return true;
  std::vector<VertexSet> primes = associated_primes(I);
  int h = popcount(primes.front());
  return std::all_of(primes.begin(), primes.end(),
                     [&](VertexSet p) { return popcount(p) == h; });
}

}  // namespace scmlab

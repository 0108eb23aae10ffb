#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scmlab/graph.hpp"
#include "scmlab/monomial.hpp"
#include "scmlab/simplicial_complex.hpp"

namespace scmlab {

constexpr std::uint64_t kDefaultSeed = 20260815;

/// Deterministic random source for corpus sampling; the seed is recorded in
/// every report so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  bool coin(double p) { return std::bernoulli_distribution(p)(eng_); }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// Random proper square-free ideal: up to max_gens supports of size 2..3
/// (the regime where SCM/CM behaviour is interesting at small n).
inline MonomialIdeal random_squarefree_ideal(Rng& rng, int n, int max_gens = 6) {
  std::vector<Monomial> gens;
  int count = rng.uniform(1, max_gens);
  for (int t = 0; t < count; ++t) {
    int size = rng.uniform(2, std::min(3, n));
    VertexSet s = 0;
    while (popcount(s) < size) s |= bit(rng.uniform(0, n - 1));
    gens.push_back(Monomial::squarefree(n, s));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Random monomial with exponents in [0, max_exp]; never the unit.
inline Monomial random_monomial(Rng& rng, int n, int max_exp = 2) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = rng.uniform(0, max_exp);
    int deg = 0;
    for (int v : e) deg += v;
    if (deg > 0) break;
  }
  return Monomial(e);
}

/// Random monomial ideal (not necessarily square-free).
inline MonomialIdeal random_monomial_ideal(Rng& rng, int n, int max_gens = 5,
                                           int max_exp = 3) {
  std::vector<Monomial> gens;
  int count = rng.uniform(1, max_gens);
  for (int t = 0; t < count; ++t) gens.push_back(random_monomial(rng, n, max_exp));
  return MonomialIdeal(n, std::move(gens));
}

/// Random complex: a handful of random nonempty candidate facets.
inline SimplicialComplex random_complex(Rng& rng, int n, int max_facets = 8) {
  std::vector<VertexSet> facets;
  int count = rng.uniform(1, max_facets);
  for (int t = 0; t < count; ++t) {
    VertexSet f = rng.bits() & full_set(n);
    if (f) facets.push_back(f);
  }
  if (facets.empty()) facets.push_back(0);
  return SimplicialComplex::from_facets(n, facets);
}

inline Graph random_graph(Rng& rng, int n, double edge_prob = 0.5) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.coin(edge_prob)) g.add_edge(a, b);
  return g;
}

}  // namespace scmlab

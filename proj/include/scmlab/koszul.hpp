#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "scmlab/field.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/monomial.hpp"

namespace scmlab {

/// Cross-check oracle for graded Betti numbers: computes the multigraded
/// strands of the Koszul homology K(x_1..x_n) ⊗ R/I directly, one exponent
/// vector at a time, with its own dense elimination.  It shares no code
/// path with the Hochster/polarization pipeline, so agreement between the
/// two is meaningful evidence of correctness.
namespace koszul {

namespace detail {

/// Rank over Q by textbook Gaussian elimination on rationals.
inline int rank_rational(std::vector<std::vector<mpq_class>> m) {
  if (m.empty() || m[0].empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
    for (int i = r + 1; i < rows; ++i) {
      mpq_class f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  return r;
}

inline int rank_prime(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
    for (int i = r + 1; i < rows; ++i) {
      while (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        // inverse-free: repeated row subtraction, valid since p is prime
        std::int64_t a = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        std::int64_t b = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        std::int64_t f = b / a;
        if (f == 0) { std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(r)]); continue; }
        for (int j = c; j < cols; ++j)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p + p) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Basis element of the degree-a Koszul strand in homological level i:
/// e_S ⊗ x^b with |S| = i, b = a - eps_S >= 0 and x^b ∉ I.
struct StrandBasis {
  std::vector<std::pair<VertexSet, std::vector<int>>> elems;  // (S, b)
};

inline BettiTable betti_koszul_oracle(const MonomialIdeal& I,
                                      const FieldSpec& field = FieldSpec::rationals(),
                                      int var_limit = 6) {
  if (I.is_unit()) throw input_error("betti_koszul_oracle: unit ideal");
  int n = I.nvars();
  if (n > var_limit || n > 14)
    throw limit_error("betti_koszul_oracle: variable count above oracle limit");

  // Taylor-complex bound: every Betti multidegree divides lcm of the gens.
  std::vector<int> bound(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : I.gens())
    for (int k = 0; k < n; ++k)
      bound[static_cast<std::size_t>(k)] =
          std::max(bound[static_cast<std::size_t>(k)], g.exponent(k));
  std::int64_t box = 1;
  for (int k = 0; k < n; ++k) {
    box *= bound[static_cast<std::size_t>(k)] + 1;
    if (box > 4'000'000)
      throw limit_error("betti_koszul_oracle: multidegree box too large");
  }

  BettiTable table;
  table.nvars = n;
  table.field = field;
  table.entries[{0, 0}] = 1;  // R/I itself

  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    // --- one multidegree strand ---
    VertexSet supp = 0;
    int total = 0;
    for (int k = 0; k < n; ++k) {
      if (a[static_cast<std::size_t>(k)] > 0) supp |= bit(k);
      total += a[static_cast<std::size_t>(k)];
    }
    if (total > 0) {
      // levels[i] = basis of K_i ⊗ R/I in degree a
      std::vector<StrandBasis> levels(static_cast<std::size_t>(popcount(supp)) + 1);
      for_each_subset(supp, [&](VertexSet s) {
        std::vector<int> b = a;
        for (int v : vertices_of(s)) --b[static_cast<std::size_t>(v)];
        if (!I.contains(Monomial(b)))
          levels[static_cast<std::size_t>(popcount(s))].elems.push_back({s, std::move(b)});
      });

      // d_i : level i -> level i-1,  e_S ⊗ x^b ↦ Σ ± e_{S\k} ⊗ x_k x^b,
      // dropping terms with x_k x^b ∈ I.
      auto build = [&](int i) {
        const auto& upper = levels[static_cast<std::size_t>(i)].elems;
        const auto& lower = levels[static_cast<std::size_t>(i) - 1].elems;
        std::map<VertexSet, int> index;
        for (std::size_t t = 0; t < lower.size(); ++t) index[lower[t].first] = static_cast<int>(t);
        std::vector<std::vector<std::int64_t>> m(
            lower.size(), std::vector<std::int64_t>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
          VertexSet s = upper[c].first;
          int sign = 1;
          for (int k : vertices_of(s)) {
            std::vector<int> img = upper[c].second;
            ++img[static_cast<std::size_t>(k)];
            auto it = index.find(s & ~bit(k));
            if (it != index.end() && !I.contains(Monomial(img)))
              m[static_cast<std::size_t>(it->second)][c] = sign;
            sign = -sign;
          }
        }
        return m;
      };

      auto rank_of = [&](const std::vector<std::vector<std::int64_t>>& m) -> int {
        if (m.empty() || m[0].empty()) return 0;
        if (field.is_rationals()) {
          std::vector<std::vector<mpq_class>> q(m.size());
          for (std::size_t i = 0; i < m.size(); ++i)
            q[i].assign(m[i].begin(), m[i].end());
          return detail::rank_rational(std::move(q));
        }
        return detail::rank_prime(m, field.p);
      };

      int top = static_cast<int>(levels.size()) - 1;
      std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);  // ranks[i] = rank d_i
      for (int i = 1; i <= top; ++i) ranks[static_cast<std::size_t>(i)] = rank_of(build(i));
      for (int i = 1; i <= top; ++i) {
        std::int64_t dim_level = static_cast<std::int64_t>(levels[static_cast<std::size_t>(i)].elems.size());
        std::int64_t kernel = dim_level - ranks[static_cast<std::size_t>(i)];
        std::int64_t image = i < top ? ranks[static_cast<std::size_t>(i) + 1] : 0;
        std::int64_t betti = kernel - image;
        if (betti) table.entries[{i, total}] += betti;
      }
    }
    // --- advance the exponent vector through the box ---
    int k = 0;
    while (k < n && a[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) {
      a[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
    ++a[static_cast<std::size_t>(k)];
  }
  return table;
}

}  // namespace koszul
}  // namespace scmlab

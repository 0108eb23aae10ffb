#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "scmlab/field.hpp"
#include "scmlab/util.hpp"

namespace scmlab {

/// Dense integer matrix, row-major.  Boundary matrices are sparse in
/// practice but small (our complexes live on <= 64 vertices), so dense
/// elimination with exact arithmetic is the simplest correct choice.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  }
  std::int64_t at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  }
};

namespace detail {

/// Fraction-free Bareiss elimination over the integers with full pivoting,
/// staying in int64 while safe.  Returns the rank, or -1 if an intermediate
/// value left the int64 range (caller falls back to GMP).  The 2x2 minor is
/// formed in 128-bit arithmetic, so only the stored entry must fit in int64.
inline int rank_bareiss_i64(IntMatrix m) {
  int r = 0;
  std::int64_t prev = 1;
  int n = std::min(m.rows, m.cols);
  while (r < n) {
    int pi = -1, pj = -1;
    for (int i = r; i < m.rows && pi < 0; ++i)
      for (int j = r; j < m.cols; ++j)
        if (m.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
    if (pj != r)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, r));
    std::int64_t piv = m.at(r, r);
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = r + 1; j < m.cols; ++j) {
        __int128 num = static_cast<__int128>(piv) * m.at(i, j) -
                       static_cast<__int128>(m.at(i, r)) * m.at(r, j);
        __int128 q = num / prev;  // Bareiss: division is exact
        if (q > INT64_MAX || q < INT64_MIN) return -1;
        m.at(i, j) = static_cast<std::int64_t>(q);
      }
      m.at(i, r) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

/// Same elimination with GMP integers; never overflows.
inline int rank_bareiss_gmp(const IntMatrix& src) {
  int rows = src.rows, cols = src.cols;
  std::vector<mpz_class> m(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
        static_cast<std::size_t>(j)] = static_cast<long>(src.at(i, j));
  auto at = [&](int i, int j) -> mpz_class& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  };
  int r = 0;
  mpz_class prev = 1;
  int n = std::min(rows, cols);
  while (r < n) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i)
      for (int j = r; j < cols; ++j)
        if (at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(r, j));
    if (pj != r)
      for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, r));
    mpz_class piv = at(r, r);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        mpz_class num = piv * at(i, j) - at(i, r) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, r) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

/// Rank over F_p by ordinary Gaussian elimination with modular inverses.
inline int rank_mod_p(IntMatrix m, std::int64_t p) {
  auto norm = [&](std::int64_t x) { return ((x % p) + p) % p; };
  for (auto& x : m.a) x = norm(x);
  auto powmod = [&](std::int64_t b, std::int64_t e) {
    std::int64_t acc = 1;
    b %= p;
    while (e) {
      if (e & 1) acc = acc * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return acc;
  };
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    std::int64_t inv = powmod(m.at(r, c), p - 2);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::int64_t f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = norm(m.at(i, j) - f * m.at(r, j) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Exact rank of an integer matrix viewed over the given field.
/// Over Q: fraction-free Bareiss (int64 fast path, GMP fallback).
/// Over F_p: modular Gaussian elimination.  p^2 must fit in int64; the
/// FieldSpec constructor already bounds p below 2^30.
inline int exact_rank(const IntMatrix& m, const FieldSpec& field = FieldSpec::rationals()) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rationals()) {
    int r = detail::rank_bareiss_i64(m);
    if (r >= 0) return r;
    return detail::rank_bareiss_gmp(m);
  }
  return detail::rank_mod_p(m, field.p);
}

}  // namespace scmlab

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "scmlab/exact_rank.hpp"
#include "scmlab/field.hpp"
#include "scmlab/simplicial_complex.hpp"

namespace scmlab {

/// Augmented simplicial chain complex.  Level k holds the faces of
/// dimension k-1, so level 0 is the single empty face and the augmentation
/// map is just the ordinary boundary formula applied to vertices.
struct ChainComplex {
  int n = 0;
  std::vector<std::vector<VertexSet>> levels;  // levels[k]: faces of dim k-1
  std::vector<IntMatrix> boundaries;           // boundaries[k]: level k+1 -> level k

  int top_level() const { return static_cast<int>(levels.size()) - 1; }
};

inline ChainComplex build_chain_complex(const SimplicialComplex& d) {
  if (d.is_void()) throw input_error("chain complex: void complex");
  ChainComplex cc;
  cc.n = d.ambient_vertices();
  int top = d.dim();
  for (int k = -1; k <= top; ++k) cc.levels.push_back(d.faces(k));
  for (int k = 0; k < top + 1; ++k) {
    const auto& lower = cc.levels[static_cast<std::size_t>(k)];
    const auto& upper = cc.levels[static_cast<std::size_t>(k) + 1];
    std::unordered_map<VertexSet, int> index;
    index.reserve(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i)
      index[lower[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      int sign = 1;
      for (int v : vertices_of(upper[c])) {
        m.at(index.at(upper[c] & ~bit(v)), static_cast<int>(c)) = sign;
        sign = -sign;
      }
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

/// Sanity check ∂∘∂ = 0 with plain 64-bit integer arithmetic (entries are
/// ±1 and dimensions are small, so no overflow concern).
inline bool boundary_squares_to_zero(const ChainComplex& cc) {
  for (std::size_t k = 0; k + 1 < cc.boundaries.size(); ++k) {
    const IntMatrix& a = cc.boundaries[k];      // level k+1 -> k
    const IntMatrix& b = cc.boundaries[k + 1];  // level k+2 -> k+1
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < b.cols; ++j) {
        std::int64_t s = 0;
        for (int t = 0; t < a.cols; ++t) s += a.at(i, t) * b.at(t, j);
        if (s != 0) return false;
      }
  }
  return true;
}

/// Reduced homology dimensions over a field.  h[k] = dim H~_{k-1}.
struct HomologyProfile {
  FieldSpec field;
  int top_dim = SimplicialComplex::kVoidDim;
  std::vector<std::int64_t> h;

  /// dim H~_d; zero outside the stored range (and everywhere for void).
  std::int64_t betti(int d) const {
    int k = d + 1;
    if (k < 0 || k >= static_cast<int>(h.size())) return 0;
    return h[static_cast<std::size_t>(k)];
  }

  bool trivial() const {
    for (std::int64_t v : h)
      if (v) return false;
    return true;
  }

  /// All H~_d vanish for d < dd (Reisner-style condition).
  bool trivial_below(int dd) const {
    for (int d = -1; d < dd; ++d)
      if (betti(d)) return false;
    return true;
  }

  /// Reduced Euler characteristic Σ (-1)^d dim H~_d (slot k holds d = k-1).
  std::int64_t reduced_euler() const {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < h.size(); ++k) e += (k % 2 == 0 ? -1 : 1) * h[k];
    return e;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (k) out += ",";
      out += "h" + std::to_string(static_cast<int>(k) - 1) + "=" + std::to_string(h[k]);
    }
    return out + ")";
  }
};

/// dim H~_{k-1} = dim C_{k-1} - rank ∂_in - rank ∂_out.
inline HomologyProfile reduced_homology(const SimplicialComplex& d,
                                        const FieldSpec& field = FieldSpec::rationals()) {
  if (d.is_void()) throw input_error("reduced_homology: void complex");
  HomologyProfile prof;
  prof.field = field;
  prof.top_dim = d.dim();
  ChainComplex cc = build_chain_complex(d);
  std::vector<int> ranks(cc.boundaries.size());
  for (std::size_t k = 0; k < cc.boundaries.size(); ++k)
    ranks[k] = exact_rank(cc.boundaries[k], field);
  prof.h.resize(cc.levels.size());
  for (std::size_t k = 0; k < cc.levels.size(); ++k) {
    std::int64_t dim_c = static_cast<std::int64_t>(cc.levels[k].size());
    std::int64_t in = k < ranks.size() ? ranks[k] : 0;       // from level k+1
    std::int64_t out = k > 0 ? ranks[k - 1] : 0;             // into level k-1
    prof.h[k] = dim_c - in - out;
  }
  return prof;
}

/// Plain-text dump of one boundary matrix, for diagnostics.
inline std::string matrix_str(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += " ";
      out += std::to_string(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace scmlab

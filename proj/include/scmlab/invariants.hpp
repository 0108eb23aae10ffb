#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scmlab/homology.hpp"
#include "scmlab/stanley_reisner.hpp"

namespace scmlab {

/// Graded Betti numbers of R/I; only nonzero entries stored.
struct BettiTable {
  int nvars = 0;
  FieldSpec field;
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i,j) -> beta_{i,j}

  std::int64_t beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  /// Castelnuovo-Mumford regularity of R/I: max j-i over nonzero entries.
  int regularity() const {
    int r = 0;
    for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }

  /// Projective dimension of R/I: max homological degree i.
  int proj_dim() const {
    int p = 0;
    for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
    return p;
  }

  /// depth R/I = nvars - pd (Auslander-Buchsbaum).
  int depth() const { return nvars - proj_dim(); }

  /// Macaulay-style triangle: row r lists beta_{i,i+r} for i = 0..pd.
  std::string triangle() const {
    int pd = proj_dim(), reg = regularity();
    std::vector<std::vector<std::string>> cell(
        static_cast<std::size_t>(reg) + 2,
        std::vector<std::string>(static_cast<std::size_t>(pd) + 2));
    cell[0][0] = " ";
    for (int i = 0; i <= pd; ++i) cell[0][static_cast<std::size_t>(i) + 1] = std::to_string(i);
    for (int r = 0; r <= reg; ++r) {
      cell[static_cast<std::size_t>(r) + 1][0] = std::to_string(r) + ":";
      for (int i = 0; i <= pd; ++i) {
        std::int64_t b = beta(i, i + r);
        cell[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(i) + 1] =
            b ? std::to_string(b) : ".";
      }
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
    for (const auto& row : cell)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cell) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        out += std::string(width[c] - row[c].size(), ' ') + row[c];
      }
      out += "\n";
    }
    return out;
  }
};

namespace detail {

struct ComplexKey {
  int n;
  std::vector<VertexSet> facets;
  bool operator==(const ComplexKey&) const = default;
};

struct ComplexKeyHash {
  std::size_t operator()(const ComplexKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k.n);
    for (VertexSet f : k.facets) {
      h ^= f + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline ComplexKey key_of(const SimplicialComplex& d) {
  return {d.ambient_vertices(), d.facets()};
}

}  // namespace detail

/// Memoizing evaluation context for one coefficient field.  Not thread
/// safe; concurrent pipelines give each worker its own context.
class InvariantContext {
 public:
  explicit InvariantContext(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

  const FieldSpec& field() const { return field_; }

  const HomologyProfile& homology(const SimplicialComplex& d) {
    auto key = detail::key_of(d);
    auto it = homology_.find(key);
    if (it != homology_.end()) return it->second;
    return homology_.emplace(std::move(key), reduced_homology(d, field_)).first->second;
  }

  /// Reisner's criterion: Delta is CM over the field iff for every face F
  /// (including the empty one) H~_i(link F) = 0 for all i < dim link F.
  /// Faces are swept by increasing dimension with early exit; link homology
  /// profiles are memoized by facet list, so corpus runs share work.  The
  /// empty complex is CM; the void complex is rejected.
  bool is_cm(const SimplicialComplex& d) {
    if (d.is_void()) throw input_error("is_cm: void complex");
    auto key = detail::key_of(d);
    auto it = cm_.find(key);
    if (it != cm_.end()) return it->second;
    bool value = true;
    for (int fd = -1; fd <= d.dim() && value; ++fd)
      for (VertexSet f : d.faces(fd)) {
        SimplicialComplex lk = d.link(f);
        if (!homology(lk).trivial_below(lk.dim())) { value = false; break; }
      }
    cm_.emplace(std::move(key), value);
    return value;
  }

  /// Duval's criterion: Delta is sequentially CM iff every pure skeleton
  /// Delta^[i], -1 <= i <= dim, is CM.
  bool is_scm(const SimplicialComplex& d) {
    if (d.is_void()) throw input_error("is_scm: void complex");
    auto key = detail::key_of(d);
    auto it = scm_.find(key);
    if (it != scm_.end()) return it->second;
    bool value = true;
    for (int i = -1; i <= d.dim() && value; ++i)
      value = is_cm(d.pure_skeleton(i));
    scm_.emplace(std::move(key), value);
    return value;
  }

  /// CM / SCM for an arbitrary proper monomial ideal: polarize (identity on
  /// square-free input), then run the complex-side criterion.
  bool is_cm_ideal(const MonomialIdeal& I) {
    if (I.is_unit()) throw input_error("is_cm_ideal: unit ideal");
    return is_cm(stanley_reisner_complex(
        I.is_squarefree() ? I : polarize(I).ideal));
  }

  bool is_scm_ideal(const MonomialIdeal& I) {
    if (I.is_unit()) throw input_error("is_scm_ideal: unit ideal");
    return is_scm(stanley_reisner_complex(
        I.is_squarefree() ? I : polarize(I).ideal));
  }

  /// Hochster's formula for a square-free ideal:
  ///   beta_{i,j}(R/I) = sum over |W|=j of dim H~_{j-i-1}(Delta|_W).
  /// W is swept by increasing cardinality; the W = emptyset term
  /// contributes beta_{0,0} = 1.
  BettiTable betti_hochster(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw input_error("betti: ideal is not square-free");
    if (I.is_unit()) throw input_error("betti: unit ideal");
    int n = I.nvars();
    if (n > 22) throw limit_error("betti: Hochster sweep limited to 22 variables");
    SimplicialComplex delta = stanley_reisner_complex(I);
    BettiTable t;
    t.nvars = n;
    t.field = field_;
    auto accumulate = [&](VertexSet w, int j) {
      const HomologyProfile& prof = homology(delta.restriction(w));
      for (int d = -1; d <= prof.top_dim; ++d) {
        std::int64_t hd = prof.betti(d);
        if (hd) t.entries[{j - d - 1, j}] += hd;
      }
    };
    accumulate(0, 0);
    for (int j = 1; j <= n; ++j) {
      // Gosper's hack: all j-subsets of {0..n-1} in increasing order
      VertexSet w = full_set(j);
      while (w <= full_set(n)) {
        accumulate(w, j);
        VertexSet c = w & (~w + 1);
        VertexSet r = w + c;
        if (r > full_set(n)) break;
        w = (((r ^ w) >> 2) / c) | r;
      }
    }
    return t;
  }

  /// Graded Betti numbers for an arbitrary monomial ideal: polarize (which
  /// preserves the whole table), run Hochster, then report over the
  /// original ring so depth = n - pd refers to the right n.
  BettiTable betti(const MonomialIdeal& I) {
    if (I.is_unit()) throw input_error("betti: unit ideal");
    if (I.is_squarefree()) return betti_hochster(I);
    BettiTable t = betti_hochster(polarize(I).ideal);
    t.nvars = I.nvars();
    return t;
  }

  int regularity(const MonomialIdeal& I) { return betti(I).regularity(); }
  int proj_dim(const MonomialIdeal& I) { return betti(I).proj_dim(); }
  int depth(const MonomialIdeal& I) { return betti(I).depth(); }

  std::size_t cache_size() const { return homology_.size() + cm_.size() + scm_.size(); }

 private:
  FieldSpec field_;
  std::unordered_map<detail::ComplexKey, HomologyProfile, detail::ComplexKeyHash> homology_;
  std::unordered_map<detail::ComplexKey, bool, detail::ComplexKeyHash> cm_;
  std::unordered_map<detail::ComplexKey, bool, detail::ComplexKeyHash> scm_;
};

/// One-shot conveniences (fresh context per call).
inline bool is_cm(const SimplicialComplex& d, const FieldSpec& f = FieldSpec::rationals()) {
  return InvariantContext(f).is_cm(d);
}
inline bool is_scm(const SimplicialComplex& d, const FieldSpec& f = FieldSpec::rationals()) {
  return InvariantContext(f).is_scm(d);
}
inline bool is_cm_ideal(const MonomialIdeal& I, const FieldSpec& f = FieldSpec::rationals()) {
  return InvariantContext(f).is_cm_ideal(I);
}
inline bool is_scm_ideal(const MonomialIdeal& I, const FieldSpec& f = FieldSpec::rationals()) {
  return InvariantContext(f).is_scm_ideal(I);
}
inline BettiTable betti_table(const MonomialIdeal& I,
                              const FieldSpec& f = FieldSpec::rationals()) {
  return InvariantContext(f).betti(I);
}

}  // namespace scmlab

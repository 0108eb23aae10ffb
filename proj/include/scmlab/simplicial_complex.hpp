#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "scmlab/util.hpp"

namespace scmlab {

/// Abstract simplicial complex on ambient vertex set {0..n-1}, stored by its
/// facets (inclusion-maximal faces).  Two degenerate complexes are
/// distinguished: the void complex (no faces at all, facet list empty) and
/// the empty complex {∅} (single facet ∅).  Ambient vertices need not be
/// used by any face; links keep the ambient vertex count of their parent.
class SimplicialComplex {
 public:
  static constexpr int kVoidDim = -2;

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}, true); }
  static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {0}, true); }
  static SimplicialComplex simplex(int n) {
    return SimplicialComplex(n, {full_set(n)}, true);
  }

  /// Builds from an arbitrary face list: non-maximal entries are discarded.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> faces) {
    if (n < 0 || n > kMaxVars) throw input_error("complex: vertex count out of range");
    for (VertexSet f : faces)
      if (f & ~full_set(n)) throw input_error("complex: face outside vertex range");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> maximal;
    for (VertexSet f : faces) {
      bool covered = false;
      for (VertexSet g : faces)
        if (g != f && (f & g) == f) { covered = true; break; }
      if (!covered) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), face_lex_less);
    return SimplicialComplex(n, std::move(maximal), true);
  }

  int ambient_vertices() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

  /// dim ∅-complex = -1, dim void = kVoidDim.
  int dim() const {
    if (is_void()) return kVoidDim;
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
  }

  bool is_pure() const {
    if (facets_.empty()) return true;
    int c = popcount(facets_[0]);
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return popcount(f) == c; });
  }

  bool has_face(VertexSet f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](VertexSet g) { return (f & g) == f; });
  }

  bool is_facet(VertexSet f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f, face_lex_less);
  }

  /// Vertices that actually appear in some face.
  VertexSet vertex_support() const {
    VertexSet s = 0;
    for (VertexSet f : facets_) s |= f;
    return s;
  }

  /// All faces of dimension exactly d, in face-lex order.  d = -1 yields {∅}
  /// for any non-void complex.
  std::vector<VertexSet> faces(int d) const {
    std::vector<VertexSet> out;
    if (is_void() || d < -1 || d > dim()) return out;
    if (d == -1) return {0};
    for (VertexSet f : facets_) {
      if (popcount(f) < d + 1) continue;
      enumerate_subsets_of_size(f, d + 1, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
  }

  std::size_t face_count(int d) const { return faces(d).size(); }

  /// link_Δ(F) = {G : G∩F=∅, G∪F ∈ Δ}; ambient vertex count is preserved.
  SimplicialComplex link(VertexSet f) const {
    if (!has_face(f)) return void_complex(n_);
    std::vector<VertexSet> lk;
    for (VertexSet g : facets_)
      if ((f & g) == f) lk.push_back(g & ~f);
    return from_facets(n_, std::move(lk));
  }

  /// del_Δ(v): faces avoiding v; ambient vertex count is preserved.
  SimplicialComplex deletion(int v) const {
    if (v < 0 || v >= n_) throw input_error("deletion: vertex out of range");
    if (is_void()) return void_complex(n_);
    std::vector<VertexSet> kept;
    for (VertexSet g : facets_) kept.push_back(g & ~bit(v));
    return from_facets(n_, std::move(kept));
  }

  /// Pure i-skeleton Δ^[i]: complex generated by the i-faces.
  /// i = -1 yields the empty complex for any non-void Δ.
  SimplicialComplex pure_skeleton(int d) const {
    if (is_void()) return void_complex(n_);
    if (d < -1 || d > dim()) throw input_error("pure_skeleton: dimension out of range");
    return from_facets(n_, faces(d));
  }

  /// Restriction Δ|_W relabelled to ambient {0..|W|-1} (vertices of W in
  /// increasing order).  Used by the Hochster sum.
  SimplicialComplex restriction(VertexSet w) const {
    if (w & ~full_set(n_)) throw input_error("restriction: W outside vertex range");
    if (is_void()) return void_complex(popcount(w));
    std::vector<int> verts = vertices_of(w);
    std::vector<int> newindex(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
      newindex[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<VertexSet> fac;
    for (VertexSet g : facets_) {
      VertexSet r = 0;
      for (int v : vertices_of(g & w)) r |= bit(newindex[static_cast<std::size_t>(v)]);
      fac.push_back(r);
    }
    return from_facets(static_cast<int>(verts.size()), std::move(fac));
  }

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

  std::string str() const {
    if (is_void()) return "void";
    std::string out;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (i) out += " ";
      out += facets_[i] == 0 ? "{}" : set_to_string(facets_[i]);
    }
    return out;
  }

 private:
  SimplicialComplex(int n, std::vector<VertexSet> facets, bool)
      : n_(n), facets_(std::move(facets)) {}

  static void enumerate_subsets_of_size(VertexSet mask, int k,
                                        std::vector<VertexSet>& out) {
    // Gosper-style walk over k-subsets of the bits of mask.
    std::vector<int> verts = vertices_of(mask);
    int m = static_cast<int>(verts.size());
    if (k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      VertexSet f = 0;
      for (int i : idx) f |= bit(verts[static_cast<std::size_t>(i)]);
      out.push_back(f);
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  int n_;
  std::vector<VertexSet> facets_;
};

/// Shedding vertex: v is a vertex of Δ and no face of link_Δ(v) is a facet
/// of del_Δ(v).  Non-vertices are never shedding.
inline bool is_shedding_vertex(const SimplicialComplex& d, int v) {
  if (v < 0 || v >= d.ambient_vertices()) throw input_error("shedding: vertex out of range");
  if (!d.has_face(bit(v))) return false;
  SimplicialComplex lk = d.link(bit(v));
  SimplicialComplex del = d.deletion(v);
  for (VertexSet f : del.facets())
    if (lk.has_face(f)) return false;  // a facet of del inside the link: not shedding
  return true;
}

}  // namespace scmlab

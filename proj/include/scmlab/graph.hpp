#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scmlab/monomial.hpp"
#include "scmlab/simplicial_complex.hpp"
#include "scmlab/util.hpp"

namespace scmlab {

/// Simple undirected graph on vertices {0..n-1}, adjacency as bitmasks.
class Graph {
 public:
  explicit Graph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVars) throw input_error("graph: vertex count out of range");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  void add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw input_error("graph: vertex out of range");
    if (a == b) throw input_error("graph: self-loop");
    adj_[static_cast<std::size_t>(a)] |= bit(b);
    adj_[static_cast<std::size_t>(b)] |= bit(a);
  }

  int n() const { return n_; }
  bool has_edge(int a, int b) const { return contains(adj_[static_cast<std::size_t>(a)], b); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(int v) const {
    return adj_[static_cast<std::size_t>(v)] | bit(v);
  }
  int degree(int v) const { return popcount(adj_[static_cast<std::size_t>(v)]); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (has_edge(a, b)) out.push_back({a, b});
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  VertexSet isolated_vertices() const {
    VertexSet s = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[static_cast<std::size_t>(v)] == 0) s |= bit(v);
    return s;
  }

  /// Induced subgraph on `keep`, relabelled to {0..|keep|-1} in increasing
  /// label order.  `labels_out`, when given, receives the original labels.
  Graph induced(VertexSet keep, std::vector<int>* labels_out = nullptr) const {
    std::vector<int> verts = vertices_of(keep & full_set(n_));
    std::vector<int> newindex(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
      newindex[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (int w : vertices_of(adj_[static_cast<std::size_t>(verts[i])] & keep))
        if (newindex[static_cast<std::size_t>(w)] > static_cast<int>(i))
          g.add_edge(static_cast<int>(i), newindex[static_cast<std::size_t>(w)]);
    if (labels_out) *labels_out = std::move(verts);
    return g;
  }

  /// G ∖ x and G ∖ N[x], relabelled induced subgraphs.
  Graph delete_vertex(int v, std::vector<int>* labels_out = nullptr) const {
    check_vertex(v);
    return induced(full_set(n_) & ~bit(v), labels_out);
  }
  Graph delete_closed_neighborhood(int v, std::vector<int>* labels_out = nullptr) const {
    check_vertex(v);
    return induced(full_set(n_) & ~closed_neighborhood(v), labels_out);
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    VertexSet seen = bit(0), frontier = bit(0);
    while (frontier) {
      VertexSet next = 0;
      for (int v : vertices_of(frontier)) next |= adj_[static_cast<std::size_t>(v)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen == full_set(n_);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  /// Upper-triangle column-major edge bit encoding: pair (i,j), i<j, sits at
  /// bit j(j-1)/2 + i.  Same layout as the graph6 bit stream.
  std::uint64_t edge_mask() const {
    std::uint64_t m = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        if (has_edge(i, j)) m |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
    return m;
  }

  static Graph from_edge_mask(int n, std::uint64_t m) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if ((m >> (j * (j - 1) / 2 + i)) & 1) g.add_edge(i, j);
    return g;
  }

  std::string str() const {
    std::string out = "n=" + std::to_string(n_) + " edges:";
    for (auto [a, b] : edges())
      out += " " + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    return out;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("graph: vertex out of range");
  }

  int n_;
  std::vector<VertexSet> adj_;
};

/// Edge ideal I(G) = (x_i x_j : {i,j} ∈ E) in K[x_1..x_n].
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [a, b] : g.edges())
    gens.push_back(Monomial::squarefree(g.n(), bit(a) | bit(b)));
  return MonomialIdeal(g.n(), std::move(gens));
}

namespace detail {

/// Bron-Kerbosch with pivoting, collecting maximal independent sets of the
/// subgraph induced on `universe` ("adjacent" = non-neighbor is inverted by
/// passing complement adjacency).
inline void maximal_independent_sets_rec(const Graph& g, VertexSet r, VertexSet p,
                                         VertexSet x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot u in P ∪ X minimizing the branching set P ∖ "independent-adj"(u)
  VertexSet pux = p | x;
  int best = -1;
  VertexSet best_branch = 0;
  for (int u : vertices_of(pux)) {
    // candidates that can coexist with u: non-neighbors of u (excluding u)
    VertexSet coexist = ~g.neighbors(u) & ~bit(u);
    VertexSet branch = p & ~coexist;
    if (best < 0 || popcount(branch) < popcount(best_branch)) {
      best = u;
      best_branch = branch;
    }
  }
  for (int v : vertices_of(best_branch)) {
    VertexSet coexist_v = ~g.neighbors(v) & ~bit(v);
    maximal_independent_sets_rec(g, r | bit(v), p & coexist_v, x & coexist_v, out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace detail

/// All maximal independent sets of G (restricted to `universe` when given).
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       VertexSet universe = ~VertexSet{0}) {
  universe &= full_set(g.n());
  std::vector<VertexSet> out;
  detail::maximal_independent_sets_rec(g, 0, universe, 0, out);
  std::sort(out.begin(), out.end(), face_lex_less);
  return out;
}

/// Independence complex Δ_G: faces are the independent sets.
inline SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex::from_facets(g.n(), maximal_independent_sets(g));
}

/// Shedding vertex of Δ_G, computed on the complex per the definition.
inline bool is_shedding_vertex(const Graph& g, int v) {
  return is_shedding_vertex(independence_complex(g), v);
}

/// x codominated: some y ≠ x has N[y] ⊆ N[x].
inline bool is_codominated(const Graph& g, int x) {
  VertexSet nx = g.closed_neighborhood(x);
  for (int y = 0; y < g.n(); ++y)
    if (y != x && (g.closed_neighborhood(y) & ~nx) == 0) return true;
  return false;
}

/// 5-cycle as a canonical vertex sequence: starts at its minimum vertex and
/// takes the lexicographically smaller of the two directions.
using FiveCycle = std::array<int, 5>;

inline std::vector<FiveCycle> five_cycles(const Graph& g) {
  std::vector<FiveCycle> out;
  int n = g.n();
  std::vector<int> v(5);
  // v[0] < all others (canonical start), v[1] < v[4] (canonical direction)
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < n; ++v[1]) {
      if (!g.has_edge(v[0], v[1])) continue;
      for (v[2] = v[0] + 1; v[2] < n; ++v[2]) {
        if (v[2] == v[1] || !g.has_edge(v[1], v[2])) continue;
        for (v[3] = v[0] + 1; v[3] < n; ++v[3]) {
          if (v[3] == v[1] || v[3] == v[2] || !g.has_edge(v[2], v[3])) continue;
          for (v[4] = v[1] + 1; v[4] < n; ++v[4]) {
            if (v[4] == v[2] || v[4] == v[3]) continue;
            if (g.has_edge(v[3], v[4]) && g.has_edge(v[4], v[0]))
              out.push_back({v[0], v[1], v[2], v[3], v[4]});
          }
        }
      }
    }
  return out;
}

/// Basic 5-cycle: no two cycle-consecutive vertices both have degree >= 3
/// in the host graph.  (Chords are allowed; the adjacency in the condition
/// is adjacency along the cycle.)
inline bool is_basic_five_cycle(const Graph& g, const FiveCycle& c) {
  for (int k = 0; k < 5; ++k) {
    int a = c[static_cast<std::size_t>(k)];
    int b = c[static_cast<std::size_t>((k + 1) % 5)];
    if (g.degree(a) >= 3 && g.degree(b) >= 3) return false;
  }
  return true;
}

inline std::vector<FiveCycle> basic_five_cycles(const Graph& g) {
  std::vector<FiveCycle> out;
  for (const FiveCycle& c : five_cycles(g))
    if (is_basic_five_cycle(g, c)) out.push_back(c);
  return out;
}

/// C5-free: no 5-cycle subgraph (chorded ones included).  The weaker
/// "no induced C5" reading breaks the shedding ⇔ codominated equivalence:
/// in the house graph C5+chord the apex of the chordless C4 is shedding but
/// not codominated.
inline bool is_c5_free(const Graph& g) { return five_cycles(g).empty(); }

/// Chordality via maximum cardinality search + perfect elimination check.
inline bool is_chordal(const Graph& g) {
  int n = g.n();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet remaining = full_set(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v : vertices_of(remaining))
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
        best = v;
    order.push_back(best);
    remaining &= ~bit(best);
    for (int w : vertices_of(g.neighbors(best) & remaining))
      ++weight[static_cast<std::size_t>(w)];
  }
  // reverse MCS order is a perfect elimination order iff chordal
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    VertexSet later = 0;
    for (int w : vertices_of(g.neighbors(v)))
      if (pos[static_cast<std::size_t>(w)] > i) later |= bit(w);
    if (!later) continue;
    int first = -1;
    for (int w : vertices_of(later))
      if (first < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(first)])
        first = w;
    if ((later & ~bit(first)) & ~g.neighbors(first)) return false;
  }
  return true;
}

inline bool is_bipartite(const Graph& g) {
  int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : vertices_of(g.neighbors(v))) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Maximum matching size by memoized branching on the lowest live vertex.
inline int matching_number(const Graph& g) {
  if (g.n() > 30) throw limit_error("matching_number: limited to 30 vertices");
  std::unordered_map<VertexSet, int> memo;
  auto rec = [&](auto&& self, VertexSet mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = lowest_vertex(mask);
    int best = self(self, mask & ~bit(v));  // v unmatched
    for (int u : vertices_of(g.neighbors(v) & mask))
      best = std::max(best, 1 + self(self, mask & ~bit(v) & ~bit(u)));
    memo.emplace(mask, best);
    return best;
  };
  return rec(rec, full_set(g.n()));
}

/// Two edges are 3-disjoint when their four vertices are distinct and the
/// induced subgraph on them is disconnected (no shared vertex, no cross
/// edge).  a(G) = maximum pairwise 3-disjoint edge set = induced matching
/// number; computed by branch and bound over the edge list.
inline bool edges_three_disjoint(const Graph& g, std::pair<int, int> e,
                                 std::pair<int, int> f) {
  VertexSet ve = bit(e.first) | bit(e.second);
  VertexSet vf = bit(f.first) | bit(f.second);
  if (ve & vf) return false;
  VertexSet cross = (g.neighbors(e.first) | g.neighbors(e.second)) & vf;
  return cross == 0;
}

inline int induced_matching_number(const Graph& g) {
  std::vector<std::pair<int, int>> es = g.edges();
  int m = static_cast<int>(es.size());
  if (m > 63) throw limit_error("induced_matching_number: more than 63 edges");
  std::vector<std::uint64_t> compat(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && edges_three_disjoint(g, es[static_cast<std::size_t>(i)],
                                         es[static_cast<std::size_t>(j)]))
        compat[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size + popcount(cand) <= best) return;  // bound
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    int e = lowest_vertex(cand);
    self(self, cand & ~(std::uint64_t{1} << e) & compat[static_cast<std::size_t>(e)],
         size + 1);                               // take e
    self(self, cand & ~(std::uint64_t{1} << e), size);  // skip e
  };
  rec(rec, m == 0 ? 0 : (m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1), 0);
  return best;
}

/// Cameron-Walker: matching number equals induced matching number.
/// Following the usual convention the class excludes edgeless graphs.
inline bool is_cameron_walker(const Graph& g) {
  if (g.edge_count() == 0) throw input_error("is_cameron_walker: graph has no edges");
  return matching_number(g) == induced_matching_number(g);
}

/// Well-covered: all maximal independent sets share one size.
inline bool is_well_covered(const Graph& g) {
  std::vector<VertexSet> mis = maximal_independent_sets(g);
  if (mis.empty()) return true;
  int c = popcount(mis.front());
  return std::all_of(mis.begin(), mis.end(),
                     [&](VertexSet s) { return popcount(s) == c; });
}

/// Very well-covered: well-covered, no isolated vertices, and the common
/// independent-set size is exactly n/2.
inline bool is_very_well_covered(const Graph& g) {
  if (g.n() == 0 || g.isolated_vertices()) return false;
  std::vector<VertexSet> mis = maximal_independent_sets(g);
  int c = popcount(mis.front());
  if (2 * c != g.n()) return false;
  return std::all_of(mis.begin(), mis.end(),
                     [&](VertexSet s) { return popcount(s) == c; });
}

/// Vertex decomposability of the independence complex, memoized over
/// induced vertex subsets of the host graph.
inline bool is_vertex_decomposable(const Graph& g) {
  if (g.n() > 24) throw limit_error("is_vertex_decomposable: limited to 24 vertices");
  std::unordered_map<VertexSet, bool> memo;
  auto rec = [&](auto&& self, VertexSet mask) -> bool {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<VertexSet> mis = maximal_independent_sets(g, mask);
    bool value;
    if (mis.size() <= 1) {
      value = true;  // simplex (or the empty complex)
    } else {
      value = false;
      SimplicialComplex delta = SimplicialComplex::from_facets(g.n(), mis);
      for (int v : vertices_of(mask)) {
        if (!is_shedding_vertex(delta, v)) continue;
        if (self(self, mask & ~bit(v)) &&
            self(self, mask & ~g.closed_neighborhood(v))) {
          value = true;
          break;
        }
      }
    }
    memo.emplace(mask, value);
    return value;
  };
  return rec(rec, full_set(g.n()));
}

}  // namespace scmlab

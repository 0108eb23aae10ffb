#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "scmlab/graph.hpp"
#include "scmlab/util.hpp"

namespace scmlab {

namespace detail {

/// Edge-bit relabelling tables for every permutation of {0..n-1}: the edge
/// mask is split into 7-bit chunks, each chunk mapped through a 128-entry
/// table, so one relabelling costs a handful of lookups instead of a walk
/// over all edge bits.
class PermutationTables {
 public:
  explicit PermutationTables(int n) : n_(n), nbits_(n * (n - 1) / 2) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    nchunks_ = (nbits_ + 6) / 7;
    do {
      std::vector<std::uint64_t> table(static_cast<std::size_t>(nchunks_) * 128, 0);
      for (int b = 0; b < nbits_; ++b) {
        // bit b encodes pair (i,j): invert the column-major layout
        int j = 1;
        while ((j + 1) * j / 2 <= b) ++j;
        int i = b - j * (j - 1) / 2;
        int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
        if (pi > pj) std::swap(pi, pj);
        int target = pj * (pj - 1) / 2 + pi;
        int chunk = b / 7, off = b % 7;
        for (int val = 0; val < 128; ++val)
          if ((val >> off) & 1)
            table[static_cast<std::size_t>(chunk) * 128 + static_cast<std::size_t>(val)] |=
                std::uint64_t{1} << target;
      }
      tables_.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::uint64_t relabel(std::size_t perm_index, std::uint64_t mask) const {
    const std::uint64_t* t = tables_[perm_index].data();
    std::uint64_t out = 0;
    for (int c = 0; c < nchunks_; ++c)
      out |= t[static_cast<std::size_t>(c) * 128 + ((mask >> (7 * c)) & 127)];
    return out;
  }

  std::size_t count() const { return tables_.size(); }

  /// Minimum edge mask over all relabellings: the canonical form.
  std::uint64_t canonical(std::uint64_t mask) const {
    std::uint64_t best = mask;
    for (std::size_t p = 0; p < tables_.size(); ++p)
      best = std::min(best, relabel(p, mask));
    return best;
  }

 private:
  int n_;
  int nbits_;
  int nchunks_;
  std::vector<std::vector<std::uint64_t>> tables_;
};

}  // namespace detail

/// One representative per isomorphism class on exactly n vertices, built by
/// vertex augmentation from the classes on n-1 vertices and deduplicated by
/// minimum-edge-mask canonical form.  Deterministic order (sorted canonical
/// masks).  Hard cap n <= 7: beyond that, supply a graph6 corpus file.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 1) throw input_error("enumerate_graphs: n must be positive");
  if (n > 7)
    throw limit_error(
        "enumerate_graphs: internal enumeration capped at n = 7; "
        "supply a graph6 file for larger corpora");
  std::vector<std::uint64_t> layer = {0};  // K1
  for (int m = 2; m <= n; ++m) {
    detail::PermutationTables tables(m);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    int base_bits = (m - 1) * (m - 2) / 2;
    for (std::uint64_t g : layer)
      for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (m - 1)); ++attach) {
        // new vertex m-1 adjacent to `attach`: its column occupies the top bits
        std::uint64_t mask = g | (attach << base_bits);
        std::uint64_t canon = tables.canonical(mask);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(layer.size());
  for (std::uint64_t mask : layer) {
    Graph g = Graph::from_edge_mask(n, mask);
    if (!connected_only || g.is_connected()) out.push_back(g);
  }
  return out;
}

/// All isomorphism classes with 1..max_n vertices, concatenated.
inline std::vector<Graph> enumerate_graphs_upto(int max_n, bool connected_only = false) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> layer = enumerate_graphs(n, connected_only);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace scmlab

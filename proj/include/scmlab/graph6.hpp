#pragma once

#include <string>

#include "scmlab/graph.hpp"
#include "scmlab/util.hpp"

namespace scmlab {

/// graph6 codec: printable 6-bit encoding (offset 63) of the vertex count
/// followed by the upper triangle of the adjacency matrix in column-major
/// order, padded with zeros to a multiple of 6 bits.
inline std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    // '~' escape, 18-bit big-endian vertex count (n <= 64 here)
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        bits = 0;
        acc = 0;
      }
    }
  if (bits) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

inline Graph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw input_error("graph6: truncated string");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw input_error("graph6: byte out of printable range");
    return c - 63;
  };
  long n;
  int c0 = next();
  if (c0 == 63) {  // '~'
    if (pos < s.size() && s[pos] == '~')
      throw limit_error("graph6: vertex counts beyond 2^18 unsupported");
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = c0;
  }
  if (n > kMaxVars) throw limit_error("graph6: more than 64 vertices");
  Graph g(static_cast<int>(n));
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if ((acc >> (bits - 1)) & 1) g.add_edge(i, j);
      --bits;
    }
  if (pos != s.size()) throw input_error("graph6: trailing bytes");
  return g;
}

}  // namespace scmlab

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scmlab {

/// Malformed or out-of-contract input (bad parse, unit ideal where a proper
/// one is required, vertex index out of range, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard resource bound (too many variables, an
/// enumeration that cannot finish, ...).  Refusal, not corruption.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of up to 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int kMaxVars = 64;

inline int popcount(VertexSet s) { return std::popcount(s); }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

inline VertexSet bit(int v) { return VertexSet{1} << v; }

/// Lowest set bit index; undefined on 0.
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline int highest_vertex(VertexSet s) { return 63 - std::countl_zero(s); }

inline std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s) {
    out.push_back(lowest_vertex(s));
    s &= s - 1;
  }
  return out;
}

/// Strict total order on faces: shortlex-free *lexicographic* order on the
/// sorted vertex sequences, i.e. {0,2} < {0,3} < {1} < {1,2}.
inline bool face_lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  VertexSet diff = a ^ b;
  VertexSet v = diff & (~diff + 1);  // lowest differing vertex
  VertexSet above = ~((v << 1) - 1);
  if (a & v) return (b & above) != 0;  // a has v: smaller iff b continues past v
  return (a & above) == 0;             // b has v: a smaller iff a is a strict prefix
}

/// Visits every subset of `mask` (including 0 and mask itself).
template <typename F>
void for_each_subset(VertexSet mask, F&& f) {
  VertexSet sub = mask;
  for (;;) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

inline std::string set_to_string(VertexSet s, int base = 1) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out += ",";
    out += std::to_string(v + base);
    first = false;
  }
  return out + "}";
}

}  // namespace scmlab

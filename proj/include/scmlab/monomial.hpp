#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "scmlab/util.hpp"

namespace scmlab {

/// Monomial in K[x_1..x_n], stored as an exponent vector.  Variables are
/// 0-indexed internally and printed 1-indexed ("x1*x3^2").
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw input_error("monomial: negative exponent");
  }

  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  static Monomial variable(int nvars, int k) {
    if (k < 0 || k >= nvars) throw input_error("monomial: variable index out of range");
    std::vector<int> e(nvars, 0);
    e[k] = 1;
    return Monomial(std::move(e));
  }

  static Monomial squarefree(int nvars, VertexSet support) {
    std::vector<int> e(nvars, 0);
    for (int v : vertices_of(support)) {
      if (v >= nvars) throw input_error("monomial: support outside variable range");
      e[v] = 1;
    }
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int k) const { return exps_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_unit() const { return degree() == 0; }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  VertexSet support() const {
    VertexSet s = 0;
    for (int k = 0; k < nvars(); ++k)
      if (exps_[static_cast<std::size_t>(k)] > 0) s |= bit(k);
    return s;
  }

  bool divides(const Monomial& other) const {
    for (int k = 0; k < nvars(); ++k)
      if (exps_[static_cast<std::size_t>(k)] > other.exponent(k)) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (int k = 0; k < nvars(); ++k) e[static_cast<std::size_t>(k)] += o.exponent(k);
    return Monomial(std::move(e));
  }

  /// Monomial colon: this / gcd(this, u).  Always defined.
  Monomial colon_by(const Monomial& u) const {
    std::vector<int> e(exps_);
    for (int k = 0; k < nvars(); ++k)
      e[static_cast<std::size_t>(k)] = std::max(0, e[static_cast<std::size_t>(k)] - u.exponent(k));
    return Monomial(std::move(e));
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (int k = 0; k < a.nvars(); ++k)
      e[static_cast<std::size_t>(k)] = std::min(e[static_cast<std::size_t>(k)], b.exponent(k));
    return Monomial(std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (int k = 0; k < a.nvars(); ++k)
      e[static_cast<std::size_t>(k)] = std::max(e[static_cast<std::size_t>(k)], b.exponent(k));
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  /// Lexicographic order on exponent vectors; ties broken nowhere (total).
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str() const {
    if (is_unit()) return "1";
    std::string out;
    for (int k = 0; k < nvars(); ++k) {
      int e = exps_[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(k + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<int> exps_;
};

/// Monomial ideal given by its unique minimal generating set, kept sorted.
/// Zero ideal = no generators; unit ideal = the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw input_error("ideal: variable count out of range");
    for (const Monomial& g : gens)
      if (g.nvars() != nvars) throw input_error("ideal: generator in wrong ring");
    gens_ = minimize(std::move(gens));
  }

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit_ideal(int nvars) {
    return MonomialIdeal(nvars, {Monomial::unit(nvars)});
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_unit(); }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  /// Membership: some minimal generator divides m.
  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
  }

  bool contains_ideal(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }

  /// I : u for a monomial u; generated by g/gcd(g,u).
  MonomialIdeal colon(const Monomial& u) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const Monomial& g : gens_) out.push_back(g.colon_by(u));
    return MonomialIdeal(nvars_, std::move(out));
  }

  /// I : J = ∩_{u in gens(J)}(I : u).  Colon by the zero ideal is rejected.
  MonomialIdeal colon(const MonomialIdeal& J) const {
    if (J.nvars() != nvars_) throw input_error("colon: mismatched rings");
    if (J.is_zero()) throw input_error("colon: colon by the zero ideal");
    MonomialIdeal acc = colon(J.gens_.front());
    for (std::size_t i = 1; i < J.gens_.size(); ++i)
      acc = intersect(acc, colon(J.gens_[i]));
    return acc;
  }

  /// (I, x_k): adjoin a variable; generators divisible by x_k get absorbed.
  MonomialIdeal plus_variable(int k) const {
    std::vector<Monomial> out = gens_;
    out.push_back(Monomial::variable(nvars_, k));
    return MonomialIdeal(nvars_, std::move(out));
  }

  friend MonomialIdeal intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (A.nvars() != B.nvars()) throw input_error("intersect: mismatched rings");
    if (A.is_zero() || B.is_zero()) return zero(A.nvars());
    std::vector<Monomial> out;
    out.reserve(A.gens_.size() * B.gens_.size());
    for (const Monomial& a : A.gens_)
      for (const Monomial& b : B.gens_) out.push_back(lcm(a, b));
    return MonomialIdeal(A.nvars(), std::move(out));
  }

  std::string str() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ", ";
      out += gens_[i].str();
    }
    return out + ")";
  }

 private:
  static std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        redundant = j != i && gens[j].divides(gens[i]);
      if (!redundant) out.push_back(gens[i]);
    }
    return out;
  }

  int nvars_;
  std::vector<Monomial> gens_;
};

/// Polarization result: square-free ideal in the enlarged ring together with
/// the slot layout (slots[k] = number of y-variables standing in for x_k).
struct Polarization {
  MonomialIdeal ideal;
  std::vector<int> slots;
  int nvars() const { return ideal.nvars(); }
};

/// Standard polarization x_k^e ↦ y_{k,1}···y_{k,e}.  Each variable gets
/// max(1, max exponent) slots, so square-free ideals polarize to themselves.
inline Polarization polarize(const MonomialIdeal& I) {
  int n = I.nvars();
  std::vector<int> slots(static_cast<std::size_t>(n), 1);
  for (const Monomial& g : I.gens())
    for (int k = 0; k < n; ++k)
      slots[static_cast<std::size_t>(k)] =
          std::max(slots[static_cast<std::size_t>(k)], g.exponent(k));
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  int total = 0;
  for (int k = 0; k < n; ++k) {
    offset[static_cast<std::size_t>(k)] = total;
    total += slots[static_cast<std::size_t>(k)];
  }
  if (total > kMaxVars) throw limit_error("polarize: more than 64 variables required");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) {
    std::vector<int> e(static_cast<std::size_t>(total), 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < g.exponent(k); ++j)
        e[static_cast<std::size_t>(offset[static_cast<std::size_t>(k)] + j)] = 1;
    gens.emplace_back(std::move(e));
  }
  return Polarization{MonomialIdeal(total, std::move(gens)), std::move(slots)};
}

}  // namespace scmlab

#pragma once

#include <cstdint>
#include <string>

#include "scmlab/util.hpp"

namespace scmlab {

/// Coefficient field for homology / Betti computations: the rationals or a
/// prime field F_p.  Characteristic matters (e.g. complexes whose homology
/// differs between Q and F_2), so every invariant is parameterised by this.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || !is_prime(p)) throw input_error("field: modulus must be a prime >= 2");
    if (p > (1 << 30)) throw limit_error("field: prime modulus too large");
    return {Kind::prime, p};
  }

  bool is_rationals() const { return kind == Kind::rationals; }

  std::string str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p);
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }

  static bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  }
};

/// Parses "q", "Q", "2", "p:7", "f7" style field designators.
inline FieldSpec parse_field(const std::string& s) {
  if (s.empty()) throw input_error("field: empty designator");
  if (s == "q" || s == "Q" || s == "0" || s == "rationals") return FieldSpec::rationals();
  std::string num = s;
  if (s.rfind("p:", 0) == 0) num = s.substr(2);
  else if (s[0] == 'f' || s[0] == 'F') num = s.substr(1);
  std::int64_t p = 0;
  try {
    std::size_t pos = 0;
    p = std::stoll(num, &pos);
    if (pos != num.size()) throw std::invalid_argument(num);
  } catch (const std::invalid_argument&) {
    throw input_error("field: bad designator '" + s + "'");
  } catch (const std::out_of_range&) {
    throw input_error("field: bad designator '" + s + "'");
  }
  return FieldSpec::prime(p);
}

}  // namespace scmlab

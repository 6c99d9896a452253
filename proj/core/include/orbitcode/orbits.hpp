#pragma once

#include <cstdint>
#include <vector>

#include "orbitcode/bigint.hpp"
#include "orbitcode/galois.hpp"

namespace orbitcode {

/// One orbit of Z/(q^m - 1) under multiplication by q. The canonical
/// representative is the smallest member; orbit sizes divide m.
struct Orbit {
  std::int64_t rep = 0;
  std::vector<std::int64_t> members;  // sorted ascending

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

/// The full set of orbits, sorted by canonical representative. This order
/// fixes the column order of check matrices and the coordinate order of
/// every word.
class LocationSet {
 public:
  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::int64_t total() const { return static_cast<std::int64_t>(orbits_.size()); }
  /// Sum of all orbit sizes, i.e. q^m - 1.
  std::int64_t modulus() const { return modulus_; }

  int orbit_index_of(std::int64_t exponent) const;
  const Orbit& orbit_of(std::int64_t exponent) const;

  friend LocationSet enumerate_orbits(const TowerField& field);

 private:
  std::vector<Orbit> orbits_;
  std::vector<std::int32_t> index_of_;  // exponent -> orbit index
  std::int64_t modulus_ = 0;
};

LocationSet enumerate_orbits(const TowerField& field);

/// Orbit count from the closed formula
///   |L| = sum over d|m of (1/d) * sum over e|d of mu(e) (q^(d/e) - 1).
/// Each inner sum must be divisible by d; a violation is an internal error.
BigInt count_orbits_closed_form(const FieldParams& params);

struct OrbitBoundsReport {
  bool lower_holds = false;  // (q^m - 1)/m <= |L|
  bool upper_holds = false;  // |L| < (q^m - 1)/m + (1 - 1/m) q^(m/2 + 1)
};

/// Evaluates both orbit-count bounds in exact integer arithmetic; the odd-m
/// case compares squares to avoid irrational q^(m/2).
OrbitBoundsReport check_orbit_count_bounds(const FieldParams& params);

}  // namespace orbitcode

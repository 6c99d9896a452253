#include "orbitcode/orbits.hpp"

#include <algorithm>

#include "numtheory.hpp"

namespace orbitcode {

LocationSet enumerate_orbits(const TowerField& field) {
  const std::int64_t N = field.params().n_units;
  const std::int64_t q = field.params().q;
  const std::int64_t m = field.params().m;

  LocationSet set;
  set.modulus_ = N;
  set.index_of_.assign(static_cast<std::size_t>(N), -1);

  for (std::int64_t r = 0; r < N; ++r) {
    if (set.index_of_[static_cast<std::size_t>(r)] != -1) continue;
    Orbit orbit;
    orbit.rep = r;  // first unvisited exponent is the orbit minimum
    std::int64_t j = r;
    do {
      orbit.members.push_back(j);
      set.index_of_[static_cast<std::size_t>(j)] =
          static_cast<std::int32_t>(set.orbits_.size());
      j = (j * q) % N;
    } while (j != r);
    std::sort(orbit.members.begin(), orbit.members.end());
    check_internal(m % orbit.size() == 0, "orbit size does not divide m");
    set.orbits_.push_back(std::move(orbit));
  }
  return set;
}

int LocationSet::orbit_index_of(std::int64_t exponent) const {
  require(exponent >= 0 && exponent < modulus_, "exponent out of range");
  return index_of_[static_cast<std::size_t>(exponent)];
}

const Orbit& LocationSet::orbit_of(std::int64_t exponent) const {
  return orbits_[static_cast<std::size_t>(orbit_index_of(exponent))];
}

BigInt count_orbits_closed_form(const FieldParams& params) {
  BigInt total = 0;
  for (std::int64_t d : detail::divisors(params.m)) {
    BigInt inner = 0;
    for (std::int64_t e : detail::divisors(d)) {
      inner += detail::mobius(e) * (detail::pow_big(params.q, d / e) - 1);
    }
    check_internal(inner % d == 0, "orbit-count inner sum is not divisible by d");
    total += inner / d;
  }
  return total;
}

OrbitBoundsReport check_orbit_count_bounds(const FieldParams& params) {
  const std::int64_t m = params.m;
  const BigInt count = count_orbits_closed_form(params);
  const BigInt units = detail::pow_big(params.q, m) - 1;

  OrbitBoundsReport report;
  report.lower_holds = units <= count * m;

  // Strict upper bound, multiplied through by 2m:
  //   2m|L| < 2(q^m - 1) + (2m - 2) q * q^(m/2).
  const BigInt lhs = 2 * m * count - 2 * units;
  if (lhs <= 0) {
    report.upper_holds = true;
  } else if (m % 2 == 0) {
    const BigInt rhs = (2 * m - 2) * params.q * detail::pow_big(params.q, m / 2);
    report.upper_holds = lhs < rhs;
  } else {
    // q^(m/2) = q^((m-1)/2) * sqrt(q); compare squares to stay exact.
    const BigInt c = (2 * m - 2) * params.q * detail::pow_big(params.q, (m - 1) / 2);
    report.upper_holds = lhs * lhs < c * c * params.q;
  }
  return report;
}

}  // namespace orbitcode

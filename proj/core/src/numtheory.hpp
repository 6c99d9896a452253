#pragma once

// Small number-theory helpers shared by the library internals. Everything
// here is sized for desk-scale inputs (arguments bounded by the table limit).

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitcode/errors.hpp"

namespace orbitcode::detail {

using boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

/// Moebius function by trial factorization.
inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// base^e, throwing if the result would exceed `cap`.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t e,
                                std::int64_t cap, const char* what) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > cap / base) throw error(what);
    r *= base;
  }
  return r;
}

inline cpp_int pow_big(std::int64_t base, std::int64_t e) {
  cpp_int r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace orbitcode::detail

#pragma once

#include <cstdint>
#include <vector>

#include "orbitcode/errors.hpp"

namespace orbitcode {

inline constexpr std::int64_t kDefaultTableLimit = std::int64_t{1} << 22;

/// Parameters of the field tower GF(p) < F = GF(q) < E = GF(q^m), q = p^k.
/// Requires gcd(m, q) = 1 and q^m - 1 within the table limit.
struct FieldParams {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;        // p^k
  std::int64_t n_units = 0;  // q^m - 1
  std::int64_t table_limit = kDefaultTableLimit;

  static FieldParams make(std::int64_t p, std::int64_t k, std::int64_t m,
                          std::int64_t table_limit = kDefaultTableLimit);
};

/// An element of E. Nonzero elements are stored as the exponent of the
/// primitive element beta; zero is a sentinel. Exponents are always kept
/// reduced mod q^m - 1, so equality is plain comparison.
class Felt {
 public:
  constexpr Felt() = default;
  static constexpr Felt zero() { return Felt{}; }
  static constexpr Felt one() { return Felt{0}; }
  /// `e` must already be reduced to [0, q^m - 1).
  static constexpr Felt from_exponent(std::int32_t e) { return Felt{e}; }

  constexpr bool is_zero() const { return exp_ < 0; }
  /// Exponent of beta for a nonzero element; -1 for zero.
  constexpr std::int32_t exponent() const { return exp_; }

  friend constexpr bool operator==(Felt, Felt) = default;

 private:
  constexpr explicit Felt(std::int32_t e) : exp_(e) {}
  std::int32_t exp_ = -1;
};

/// The tower E = GF(p)[x]/(P) with beta the class of x; P is primitive of
/// degree k*m, so beta generates the unit group. Multiplication works on
/// exponents; addition goes through discrete-log/antilog tables over the
/// polynomial basis. Immutable after construction, safe to share.
class TowerField {
 public:
  /// Deterministic construction: P is the primitive polynomial whose
  /// coefficient vector (constant term first) is smallest as a base-p integer.
  static TowerField build(const FieldParams& params);
  /// Construction with an explicit defining polynomial (residues in [0, p),
  /// low-to-high, monic of degree k*m). Rejects non-primitive choices.
  static TowerField build_with_poly(const FieldParams& params,
                                    const std::vector<std::int64_t>& poly);

  const FieldParams& params() const { return params_; }
  /// Defining polynomial over GF(p), low-to-high, length k*m + 1.
  const std::vector<std::int64_t>& defining_poly() const { return def_poly_; }
  /// n = (q^m - 1)/(q - 1); beta^n generates the unit group of F.
  std::int64_t subfield_generator_exp() const { return n_subfield_; }

  Felt unit(std::int64_t exponent) const;  // beta^exponent, any integer
  Felt beta() const { return unit(1); }

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  Felt inv(Felt a) const;  // throws on zero
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, std::int64_t e) const;  // e < 0 requires a != 0

  Felt frobenius(Felt a) const { return pow(a, params_.q); }
  /// Trace of E over F: sum of a^(q^s) for s = 0..m-1. Always lands in F.
  Felt trace(Felt a) const;

  bool in_subfield(Felt a) const;
  /// Canonical F-symbol encoding: 0 -> zero, s >= 1 -> beta^((s-1)*n).
  Felt subfield_element(std::int64_t s) const;
  std::int64_t subfield_index(Felt a) const;  // throws if a is outside F
  /// Embedding of the prime field: r mod p copies of one.
  Felt from_prime_int(std::int64_t r) const;

  /// Minimal polynomial of a nonzero element over F: monic, low-to-high,
  /// coefficients in F, degree equal to the Frobenius orbit size.
  std::vector<Felt> minimal_polynomial(Felt a) const;

  /// Base-p packed coordinates of the element in the polynomial basis.
  std::uint32_t packed_rep(Felt a) const;
  Felt from_packed(std::uint32_t v) const;

 private:
  TowerField() = default;

  FieldParams params_;
  std::vector<std::int64_t> def_poly_;
  std::vector<std::uint32_t> exp_;  // exponent -> packed rep
  std::vector<std::int32_t> log_;   // packed rep -> exponent, -1 for zero
  std::int64_t n_subfield_ = 0;

  std::uint32_t packed_add(std::uint32_t a, std::uint32_t b) const;
  void finish_build();
  void verify_subfield() const;
};

}  // namespace orbitcode

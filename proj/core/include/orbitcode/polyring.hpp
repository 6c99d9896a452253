#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitcode/galois.hpp"

namespace orbitcode {

/// Dense univariate polynomial, coefficients low-to-high with no trailing
/// zeros. The zero polynomial has an empty coefficient vector and degree -1.
/// Contracts that require coefficients in F state so explicitly; arithmetic
/// itself works over all of E.
class PolyF {
 public:
  PolyF() = default;
  explicit PolyF(std::vector<Felt> coeffs);

  static PolyF zero() { return PolyF{}; }
  static PolyF one() { return PolyF{{Felt::one()}}; }
  static PolyF x() { return PolyF{{Felt::zero(), Felt::one()}}; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Felt coeff(int i) const;
  Felt leading() const;
  const std::vector<Felt>& coeffs() const { return coeffs_; }

  friend bool operator==(const PolyF&, const PolyF&) = default;

 private:
  std::vector<Felt> coeffs_;
};

PolyF poly_add(const TowerField& fld, const PolyF& a, const PolyF& b);
PolyF poly_sub(const TowerField& fld, const PolyF& a, const PolyF& b);
PolyF poly_neg(const TowerField& fld, const PolyF& a);
PolyF poly_mul(const TowerField& fld, const PolyF& a, const PolyF& b);
PolyF poly_scale(const TowerField& fld, Felt s, const PolyF& a);
/// Multiply by x^k.
PolyF poly_shift(const PolyF& a, int k);
/// Coefficients below degree n.
PolyF poly_trunc(const PolyF& a, int n);

struct PolyDivRem {
  PolyF quot;
  PolyF rem;
};
PolyDivRem poly_divrem(const TowerField& fld, const PolyF& a, const PolyF& b);
PolyF poly_mod(const TowerField& fld, const PolyF& a, const PolyF& b);
bool poly_divides(const TowerField& fld, const PolyF& divisor, const PolyF& a);

/// Monic gcd; gcd(0, 0) is an error.
PolyF poly_gcd(const TowerField& fld, const PolyF& a, const PolyF& b);

struct PolyXgcd {
  PolyF d;  // monic gcd
  PolyF u;
  PolyF v;  // u*a + v*b = d
};
PolyXgcd poly_xgcd(const TowerField& fld, const PolyF& a, const PolyF& b);

PolyF poly_monic(const TowerField& fld, const PolyF& a);
PolyF poly_derivative(const TowerField& fld, const PolyF& a);
Felt poly_eval(const TowerField& fld, const PolyF& a, Felt point);

/// Inverse of g modulo x^(q^m - 1) - 1. Requires g coprime to the modulus,
/// i.e. g has no roots among the units of E.
PolyF inverse_mod_cyclic(const TowerField& fld, const PolyF& g);

/// Reduce modulo x^n - 1 by folding coefficients.
PolyF poly_cyclic_reduce(const TowerField& fld, const PolyF& a, std::int64_t n);

bool is_irreducible(const TowerField& fld, const PolyF& a);

/// All monic irreducible polynomials of the given degree over F, in
/// lexicographic order of the coefficient symbol vector read as a base-q
/// integer (constant term first). The count is checked against
/// (1/t) * sum over e|t of mu(e) q^(t/e).
std::vector<PolyF> enumerate_irreducible(const TowerField& fld, int degree);

/// a evaluated at the inverse of x modulo `modulus`, reduced mod `modulus`.
/// Requires a nonzero constant term.
PolyF eval_at_inverse_mod(const TowerField& fld, const PolyF& a, const PolyF& modulus);

bool poly_in_subfield(const TowerField& fld, const PolyF& a);

/// Serialization as comma-separated F-symbols, low-to-high ("1,0,2,1").
std::string poly_to_symbols(const TowerField& fld, const PolyF& a);
PolyF poly_from_symbols(const TowerField& fld, const std::string& text);

}  // namespace orbitcode

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitcode/code.hpp"

namespace orbitcode {

using SyndromeVector = std::vector<Felt>;  // length t, entries in F

/// The stage at which a decode attempt failed. All four detectors are
/// fail-closed: a received word beyond the correction radius either trips
/// one of them or decodes to some codeword within the radius.
enum class DecodeStage {
  key_equation,   // deg omega > deg lambda
  factorization,  // lambda does not split over the orbit polynomials
  residue,        // error value residue not a nonzero constant
  verification,   // corrected word fails the syndrome or weight check
};

const char* decode_stage_name(DecodeStage stage);

class decode_failure : public error {
 public:
  decode_failure(DecodeStage stage, const std::string& msg)
      : error(msg), stage_(stage) {}
  DecodeStage stage() const { return stage_; }

 private:
  DecodeStage stage_;
};

/// S_i = sum over l of r_l h_il.
SyndromeVector syndromes(const CodeSpec& spec, const CheckMatrix& H, const Word& r);

/// Minimal linear-recurrence pair: lambda(0) = 1 and
/// lambda(x) S(x) = omega(x) (mod x^t), with omega := (lambda*S) mod x^t.
/// The caller checks deg omega <= deg lambda; a violation means the word is
/// not decodable.
struct KeyEquationSolution {
  PolyF lambda;
  PolyF omega;
};

KeyEquationSolution solve_key_equation(const TowerField& fld, const SyndromeVector& S);

/// p_l = minimal polynomial of beta^(-rep(l)) for every orbit, plus a reverse
/// lookup keyed on the monic coefficient tuple.
struct OrbitMinPolyTable {
  std::vector<PolyF> by_orbit;
  std::map<std::vector<std::int32_t>, int> reverse;  // coeff exponents -> orbit index
};

OrbitMinPolyTable build_min_poly_table(const TowerField& fld, const LocationSet& locations);

/// Orbits whose p_l divides lambda. Requires the factorization to be
/// complete: the found sizes must sum to deg lambda and the product of the
/// p_l must equal the monic rescale of lambda. Throws decode_failure
/// otherwise. The result does not depend on scan order.
std::vector<int> locate_errors(const TowerField& fld, const KeyEquationSolution& sol,
                               const OrbitMinPolyTable& table);

/// Error pattern: support orbits (indices into the location set), the value
/// on each, and the same data materialized as a word.
struct ErrorWord {
  std::vector<int> support;
  std::vector<Felt> values;  // parallel to support, all nonzero
  Word word;
};

/// Error values by residue arithmetic modulo each p_l:
///   e_l = -omega* / (x rho(1/x) p_l' prod_{u != l} p_u)  (mod p_l),
/// where omega* = lambda*(0) * omega rescales to the monic locator
/// lambda* = prod p_l. Throws decode_failure if a residue is not a nonzero
/// constant.
ErrorWord error_values(const KeyEquationSolution& sol, const std::vector<int>& support,
                       const CodeSpec& spec, const OrbitMinPolyTable& table);

struct DecodeResult {
  bool ok = false;
  DecodeStage stage = DecodeStage::key_equation;  // valid when !ok
  std::string detail;                             // valid when !ok
  Word codeword;                                  // valid when ok
  ErrorWord error;                                // valid when ok
};

/// Full bounded-degree decoding chain. If some error word e with degree
/// weight <= floor(t/2) satisfies r - e in C, the result is exactly (r-e, e).
/// The corrected word is re-verified (zero syndrome, weight within radius)
/// before returning.
DecodeResult decode(const CodeSpec& spec, const CheckMatrix& H,
                    const OrbitMinPolyTable& table, const Word& r);

}  // namespace orbitcode

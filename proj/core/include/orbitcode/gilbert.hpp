#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitcode/bigint.hpp"
#include "orbitcode/code.hpp"

namespace orbitcode {

/// Numerator of sum over l of c_l * sum over j in l of 1/(x - beta^j), taken
/// over the common denominator prod (x - beta^j). Coefficients lie in F and
/// the degree is at most degree_weight(c) - 1. Requires c nonzero.
PolyF partial_fraction_numerator(const Word& c, const TowerField& fld,
                                 const LocationSet& locations);

/// Membership of c in C(g^{-1}, deg g), tested as: g divides the partial
/// fraction numerator of c. Requires g of positive degree with no roots
/// among the units of E.
bool goppa_membership(const Word& c, const PolyF& g, const TowerField& fld,
                      const LocationSet& locations);

/// counts[d] = number of words of degree weight d, i.e. the coefficients of
/// prod over l of (1 + (q-1) z^|l|).
struct WeightEnumerator {
  std::vector<BigInt> counts;

  std::int64_t max_degree() const { return static_cast<std::int64_t>(counts.size()) - 1; }
};

WeightEnumerator weight_enumerator(const LocationSet& locations, std::int64_t q);

/// q^t - q^(t/2) - 1, with q^(t/2) replaced by ceil(sqrt(q^t)) for odd t.
BigInt gilbert_threshold(std::int64_t q, int t);

/// Largest D with sum over e = 1..D of (e-1)|B_e| strictly below the
/// threshold, capped at the maximum degree weight. Requires t >= 2 prime
/// to m.
int compute_cutoff(const WeightEnumerator& en, std::int64_t q, int t, std::int64_t m);

struct CandidateVerdict {
  PolyF g;
  std::optional<int> bad_at_degree;  // smallest weight <= D with a codeword
  std::vector<int> bad_weights;      // all such weights, ascending
};

struct MinWeights {
  static constexpr std::int64_t kInfinite = std::int64_t{1} << 62;
  std::int64_t degree_weight = kInfinite;   // kInfinite when the code is trivial
  std::int64_t hamming_weight = kInfinite;
};

struct SearchReport {
  FieldParams params;
  int t = 0;
  int cutoff = 0;  // D
  std::vector<CandidateVerdict> tested;
  std::optional<PolyF> winner;  // first candidate in lex order with no bad weight
  MinWeights audit;             // brute-force weights of the winner's code
};

/// Tests every monic irreducible g of degree t in lexicographic order against
/// all nonzero words of degree weight <= D; the winner is the first g whose
/// code contains none of them. The per-weight count of bad candidates is
/// checked against the bound floor((e-1)/t) * |B_e|. The winner's code is
/// audited by exhaustive minimum-weight search.
SearchReport search_good_poly(const TowerField& fld, const LocationSet& locations,
                              int t, int cutoff, int jobs = 1);

/// Exhaustive minimum degree weight and Hamming weight over the nonzero
/// codewords. Guarded: q^dimension must stay within 2^24.
MinWeights brute_force_min_weights(const CodeSpec& spec, const CheckMatrix& H);

}  // namespace orbitcode

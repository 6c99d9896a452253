#pragma once

#include <cstdint>
#include <vector>

#include "orbitcode/galois.hpp"
#include "orbitcode/orbits.hpp"
#include "orbitcode/polyring.hpp"

namespace orbitcode {

/// A vector in F^L, indexed in canonical orbit order.
using Word = std::vector<Felt>;

/// Code parameters. `field` and `locations` are non-owning; the caller keeps
/// them alive. `distance_guarantee` records whether rho was verified nonzero
/// at every unit of E, which is what the degree-distance bound rests on.
struct CodeSpec {
  const TowerField* field = nullptr;
  const LocationSet* locations = nullptr;
  int t = 0;
  PolyF rho;
  bool distance_guarantee = false;
};

/// Validates 1 <= t <= q^m - 2, rho nonzero with coefficients in F, and
/// (unless allow_vanishing_rho) rho(beta^j) != 0 for every j.
CodeSpec make_code_spec(const TowerField& field, const LocationSet& locations,
                        int t, PolyF rho, bool allow_vanishing_rho = false);

/// The t x |L| matrix with entries sum over j in l of rho(beta^j) beta^(i j).
/// Every entry lies in F.
struct CheckMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Felt> entries;  // row-major

  Felt at(int i, int l) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(l)];
  }
};

/// Literal power-sum construction. `jobs` > 1 splits columns across threads;
/// the result does not depend on jobs.
CheckMatrix build_check_matrix_direct(const CodeSpec& spec, int jobs = 1);

/// The sequence b_j = Tr(beta^j) over one full period q^m - 1. The first m
/// values come from direct traces, the rest from the linear recurrence given
/// by the minimal polynomial of beta; the whole period is cross-checked.
struct TraceSequence {
  std::vector<Felt> values;

  Felt at(std::int64_t j) const {
    const std::int64_t n = static_cast<std::int64_t>(values.size());
    return values[static_cast<std::size_t>(((j % n) + n) % n)];
  }
};

TraceSequence build_trace_sequence(const TowerField& field);

/// One check-matrix entry computed from the trace sequence:
///   h_il = (|l|/m) * sum over u of rho_u b_(j(i+u)),  any j in l.
Felt check_matrix_entry_from_trace(const CodeSpec& spec, const TraceSequence& trace,
                                   int i, int orbit_index, std::int64_t j);

/// Trace-sequence construction of the full matrix, using the canonical
/// representative of each orbit. Entry-for-entry equal to the direct build.
CheckMatrix build_check_matrix_lfsr(const CodeSpec& spec, const TraceSequence& trace);

/// Row rank of H and a basis of its null space over F, from deterministic
/// Gaussian elimination (leftmost pivot, first nonzero row).
struct Generator {
  int rank = 0;
  std::vector<Word> basis;  // ordered by free column ascending

  std::int64_t dimension() const { return static_cast<std::int64_t>(basis.size()); }
};

Generator generator_matrix(const CodeSpec& spec, const CheckMatrix& H);

/// Message-coefficient combination of the null-space basis. The message
/// length must equal the code dimension.
Word encode(const CodeSpec& spec, const Generator& gen, const std::vector<Felt>& message);

/// Sum of orbit sizes over the nonzero coordinates.
std::int64_t degree_weight(const LocationSet& locations, const Word& w);
std::int64_t hamming_weight(const Word& w);

Word word_add(const TowerField& fld, const Word& a, const Word& b);
Word word_sub(const TowerField& fld, const Word& a, const Word& b);

/// Word <-> F-symbol conversions (symbols in [0, q)).
Word word_from_symbols(const TowerField& fld, const std::vector<std::int64_t>& symbols);
std::vector<std::int64_t> word_symbols(const TowerField& fld, const Word& w);

}  // namespace orbitcode

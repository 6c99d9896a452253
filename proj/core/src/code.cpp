#include "orbitcode/code.hpp"

#include <thread>

namespace orbitcode {

CodeSpec make_code_spec(const TowerField& field, const LocationSet& locations,
                        int t, PolyF rho, bool allow_vanishing_rho) {
  const std::int64_t N = field.params().n_units;
  require(t >= 1 && t <= N - 1, "t must satisfy 1 <= t <= q^m - 2");
  require(!rho.is_zero(), "rho must be nonzero");
  require(poly_in_subfield(field, rho), "rho must have coefficients in F");

  bool nonvanishing = true;
  for (std::int64_t j = 0; j < N; ++j) {
    if (poly_eval(field, rho, field.unit(j)).is_zero()) {
      nonvanishing = false;
      break;
    }
  }
  if (!allow_vanishing_rho)
    require(nonvanishing, "rho vanishes at a unit of E; pass allow_vanishing_rho "
                          "to drop the distance guarantee");

  CodeSpec spec;
  spec.field = &field;
  spec.locations = &locations;
  spec.t = t;
  spec.rho = std::move(rho);
  spec.distance_guarantee = nonvanishing;
  return spec;
}

namespace {

void build_columns(const CodeSpec& spec, const std::vector<Felt>& rho_at,
                   CheckMatrix& H, int col_begin, int col_end) {
  const TowerField& fld = *spec.field;
  const std::int64_t N = fld.params().n_units;
  const auto& orbits = spec.locations->orbits();
  for (int l = col_begin; l < col_end; ++l) {
    for (int i = 0; i < spec.t; ++i) {
      Felt sum = Felt::zero();
      for (std::int64_t j : orbits[static_cast<std::size_t>(l)].members) {
        const Felt power = fld.unit(static_cast<std::int64_t>(i) * j % N);
        sum = fld.add(sum, fld.mul(rho_at[static_cast<std::size_t>(j)], power));
      }
      check_internal(fld.in_subfield(sum), "check-matrix entry left F");
      H.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(H.cols) +
                static_cast<std::size_t>(l)] = sum;
    }
  }
}

}  // namespace

CheckMatrix build_check_matrix_direct(const CodeSpec& spec, int jobs) {
  const TowerField& fld = *spec.field;
  const std::int64_t N = fld.params().n_units;
  const int cols = static_cast<int>(spec.locations->total());

  std::vector<Felt> rho_at(static_cast<std::size_t>(N));
  for (std::int64_t j = 0; j < N; ++j)
    rho_at[static_cast<std::size_t>(j)] = poly_eval(fld, spec.rho, fld.unit(j));

  CheckMatrix H;
  H.rows = spec.t;
  H.cols = cols;
  H.entries.assign(static_cast<std::size_t>(spec.t) * static_cast<std::size_t>(cols),
                   Felt::zero());

  if (jobs <= 1 || cols < 2 * jobs) {
    build_columns(spec, rho_at, H, 0, cols);
    return H;
  }

  // Columns are independent; workers write disjoint slices.
  std::vector<std::thread> workers;
  const int chunk = (cols + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const int begin = w * chunk;
    const int end = std::min(cols, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&spec, &rho_at, &H, begin, end] {
      build_columns(spec, rho_at, H, begin, end);
    });
  }
  for (auto& th : workers) th.join();
  return H;
}

TraceSequence build_trace_sequence(const TowerField& field) {
  const std::int64_t N = field.params().n_units;
  const std::int64_t m = field.params().m;

  const std::vector<Felt> f = field.minimal_polynomial(field.beta());
  check_internal(static_cast<std::int64_t>(f.size()) == m + 1,
                 "minimal polynomial of beta must have degree m");

  TraceSequence seq;
  seq.values.assign(static_cast<std::size_t>(N), Felt::zero());
  for (std::int64_t j = 0; j < std::min(m, N); ++j)
    seq.values[static_cast<std::size_t>(j)] = field.trace(field.unit(j));
  for (std::int64_t j = m; j < N; ++j) {
    Felt acc = Felt::zero();
    for (std::int64_t u = 0; u < m; ++u) {
      acc = field.add(acc, field.mul(f[static_cast<std::size_t>(u)],
                                     seq.values[static_cast<std::size_t>(j - m + u)]));
    }
    seq.values[static_cast<std::size_t>(j)] = field.neg(acc);
  }
  for (std::int64_t j = 0; j < N; ++j)
    check_internal(seq.values[static_cast<std::size_t>(j)] == field.trace(field.unit(j)),
                   "trace recurrence disagrees with direct traces");
  return seq;
}

Felt check_matrix_entry_from_trace(const CodeSpec& spec, const TraceSequence& trace,
                                   int i, int orbit_index, std::int64_t j) {
  const TowerField& fld = *spec.field;
  const std::int64_t m = fld.params().m;
  const Orbit& orbit = spec.locations->orbits()[static_cast<std::size_t>(orbit_index)];

  // The scalar |l|/m lives in the prime field: the inverse of (m/|l|) mod p,
  // well defined because p does not divide m.
  const Felt scale = fld.inv(fld.from_prime_int(m / orbit.size()));

  Felt acc = Felt::zero();
  for (int u = 0; u <= spec.rho.degree(); ++u) {
    const Felt ru = spec.rho.coeff(u);
    if (ru.is_zero()) continue;
    acc = fld.add(acc, fld.mul(ru, trace.at(j * (i + u))));
  }
  return fld.mul(scale, acc);
}

CheckMatrix build_check_matrix_lfsr(const CodeSpec& spec, const TraceSequence& trace) {
  const int cols = static_cast<int>(spec.locations->total());
  CheckMatrix H;
  H.rows = spec.t;
  H.cols = cols;
  H.entries.reserve(static_cast<std::size_t>(spec.t) * static_cast<std::size_t>(cols));
  for (int i = 0; i < spec.t; ++i) {
    for (int l = 0; l < cols; ++l) {
      const std::int64_t j = spec.locations->orbits()[static_cast<std::size_t>(l)].rep;
      const Felt entry = check_matrix_entry_from_trace(spec, trace, i, l, j);
      check_internal(spec.field->in_subfield(entry), "check-matrix entry left F");
      H.entries.push_back(entry);
    }
  }
  return H;
}

Generator generator_matrix(const CodeSpec& spec, const CheckMatrix& H) {
  const TowerField& fld = *spec.field;
  const int rows = H.rows;
  const int cols = H.cols;

  std::vector<std::vector<Felt>> a(static_cast<std::size_t>(rows),
                                   std::vector<Felt>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int l = 0; l < cols; ++l) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = H.at(i, l);

  // Reduced row echelon form with deterministic pivoting.
  std::vector<int> pivot_col;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == -1) continue;
    std::swap(a[static_cast<std::size_t>(pivot_row)], a[static_cast<std::size_t>(found)]);

    const Felt inv = fld.inv(a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)]);
    for (int c = col; c < cols; ++c) {
      auto& v = a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)];
      v = fld.mul(v, inv);
    }
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Felt f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = col; c < cols; ++c) {
        auto& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        v = fld.sub(v, fld.mul(f, a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)]));
      }
    }
    pivot_col.push_back(col);
    ++pivot_row;
  }

  Generator gen;
  gen.rank = pivot_row;

  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Word w(static_cast<std::size_t>(cols), Felt::zero());
    w[static_cast<std::size_t>(f)] = Felt::one();
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      w[static_cast<std::size_t>(pivot_col[r])] =
          fld.neg(a[r][static_cast<std::size_t>(f)]);
    }
    gen.basis.push_back(std::move(w));
  }
  return gen;
}

Word encode(const CodeSpec& spec, const Generator& gen, const std::vector<Felt>& message) {
  require(message.size() == gen.basis.size(), "message length must equal the code dimension");
  const TowerField& fld = *spec.field;
  Word w(static_cast<std::size_t>(spec.locations->total()), Felt::zero());
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i].is_zero()) continue;
    for (std::size_t l = 0; l < w.size(); ++l)
      w[l] = fld.add(w[l], fld.mul(message[i], gen.basis[i][l]));
  }
  return w;
}

std::int64_t degree_weight(const LocationSet& locations, const Word& w) {
  require(static_cast<std::int64_t>(w.size()) == locations.total(), "word length mismatch");
  std::int64_t total = 0;
  for (std::size_t l = 0; l < w.size(); ++l)
    if (!w[l].is_zero()) total += locations.orbits()[l].size();
  return total;
}

std::int64_t hamming_weight(const Word& w) {
  std::int64_t count = 0;
  for (Felt c : w)
    if (!c.is_zero()) ++count;
  return count;
}

Word word_add(const TowerField& fld, const Word& a, const Word& b) {
  require(a.size() == b.size(), "word length mismatch");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fld.add(a[i], b[i]);
  return out;
}

Word word_sub(const TowerField& fld, const Word& a, const Word& b) {
  require(a.size() == b.size(), "word length mismatch");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fld.sub(a[i], b[i]);
  return out;
}

Word word_from_symbols(const TowerField& fld, const std::vector<std::int64_t>& symbols) {
  Word out;
  out.reserve(symbols.size());
  for (std::int64_t s : symbols) out.push_back(fld.subfield_element(s));
  return out;
}

std::vector<std::int64_t> word_symbols(const TowerField& fld, const Word& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (Felt c : w) out.push_back(fld.subfield_index(c));
  return out;
}

}  // namespace orbitcode

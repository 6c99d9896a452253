#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "naive_field.hpp"
#include "orbitcode/code.hpp"
#include "orbitcode/decoder.hpp"

using namespace orbitcode;
using testutil::NaiveField;
using testutil::poly_of;
using testutil::word_of;

namespace {

// Power-sum check matrix computed entirely in the reference field.
std::vector<std::vector<std::int64_t>> naive_check_matrix(const TowerField& fld,
                                                          const LocationSet& loc,
                                                          const PolyF& rho, int t) {
  const auto naive = NaiveField::make(fld.params().p, fld.defining_poly());
  const std::int64_t n = fld.subfield_generator_exp();

  // rho's coefficients as naive elements, via the symbol encoding.
  std::vector<NaiveField::Elem> rho_coeffs;
  for (int i = 0; i <= rho.degree(); ++i) {
    const std::int64_t s = fld.subfield_index(rho.coeff(i));
    rho_coeffs.push_back(s == 0 ? naive.zero() : naive.pow(naive.x(), (s - 1) * n));
  }

  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < t; ++i) {
    std::vector<std::int64_t> row;
    for (const Orbit& orbit : loc.orbits()) {
      NaiveField::Elem sum = naive.zero();
      for (std::int64_t j : orbit.members) {
        const NaiveField::Elem bj = naive.pow(naive.x(), j);
        NaiveField::Elem rho_at = naive.zero();
        NaiveField::Elem power = naive.one();
        for (const auto& c : rho_coeffs) {
          rho_at = naive.add(rho_at, naive.mul(c, power));
          power = naive.mul(power, bj);
        }
        sum = naive.add(sum, naive.mul(rho_at, naive.pow(bj, i)));
      }
      row.push_back(naive.pack(sum));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::int64_t> row_symbols(const TowerField& fld, const CheckMatrix& H, int i) {
  std::vector<std::int64_t> out;
  for (int l = 0; l < H.cols; ++l) out.push_back(fld.subfield_index(H.at(i, l)));
  return out;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("check matrix worked examples") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  {
    const auto spec = make_code_spec(f32.fld(), f32.loc(), 3, PolyF::one());
    const auto H = build_check_matrix_direct(spec);
    CHECK(row_symbols(f32.fld(), H, 0) == std::vector<std::int64_t>{1, 2, 2, 1, 2});
    CHECK(row_symbols(f32.fld(), H, 1) == std::vector<std::int64_t>{1, 2, 0, 2, 1});
    CHECK(row_symbols(f32.fld(), H, 2) == std::vector<std::int64_t>{1, 0, 1, 1, 0});
  }
  auto f23 = testutil::make_fixture(2, 1, 3);
  {
    const auto spec = make_code_spec(f23.fld(), f23.loc(), 2, PolyF::one());
    const auto H = build_check_matrix_direct(spec);
    CHECK(row_symbols(f23.fld(), H, 0) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(row_symbols(f23.fld(), H, 1) == std::vector<std::int64_t>{1, 0, 1});
    // Column at the fixed-point orbit {0} is rho(1) in every row.
    for (int i = 0; i < 2; ++i) CHECK(H.at(i, 0) == Felt::one());
  }
}

TEST_CASE("direct build matches the reference-field power sums") {
  std::mt19937_64 rng(99);
  for (auto [p, k, m] : testutil::test_grid()) {
    auto fx = testutil::make_fixture(p, k, m);
    const std::int64_t q = fx.fld().params().q;
    const std::int64_t N = fx.fld().params().n_units;
    const int t = static_cast<int>(std::min<std::int64_t>(4, N - 1));

    for (int round = 0; round < 3; ++round) {
      PolyF rho = PolyF::one();
      if (round > 0) {
        std::vector<Felt> coeffs;
        const int deg = static_cast<int>(rng() % 5);
        for (int i = 0; i <= deg; ++i)
          coeffs.push_back(fx.fld().subfield_element(static_cast<std::int64_t>(rng() % q)));
        rho = PolyF(std::move(coeffs));
        if (rho.is_zero()) continue;
      }
      const auto spec = make_code_spec(fx.fld(), fx.loc(), t, rho, true);
      const auto H = build_check_matrix_direct(spec);
      const auto expected = naive_check_matrix(fx.fld(), fx.loc(), rho, t);
      for (int i = 0; i < t; ++i)
        for (int l = 0; l < H.cols; ++l)
          CHECK(static_cast<std::int64_t>(fx.fld().packed_rep(H.at(i, l))) ==
                expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
    }
  }
}

TEST_CASE("trace sequence") {
  auto f23 = testutil::make_fixture(2, 1, 3);
  {
    const auto seq = build_trace_sequence(f23.fld());
    std::vector<std::int64_t> symbols;
    for (Felt b : seq.values) symbols.push_back(f23.fld().subfield_index(b));
    CHECK(symbols == std::vector<std::int64_t>{1, 0, 0, 1, 0, 1, 1});
  }
  auto f32 = testutil::make_fixture(3, 1, 2);
  {
    const auto seq = build_trace_sequence(f32.fld());
    std::vector<std::int64_t> symbols;
    for (Felt b : seq.values) symbols.push_back(f32.fld().subfield_index(b));
    CHECK(symbols == std::vector<std::int64_t>{2, 2, 0, 2, 1, 1, 0, 1});
  }
  for (auto [p, k, m] : testutil::test_grid()) {
    auto fx = testutil::make_fixture(p, k, m);
    const auto seq = build_trace_sequence(fx.fld());
    // b_0 = m * 1 in F.
    CHECK(seq.values[0] == fx.fld().from_prime_int(m));
    CHECK(seq.at(-1) == seq.values.back());  // periodic indexing
  }
}

TEST_CASE("trace-sequence build equals the direct build") {
  std::mt19937_64 rng(4242);
  for (auto [p, k, m] : testutil::test_grid()) {
    auto fx = testutil::make_fixture(p, k, m);
    const std::int64_t q = fx.fld().params().q;
    const std::int64_t N = fx.fld().params().n_units;
    const auto seq = build_trace_sequence(fx.fld());

    for (int round = 0; round < 21; ++round) {
      PolyF rho = PolyF::one();
      if (round > 0) {
        std::vector<Felt> coeffs;
        const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(N));
        for (int i = 0; i <= deg; ++i)
          coeffs.push_back(fx.fld().subfield_element(static_cast<std::int64_t>(rng() % q)));
        rho = PolyF(std::move(coeffs));
        if (rho.is_zero()) continue;
      }
      const int t = 1 + static_cast<int>(rng() % 6);
      if (t > N - 1) continue;
      const auto spec = make_code_spec(fx.fld(), fx.loc(), t, rho, true);
      const auto direct = build_check_matrix_direct(spec);
      const auto lfsr = build_check_matrix_lfsr(spec, seq);
      CHECK(direct.entries == lfsr.entries);

      // Every entry is Frobenius-fixed, and the trace formula does not
      // depend on which orbit member is used.
      for (int i = 0; i < t; ++i) {
        for (int l = 0; l < direct.cols; ++l) {
          const Felt h = direct.at(i, l);
          CHECK(fx.fld().frobenius(h) == h);
          for (std::int64_t j : fx.loc().orbits()[static_cast<std::size_t>(l)].members)
            CHECK(check_matrix_entry_from_trace(spec, seq, i, l, j) == h);
        }
      }
    }
  }
}

TEST_CASE("parallel column build is identical") {
  auto fx = testutil::make_fixture(3, 1, 4);
  const auto spec = make_code_spec(fx.fld(), fx.loc(), 5, PolyF::one());
  const auto serial = build_check_matrix_direct(spec, 1);
  const auto parallel = build_check_matrix_direct(spec, 4);
  CHECK(serial.entries == parallel.entries);
}

TEST_CASE("worked trace-formula entries") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  const auto spec = make_code_spec(f32.fld(), f32.loc(), 3, PolyF::one());
  const auto seq = build_trace_sequence(f32.fld());
  // Orbit {4} has index 3; scalar is 1/2 = 2 in GF(3).
  CHECK(f32.fld().subfield_index(check_matrix_entry_from_trace(spec, seq, 1, 3, 4)) == 2);
  CHECK(f32.fld().subfield_index(check_matrix_entry_from_trace(spec, seq, 2, 3, 4)) == 1);
  // i = 0 at the fixed-point orbit {0}: (1/m) * b_0 = 1.
  CHECK(check_matrix_entry_from_trace(spec, seq, 0, 0, 0) == Felt::one());
}

TEST_CASE("generator and encoding") {
  auto f23 = testutil::make_fixture(2, 1, 3);
  {
    const auto spec = make_code_spec(f23.fld(), f23.loc(), 2, PolyF::one());
    const auto H = build_check_matrix_direct(spec);
    const auto gen = generator_matrix(spec, H);
    CHECK(gen.rank == 2);
    CHECK(gen.dimension() == 1);

    std::set<std::vector<std::int64_t>> codewords;
    for (std::int64_t v = 0; v < 2; ++v) {
      const Word w = encode(spec, gen, {v == 0 ? Felt::zero() : Felt::one()});
      codewords.insert(word_symbols(f23.fld(), w));
      for (Felt s : syndromes(spec, H, w)) CHECK(s.is_zero());
    }
    CHECK(codewords == std::set<std::vector<std::int64_t>>{{0, 0, 0}, {1, 0, 1}});
  }
  {
    // Full-rank case: rank 3 = |L|, no information symbols left.
    const auto spec = make_code_spec(f23.fld(), f23.loc(), 4, PolyF::one());
    const auto H = build_check_matrix_direct(spec);
    const auto gen = generator_matrix(spec, H);
    CHECK(gen.rank == 3);
    CHECK(gen.dimension() == 0);
    CHECK(encode(spec, gen, {}) == word_of(f23.fld(), {0, 0, 0}));
  }
  auto f32 = testutil::make_fixture(3, 1, 2);
  {
    const auto spec = make_code_spec(f32.fld(), f32.loc(), 4, PolyF::one());
    const auto H = build_check_matrix_direct(spec);
    const auto gen = generator_matrix(spec, H);
    CHECK(gen.rank == 3);  // rows 1 and 3 coincide
    CHECK(gen.dimension() == 2);
    CHECK(gen.dimension() >= f32.loc().total() - spec.t);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
      std::vector<Felt> msg;
      for (int i = 0; i < 2; ++i)
        msg.push_back(f32.fld().subfield_element(static_cast<std::int64_t>(rng() % 3)));
      const Word w = encode(spec, gen, msg);
      for (Felt s : syndromes(spec, H, w)) CHECK(s.is_zero());
    }
    CHECK_THROWS_AS(encode(spec, gen, {Felt::one()}), error);  // wrong length
  }
}

TEST_CASE("rank never exceeds t across the grid") {
  for (auto [p, k, m] : testutil::test_grid()) {
    auto fx = testutil::make_fixture(p, k, m);
    for (int t = 1; t <= 6; ++t) {
      const auto spec = make_code_spec(fx.fld(), fx.loc(), t, PolyF::one());
      const auto H = build_check_matrix_direct(spec);
      const auto gen = generator_matrix(spec, H);
      CHECK(gen.rank <= t);
      CHECK(gen.dimension() == fx.loc().total() - gen.rank);
      CHECK(gen.dimension() >= fx.loc().total() - t);
    }
  }
}

TEST_CASE("weights") {
  auto f23 = testutil::make_fixture(2, 1, 3);
  const Word w = word_of(f23.fld(), {1, 0, 1});
  CHECK(degree_weight(f23.loc(), w) == 4);  // orbit sizes 1 and 3
  CHECK(hamming_weight(w) == 2);

  auto f32 = testutil::make_fixture(3, 1, 2);
  const Word u = word_of(f32.fld(), {0, 2, 0, 0, 0});
  CHECK(degree_weight(f32.loc(), u) == 2);
  CHECK(hamming_weight(u) == 1);
  CHECK(degree_weight(f32.loc(), word_of(f32.fld(), {0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("code spec validation") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  CHECK_THROWS_AS(make_code_spec(f32.fld(), f32.loc(), 0, PolyF::one()), error);
  CHECK_THROWS_AS(make_code_spec(f32.fld(), f32.loc(), 8, PolyF::one()), error);
  CHECK_THROWS_AS(make_code_spec(f32.fld(), f32.loc(), 3, PolyF::zero()), error);

  // rho = x - 1 vanishes at beta^0; rejected unless explicitly allowed.
  const PolyF vanishing = poly_of(f32.fld(), {2, 1});
  CHECK_THROWS_AS(make_code_spec(f32.fld(), f32.loc(), 3, vanishing), error);
  const auto spec = make_code_spec(f32.fld(), f32.loc(), 3, vanishing, true);
  CHECK_FALSE(spec.distance_guarantee);
  CHECK(make_code_spec(f32.fld(), f32.loc(), 3, PolyF::one()).distance_guarantee);
}

}  // TEST_SUITE

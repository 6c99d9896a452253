#include <benchmark/benchmark.h>

#include <random>

#include "orbitcode/decoder.hpp"
#include "orbitcode/gilbert.hpp"

using namespace orbitcode;

namespace {

const TowerField& field_2_15() {
  static const TowerField fld = TowerField::build(FieldParams::make(2, 1, 15, 1 << 16));
  return fld;
}

}  // namespace

static void BM_FeltMul(benchmark::State& state) {
  const TowerField& fld = field_2_15();
  Felt a = fld.unit(12345), b = fld.unit(54321);
  for (auto _ : state) {
    a = fld.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FeltMul);

static void BM_FeltAdd(benchmark::State& state) {
  const TowerField& fld = field_2_15();
  Felt a = fld.unit(12345), b = fld.unit(54321);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fld.add(a, b));
  }
}
BENCHMARK(BM_FeltAdd);

static void BM_BuildTower(benchmark::State& state) {
  for (auto _ : state) {
    auto fld = TowerField::build(FieldParams::make(2, 1, 13, 1 << 14));
    benchmark::DoNotOptimize(fld.params().n_units);
  }
}
BENCHMARK(BM_BuildTower);

static void BM_CheckMatrixDirect(benchmark::State& state) {
  auto fld = TowerField::build(FieldParams::make(3, 1, 4));
  auto loc = enumerate_orbits(fld);
  auto spec = make_code_spec(fld, loc, 6, PolyF::one());
  for (auto _ : state) {
    auto H = build_check_matrix_direct(spec);
    benchmark::DoNotOptimize(H.entries.data());
  }
}
BENCHMARK(BM_CheckMatrixDirect);

static void BM_CheckMatrixTrace(benchmark::State& state) {
  auto fld = TowerField::build(FieldParams::make(3, 1, 4));
  auto loc = enumerate_orbits(fld);
  auto spec = make_code_spec(fld, loc, 6, PolyF::one());
  auto trace = build_trace_sequence(fld);
  for (auto _ : state) {
    auto H = build_check_matrix_lfsr(spec, trace);
    benchmark::DoNotOptimize(H.entries.data());
  }
}
BENCHMARK(BM_CheckMatrixTrace);

static void BM_DecodeRoundTrip(benchmark::State& state) {
  auto fld = TowerField::build(FieldParams::make(2, 1, 5));
  auto loc = enumerate_orbits(fld);
  auto spec = make_code_spec(fld, loc, 10, PolyF::one());
  auto H = build_check_matrix_direct(spec);
  auto gen = generator_matrix(spec, H);
  auto table = build_min_poly_table(fld, loc);

  std::mt19937_64 rng(1);
  std::vector<Felt> msg;
  for (std::int64_t i = 0; i < gen.dimension(); ++i)
    msg.push_back(fld.subfield_element(static_cast<std::int64_t>(rng() % 2)));
  Word r = encode(spec, gen, msg);
  r[1] = fld.add(r[1], Felt::one());  // one 5-cycle error

  for (auto _ : state) {
    auto res = decode(spec, H, table, r);
    benchmark::DoNotOptimize(res.ok);
  }
}
BENCHMARK(BM_DecodeRoundTrip);

static void BM_SearchGoodPoly(benchmark::State& state) {
  auto fld = TowerField::build(FieldParams::make(3, 1, 2));
  auto loc = enumerate_orbits(fld);
  for (auto _ : state) {
    auto report = search_good_poly(fld, loc, 3, 2);
    benchmark::DoNotOptimize(report.winner.has_value());
  }
}
BENCHMARK(BM_SearchGoodPoly);

BENCHMARK_MAIN();

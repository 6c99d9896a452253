#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "orbitcode/polyring.hpp"

using namespace orbitcode;
using testutil::poly_of;

namespace {

PolyF random_poly(std::mt19937_64& rng, const TowerField& fld, int max_degree) {
  const std::int64_t q = fld.params().q;
  const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Felt> coeffs;
  for (int i = 0; i <= deg; ++i)
    coeffs.push_back(fld.subfield_element(static_cast<std::int64_t>(rng() % q)));
  return PolyF(std::move(coeffs));
}

// Independent irreducibility: no monic divisor of degree 1..d-1 at all.
bool sieve_irreducible(const TowerField& fld, const PolyF& a) {
  const std::int64_t q = fld.params().q;
  if (a.degree() < 1) return false;
  for (int k = 1; k < a.degree(); ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::int64_t v = 0; v < count; ++v) {
      std::vector<Felt> cand(static_cast<std::size_t>(k) + 1, Felt::zero());
      cand[static_cast<std::size_t>(k)] = Felt::one();
      std::int64_t rest = v;
      for (int i = 0; i < k; ++i) {
        cand[static_cast<std::size_t>(i)] = fld.subfield_element(rest % q);
        rest /= q;
      }
      if (poly_divides(fld, PolyF(cand), a)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("basic ring identities") {
  auto fx = testutil::make_fixture(3, 1, 2);
  const auto& fld = fx.fld();

  const PolyF a = poly_of(fld, {2, 2, 1});  // x^2 + 2x + 2
  CHECK(poly_mul(fld, a, PolyF::one()) == a);
  CHECK(poly_divrem(fld, a, a).quot == PolyF::one());
  CHECK(poly_divrem(fld, a, a).rem == PolyF::zero());
  CHECK_THROWS_AS(poly_divrem(fld, a, PolyF::zero()), error);

  CHECK(poly_gcd(fld, a, poly_of(fld, {1, 1})) == PolyF::one());
  CHECK(PolyF::zero().degree() == -1);
}

TEST_CASE("xgcd certificate on random inputs") {
  std::mt19937_64 rng(771);
  for (auto params : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 2}}) {
    auto fx = testutil::make_fixture(params.first, 1, params.second);
    const auto& fld = fx.fld();
    for (int it = 0; it < 200; ++it) {
      const PolyF a = random_poly(rng, fld, 6);
      const PolyF b = random_poly(rng, fld, 6);
      if (a.is_zero() && b.is_zero()) continue;
      const PolyXgcd xg = poly_xgcd(fld, a, b);
      CHECK(xg.d.leading() == Felt::one());
      const PolyF lhs =
          poly_add(fld, poly_mul(fld, xg.u, a), poly_mul(fld, xg.v, b));
      CHECK(lhs == xg.d);
      if (!a.is_zero()) CHECK(poly_divides(fld, xg.d, a));
      if (!b.is_zero()) CHECK(poly_divides(fld, xg.d, b));
    }
  }
}

TEST_CASE("derivative") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  CHECK(poly_derivative(f32.fld(), poly_of(f32.fld(), {2, 2, 1})) ==
        poly_of(f32.fld(), {2, 2}));  // d/dx (x^2+2x+2) = 2x+2
  CHECK(poly_derivative(f32.fld(), poly_of(f32.fld(), {2})) == PolyF::zero());

  auto f23 = testutil::make_fixture(2, 1, 3);
  CHECK(poly_derivative(f23.fld(), poly_of(f23.fld(), {1, 1, 0, 1})) ==
        poly_of(f23.fld(), {1, 0, 1}));  // 3x^2 + 1 = x^2 + 1 mod 2
}

TEST_CASE("inverse modulo the cyclic polynomial") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  const auto& fld = f32.fld();
  const std::int64_t N = fld.params().n_units;

  const PolyF g = poly_of(fld, {1, 2, 0, 1});  // x^3 + 2x + 1
  const PolyF h = inverse_mod_cyclic(fld, g);
  CHECK(h.degree() < N);
  CHECK(poly_cyclic_reduce(fld, poly_mul(fld, h, g), N) == PolyF::one());
  for (std::int64_t j = 0; j < N; ++j) {
    const Felt point = fld.unit(j);
    CHECK(fld.mul(poly_eval(fld, h, point), poly_eval(fld, g, point)) == Felt::one());
  }

  CHECK(inverse_mod_cyclic(fld, PolyF::one()) == PolyF::one());
  CHECK_THROWS_AS(inverse_mod_cyclic(fld, poly_of(fld, {2, 1})), error);  // root at 1
}

TEST_CASE("irreducibility and enumeration") {
  auto f23 = testutil::make_fixture(2, 1, 3);
  {
    const auto irr = enumerate_irreducible(f23.fld(), 1);
    REQUIRE(irr.size() == 2);
    CHECK(irr[0] == poly_of(f23.fld(), {0, 1}));  // x
    CHECK(irr[1] == poly_of(f23.fld(), {1, 1}));  // x + 1
  }
  auto f32 = testutil::make_fixture(3, 1, 2);
  {
    const auto irr = enumerate_irreducible(f32.fld(), 3);
    CHECK(irr.size() == 8);
    CHECK(irr[0] == poly_of(f32.fld(), {1, 2, 0, 1}));  // lex-first: x^3 + 2x + 1
    CHECK_FALSE(is_irreducible(f32.fld(), poly_of(f32.fld(), {1, 2, 1})));  // (x+1)^2
  }

  // Enumeration agrees with the independent sieve, in order.
  for (auto params : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 2}}) {
    auto fx = testutil::make_fixture(params.first, 1, params.second);
    const auto& fld = fx.fld();
    const std::int64_t q = fld.params().q;
    for (int t = 1; t <= 4; ++t) {
      const auto fast = enumerate_irreducible(fld, t);
      std::vector<PolyF> slow;
      std::int64_t count = 1;
      for (int i = 0; i < t; ++i) count *= q;
      for (std::int64_t v = 0; v < count; ++v) {
        std::vector<Felt> cand(static_cast<std::size_t>(t) + 1, Felt::zero());
        cand[static_cast<std::size_t>(t)] = Felt::one();
        std::int64_t rest = v;
        for (int i = 0; i < t; ++i) {
          cand[static_cast<std::size_t>(i)] = fld.subfield_element(rest % q);
          rest /= q;
        }
        PolyF candidate(cand);
        if (sieve_irreducible(fld, candidate)) slow.push_back(std::move(candidate));
      }
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("evaluation at the inverse of x") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  const auto& fld = f32.fld();

  const PolyF mod_x_plus_1 = poly_of(fld, {1, 1});
  CHECK(eval_at_inverse_mod(fld, PolyF::one(), mod_x_plus_1) == PolyF::one());
  CHECK(eval_at_inverse_mod(fld, PolyF::x(), mod_x_plus_1) == poly_of(fld, {2}));
  CHECK_THROWS_AS(eval_at_inverse_mod(fld, PolyF::x(), PolyF::x()), error);

  // Identity on a bigger modulus: rho(1/x) evaluated back at x gives rho
  // at every root of the modulus.
  const PolyF modulus = poly_of(fld, {2, 2, 1});  // roots beta^5, beta^7
  const PolyF rho = poly_of(fld, {1, 0, 2});
  const PolyF reduced = eval_at_inverse_mod(fld, rho, modulus);
  for (std::int64_t j : {5, 7}) {
    const Felt root = fld.unit(j);
    CHECK(poly_eval(fld, reduced, root) ==
          poly_eval(fld, rho, fld.inv(root)));
  }
}

TEST_CASE("symbol serialization round trip") {
  auto f32 = testutil::make_fixture(3, 1, 2);
  const auto& fld = f32.fld();

  const PolyF a = poly_of(fld, {1, 0, 2, 1});
  CHECK(poly_to_symbols(fld, a) == "1,0,2,1");
  CHECK(poly_from_symbols(fld, "1,0,2,1") == a);
  CHECK(poly_to_symbols(fld, PolyF::zero()) == "0");
  CHECK(poly_from_symbols(fld, "0") == PolyF::zero());
  CHECK_THROWS_AS(poly_from_symbols(fld, "1,x"), error);
  CHECK_THROWS_AS(poly_from_symbols(fld, "3"), error);  // symbol out of range
}

}  // TEST_SUITE

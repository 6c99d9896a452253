#include "orbitcode/galois.hpp"

#include <numeric>

#include "numtheory.hpp"

namespace orbitcode {

namespace {

// Dense coefficient vectors over GF(p), length d, used only while the tables
// are being built.
using Coeffs = std::vector<std::int32_t>;

// Multiply by x and reduce modulo the monic polynomial `P` (length d+1).
void mul_by_x_mod(Coeffs& c, const std::vector<std::int64_t>& P, std::int64_t p) {
  const int d = static_cast<int>(P.size()) - 1;
  const std::int32_t carry = c[d - 1];
  for (int i = d - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (carry == 0) return;
  for (int i = 0; i < d; ++i) {
    c[i] = static_cast<std::int32_t>((c[i] + (p - P[i]) * carry) % p);
  }
}

std::uint32_t pack(const Coeffs& c, std::int64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * static_cast<std::uint64_t>(p) + c[i];
  return static_cast<std::uint32_t>(v);
}

// Fill the antilog table for candidate P. Succeeds exactly when x has
// multiplicative order q^m - 1, which certifies P primitive (and irreducible).
bool try_build_tables(const std::vector<std::int64_t>& P, std::int64_t p,
                      std::int64_t n_units, std::vector<std::uint32_t>& exp_out) {
  const int d = static_cast<int>(P.size()) - 1;
  Coeffs cur(d, 0);
  cur[0] = 1;
  exp_out[0] = 1;
  for (std::int64_t i = 1; i < n_units; ++i) {
    mul_by_x_mod(cur, P, p);
    const std::uint32_t packed = pack(cur, p);
    if (packed == 1) return false;  // order i < n_units
    exp_out[i] = packed;
  }
  mul_by_x_mod(cur, P, p);
  return pack(cur, p) == 1;
}

}  // namespace

FieldParams FieldParams::make(std::int64_t p, std::int64_t k, std::int64_t m,
                              std::int64_t table_limit) {
  require(detail::is_prime(p), "p must be prime");
  require(k >= 1, "k must be a positive integer");
  require(m >= 1, "m must be a positive integer");
  require(m % p != 0, "m must be prime to q = p^k");
  require(table_limit >= 1 && table_limit <= (std::int64_t{1} << 30),
          "table limit out of range");

  FieldParams fp;
  fp.p = p;
  fp.k = k;
  fp.m = m;
  fp.table_limit = table_limit;
  fp.q = detail::checked_pow(p, k, table_limit + 1, "q^m - 1 exceeds the table limit");
  const std::int64_t q_to_m =
      detail::checked_pow(fp.q, m, table_limit + 1, "q^m - 1 exceeds the table limit");
  fp.n_units = q_to_m - 1;
  return fp;
}

TowerField TowerField::build(const FieldParams& params) {
  const std::int64_t p = params.p;
  const std::int64_t d = params.k * params.m;
  const std::int64_t total = params.n_units + 1;  // p^d

  TowerField fld;
  fld.params_ = params;
  fld.exp_.assign(static_cast<std::size_t>(params.n_units), 0);

  // Scan candidates in increasing base-p value of the low coefficients.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(d) + 1, 0);
  poly[static_cast<std::size_t>(d)] = 1;
  bool found = false;
  for (std::int64_t v = 1; v < total; ++v) {
    if (v % p == 0) continue;  // x would divide P
    std::int64_t rest = v;
    for (std::int64_t i = 0; i < d; ++i) {
      poly[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    if (try_build_tables(poly, p, params.n_units, fld.exp_)) {
      found = true;
      break;
    }
  }
  check_internal(found, "no primitive polynomial found");
  fld.def_poly_ = poly;
  fld.finish_build();
  return fld;
}

TowerField TowerField::build_with_poly(const FieldParams& params,
                                       const std::vector<std::int64_t>& poly) {
  const std::int64_t d = params.k * params.m;
  require(static_cast<std::int64_t>(poly.size()) == d + 1,
          "defining polynomial must have degree k*m");
  require(poly.back() == 1, "defining polynomial must be monic");
  for (std::int64_t c : poly)
    require(c >= 0 && c < params.p, "defining polynomial coefficient out of range");

  TowerField fld;
  fld.params_ = params;
  fld.exp_.assign(static_cast<std::size_t>(params.n_units), 0);
  require(try_build_tables(poly, params.p, params.n_units, fld.exp_),
          "defining polynomial is not primitive");
  fld.def_poly_ = poly;
  fld.finish_build();
  return fld;
}

void TowerField::finish_build() {
  const std::int64_t N = params_.n_units;
  log_.assign(static_cast<std::size_t>(N) + 1, -1);
  for (std::int64_t i = 0; i < N; ++i) {
    check_internal(log_[exp_[static_cast<std::size_t>(i)]] == -1,
                   "antilog table has a repeated value");
    log_[exp_[static_cast<std::size_t>(i)]] = static_cast<std::int32_t>(i);
  }
  check_internal(N % (params_.q - 1) == 0, "q - 1 does not divide q^m - 1");
  n_subfield_ = N / (params_.q - 1);
  verify_subfield();
}

void TowerField::verify_subfield() const {
  const std::int64_t N = params_.n_units;
  const std::int64_t q = params_.q;

  // The Frobenius x -> x^q must fix exactly the elements with exponent
  // divisible by n = (q^m - 1)/(q - 1).
  for (std::int64_t e = 0; e < N; ++e) {
    const bool fixed = (e * q) % N == e;
    check_internal(fixed == (e % n_subfield_ == 0),
                   "Frobenius fixed set does not match the subfield");
  }

  // Additive closure of F, checked pairwise at small q.
  if (q <= 2048) {
    std::vector<char> is_subfield(static_cast<std::size_t>(N) + 1, 0);
    std::vector<std::uint32_t> reps;
    is_subfield[0] = 1;
    reps.push_back(0);
    for (std::int64_t s = 0; s < q - 1; ++s) {
      const std::uint32_t r = exp_[static_cast<std::size_t>(s * n_subfield_)];
      is_subfield[r] = 1;
      reps.push_back(r);
    }
    for (std::uint32_t a : reps)
      for (std::uint32_t b : reps)
        check_internal(is_subfield[packed_add(a, b)],
                       "subfield is not closed under addition");
  }
}

std::uint32_t TowerField::packed_add(std::uint32_t a, std::uint32_t b) const {
  const std::int64_t p = params_.p;
  if (p == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint64_t place = 1;
  while (a != 0 || b != 0) {
    const std::uint32_t da = a % p;
    const std::uint32_t db = b % p;
    out += static_cast<std::uint32_t>(((da + db) % p) * place);
    a /= static_cast<std::uint32_t>(p);
    b /= static_cast<std::uint32_t>(p);
    place *= static_cast<std::uint64_t>(p);
  }
  return out;
}

Felt TowerField::unit(std::int64_t exponent) const {
  const std::int64_t N = params_.n_units;
  return Felt::from_exponent(static_cast<std::int32_t>(((exponent % N) + N) % N));
}

Felt TowerField::add(Felt a, Felt b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t s = packed_add(exp_[static_cast<std::size_t>(a.exponent())],
                                     exp_[static_cast<std::size_t>(b.exponent())]);
  if (s == 0) return Felt::zero();
  return Felt::from_exponent(log_[s]);
}

Felt TowerField::neg(Felt a) const {
  if (params_.p == 2 || a.is_zero()) return a;
  // -1 = beta^(N/2): the unique element of order 2 in odd characteristic.
  const std::int64_t N = params_.n_units;
  return Felt::from_exponent(
      static_cast<std::int32_t>((a.exponent() + N / 2) % N));
}

Felt TowerField::mul(Felt a, Felt b) const {
  if (a.is_zero() || b.is_zero()) return Felt::zero();
  const std::int64_t N = params_.n_units;
  return Felt::from_exponent(static_cast<std::int32_t>(
      (static_cast<std::int64_t>(a.exponent()) + b.exponent()) % N));
}

Felt TowerField::inv(Felt a) const {
  require(!a.is_zero(), "inverse of zero");
  const std::int64_t N = params_.n_units;
  return Felt::from_exponent(static_cast<std::int32_t>((N - a.exponent()) % N));
}

Felt TowerField::pow(Felt a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return Felt::one();
    require(e > 0, "zero raised to a negative power");
    return Felt::zero();
  }
  const std::int64_t N = params_.n_units;
  const std::int64_t r = ((e % N) + N) % N;
  return Felt::from_exponent(
      static_cast<std::int32_t>(static_cast<std::int64_t>(a.exponent()) * r % N));
}

Felt TowerField::trace(Felt a) const {
  Felt acc = a;
  Felt cur = a;
  for (std::int64_t s = 1; s < params_.m; ++s) {
    cur = frobenius(cur);
    acc = add(acc, cur);
  }
  check_internal(in_subfield(acc), "trace left the base field");
  return acc;
}

bool TowerField::in_subfield(Felt a) const {
  if (a.is_zero()) return true;
  return a.exponent() % n_subfield_ == 0;
}

Felt TowerField::subfield_element(std::int64_t s) const {
  require(s >= 0 && s < params_.q, "subfield symbol out of range");
  if (s == 0) return Felt::zero();
  return Felt::from_exponent(static_cast<std::int32_t>((s - 1) * n_subfield_));
}

std::int64_t TowerField::subfield_index(Felt a) const {
  if (a.is_zero()) return 0;
  require(a.exponent() % n_subfield_ == 0, "element is not in the subfield");
  return a.exponent() / n_subfield_ + 1;
}

Felt TowerField::from_prime_int(std::int64_t r) const {
  const std::int64_t p = params_.p;
  r = ((r % p) + p) % p;
  if (r == 0) return Felt::zero();
  // The packed rep of the constant polynomial r is r itself.
  return Felt::from_exponent(log_[static_cast<std::size_t>(r)]);
}

std::vector<Felt> TowerField::minimal_polynomial(Felt a) const {
  require(!a.is_zero(), "minimal polynomial of zero is not supported");

  std::vector<Felt> conjugates;
  Felt cur = a;
  do {
    conjugates.push_back(cur);
    cur = frobenius(cur);
  } while (!(cur == a));
  check_internal(params_.m % static_cast<std::int64_t>(conjugates.size()) == 0,
                 "Frobenius orbit size does not divide m");

  // Expand the product of (x - conjugate) over E.
  std::vector<Felt> poly{Felt::one()};
  for (Felt c : conjugates) {
    std::vector<Felt> next(poly.size() + 1, Felt::zero());
    const Felt mc = neg(c);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = add(next[i], mul(poly[i], mc));
    }
    poly = std::move(next);
  }
  for (Felt c : poly)
    check_internal(in_subfield(c), "minimal polynomial has a coefficient outside F");
  return poly;
}

std::uint32_t TowerField::packed_rep(Felt a) const {
  if (a.is_zero()) return 0;
  return exp_[static_cast<std::size_t>(a.exponent())];
}

Felt TowerField::from_packed(std::uint32_t v) const {
  require(v <= static_cast<std::uint64_t>(params_.n_units), "packed value out of range");
  if (v == 0) return Felt::zero();
  return Felt::from_exponent(log_[v]);
}

}  // namespace orbitcode

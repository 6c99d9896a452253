#include "orbitcode/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "numtheory.hpp"

namespace orbitcode {

namespace {

void trim(std::vector<Felt>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

PolyF::PolyF(std::vector<Felt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Felt PolyF::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Felt::zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

Felt PolyF::leading() const {
  return coeffs_.empty() ? Felt::zero() : coeffs_.back();
}

PolyF poly_add(const TowerField& fld, const PolyF& a, const PolyF& b) {
  std::vector<Felt> out(std::max(a.coeffs().size(), b.coeffs().size()), Felt::zero());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fld.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return PolyF(std::move(out));
}

PolyF poly_neg(const TowerField& fld, const PolyF& a) {
  std::vector<Felt> out = a.coeffs();
  for (Felt& c : out) c = fld.neg(c);
  return PolyF(std::move(out));
}

PolyF poly_sub(const TowerField& fld, const PolyF& a, const PolyF& b) {
  return poly_add(fld, a, poly_neg(fld, b));
}

PolyF poly_mul(const TowerField& fld, const PolyF& a, const PolyF& b) {
  if (a.is_zero() || b.is_zero()) return PolyF::zero();
  std::vector<Felt> out(a.coeffs().size() + b.coeffs().size() - 1, Felt::zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Felt ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = fld.add(out[i + j], fld.mul(ai, b.coeffs()[j]));
  }
  return PolyF(std::move(out));
}

PolyF poly_scale(const TowerField& fld, Felt s, const PolyF& a) {
  std::vector<Felt> out = a.coeffs();
  for (Felt& c : out) c = fld.mul(s, c);
  return PolyF(std::move(out));
}

PolyF poly_shift(const PolyF& a, int k) {
  require(k >= 0, "negative shift");
  if (a.is_zero() || k == 0) return a;
  std::vector<Felt> out(a.coeffs().size() + static_cast<std::size_t>(k), Felt::zero());
  std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + k);
  return PolyF(std::move(out));
}

PolyF poly_trunc(const PolyF& a, int n) {
  if (n <= 0) return PolyF::zero();
  std::vector<Felt> out(a.coeffs().begin(),
                        a.coeffs().begin() +
                            std::min<std::size_t>(a.coeffs().size(),
                                                  static_cast<std::size_t>(n)));
  return PolyF(std::move(out));
}

PolyDivRem poly_divrem(const TowerField& fld, const PolyF& a, const PolyF& b) {
  require(!b.is_zero(), "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyF::zero(), a};

  const Felt lead_inv = fld.inv(b.leading());
  std::vector<Felt> rem = a.coeffs();
  std::vector<Felt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                         Felt::zero());
  for (int i = a.degree(); i >= b.degree(); --i) {
    const Felt c = rem[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Felt f = fld.mul(c, lead_inv);
    quot[static_cast<std::size_t>(i - b.degree())] = f;
    for (int j = 0; j <= b.degree(); ++j) {
      const std::size_t idx = static_cast<std::size_t>(i - b.degree() + j);
      rem[idx] = fld.sub(rem[idx], fld.mul(f, b.coeff(j)));
    }
  }
  return {PolyF(std::move(quot)), PolyF(std::move(rem))};
}

PolyF poly_mod(const TowerField& fld, const PolyF& a, const PolyF& b) {
  return poly_divrem(fld, a, b).rem;
}

bool poly_divides(const TowerField& fld, const PolyF& divisor, const PolyF& a) {
  return poly_mod(fld, a, divisor).is_zero();
}

PolyF poly_monic(const TowerField& fld, const PolyF& a) {
  require(!a.is_zero(), "monic rescale of the zero polynomial");
  return poly_scale(fld, fld.inv(a.leading()), a);
}

PolyF poly_gcd(const TowerField& fld, const PolyF& a, const PolyF& b) {
  require(!a.is_zero() || !b.is_zero(), "gcd of two zero polynomials");
  PolyF r0 = a, r1 = b;
  while (!r1.is_zero()) {
    PolyF r2 = poly_mod(fld, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return poly_monic(fld, r0);
}

PolyXgcd poly_xgcd(const TowerField& fld, const PolyF& a, const PolyF& b) {
  require(!a.is_zero() || !b.is_zero(), "xgcd of two zero polynomials");
  PolyF r0 = a, r1 = b;
  PolyF s0 = PolyF::one(), s1 = PolyF::zero();
  PolyF t0 = PolyF::zero(), t1 = PolyF::one();
  while (!r1.is_zero()) {
    PolyDivRem dr = poly_divrem(fld, r0, r1);
    PolyF s2 = poly_sub(fld, s0, poly_mul(fld, dr.quot, s1));
    PolyF t2 = poly_sub(fld, t0, poly_mul(fld, dr.quot, t1));
    r0 = std::move(r1);
    r1 = std::move(dr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Felt scale = fld.inv(r0.leading());
  return {poly_scale(fld, scale, r0), poly_scale(fld, scale, s0),
          poly_scale(fld, scale, t0)};
}

PolyF poly_derivative(const TowerField& fld, const PolyF& a) {
  if (a.degree() < 1) return PolyF::zero();
  std::vector<Felt> out(static_cast<std::size_t>(a.degree()), Felt::zero());
  for (int i = 1; i <= a.degree(); ++i)
    out[static_cast<std::size_t>(i - 1)] = fld.mul(fld.from_prime_int(i), a.coeff(i));
  return PolyF(std::move(out));
}

Felt poly_eval(const TowerField& fld, const PolyF& a, Felt point) {
  Felt acc = Felt::zero();
  for (int i = a.degree(); i >= 0; --i) acc = fld.add(fld.mul(acc, point), a.coeff(i));
  return acc;
}

PolyF poly_cyclic_reduce(const TowerField& fld, const PolyF& a, std::int64_t n) {
  std::vector<Felt> out(static_cast<std::size_t>(n), Felt::zero());
  for (int i = 0; i <= a.degree(); ++i) {
    const std::size_t idx = static_cast<std::size_t>(i % n);
    out[idx] = fld.add(out[idx], a.coeff(i));
  }
  return PolyF(std::move(out));
}

PolyF inverse_mod_cyclic(const TowerField& fld, const PolyF& g) {
  require(!g.is_zero(), "inverse of the zero polynomial");
  const std::int64_t N = fld.params().n_units;

  std::vector<Felt> mod_coeffs(static_cast<std::size_t>(N) + 1, Felt::zero());
  mod_coeffs[0] = fld.neg(Felt::one());
  mod_coeffs[static_cast<std::size_t>(N)] = Felt::one();
  const PolyF modulus{std::move(mod_coeffs)};

  PolyXgcd xg = poly_xgcd(fld, g, modulus);
  require(xg.d.degree() == 0, "polynomial has a root among the units of E");
  PolyF h = xg.u;
  check_internal(h.degree() < N, "cyclic inverse degree out of range");
  check_internal(poly_cyclic_reduce(fld, poly_mul(fld, h, g), N) == PolyF::one(),
                 "cyclic inverse certificate failed");
  return h;
}

bool is_irreducible(const TowerField& fld, const PolyF& a) {
  const int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const std::int64_t q = fld.params().q;

  // Trial division by every monic polynomial of degree 1..d/2.
  for (int k = 1; k <= d / 2; ++k) {
    const std::int64_t count =
        detail::checked_pow(q, k, std::int64_t{1} << 40, "irreducibility scan too large");
    std::vector<Felt> cand(static_cast<std::size_t>(k) + 1, Felt::zero());
    cand[static_cast<std::size_t>(k)] = Felt::one();
    for (std::int64_t v = 0; v < count; ++v) {
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

std::vector<PolyF> enumerate_irreducible(const TowerField& fld, int degree) {
  require(degree >= 1, "degree must be positive");
  const std::int64_t q = fld.params().q;
  const std::int64_t count = detail::checked_pow(
      q, degree, std::int64_t{1} << 26, "irreducible enumeration too large");

  std::vector<PolyF> out;
  std::vector<Felt> cand(static_cast<std::size_t>(degree) + 1, Felt::zero());
  cand[static_cast<std::size_t>(degree)] = Felt::one();
  for (std::int64_t v = 0; v < count; ++v) {
    std::int64_t rest = v;
    for (int i = 0; i < degree; ++i) {
      cand[static_cast<std::size_t>(i)] = fld.subfield_element(rest % q);
      rest /= q;
    }
    PolyF p(cand);
    if (is_irreducible(fld, p)) out.push_back(std::move(p));
  }

  // Necklace count: t * #irreducibles = sum over e|t of mu(e) q^(t/e).
  detail::cpp_int expected = 0;
  for (std::int64_t e : detail::divisors(degree))
    expected += detail::mobius(e) * detail::pow_big(q, degree / e);
  check_internal(expected == detail::cpp_int(degree) * static_cast<std::int64_t>(out.size()),
                 "irreducible count disagrees with the necklace formula");
  return out;
}

PolyF eval_at_inverse_mod(const TowerField& fld, const PolyF& a, const PolyF& modulus) {
  require(modulus.degree() >= 1, "modulus must have positive degree");
  const Felt c0 = modulus.coeff(0);
  require(!c0.is_zero(), "x is not invertible modulo a polynomial with zero constant term");

  // modulus = c0 + x*s(x), so x * (-s/c0) = 1 (mod modulus).
  std::vector<Felt> s(modulus.coeffs().begin() + 1, modulus.coeffs().end());
  PolyF x_inv = poly_scale(fld, fld.neg(fld.inv(c0)), PolyF(std::move(s)));

  PolyF acc = PolyF::zero();
  for (int i = a.degree(); i >= 0; --i) {
    acc = poly_mul(fld, acc, x_inv);
    acc = poly_add(fld, acc, PolyF{{a.coeff(i)}});
    acc = poly_mod(fld, acc, modulus);
  }
  return acc;
}

bool poly_in_subfield(const TowerField& fld, const PolyF& a) {
  for (Felt c : a.coeffs())
    if (!fld.in_subfield(c)) return false;
  return true;
}

std::string poly_to_symbols(const TowerField& fld, const PolyF& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  for (int i = 0; i <= a.degree(); ++i) {
    if (i > 0) out << ',';
    out << fld.subfield_index(a.coeff(i));
  }
  return out.str();
}

PolyF poly_from_symbols(const TowerField& fld, const std::string& text) {
  require(!text.empty(), "empty polynomial string");
  std::vector<Felt> coeffs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    std::int64_t sym = 0;
    try {
      sym = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw error("bad polynomial symbol: " + item);
    }
    require(pos == item.size(), "bad polynomial symbol: " + item);
    coeffs.push_back(fld.subfield_element(sym));
  }
  return PolyF(std::move(coeffs));
}

}  // namespace orbitcode

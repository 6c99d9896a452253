#include "orbitcode/decoder.hpp"

#include <algorithm>

namespace orbitcode {

const char* decode_stage_name(DecodeStage stage) {
  switch (stage) {
    case DecodeStage::key_equation: return "key_equation";
    case DecodeStage::factorization: return "factorization";
    case DecodeStage::residue: return "residue";
    case DecodeStage::verification: return "verification";
  }
  return "unknown";
}

SyndromeVector syndromes(const CodeSpec& spec, const CheckMatrix& H, const Word& r) {
  require(static_cast<std::int64_t>(r.size()) == spec.locations->total(),
          "word length must equal |L|");
  const TowerField& fld = *spec.field;
  SyndromeVector S(static_cast<std::size_t>(spec.t), Felt::zero());
  for (int i = 0; i < spec.t; ++i) {
    Felt acc = Felt::zero();
    for (int l = 0; l < H.cols; ++l)
      acc = fld.add(acc, fld.mul(r[static_cast<std::size_t>(l)], H.at(i, l)));
    check_internal(fld.in_subfield(acc), "syndrome left F");
    S[static_cast<std::size_t>(i)] = acc;
  }
  return S;
}

KeyEquationSolution solve_key_equation(const TowerField& fld, const SyndromeVector& S) {
  const int t = static_cast<int>(S.size());

  // Berlekamp-Massey linear-recurrence synthesis over F.
  std::vector<Felt> lam{Felt::one()};
  std::vector<Felt> prev{Felt::one()};
  Felt prev_disc = Felt::one();
  int length = 0;
  int shift = 1;

  for (int n = 0; n < t; ++n) {
    Felt disc = S[static_cast<std::size_t>(n)];
    for (std::size_t i = 1; i < lam.size() && static_cast<int>(i) <= n; ++i)
      disc = fld.add(disc, fld.mul(lam[i], S[static_cast<std::size_t>(n) - i]));

    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const Felt factor = fld.div(disc, prev_disc);
    std::vector<Felt> updated = lam;
    if (updated.size() < prev.size() + static_cast<std::size_t>(shift))
      updated.resize(prev.size() + static_cast<std::size_t>(shift), Felt::zero());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      auto& c = updated[i + static_cast<std::size_t>(shift)];
      c = fld.sub(c, fld.mul(factor, prev[i]));
    }
    if (2 * length <= n) {
      prev = std::move(lam);
      prev_disc = disc;
      length = n + 1 - length;
      shift = 1;
    } else {
      ++shift;
    }
    lam = std::move(updated);
  }

  KeyEquationSolution sol;
  sol.lambda = PolyF(std::move(lam));
  check_internal(sol.lambda.coeff(0) == Felt::one(), "error locator must have lambda(0) = 1");

  PolyF series{std::vector<Felt>(S.begin(), S.end())};
  sol.omega = poly_trunc(poly_mul(fld, sol.lambda, series), t);
  return sol;
}

OrbitMinPolyTable build_min_poly_table(const TowerField& fld, const LocationSet& locations) {
  OrbitMinPolyTable table;
  table.by_orbit.reserve(static_cast<std::size_t>(locations.total()));
  for (std::int64_t l = 0; l < locations.total(); ++l) {
    const Orbit& orbit = locations.orbits()[static_cast<std::size_t>(l)];
    const Felt root = fld.inv(fld.unit(orbit.rep));
    PolyF p{fld.minimal_polynomial(root)};
    check_internal(p.degree() == orbit.size(),
                   "orbit polynomial degree must equal the orbit size");
    for (std::int64_t j : orbit.members)
      check_internal(poly_eval(fld, p, fld.inv(fld.unit(j))).is_zero(),
                     "orbit polynomial must vanish at beta^(-j)");

    std::vector<std::int32_t> key;
    key.reserve(p.coeffs().size());
    for (Felt c : p.coeffs()) key.push_back(c.exponent());
    const bool inserted =
        table.reverse.emplace(std::move(key), static_cast<int>(l)).second;
    check_internal(inserted, "orbit polynomials must be pairwise distinct");
    table.by_orbit.push_back(std::move(p));
  }
  return table;
}

std::vector<int> locate_errors(const TowerField& fld, const KeyEquationSolution& sol,
                               const OrbitMinPolyTable& table) {
  const int deg = sol.lambda.degree();
  std::vector<int> support;
  std::int64_t found_degree = 0;
  for (std::size_t l = 0; l < table.by_orbit.size(); ++l) {
    const PolyF& p = table.by_orbit[l];
    if (p.degree() > deg) continue;
    if (!poly_divides(fld, p, sol.lambda)) continue;
    support.push_back(static_cast<int>(l));
    found_degree += p.degree();
  }

  if (found_degree != deg)
    throw decode_failure(DecodeStage::factorization,
                         "error locator does not split over the orbit polynomials; "
                         "beyond radius or corrupted");
  PolyF product = PolyF::one();
  for (int l : support) product = poly_mul(fld, product, table.by_orbit[static_cast<std::size_t>(l)]);
  if (!(product == poly_monic(fld, sol.lambda)))
    throw decode_failure(DecodeStage::factorization,
                         "error locator has a repeated orbit factor; "
                         "beyond radius or corrupted");
  return support;
}

ErrorWord error_values(const KeyEquationSolution& sol, const std::vector<int>& support,
                       const CodeSpec& spec, const OrbitMinPolyTable& table) {
  const TowerField& fld = *spec.field;

  ErrorWord ew;
  ew.word.assign(static_cast<std::size_t>(spec.locations->total()), Felt::zero());
  if (support.empty()) return ew;

  // Rescale to the monic locator: lambda* = prod p_l = lambda*(0) * lambda.
  PolyF monic_locator = PolyF::one();
  for (int l : support)
    monic_locator = poly_mul(fld, monic_locator, table.by_orbit[static_cast<std::size_t>(l)]);
  const Felt c = monic_locator.coeff(0);
  check_internal(!c.is_zero(), "monic locator has zero constant term");
  check_internal(poly_scale(fld, c, sol.lambda) == monic_locator,
                 "monic locator must be a rescale of lambda");
  const PolyF omega_star = poly_scale(fld, c, sol.omega);

  for (int l : support) {
    const PolyF& p = table.by_orbit[static_cast<std::size_t>(l)];

    PolyF a = poly_mod(fld, poly_mul(fld, PolyF::x(), eval_at_inverse_mod(fld, spec.rho, p)), p);
    a = poly_mod(fld, poly_mul(fld, a, poly_derivative(fld, p)), p);
    for (int u : support) {
      if (u == l) continue;
      a = poly_mod(fld, poly_mul(fld, a, table.by_orbit[static_cast<std::size_t>(u)]), p);
    }

    if (a.is_zero())
      throw decode_failure(DecodeStage::residue, "evaluator denominator vanished mod p_l");
    PolyXgcd xg = poly_xgcd(fld, a, p);
    if (xg.d.degree() != 0)
      throw decode_failure(DecodeStage::residue, "evaluator denominator not invertible mod p_l");
    const PolyF a_inv = poly_mod(fld, poly_scale(fld, fld.inv(xg.d.coeff(0)), xg.u), p);

    const PolyF residue =
        poly_mod(fld, poly_neg(fld, poly_mul(fld, omega_star, a_inv)), p);
    if (residue.degree() != 0)
      throw decode_failure(DecodeStage::residue,
                           "error value residue is not a nonzero constant");
    const Felt value = residue.coeff(0);
    check_internal(fld.in_subfield(value), "error value left F");

    ew.support.push_back(l);
    ew.values.push_back(value);
    ew.word[static_cast<std::size_t>(l)] = value;
  }
  return ew;
}

DecodeResult decode(const CodeSpec& spec, const CheckMatrix& H,
                    const OrbitMinPolyTable& table, const Word& r) {
  const TowerField& fld = *spec.field;
  DecodeResult result;

  const SyndromeVector S = syndromes(spec, H, r);
  const bool all_zero =
      std::all_of(S.begin(), S.end(), [](Felt s) { return s.is_zero(); });
  if (all_zero) {
    result.ok = true;
    result.codeword = r;
    result.error.word.assign(r.size(), Felt::zero());
    return result;
  }

  try {
    const KeyEquationSolution sol = solve_key_equation(fld, S);
    if (sol.omega.degree() > sol.lambda.degree())
      throw decode_failure(DecodeStage::key_equation,
                           "key equation has deg omega > deg lambda; "
                           "beyond radius or corrupted");

    const std::vector<int> support = locate_errors(fld, sol, table);
    ErrorWord ew = error_values(sol, support, spec, table);

    Word codeword = word_sub(fld, r, ew.word);
    const SyndromeVector check = syndromes(spec, H, codeword);
    const bool corrected =
        std::all_of(check.begin(), check.end(), [](Felt s) { return s.is_zero(); });
    if (!corrected)
      throw decode_failure(DecodeStage::verification,
                           "corrected word still has a nonzero syndrome");
    if (degree_weight(*spec.locations, ew.word) > spec.t / 2)
      throw decode_failure(DecodeStage::verification,
                           "error degree weight exceeds the correction radius");

    result.ok = true;
    result.codeword = std::move(codeword);
    result.error = std::move(ew);
    return result;
  } catch (const decode_failure& f) {
    result.ok = false;
    result.stage = f.stage();
    result.detail = f.what();
    return result;
  }
}

}  // namespace orbitcode

#include "orbitcode/gilbert.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "numtheory.hpp"

namespace orbitcode {

namespace {

// prod over j in the orbit of (x - beta^j); Galois-stable roots, so the
// coefficients land in F.
PolyF orbit_root_product(const TowerField& fld, const Orbit& orbit) {
  PolyF acc = PolyF::one();
  for (std::int64_t j : orbit.members) {
    const PolyF linear{{fld.neg(fld.unit(j)), Felt::one()}};
    acc = poly_mul(fld, acc, linear);
  }
  return acc;
}

PolyF poly_powmod(const TowerField& fld, PolyF base, std::int64_t e, const PolyF& mod) {
  PolyF acc = poly_mod(fld, PolyF::one(), mod);
  base = poly_mod(fld, base, mod);
  while (e > 0) {
    if (e & 1) acc = poly_mod(fld, poly_mul(fld, acc, base), mod);
    base = poly_mod(fld, poly_mul(fld, base, base), mod);
    e >>= 1;
  }
  return acc;
}

}  // namespace

PolyF partial_fraction_numerator(const Word& c, const TowerField& fld,
                                 const LocationSet& locations) {
  require(static_cast<std::int64_t>(c.size()) == locations.total(), "word length mismatch");
  require(hamming_weight(c) > 0, "zero word has no partial fraction numerator");

  std::vector<int> support;
  for (std::size_t l = 0; l < c.size(); ++l)
    if (!c[l].is_zero()) support.push_back(static_cast<int>(l));

  std::vector<PolyF> factors;
  factors.reserve(support.size());
  for (int l : support)
    factors.push_back(orbit_root_product(fld, locations.orbits()[static_cast<std::size_t>(l)]));

  // sum over j in l of 1/(x - beta^j) = D_l' / D_l, so the numerator over the
  // common denominator is sum of c_l * D_l' * prod of the other D_u.
  PolyF numerator = PolyF::zero();
  for (std::size_t i = 0; i < support.size(); ++i) {
    PolyF term = poly_scale(fld, c[static_cast<std::size_t>(support[i])],
                            poly_derivative(fld, factors[i]));
    for (std::size_t u = 0; u < support.size(); ++u) {
      if (u == i) continue;
      term = poly_mul(fld, term, factors[u]);
    }
    numerator = poly_add(fld, numerator, term);
  }

  check_internal(!numerator.is_zero(), "partial fraction numerator vanished");
  check_internal(poly_in_subfield(fld, numerator),
                 "partial fraction numerator left F");
  check_internal(numerator.degree() <= degree_weight(locations, c) - 1,
                 "partial fraction numerator degree bound violated");
  return numerator;
}

bool goppa_membership(const Word& c, const PolyF& g, const TowerField& fld,
                      const LocationSet& locations) {
  require(g.degree() >= 1, "g must have positive degree");
  const std::int64_t N = fld.params().n_units;
  const PolyF x_to_n = poly_powmod(fld, PolyF::x(), N, g);
  const PolyF shared = poly_gcd(fld, poly_sub(fld, x_to_n, PolyF::one()), g);
  require(shared.degree() == 0, "g has a root among the units of E");

  if (hamming_weight(c) == 0) return true;
  return poly_divides(fld, g, partial_fraction_numerator(c, fld, locations));
}

WeightEnumerator weight_enumerator(const LocationSet& locations, std::int64_t q) {
  WeightEnumerator en;
  en.counts.assign(1, BigInt(1));
  for (const Orbit& orbit : locations.orbits()) {
    const std::size_t size = static_cast<std::size_t>(orbit.size());
    std::vector<BigInt> next(en.counts.size() + size, BigInt(0));
    for (std::size_t d = 0; d < en.counts.size(); ++d) {
      next[d] += en.counts[d];
      next[d + size] += en.counts[d] * (q - 1);
    }
    en.counts = std::move(next);
  }
  return en;
}

BigInt gilbert_threshold(std::int64_t q, int t) {
  const BigInt q_to_t = detail::pow_big(q, t);
  BigInt half;
  if (t % 2 == 0) {
    half = detail::pow_big(q, t / 2);
  } else {
    // ceil(sqrt(q^t)); rounding up keeps the guarantee conservative.
    half = boost::multiprecision::sqrt(q_to_t);
    if (half * half != q_to_t) half += 1;
  }
  return q_to_t - half - 1;
}

int compute_cutoff(const WeightEnumerator& en, std::int64_t q, int t, std::int64_t m) {
  require(t >= 2, "t must be at least 2");
  require(std::gcd(static_cast<std::int64_t>(t), m) == 1, "t must be prime to m");

  const BigInt threshold = gilbert_threshold(q, t);
  check_internal(threshold > 0, "threshold must be positive for t >= 2");

  const std::int64_t dmax = en.max_degree();
  BigInt cumulative = 0;
  std::int64_t cutoff = 0;
  while (cutoff < dmax) {
    const BigInt next =
        cumulative + BigInt(cutoff) * en.counts[static_cast<std::size_t>(cutoff) + 1];
    if (next >= threshold) break;
    cumulative = next;
    ++cutoff;
  }
  if (cutoff < dmax) {
    // Closing inequality: the sum through D+1 reaches the threshold.
    check_internal(cumulative + BigInt(cutoff) *
                                    en.counts[static_cast<std::size_t>(cutoff) + 1] >=
                       threshold,
                   "cutoff closing inequality failed");
  }
  return static_cast<int>(cutoff);
}

namespace {

// All nonzero words of degree weight <= cutoff, with their weights and
// partial fraction numerators, in deterministic order: orbit subsets by
// ascending index, then value odometer.
struct BoundedWord {
  Word word;
  std::int64_t weight = 0;
  PolyF numerator;
};

void collect_bounded_words(const TowerField& fld, const LocationSet& locations,
                           std::int64_t budget, std::size_t from, std::int64_t used,
                           std::vector<int>& chosen, std::vector<BoundedWord>& out) {
  if (!chosen.empty()) {
    // Odometer over nonzero values on the chosen orbits.
    const std::int64_t q = fld.params().q;
    std::vector<std::int64_t> vals(chosen.size(), 1);
    while (true) {
      Word w(static_cast<std::size_t>(locations.total()), Felt::zero());
      for (std::size_t i = 0; i < chosen.size(); ++i)
        w[static_cast<std::size_t>(chosen[i])] = fld.subfield_element(vals[i]);
      BoundedWord bw;
      bw.weight = used;
      bw.numerator = partial_fraction_numerator(w, fld, locations);
      bw.word = std::move(w);
      out.push_back(std::move(bw));

      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == q) {
        vals[pos] = 1;
        ++pos;
      }
      if (pos == vals.size()) break;
    }
  }
  for (std::size_t l = from; l < static_cast<std::size_t>(locations.total()); ++l) {
    const std::int64_t size = locations.orbits()[l].size();
    if (used + size > budget) continue;
    chosen.push_back(static_cast<int>(l));
    collect_bounded_words(fld, locations, budget, l + 1, used + size, chosen, out);
    chosen.pop_back();
  }
}

CandidateVerdict judge_candidate(const TowerField& fld, const PolyF& g,
                                 const std::vector<BoundedWord>& words) {
  CandidateVerdict verdict;
  verdict.g = g;
  for (const BoundedWord& bw : words) {
    if (!poly_divides(fld, g, bw.numerator)) continue;
    const int e = static_cast<int>(bw.weight);
    if (verdict.bad_weights.empty() || verdict.bad_weights.back() != e)
      verdict.bad_weights.push_back(e);
  }
  if (!verdict.bad_weights.empty()) verdict.bad_at_degree = verdict.bad_weights.front();
  return verdict;
}

}  // namespace

SearchReport search_good_poly(const TowerField& fld, const LocationSet& locations,
                              int t, int cutoff, int jobs) {
  const std::int64_t m = fld.params().m;
  require(t > 1, "t must exceed 1");
  require(std::gcd(static_cast<std::int64_t>(t), m) == 1, "t must be prime to m");
  require(cutoff >= 0, "cutoff must be nonnegative");

  SearchReport report;
  report.params = fld.params();
  report.t = t;
  report.cutoff = cutoff;

  std::vector<BoundedWord> words;
  {
    std::vector<int> chosen;
    collect_bounded_words(fld, locations, cutoff, 0, 0, chosen, words);
  }
  const std::vector<PolyF> candidates = enumerate_irreducible(fld, t);
  check_internal(!candidates.empty(), "no irreducible candidates of degree t");

  report.tested.assign(candidates.size(), CandidateVerdict{});
  if (jobs <= 1 || candidates.size() < 2 * static_cast<std::size_t>(jobs)) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      report.tested[i] = judge_candidate(fld, candidates[i], words);
  } else {
    // Candidates are independent; verdicts land in preassigned slots so the
    // merge is deterministic.
    std::vector<std::thread> workers;
    const std::size_t chunk = (candidates.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::size_t begin = static_cast<std::size_t>(w) * chunk;
      const std::size_t end = std::min(candidates.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i)
          report.tested[i] = judge_candidate(fld, candidates[i], words);
      });
    }
    for (auto& th : workers) th.join();
  }

  // Per-weight bad counts must respect floor((e-1)/t) * |B_e|.
  const WeightEnumerator en = weight_enumerator(locations, fld.params().q);
  for (int e = 1; e <= cutoff; ++e) {
    BigInt bad = 0;
    for (const CandidateVerdict& v : report.tested)
      if (std::find(v.bad_weights.begin(), v.bad_weights.end(), e) != v.bad_weights.end())
        ++bad;
    check_internal(bad <= BigInt((e - 1) / t) * en.counts[static_cast<std::size_t>(e)],
                   "bad-candidate count exceeds the counting bound");
  }

  for (const CandidateVerdict& v : report.tested) {
    if (!v.bad_at_degree) {
      report.winner = v.g;
      break;
    }
  }

  if (report.winner) {
    const PolyF rho = inverse_mod_cyclic(fld, *report.winner);
    const CodeSpec spec = make_code_spec(fld, locations, t, rho);
    const CheckMatrix H = build_check_matrix_direct(spec);
    report.audit = brute_force_min_weights(spec, H);
    check_internal(report.audit.degree_weight > cutoff,
                   "winner audit found a codeword at or below the cutoff");
  }
  return report;
}

MinWeights brute_force_min_weights(const CodeSpec& spec, const CheckMatrix& H) {
  const TowerField& fld = *spec.field;
  const std::int64_t q = fld.params().q;
  const Generator gen = generator_matrix(spec, H);
  const std::int64_t dim = gen.dimension();

  detail::checked_pow(q, dim, std::int64_t{1} << 24,
                      "code dimension too large for exhaustive search");

  MinWeights mins;
  if (dim == 0) return mins;

  std::vector<std::int64_t> message(static_cast<std::size_t>(dim), 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < message.size() && ++message[pos] == q) {
      message[pos] = 0;
      ++pos;
    }
    if (pos == message.size()) break;

    std::vector<Felt> msg;
    msg.reserve(message.size());
    for (std::int64_t s : message) msg.push_back(fld.subfield_element(s));
    const Word w = encode(spec, gen, msg);
    mins.degree_weight = std::min(mins.degree_weight, degree_weight(*spec.locations, w));
    mins.hamming_weight = std::min(mins.hamming_weight, hamming_weight(w));
  }
  return mins;
}

}  // namespace orbitcode

#include "commands.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "formats.hpp"
#include "orbitcode/decoder.hpp"
#include "orbitcode/gilbert.hpp"
#include "orbitcode/polyring.hpp"

namespace orbitcode::cli {

namespace {

FieldParams make_params(std::int64_t p, std::int64_t k, std::int64_t m,
                        std::int64_t table_limit) {
  if (table_limit > 0) return FieldParams::make(p, k, m, table_limit);
  return FieldParams::make(p, k, m);
}

std::string join_csv_int(const std::vector<std::int64_t>& v) { return join_int64(v, ','); }

std::string weight_or_inf(std::int64_t w) {
  return w == MinWeights::kInfinite ? std::string("inf") : std::to_string(w);
}

}  // namespace

int run_params(const ParamsOptions& opt, std::ostream& out) {
  const FieldParams params = make_params(opt.p, opt.k, opt.m, opt.table_limit);
  const TowerField fld = TowerField::build(params);
  const auto bounds = check_orbit_count_bounds(params);

  out << kFormatHeader << '\n';
  out << "p=" << params.p << '\n';
  out << "k=" << params.k << '\n';
  out << "m=" << params.m << '\n';
  out << "q=" << params.q << '\n';
  out << "units=" << params.n_units << '\n';
  out << "fieldpoly=" << join_csv_int(fld.defining_poly()) << '\n';
  out << "subfield_generator_exp=" << fld.subfield_generator_exp() << '\n';
  out << "orbit_count=" << count_orbits_closed_form(params) << '\n';
  out << "orbit_count_lower_ok=" << (bounds.lower_holds ? 1 : 0) << '\n';
  out << "orbit_count_upper_ok=" << (bounds.upper_holds ? 1 : 0) << '\n';

  if (!opt.emit_spec.empty()) {
    require(opt.t >= 1, "emitting a spec file requires -t");
    SpecFileData data;
    data.p = params.p;
    data.k = params.k;
    data.m = params.m;
    data.t = opt.t;
    data.fieldpoly = fld.defining_poly();
    data.rho_symbols = opt.rho;
    data.allow_vanishing_rho = opt.allow_vanishing_rho;
    load_code(data);  // full validation before anything is written
    write_text_file(opt.emit_spec, serialize_spec_file(data));
    out << "spec_written=" << opt.emit_spec << '\n';
  }
  return kExitOk;
}

int run_orbits(const OrbitsOptions& opt, std::ostream& out) {
  const FieldParams params = make_params(opt.p, opt.k, opt.m, 0);
  const TowerField fld = TowerField::build(params);
  const LocationSet locations = enumerate_orbits(fld);

  out << kFormatHeader << '\n';
  for (const Orbit& orbit : locations.orbits()) {
    out << orbit.rep << ' ' << orbit.size();
    for (std::int64_t j : orbit.members) out << ' ' << j;
    out << '\n';
  }
  return kExitOk;
}

int run_matrix(const MatrixOptions& opt, std::ostream& out) {
  const LoadedCode code = load_code(read_spec_path(opt.spec_path));
  require(opt.method == "direct" || opt.method == "lfsr",
          "method must be 'direct' or 'lfsr'");

  CheckMatrix H;
  if (opt.method == "direct") {
    H = build_check_matrix_direct(code.spec, opt.jobs);
  } else {
    H = build_check_matrix_lfsr(code.spec, build_trace_sequence(*code.field));
  }

  out << kFormatHeader << '\n';
  for (int i = 0; i < H.rows; ++i) {
    for (int l = 0; l < H.cols; ++l) {
      if (l > 0) out << ' ';
      out << code.field->subfield_index(H.at(i, l));
    }
    out << '\n';
  }
  return kExitOk;
}

int run_encode(const EncodeOptions& opt, std::ostream& out) {
  const LoadedCode code = load_code(read_spec_path(opt.spec_path));
  const CheckMatrix H = build_check_matrix_direct(code.spec);
  const Generator gen = generator_matrix(code.spec, H);

  const Word message =
      read_word_path(*code.field, gen.dimension(), opt.in_path, "message");
  const Word word = encode(code.spec, gen, message);

  std::ostringstream body;
  body << kFormatHeader << '\n' << format_word_line(*code.field, word) << '\n';
  if (opt.out_path.empty()) {
    out << body.str();
  } else {
    write_text_file(opt.out_path, body.str());
  }
  return kExitOk;
}

int run_decode(const DecodeOptions& opt, std::ostream& out) {
  const LoadedCode code = load_code(read_spec_path(opt.spec_path));
  const CheckMatrix H = build_check_matrix_direct(code.spec);
  const OrbitMinPolyTable table = build_min_poly_table(*code.field, *code.locations);

  const Word received =
      read_word_path(*code.field, code.locations->total(), opt.in_path, "word");
  const DecodeResult result = decode(code.spec, H, table, received);

  out << kFormatHeader << '\n';
  if (!result.ok) {
    out << "status=uncorrectable\n";
    out << "stage=" << decode_stage_name(result.stage) << '\n';
    out << "detail=" << result.detail << '\n';
    return kExitUncorrectable;
  }

  std::vector<std::int64_t> reps, values;
  for (std::size_t i = 0; i < result.error.support.size(); ++i) {
    reps.push_back(
        code.locations->orbits()[static_cast<std::size_t>(result.error.support[i])].rep);
    values.push_back(code.field->subfield_index(result.error.values[i]));
  }
  out << "status=ok\n";
  out << "support=" << (reps.empty() ? "-" : join_int64(reps, ' ')) << '\n';
  out << "values=" << (values.empty() ? "-" : join_int64(values, ' ')) << '\n';
  out << "corrected=" << format_word_line(*code.field, result.codeword) << '\n';
  return kExitOk;
}

int run_simulate(const SimulateOptions& opt, std::ostream& out) {
  const LoadedCode code = load_code(read_spec_path(opt.spec_path));
  const TowerField& fld = *code.field;
  const LocationSet& loc = *code.locations;
  require(opt.trials >= 0, "trials must be nonnegative");
  const std::int64_t radius = code.spec.t / 2;
  if (!opt.stress)
    require(opt.error_degree <= radius,
            "error degree exceeds the guaranteed radius; use --stress");
  require(opt.error_degree >= 0 && opt.error_degree <= loc.modulus(),
          "invalid error degree");

  const CheckMatrix H = build_check_matrix_direct(code.spec);
  const Generator gen = generator_matrix(code.spec, H);
  const OrbitMinPolyTable table = build_min_poly_table(fld, loc);

  out << kFormatHeader << '\n';
  out << "mode=" << (opt.stress ? "stress" : "guaranteed") << " seed=" << opt.seed
      << " trials=" << opt.trials << " error_degree=" << opt.error_degree << '\n';

  std::mt19937_64 rng(opt.seed);
  const std::int64_t q = fld.params().q;
  std::int64_t successes = 0, failures = 0, miscorrections = 0;

  for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
    std::vector<Felt> message;
    for (std::int64_t i = 0; i < gen.dimension(); ++i)
      message.push_back(fld.subfield_element(static_cast<std::int64_t>(rng() % q)));
    const Word codeword = encode(code.spec, gen, message);

    // Draw an error of degree weight <= error_degree.
    Word e(static_cast<std::size_t>(loc.total()), Felt::zero());
    std::int64_t budget = opt.error_degree;
    std::vector<std::int64_t> reps, values;
    for (std::int64_t attempt = 0; attempt < 4 * loc.total(); ++attempt) {
      const auto l =
          static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(loc.total()));
      const std::int64_t value = 1 + static_cast<std::int64_t>(rng() % (q - 1));
      if (!e[l].is_zero() || loc.orbits()[l].size() > budget) continue;
      e[l] = fld.subfield_element(value);
      budget -= loc.orbits()[l].size();
      reps.push_back(loc.orbits()[l].rep);
      values.push_back(value);
    }

    const DecodeResult result = decode(code.spec, H, table, word_add(fld, codeword, e));
    const char* outcome = nullptr;
    if (!result.ok) {
      ++failures;
      outcome = "failure";
    } else if (result.codeword == codeword) {
      ++successes;
      outcome = "ok";
    } else {
      ++miscorrections;
      outcome = "miscorrection";
    }
    out << "trial=" << trial << " support=" << (reps.empty() ? "-" : join_int64(reps, ','))
        << " values=" << (values.empty() ? "-" : join_int64(values, ','))
        << " status=" << outcome << '\n';
  }

  out << "successes=" << successes << " failures=" << failures
      << " miscorrections=" << miscorrections << '\n';
  if (!opt.stress) {
    check_internal(failures == 0 && miscorrections == 0,
                   "decode failed within the guaranteed radius");
  }
  return kExitOk;
}

int run_search(const SearchOptions& opt, std::ostream& out) {
  const FieldParams params = make_params(opt.p, opt.k, opt.m, 0);
  const TowerField fld = TowerField::build(params);
  const LocationSet locations = enumerate_orbits(fld);

  const WeightEnumerator en = weight_enumerator(locations, params.q);
  const int cutoff = compute_cutoff(en, params.q, opt.t, params.m);
  const SearchReport report = search_good_poly(fld, locations, opt.t, cutoff, opt.jobs);

  out << kFormatHeader << '\n';
  out << "p=" << params.p << " k=" << params.k << " m=" << params.m << " t=" << opt.t
      << '\n';
  out << "D=" << report.cutoff << '\n';
  for (const CandidateVerdict& v : report.tested) {
    out << "g=" << poly_to_symbols(fld, v.g) << ' ';
    if (v.bad_at_degree)
      out << "bad_at_degree=" << *v.bad_at_degree << '\n';
    else
      out << "OK\n";
  }
  if (report.winner) {
    out << "winner=" << poly_to_symbols(fld, *report.winner) << '\n';
    out << "audit_min_degree_weight=" << weight_or_inf(report.audit.degree_weight) << '\n';
    out << "audit_min_hamming_weight=" << weight_or_inf(report.audit.hamming_weight) << '\n';
    return kExitOk;
  }
  out << "winner=none\n";
  // The cutoff came from the counting bound, so an empty search contradicts it.
  throw internal_error("no candidate survived a cutoff certified by the counting bound");
}

int run_audit(const AuditOptions& opt, std::ostream& out) {
  const LoadedCode code = load_code(read_spec_path(opt.spec_path));
  const CheckMatrix H = build_check_matrix_direct(code.spec);
  const Generator gen = generator_matrix(code.spec, H);
  const MinWeights mins = brute_force_min_weights(code.spec, H);

  const std::int64_t t = code.spec.t;
  const std::int64_t m = code.field->params().m;
  const std::int64_t dim_bound = code.locations->total() - t;
  const std::int64_t hamming_bound = (t + 1 + m - 1) / m;  // ceil((t+1)/m)

  out << kFormatHeader << '\n';
  out << "t=" << t << '\n';
  out << "location_count=" << code.locations->total() << '\n';
  out << "rank=" << gen.rank << '\n';
  out << "dimension=" << gen.dimension() << '\n';
  out << "dimension_bound=" << dim_bound << '\n';
  out << "dimension_bound_ok=" << (gen.dimension() >= dim_bound ? 1 : 0) << '\n';
  out << "min_degree_weight=" << weight_or_inf(mins.degree_weight) << '\n';
  out << "degree_weight_bound=" << (t + 1) << '\n';
  out << "degree_weight_bound_ok="
      << (!code.spec.distance_guarantee || mins.degree_weight >= t + 1 ? 1 : 0) << '\n';
  out << "min_hamming_weight=" << weight_or_inf(mins.hamming_weight) << '\n';
  out << "hamming_weight_bound=" << hamming_bound << '\n';
  out << "hamming_weight_bound_ok="
      << (!code.spec.distance_guarantee || mins.hamming_weight >= hamming_bound ? 1 : 0)
      << '\n';
  return kExitOk;
}

}  // namespace orbitcode::cli

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "orbitcode/errors.hpp"

namespace cli = orbitcode::cli;

int main(int argc, char** argv) {
  CLI::App app{"orbit-indexed generalized Reed-Solomon codes"};
  app.require_subcommand(1);

  cli::ParamsOptions params_opt;
  auto* params_cmd = app.add_subcommand("params", "field parameters and orbit counts");
  params_cmd->add_option("-p", params_opt.p, "characteristic (prime)")->required();
  params_cmd->add_option("-k", params_opt.k, "extension degree of F over GF(p)");
  params_cmd->add_option("-m", params_opt.m, "extension degree of E over F")->required();
  params_cmd->add_option("--table-limit", params_opt.table_limit, "max q^m - 1");
  params_cmd->add_option("-t", params_opt.t, "number of check rows for --emit-spec");
  params_cmd->add_option("--rho", params_opt.rho, "rho as F-symbols, low-to-high");
  params_cmd->add_option("--emit-spec", params_opt.emit_spec, "write a code-spec file");
  params_cmd->add_flag("--allow-vanishing-rho", params_opt.allow_vanishing_rho,
                       "accept rho with roots among the units");

  cli::OrbitsOptions orbits_opt;
  auto* orbits_cmd = app.add_subcommand("orbits", "list the location set");
  orbits_cmd->add_option("-p", orbits_opt.p)->required();
  orbits_cmd->add_option("-k", orbits_opt.k);
  orbits_cmd->add_option("-m", orbits_opt.m)->required();

  cli::MatrixOptions matrix_opt;
  auto* matrix_cmd = app.add_subcommand("matrix", "print the check matrix");
  matrix_cmd->add_option("--spec", matrix_opt.spec_path)->required();
  matrix_cmd->add_option("--method", matrix_opt.method, "direct | lfsr");
  matrix_cmd->add_option("--jobs", matrix_opt.jobs, "worker threads");

  cli::EncodeOptions encode_opt;
  auto* encode_cmd = app.add_subcommand("encode", "encode a message file");
  encode_cmd->add_option("--spec", encode_opt.spec_path)->required();
  encode_cmd->add_option("--in", encode_opt.in_path)->required();
  encode_cmd->add_option("--out", encode_opt.out_path, "default: stdout");

  cli::DecodeOptions decode_opt;
  auto* decode_cmd = app.add_subcommand("decode", "decode a received word file");
  decode_cmd->add_option("--spec", decode_opt.spec_path)->required();
  decode_cmd->add_option("--in", decode_opt.in_path)->required();

  cli::SimulateOptions simulate_opt;
  auto* simulate_cmd = app.add_subcommand("simulate", "seeded decode trials");
  simulate_cmd->add_option("--spec", simulate_opt.spec_path)->required();
  simulate_cmd->add_option("--trials", simulate_opt.trials)->required();
  simulate_cmd->add_option("--error-degree", simulate_opt.error_degree)->required();
  simulate_cmd->add_option("--seed", simulate_opt.seed)->required();
  simulate_cmd->add_flag("--stress", simulate_opt.stress,
                         "allow error degrees beyond the guaranteed radius");

  cli::SearchOptions search_opt;
  auto* search_cmd = app.add_subcommand("search-g", "search for a good defining polynomial");
  search_cmd->add_option("-p", search_opt.p)->required();
  search_cmd->add_option("-k", search_opt.k);
  search_cmd->add_option("-m", search_opt.m)->required();
  search_cmd->add_option("-t", search_opt.t)->required();
  search_cmd->add_option("--jobs", search_opt.jobs, "worker threads");

  cli::AuditOptions audit_opt;
  auto* audit_cmd = app.add_subcommand("audit", "rank, dimension and distance audit");
  audit_cmd->add_option("--spec", audit_opt.spec_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (params_cmd->parsed()) return cli::run_params(params_opt, std::cout);
    if (orbits_cmd->parsed()) return cli::run_orbits(orbits_opt, std::cout);
    if (matrix_cmd->parsed()) return cli::run_matrix(matrix_opt, std::cout);
    if (encode_cmd->parsed()) return cli::run_encode(encode_opt, std::cout);
    if (decode_cmd->parsed()) return cli::run_decode(decode_opt, std::cout);
    if (simulate_cmd->parsed()) return cli::run_simulate(simulate_opt, std::cout);
    if (search_cmd->parsed()) return cli::run_search(search_opt, std::cout);
    if (audit_cmd->parsed()) return cli::run_audit(audit_opt, std::cout);
  } catch (const orbitcode::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cli::kExitInternal;
  } catch (const orbitcode::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cli::kExitInternal;
  }
  return cli::kExitUsage;
}

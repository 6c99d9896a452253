#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace orbitcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUncorrectable = 2;
inline constexpr int kExitInternal = 3;

struct ParamsOptions {
  std::int64_t p = 0, k = 1, m = 0;
  std::int64_t table_limit = 0;  // 0 = default
  int t = 0;                     // required when emitting a spec
  std::string rho = "1";
  std::string emit_spec;  // path; empty = report only
  bool allow_vanishing_rho = false;
};

struct OrbitsOptions {
  std::int64_t p = 0, k = 1, m = 0;
};

struct MatrixOptions {
  std::string spec_path;
  std::string method = "direct";  // direct | lfsr
  int jobs = 1;
};

struct EncodeOptions {
  std::string spec_path;
  std::string in_path;
  std::string out_path;  // empty = stdout
};

struct DecodeOptions {
  std::string spec_path;
  std::string in_path;
};

struct SimulateOptions {
  std::string spec_path;
  std::int64_t trials = 0;
  std::int64_t error_degree = 0;
  std::uint64_t seed = 0;
  bool stress = false;
};

struct SearchOptions {
  std::int64_t p = 0, k = 1, m = 0;
  int t = 0;
  int jobs = 1;
};

struct AuditOptions {
  std::string spec_path;
};

int run_params(const ParamsOptions& opt, std::ostream& out);
int run_orbits(const OrbitsOptions& opt, std::ostream& out);
int run_matrix(const MatrixOptions& opt, std::ostream& out);
int run_encode(const EncodeOptions& opt, std::ostream& out);
int run_decode(const DecodeOptions& opt, std::ostream& out);
int run_simulate(const SimulateOptions& opt, std::ostream& out);
int run_search(const SearchOptions& opt, std::ostream& out);
int run_audit(const AuditOptions& opt, std::ostream& out);

}  // namespace orbitcode::cli

#pragma once

// Text file formats used by the command-line tool. Everything is line
// oriented and versioned with a leading "# orbitcode v1" comment so fixtures
// stay diff-able across implementations.

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "orbitcode/code.hpp"
#include "orbitcode/galois.hpp"
#include "orbitcode/orbits.hpp"

namespace orbitcode::cli {

inline constexpr const char* kFormatHeader = "# orbitcode v1";

/// Parsed key=value content of a code-spec file.
struct SpecFileData {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  int t = 0;
  std::vector<std::int64_t> fieldpoly;  // residues mod p, low-to-high
  std::string rho_symbols;              // F-symbols, comma separated
  bool allow_nonstandard_fieldpoly = false;
  bool allow_vanishing_rho = false;
};

SpecFileData parse_spec_file(std::istream& in);
SpecFileData parse_spec_text(const std::string& text);
std::string serialize_spec_file(const SpecFileData& data);

SpecFileData read_spec_path(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// A spec file realized into live objects. The field and location set are
/// heap-held so the CodeSpec's pointers stay valid across moves.
struct LoadedCode {
  std::unique_ptr<TowerField> field;
  std::unique_ptr<LocationSet> locations;
  CodeSpec spec;
};

/// Builds the tower, checks the fieldpoly against the deterministic choice
/// (unless the override flag is set), and validates rho.
LoadedCode load_code(const SpecFileData& data);

/// One line of space-separated F-symbols after the header.
Word read_word_stream(const TowerField& fld, std::int64_t expected_len, std::istream& in,
                      const char* what);
Word read_word_path(const TowerField& fld, std::int64_t expected_len,
                    const std::string& path, const char* what);
std::string format_word_line(const TowerField& fld, const Word& w);

std::string join_int64(const std::vector<std::int64_t>& values, char sep);

}  // namespace orbitcode::cli

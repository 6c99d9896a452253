#include "formats.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "orbitcode/polyring.hpp"

namespace orbitcode::cli {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw error("bad integer for " + what + ": " + text);
  }
  require(pos == text.size(), "bad integer for " + what + ": " + text);
  return v;
}

std::vector<std::int64_t> parse_csv_ints(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, what));
  require(!out.empty(), what + " must not be empty");
  return out;
}

}  // namespace

SpecFileData parse_spec_file(std::istream& in) {
  std::string line;
  bool header_seen = false;
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header_seen) {
        require(line == kFormatHeader, "spec file must start with '# orbitcode v1'");
        header_seen = true;
      }
      continue;
    }
    require(header_seen, "spec file must start with '# orbitcode v1'");
    const auto eq = line.find('=');
    require(eq != std::string::npos, "spec file line is not key=value: " + line);
    const std::string key = line.substr(0, eq);
    require(kv.emplace(key, line.substr(eq + 1)).second, "duplicate spec key: " + key);
  }
  require(header_seen, "spec file must start with '# orbitcode v1'");

  auto take = [&kv](const std::string& key) {
    const auto it = kv.find(key);
    require(it != kv.end(), "spec file is missing key: " + key);
    std::string value = it->second;
    kv.erase(it);
    return value;
  };

  SpecFileData data;
  require(parse_int(take("version"), "version") == 1, "unsupported spec file version");
  data.p = parse_int(take("p"), "p");
  data.k = parse_int(take("k"), "k");
  data.m = parse_int(take("m"), "m");
  data.t = static_cast<int>(parse_int(take("t"), "t"));
  data.fieldpoly = parse_csv_ints(take("fieldpoly"), "fieldpoly");
  data.rho_symbols = take("rho");
  if (kv.count("allow_nonstandard_fieldpoly"))
    data.allow_nonstandard_fieldpoly =
        parse_int(take("allow_nonstandard_fieldpoly"), "allow_nonstandard_fieldpoly") != 0;
  if (kv.count("allow_vanishing_rho"))
    data.allow_vanishing_rho =
        parse_int(take("allow_vanishing_rho"), "allow_vanishing_rho") != 0;
  if (!kv.empty()) throw error("unknown spec key: " + kv.begin()->first);
  return data;
}

SpecFileData parse_spec_text(const std::string& text) {
  std::istringstream in(text);
  return parse_spec_file(in);
}

std::string serialize_spec_file(const SpecFileData& data) {
  std::ostringstream out;
  out << kFormatHeader << '\n';
  out << "version=1\n";
  out << "p=" << data.p << '\n';
  out << "k=" << data.k << '\n';
  out << "m=" << data.m << '\n';
  out << "t=" << data.t << '\n';
  out << "fieldpoly=" << join_int64(data.fieldpoly, ',') << '\n';
  out << "rho=" << data.rho_symbols << '\n';
  if (data.allow_nonstandard_fieldpoly) out << "allow_nonstandard_fieldpoly=1\n";
  if (data.allow_vanishing_rho) out << "allow_vanishing_rho=1\n";
  return out.str();
}

SpecFileData read_spec_path(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open spec file: " + path);
  return parse_spec_file(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  require(out.good(), "cannot open for writing: " + path);
  out << content;
  require(out.good(), "write failed: " + path);
}

LoadedCode load_code(const SpecFileData& data) {
  const FieldParams params = FieldParams::make(data.p, data.k, data.m);

  LoadedCode code;
  auto deterministic = TowerField::build(params);
  if (data.fieldpoly == deterministic.defining_poly()) {
    code.field = std::make_unique<TowerField>(std::move(deterministic));
  } else {
    require(data.allow_nonstandard_fieldpoly,
            "fieldpoly differs from the deterministic choice; set "
            "allow_nonstandard_fieldpoly=1 to keep it");
    code.field =
        std::make_unique<TowerField>(TowerField::build_with_poly(params, data.fieldpoly));
  }
  code.locations = std::make_unique<LocationSet>(enumerate_orbits(*code.field));
  const PolyF rho = poly_from_symbols(*code.field, data.rho_symbols);
  code.spec = make_code_spec(*code.field, *code.locations, data.t, rho,
                             data.allow_vanishing_rho);
  return code;
}

Word read_word_stream(const TowerField& fld, std::int64_t expected_len, std::istream& in,
                      const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream items(line);
    std::vector<std::int64_t> symbols;
    std::string item;
    while (items >> item) symbols.push_back(parse_int(item, what));
    require(static_cast<std::int64_t>(symbols.size()) == expected_len,
            std::string(what) + ": expected " + std::to_string(expected_len) +
                " symbols, got " + std::to_string(symbols.size()));
    return word_from_symbols(fld, symbols);
  }
  throw error(std::string(what) + ": no symbol line found");
}

Word read_word_path(const TowerField& fld, std::int64_t expected_len,
                    const std::string& path, const char* what) {
  std::ifstream in(path);
  require(in.good(), std::string("cannot open ") + what + ": " + path);
  return read_word_stream(fld, expected_len, in, what);
}

std::string format_word_line(const TowerField& fld, const Word& w) {
  return join_int64(word_symbols(fld, w), ' ');
}

std::string join_int64(const std::vector<std::int64_t>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace orbitcode::cli

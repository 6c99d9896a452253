#include <doctest.h>

#include "fixtures.hpp"
#include "formats.hpp"
#include "orbitcode/decoder.hpp"
#include "proc.hpp"

using namespace orbitcode;
namespace cli = orbitcode::cli;

namespace {

std::string spec32_t4() {
  cli::SpecFileData data;
  data.p = 3;
  data.k = 1;
  data.m = 2;
  data.t = 4;
  data.fieldpoly = {2, 1, 1};
  data.rho_symbols = "1";
  return cli::serialize_spec_file(data);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spec file round trip") {
  const std::string text = spec32_t4();
  const auto parsed = cli::parse_spec_text(text);
  CHECK(parsed.p == 3);
  CHECK(parsed.t == 4);
  CHECK(parsed.fieldpoly == std::vector<std::int64_t>{2, 1, 1});
  CHECK(cli::serialize_spec_file(parsed) == text);

  const auto code = cli::load_code(parsed);
  CHECK(code.spec.t == 4);
  CHECK(code.locations->total() == 5);
  CHECK(code.spec.distance_guarantee);
}

TEST_CASE("spec file validation") {
  CHECK_THROWS_AS(cli::parse_spec_text("version=1\n"), error);  // missing header
  CHECK_THROWS_AS(cli::parse_spec_text("# orbitcode v1\nversion=1\np=3\n"), error);
  CHECK_THROWS_AS(
      cli::parse_spec_text(spec32_t4() + "unknown_key=5\n"), error);
  CHECK_THROWS_AS(cli::parse_spec_text(spec32_t4() + "p=5\n"), error);  // duplicate

  // fieldpoly must match the deterministic choice unless overridden.
  auto data = cli::parse_spec_text(spec32_t4());
  data.fieldpoly = {2, 2, 1};  // x^2 + 2x + 2, also primitive
  CHECK_THROWS_AS(cli::load_code(data), error);
  data.allow_nonstandard_fieldpoly = true;
  const auto code = cli::load_code(data);
  CHECK(code.field->defining_poly() == std::vector<std::int64_t>{2, 2, 1});

  // Non-primitive override is still rejected.
  data.fieldpoly = {1, 0, 1};
  CHECK_THROWS_AS(cli::load_code(data), error);
}

TEST_CASE("word file parsing") {
  auto fx = testutil::make_fixture(3, 1, 2);
  {
    std::istringstream in("# orbitcode v1\n0 2 0 1 0\n");
    const Word w = cli::read_word_stream(fx.fld(), 5, in, "word");
    CHECK(cli::format_word_line(fx.fld(), w) == "0 2 0 1 0");
  }
  {
    std::istringstream in("# orbitcode v1\n0 2 0\n");
    CHECK_THROWS_AS(cli::read_word_stream(fx.fld(), 5, in, "word"), error);
  }
  {
    std::istringstream in("# orbitcode v1\n0 3 0 0 0\n");  // symbol out of range
    CHECK_THROWS_AS(cli::read_word_stream(fx.fld(), 5, in, "word"), error);
  }
  {
    std::istringstream in("# orbitcode v1\n");
    CHECK_THROWS_AS(cli::read_word_stream(fx.fld(), 5, in, "word"), error);
  }
}

TEST_CASE("orbits and matrix output") {
  REQUIRE(!testutil::cli_path().empty());
  {
    const auto run = testutil::run_cli("orbits -p 3 -k 1 -m 2");
    CHECK(run.exit_code == 0);
    CHECK(run.output ==
          "# orbitcode v1\n0 1 0\n1 2 1 3\n2 2 2 6\n4 1 4\n5 2 5 7\n");
  }
  {
    testutil::TempDir dir;
    dir.write("s.txt", spec32_t4());
    const auto run = testutil::run_cli("matrix --spec " + dir.file("s.txt"));
    CHECK(run.exit_code == 0);
    CHECK(run.output ==
          "# orbitcode v1\n1 2 2 1 2\n1 2 0 2 1\n1 0 1 1 0\n1 2 0 2 1\n");
    const auto lfsr =
        testutil::run_cli("matrix --method lfsr --spec " + dir.file("s.txt"));
    CHECK(lfsr.output == run.output);
  }
  {
    const auto run = testutil::run_cli("params -p 4 -k 1 -m 3");
    CHECK(run.exit_code == 1);  // p must be prime
  }
}

TEST_CASE("params emits a loadable spec") {
  REQUIRE(!testutil::cli_path().empty());
  testutil::TempDir dir;
  const auto run = testutil::run_cli("params -p 3 -k 1 -m 2 -t 4 --emit-spec " +
                                     dir.file("s.txt"));
  CHECK(run.exit_code == 0);
  CHECK(dir.read("s.txt") == spec32_t4());
}

TEST_CASE("encode decode round trip through files") {
  REQUIRE(!testutil::cli_path().empty());
  testutil::TempDir dir;
  dir.write("s.txt", spec32_t4());
  dir.write("msg.txt", "# orbitcode v1\n2 1\n");

  const auto enc = testutil::run_cli("encode --spec " + dir.file("s.txt") + " --in " +
                                     dir.file("msg.txt") + " --out " + dir.file("c.txt"));
  REQUIRE(enc.exit_code == 0);

  // Clean word decodes to itself with empty support.
  const auto clean = testutil::run_cli("decode --spec " + dir.file("s.txt") + " --in " +
                                       dir.file("c.txt"));
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("status=ok\nsupport=-\nvalues=-\n") != std::string::npos);

  // Plant a unit error at orbit {4} (coordinate 3) and decode.
  auto fx = testutil::make_fixture(3, 1, 2);
  std::istringstream cstream(dir.read("c.txt"));
  Word word = cli::read_word_stream(fx.fld(), 5, cstream, "word");
  word[3] = fx.fld().add(word[3], Felt::one());
  dir.write("r.txt", std::string(cli::kFormatHeader) + "\n" +
                         cli::format_word_line(fx.fld(), word) + "\n");

  const auto dec = testutil::run_cli("decode --spec " + dir.file("s.txt") + " --in " +
                                     dir.file("r.txt"));
  CHECK(dec.exit_code == 0);
  CHECK(dec.output.find("status=ok\nsupport=4\nvalues=1\n") != std::string::npos);
  const std::string corrected = "corrected=" +
                                dir.read("c.txt").substr(std::string(cli::kFormatHeader).size() + 1);
  CHECK(dec.output.find(corrected) != std::string::npos);
}

TEST_CASE("decode exit codes") {
  REQUIRE(!testutil::cli_path().empty());
  testutil::TempDir dir;
  dir.write("s.txt", spec32_t4());

  // Wrong length is a usage error.
  dir.write("short.txt", "# orbitcode v1\n0 0 0\n");
  CHECK(testutil::run_cli("decode --spec " + dir.file("s.txt") + " --in " +
                          dir.file("short.txt"))
            .exit_code == 1);

  // Find an uncorrectable word by scanning; the decoder must fail closed.
  auto fx = testutil::make_fixture(3, 1, 2);
  const auto spec = make_code_spec(fx.fld(), fx.loc(), 4, PolyF::one());
  const auto H = build_check_matrix_direct(spec);
  const auto table = build_min_poly_table(fx.fld(), fx.loc());
  Word bad;
  std::vector<std::int64_t> odo(5, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < odo.size() && ++odo[pos] == 3) {
      odo[pos] = 0;
      ++pos;
    }
    REQUIRE(pos != odo.size());
    Word w = word_from_symbols(fx.fld(), odo);
    if (!decode(spec, H, table, w).ok) {
      bad = w;
      break;
    }
  }
  dir.write("bad.txt", std::string(cli::kFormatHeader) + "\n" +
                           cli::format_word_line(fx.fld(), bad) + "\n");
  const auto run = testutil::run_cli("decode --spec " + dir.file("s.txt") + " --in " +
                                     dir.file("bad.txt"));
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("status=uncorrectable") != std::string::npos);
}

TEST_CASE("simulate is deterministic and clean within the radius") {
  REQUIRE(!testutil::cli_path().empty());
  testutil::TempDir dir;
  dir.write("s.txt", spec32_t4());

  const std::string args = "simulate --spec " + dir.file("s.txt") +
                           " --trials 50 --error-degree 2 --seed 12345";
  const auto a = testutil::run_cli(args);
  const auto b = testutil::run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("successes=50 failures=0 miscorrections=0") != std::string::npos);

  // Degree above the radius needs --stress.
  CHECK(testutil::run_cli("simulate --spec " + dir.file("s.txt") +
                          " --trials 5 --error-degree 3 --seed 1")
            .exit_code == 1);
  const auto stress = testutil::run_cli("simulate --spec " + dir.file("s.txt") +
                                        " --trials 20 --error-degree 3 --seed 1 --stress");
  CHECK(stress.exit_code == 0);

  const auto empty = testutil::run_cli("simulate --spec " + dir.file("s.txt") +
                                       " --trials 0 --error-degree 2 --seed 7");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("successes=0 failures=0 miscorrections=0") != std::string::npos);
}

TEST_CASE("search-g command") {
  REQUIRE(!testutil::cli_path().empty());
  const auto run = testutil::run_cli("search-g -p 3 -k 1 -m 2 -t 3");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("D=2\n") != std::string::npos);
  CHECK(run.output.find("g=1,2,0,1 OK\n") != std::string::npos);
  CHECK(run.output.find("winner=1,2,0,1\n") != std::string::npos);

  CHECK(testutil::run_cli("search-g -p 3 -k 1 -m 2 -t 2").exit_code == 1);  // t = m
}

TEST_CASE("audit command") {
  REQUIRE(!testutil::cli_path().empty());
  testutil::TempDir dir;
  dir.write("s.txt", spec32_t4());
  const auto run = testutil::run_cli("audit --spec " + dir.file("s.txt"));
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("rank=3\n") != std::string::npos);
  CHECK(run.output.find("dimension=2\n") != std::string::npos);
  CHECK(run.output.find("min_degree_weight=5\n") != std::string::npos);
  CHECK(run.output.find("dimension_bound_ok=1\n") != std::string::npos);
  CHECK(run.output.find("degree_weight_bound_ok=1\n") != std::string::npos);
  CHECK(run.output.find("hamming_weight_bound_ok=1\n") != std::string::npos);
}

}  // TEST_SUITE

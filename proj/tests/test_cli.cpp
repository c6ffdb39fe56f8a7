#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frobcoh_cli/algebra_file.hpp"
#include "frobcoh_cli/builtins.hpp"
#include "frobcoh_cli/commands.hpp"

using namespace frobcoh;
using namespace frobcoh::cli;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = FROBCOH_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "frobcoh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    (void)parse_algebra_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::ParseError;
}

std::string message(const std::string& text) {
  try {
    (void)parse_algebra_file(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("z2.frob parses to the group algebra builder's presentation") {
    const auto parsed = parse_algebra_file(read(kData + "/z2.frob"), "group:Z2");
    const auto built = resolve_builtin("group:Z2");
    CHECK(parsed.basis_names == built.basis_names);
    CHECK(parsed.mul_constants == built.mul_constants);
    CHECK(parsed.unit_vector == built.unit_vector);
    CHECK(parsed.counit_vector == built.counit_vector);
  }

  TEST_CASE("shipped files round-trip through the canonical printer") {
    for (const char* f : {"z2", "complex", "poly3", "s3", "s3alt", "qpoly_i", "poly2_gf2", "gauss_z4"}) {
      CAPTURE(f);
      const std::string text = read(kData + "/" + f + ".frob");
      const std::string canonical = print_algebra_file(parse_algebra_file(text));
      CHECK(print_algebra_file(parse_algebra_file(canonical)) == canonical);
      (void)validate(parse_algebra_file(text));
    }
    // Files written by the printer are already canonical.
    const std::string z2 = read(kData + "/z2.frob");
    CHECK(print_algebra_file(parse_algebra_file(z2)) == z2);
  }

  TEST_CASE("printing every builtin and parsing it back is the identity") {
    for (const auto& name : standard_builtins()) {
      CAPTURE(name);
      const auto p = resolve_builtin(name);
      const auto q = parse_algebra_file(print_algebra_file(p), p.id);
      CHECK(q.mul_constants == p.mul_constants);
      CHECK(q.counit_vector == p.counit_vector);
      CHECK(q.field == p.field);
    }
  }

  TEST_CASE("lincomb forms") {
    const auto p = parse_algebra_file(
        "field Qi\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n"
        "mul x x = (1/2-1i) * 1 + 2i * x + -3 * x + x\ncounit x = 1\n");
    const FieldSpec qi = FieldSpec::gaussian();
    CHECK(p.lambda(1, 1, 0) == parse_scalar("(1/2-1i)", qi));
    CHECK(p.lambda(1, 1, 1) == parse_scalar("(-2+2i)", qi));
  }

  TEST_CASE("missing mul lines are listed") {
    const std::string text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n";
    CHECK(parse_error_code(text) == ErrorCode::ParseError);
    CHECK(message(text).find("'mul x x'") != std::string::npos);
  }

  TEST_CASE("GF 4 is not a field") {
    const std::string m = message("field GF 4\nbasis 1\nunit 1\nmul 1 1 = 1\n");
    CHECK(m.find("ParseError") != std::string::npos);
    CHECK(m.find("line 1") != std::string::npos);
  }

  TEST_CASE("duplicate and unknown names") {
    CHECK(parse_error_code("field Q\nbasis 1\nunit 1\nmul 1 1 = 1\nmul 1 1 = 1\n") == ErrorCode::DuplicateMulLine);
    CHECK(parse_error_code("field Q\nbasis 1\nunit 1\nmul 1 1 = y\n") == ErrorCode::UnknownBasisName);
    const std::string m = message("field Q\nbasis 1\nunit 1\nmul 1 1 = 1 + y\n");
    CHECK(m.find("line 4, column 15") != std::string::npos);
  }

  TEST_CASE("structural errors carry positions") {
    CHECK(message("basis 1\n").find("line 1, column 1") != std::string::npos);
    CHECK(message("field Q\nunit 1\n").find("expected 'basis'") != std::string::npos);
    CHECK(message("field Q\nbasis 1 1\n").find("repeated basis name") != std::string::npos);
    CHECK(message("field Q\nbasis 1\nunit 1\nmul 1 1 = 1\ncounit 1 = 1/0\n").find("line 5") != std::string::npos);
    CHECK(message("field Q\nbasis 1\nunit 1\nfrob 1\n").find("unknown keyword") != std::string::npos);
    CHECK(message("field Q\nbasis 1\nmul 1 1 = 1\n").find("missing 'unit'") != std::string::npos);
  }

  TEST_CASE("check --json reports the handle data with sorted keys") {
    const Run r = run({"check", "--builtin", "complex", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["delta0"] == "2");
    CHECK(j["results"]["symmetric"] == true);
    CHECK(j["command"] == "check");
    CHECK(j["field"] == "Q");
    CHECK(j["version"] == kVersion);
    CHECK(r.out.find("\"algebra\"") < r.out.find("\"command\""));
    // Byte-identical across runs.
    CHECK(run({"check", "--builtin", "complex", "--json"}).out == r.out);
  }

  TEST_CASE("cohomology over GF2") {
    const Run r = run({"cohomology", "--builtin", "group:Z2", "--field", "GF2", "--max-degree", "2", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["degrees"][0]["dim_H"] == 1);
    CHECK(j["results"]["degrees"][1]["dim_Z"] == 6);
    CHECK(j["results"]["degrees"][1]["dim_H"] == 3);
  }

  TEST_CASE("mirror variant at degree 3 reports the failing chain check") {
    const Run r = run({"cohomology", "--builtin", "complex", "--max-degree", "3", "--variant", "2", "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["chain_checks"][1]["holds"] == false);
  }

  TEST_CASE("deep gating") {
    CHECK(run({"cohomology", "--builtin", "s3alt", "--max-degree", "3"}).code == 2);
    CHECK(run({"cohomology", "--builtin", "qpoly:i", "--max-degree", "3", "--deep"}).code == 0);
  }

  TEST_CASE("ybe exit codes") {
    const Run noscalar = run({"ybe", "--builtin", "poly:2", "--construction", "skein", "--case", "i", "--json"});
    CHECK(noscalar.code == 1);
    CHECK(nlohmann::json::parse(noscalar.out)["results"]["error"]["code"] == "NoScalarHandle");
    CHECK(run({"ybe", "--builtin", "group:S3", "--construction", "tau-delta-mu"}).code == 1);
    CHECK(run({"ybe", "--builtin", "group:S3", "--construction", "sandwich"}).code == 0);
    CHECK(run({"ybe", "--builtin", "s3alt", "--construction", "sandwich"}).code == 1);
    const Run ii = run({"ybe", "--builtin", "group:Z2", "--construction", "skein", "--case", "ii", "--json"});
    CHECK(ii.code == 0);
    CHECK(nlohmann::json::parse(ii.out)["results"]["solutions"][0]["inverse_coefficients"]["C"] == "-1/3");
    CHECK(run({"ybe", "--builtin", "complex", "--construction", "skein", "--A", "1", "--B", "-1"}).code == 0);
  }

  TEST_CASE("deform with sampling") {
    const Run r = run({"deform", "--builtin", "complex", "--sample", "5", "--seed", "3", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["constraint_dim"] == 5);
    CHECK(j["results"]["sample"]["ybe_ok"] == 5);
    CHECK(run({"deform", "--builtin", "group:S3"}).code == 1);
  }

  TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "--builtin", "nope"}).code == 2);
    CHECK(run({"check", "--builtin", "complex", "--field", "GF4"}).code == 2);
    CHECK(run({"check", "--file", "/nonexistent.frob"}).code == 2);
    CHECK(run({"cohomology", "--builtin", "complex", "--max-degree", "4"}).code == 2);
    CHECK(run({"check", "--builtin", "complex", "--file", kData + "/z2.frob"}).code == 2);
  }

  TEST_CASE("files and fmt") {
    const Run c = run({"check", "--file", kData + "/gauss_z4.frob"});
    CHECK(c.code == 0);
    CHECK(c.out.find("delta0") != std::string::npos);
    const Run f = run({"fmt", kData + "/poly2_gf2.frob"});
    CHECK(f.code == 0);
    CHECK(f.out.rfind("field GF 2\nbasis 1 x\nunit 1\n", 0) == 0);
    CHECK(f.out.find('#') == std::string::npos);
  }

  TEST_CASE("table output is derived from the same report") {
    const Run r = run({"check", "--builtin", "group:Z2"});
    CHECK(r.out.find("delta0") != std::string::npos);
    CHECK(r.out.find("symmetric") != std::string::npos);
    CHECK(r.out.find("axioms.unit") != std::string::npos);
  }
}

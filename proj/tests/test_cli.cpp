#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "vvmf/cli.hpp"
#include "vvmf/serialize.hpp"

using namespace vvmf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.emplace_back("--format");
  args.emplace_back("json");
  const Result r = run(std::move(args));
  REQUIRE(r.code == cli::kExitOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("coeffs") {
  const Json j = run_json({"coeffs", "--triple", "1,2,4,7", "--terms", "1"});
  CHECK(j.at("components")[0].at("coeffs") == Json{"1", "-3"});

  // Derived fields recompute exactly from the parsed output.
  const Json k = run_json({"coeffs", "--triple", "1,3,7,11", "--terms", "15"});
  const RepTriple t = triple_from_json(k.at("triple"));
  const auto sys = build_mde(t, 15);
  CHECK(k.at("k0") == t.k0());
  CHECK(rational_from_json(k.at("alpha4")) == sys.alpha4);
  CHECK(rational_from_json(k.at("alpha6")) == sys.alpha6);
  const auto f = minimal_vector(sys, 15);
  for (int i = 0; i < 3; ++i) {
    const QExpansion c = series_from_json(k.at("components")[i]);
    CHECK(c == f.components[i]);
    CHECK(ode_residual(sys, c, 15).is_zero());
  }
}

TEST_CASE("classify and params") {
  const Json c = run_json({"classify", "--triple", "1,3,7,11"});
  CHECK(c.at("ubd_primes") == Json{11});

  const Json p = run_json({"params", "--triple", "1,2,4,7"});
  CHECK(p.at("x4") == "-140");
  CHECK(p.at("alpha4") == "-5/252");
  CHECK(series_from_json(p.at("g2")) == build_mde(validate_triple(1, 2, 4, 7), 5).g2);
}

TEST_CASE("valuations") {
  const Json v = run_json({"valuations", "--triple", "1,3,7,11", "--prime", "11", "--terms", "30"});
  CHECK(v.at("verdict") == "formula-verified");
  for (const auto& row : v.at("rows")) CHECK(row.at("observed") == row.at("predicted"));

  const Result csv = run({"valuations", "--triple", "1,3,7,11", "--prime", "11", "--terms", "2",
                          "--format", "csv"});
  CHECK(csv.out == "n,observed,predicted\n1,-1,-1\n2,-2,-2\n");

  const Result bad = run({"valuations", "--triple", "1,3,7,11", "--prime", "5"});
  CHECK(bad.code == cli::kExitInvalidInput);
  CHECK(bad.err.find("prime-does-not-divide-level") != std::string::npos);
}

TEST_CASE("scan is sorted and deterministic") {
  const Json s = run_json({"scan", "--level", "7"});
  CHECK(s.size() == 5);
  const Json wide = run_json({"scan", "--level", "6", "--level-max", "14"});
  CHECK(wide == run_json({"scan", "--level", "6", "--level-max", "14"}));
  for (std::size_t i = 1; i < wide.size(); ++i) {
    const auto key = [](const Json& r) {
      return std::tuple(r.at("N").get<int>(), r.at("A").get<int>(), r.at("B").get<int>(),
                        r.at("C").get<int>());
    };
    CHECK(key(wide[i - 1]) < key(wide[i]));
  }
  const Json eleven = run_json({"scan", "--level", "11", "--verify", "--terms", "20"});
  for (const auto& r : eleven) CHECK(r.at("verdict") == "ubd-verified");
}

TEST_CASE("families, eisenstein, basis, profile") {
  const Json g = run_json({"family", "gamma02", "--M", "4", "--A", "1", "--x", "0"});
  CHECK(g.at("triple") == Json{{"A", 2}, {"B", 3}, {"C", 7}, {"N", 8}, {"k0", 4}});
  CHECK(g.at("finite_image_M") == 4);
  const Json h = run_json({"family", "gamma3", "--x0", "2", "--x1", "2", "--x2", "2"});
  CHECK(h.at("triple").at("N") == 6);

  const Json e = run_json({"eisenstein", "--weight", "4", "--terms", "2"});
  CHECK(e.at("coeffs") == Json{"1", "240", "2160"});

  const Json b = run_json({"basis", "--triple", "1,2,4,7", "--terms", "3"});
  CHECK(b.at("det_B") == "6/343");

  const Json p = run_json({"profile", "--triple", "1,3,7,11", "--terms", "40"});
  CHECK(p[0].at("verdict") == "decreasing-unbounded-pattern");
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "--triple", "1,2,4,7"}).code == cli::kExitOk);

  const Result weight = run({"classify", "--triple", "0,1,2,5"});
  CHECK(weight.code == cli::kExitInvalidInput);
  CHECK(weight.err.find("non-integral-weight") != std::string::npos);

  const Result collision = run({"family", "gamma02", "--M", "4", "--A", "1", "--x", "1"});
  CHECK(collision.code == cli::kExitInvalidInput);
  CHECK(collision.err.find("eigenvalue-collision") != std::string::npos);

  CHECK(run({"family", "gamma3", "--x0", "0", "--x1", "1", "--x2", "0"}).code ==
        cli::kExitInvalidInput);
  CHECK(run({"classify", "--triple", "1,2"}).code == cli::kExitInvalidInput);
  CHECK(run({"eisenstein", "--weight", "3"}).code == cli::kExitInvalidInput);
  CHECK(run({"bogus"}).code == cli::kExitInvalidInput);
  CHECK(run({}).code == cli::kExitInvalidInput);

  // At level 3^5 the triples with 3 | omega are certified 3-UBD, but no
  // labeling has nu_3(z_n) constant at 2, so the law cannot be confirmed.
  const Result unconfirmed = run({"scan", "--level", "243", "--verify", "--terms", "3"});
  CHECK(unconfirmed.code == cli::kExitVerificationFailed);
  CHECK(unconfirmed.out.find("ubd-verification-failed") != std::string::npos);
  CHECK(unconfirmed.out.find("ubd-verified") != std::string::npos);
}

TEST_CASE("format selection and output file") {
  CHECK(run({"classify", "--triple", "1,2,4,7"}).out.rfind("triple (1,2,4; 7)", 0) == 0);

  ::setenv(cli::kFormatEnvVar, "csv", 1);
  const Result csv = run({"classify", "--triple", "1,2,4,7"});
  ::unsetenv(cli::kFormatEnvVar);
  CHECK(csv.out.rfind("A,B,C,N,k0,", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "vvmf_cli_test.json";
  const Result file = run({"eisenstein", "--weight", "6", "--terms", "1", "--format", "json", "-o",
                           path.string()});
  CHECK(file.code == cli::kExitOk);
  CHECK(file.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in).at("coeffs") == Json{"1", "-504"});
  std::filesystem::remove(path);

  CHECK(run({"classify", "--triple", "1,2,4,7", "--format", "xml"}).code == cli::kExitInvalidInput);
}

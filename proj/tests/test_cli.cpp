#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "liecx/cli.hpp"
#include "liecx/constructions.hpp"
#include "liecx/json_io.hpp"

using namespace liecx;

namespace {

struct CliOutcome {
  int code;
  std::string out;
  std::string err;
};

CliOutcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("construct succeeds for the seven existence types and round-trips") {
  const std::vector<std::vector<std::string>> cases = {
      {"construct", "--type", "1"}, {"construct", "--type", "2"},
      {"construct", "--type", "3"}, {"construct", "--type", "4", "--theta", "1"},
      {"construct", "--type", "6", "--theta", "1/2"}, {"construct", "--type", "7"},
      {"construct", "--type", "8"}};
  for (const auto& args : cases) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("algebra"));
    REQUIRE(j.contains("structure"));

    TempFile algebra("alg.json", j["algebra"].dump());
    TempFile structure("j.json", j["structure"].dump());
    auto v = run({"verify", "--algebra", algebra.path, "--j", structure.path});
    REQUIRE(v.code == 0);
    CHECK(v.out.find("integrable: yes") != std::string::npos);
  }

  auto r = run({"construct", "--type", "8"});
  auto j = nlohmann::json::parse(r.out);
  TempFile algebra("alg.json", j["algebra"].dump());
  TempFile structure("j.json", j["structure"].dump());
  auto vj = run({"verify", "--algebra", algebra.path, "--j", structure.path, "--format", "json"});
  CHECK(vj.code == 0);
  auto report = nlohmann::json::parse(vj.out);
  CHECK(report["integrable"] == true);
  CHECK(report["nonzero_pairs"].empty());
}

TEST_CASE("construct reports non-existence with exit code 1") {
  auto r = run({"construct", "--type", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no integrable complex structure") != std::string::npos);

  auto r4 = run({"construct", "--type", "4", "--theta", "2"});
  CHECK(r4.code == 1);

  auto ok = run({"construct", "--type", "4", "--theta", "1"});
  CHECK(ok.code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"construct"}).code == 2);                         // missing --type
  CHECK(run({"construct", "--type", "12"}).code == 2);         // out of range
  CHECK(run({"construct", "--type", "4"}).code == 2);          // theta required
  CHECK(run({"construct", "--type", "4", "--theta", "x"}).code == 2);
  CHECK(run({"verify", "--algebra", "missing.json", "--j", "missing.json"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("verify flags a non-structure with exit code 1") {
  auto c = run({"construct", "--type", "8"});
  auto j = nlohmann::json::parse(c.out);
  TempFile algebra("alg2.json", j["algebra"].dump());
  nlohmann::json identity;
  identity["dim"] = 6;
  identity["rows"] = nlohmann::json::array();
  for (int r = 0; r < 6; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int cc = 0; cc < 6; ++cc) row.push_back(r == cc ? "1" : "0");
    identity["rows"].push_back(row);
  }
  TempFile jd("id.json", identity.dump());
  auto v = run({"verify", "--algebra", algebra.path, "--j", jd.path});
  CHECK(v.code == 1);
  CHECK(v.out.find("not a complex structure") != std::string::npos);
}

TEST_CASE("son builds and verifies the block pairing") {
  auto r = run({"son", "--n", "4", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("integrable: yes") != std::string::npos);
  CHECK(r.out.find("max residual: 0") != std::string::npos);

  auto js = run({"son", "--n", "3"});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["algebra"]["dim"] == 6);
  CHECK(j["algebra"]["basis_labels"][3] == "e12*");

  CHECK(run({"son", "--n", "1"}).code == 2);
}

TEST_CASE("emit produces both formats") {
  auto t = run({"emit", "--type", "4", "--theta", "2", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("square(1,1):") != std::string::npos);

  auto j = run({"emit", "--type", "5", "--format", "json"});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["n_unknowns"] == 36);

  auto reduced = run({"emit", "--type", "5", "--reduce"});
  CHECK(reduced.code == 0);
  CHECK(reduced.out.find("nijenhuis(1,2,1)") != std::string::npos);
  CHECK(reduced.out.find("nijenhuis(4,") == std::string::npos);
}

TEST_CASE("search output is reproducible and carries the seed") {
  std::vector<std::string> args = {"search", "--type", "1", "--starts", "3", "--seed", "11"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 11);
  CHECK(j["starts"] == 3);
  CHECK(j["best_certified"] == true);  // abelian limits snap and certify
}

TEST_CASE("catalog prints the eight types") {
  auto r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[e1,e3] = -e2") != std::string::npos);
}

TEST_CASE("algebra and endomorphism JSON round-trip") {
  LieAlgebra o4 = orthogonal_algebra(4);
  LieAlgebra p = direct_product(o4, o4);
  LieAlgebra back = algebra_from_json(algebra_to_json(p));
  REQUIRE(back.dim() == p.dim());
  CHECK(back.basis_labels() == p.basis_labels());
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j)
      for (int k = 0; k < p.dim(); ++k) REQUIRE(back.c(i, j, k) == p.c(i, j, k));

  Endomorphism j = orthogonal_pairing(4);
  CHECK(endomorphism_from_json(endomorphism_to_json(j)) == j);

  // scalars with denominators survive
  auto s = standard_structure({6, Rational(1, 2)});
  CHECK(endomorphism_from_json(endomorphism_to_json(s.structure)) == s.structure);
  LieAlgebra alg_back = algebra_from_json(algebra_to_json(s.algebra));
  CHECK(alg_back.c(1, 2, 1) == Rational(1, 2));
}

TEST_CASE("verify reports the nonzero pairs of an obstructed candidate") {
  auto c = run({"construct", "--type", "8"});
  auto parsed = nlohmann::json::parse(c.out);
  TempFile algebra("alg3.json", parsed["algebra"].dump());

  // pairing e_i <-> e_i* squares to -id but fails integrability
  nlohmann::json swap;
  swap["dim"] = 6;
  swap["rows"] = nlohmann::json::array();
  for (int r = 0; r < 6; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int cc = 0; cc < 6; ++cc) {
      if (r < 3 && cc == r + 3)
        row.push_back("-1");
      else if (r >= 3 && cc == r - 3)
        row.push_back("1");
      else
        row.push_back("0");
    }
    swap["rows"].push_back(row);
  }
  TempFile jf("swap.json", swap.dump());
  auto v = run({"verify", "--algebra", algebra.path, "--j", jf.path, "--format", "json"});
  CHECK(v.code == 1);
  auto report = nlohmann::json::parse(v.out);
  CHECK(report["integrable"] == false);
  REQUIRE(!report["nonzero_pairs"].empty());
  CHECK(report["nonzero_pairs"][0]["a"] == 1);
  CHECK(report["nonzero_pairs"][0]["b"] == 2);
}

TEST_CASE("LIE_CX_THREADS feeds the search default") {
  setenv("LIE_CX_THREADS", "2", 1);
  auto a = run({"search", "--type", "8", "--starts", "6", "--seed", "5"});
  unsetenv("LIE_CX_THREADS");
  auto b = run({"search", "--type", "8", "--starts", "6", "--seed", "5"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);  // thread count never changes the result
}

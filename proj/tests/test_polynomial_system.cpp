#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "liecx/constructions.hpp"
#include "liecx/json_io.hpp"
#include "liecx/polynomial_system.hpp"
#include "liecx/search.hpp"

using namespace liecx;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> flatten(const MatQ& m) {
  std::vector<Rational> x;
  x.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) x.push_back(m(r, c));
  return x;
}

// The product of type 4 (theta = 2) written in the adapted basis
// {u, e1, e2} = {e3, e1, e2}, where the brackets become
// [u, e1] = -e1, [u, e2] = -2 e2.
LieAlgebra adapted_type4_product() {
  LieAlgebra g = bianchi({4, q(2)});
  MatQ p(3, 3,
         {q(0), q(1), q(0),
          q(0), q(0), q(1),
          q(1), q(0), q(0)});
  LieAlgebra h = g.change_of_basis(p);
  return direct_product(h, h);
}

}  // namespace

TEST_CASE("abelian product emits exactly the 36 square-identity equations") {
  LieAlgebra ab = direct_product(LieAlgebra(3, {}), LieAlgebra(3, {}));
  PolynomialSystem sys = emit_polynomial_system(ab);
  CHECK(sys.n_unknowns == 36);
  CHECK(sys.equations.size() == 36);
  for (const auto& prov : sys.provenance)
    CHECK(prov.kind == EquationProvenance::Kind::SquareIdentity);
  for (const auto& eq : sys.equations) CHECK(eq.terms.front().degree == 2);
}

TEST_CASE("every equation has total degree at most 2") {
  LieAlgebra p = direct_product(bianchi({5, std::nullopt}), bianchi({5, std::nullopt}));
  PolynomialSystem sys = emit_polynomial_system(p);
  CHECK(sys.equations.size() == 36 + 15 * 6);
  for (const auto& eq : sys.equations)
    for (const auto& t : eq.terms) CHECK(t.degree <= 2);
}

TEST_CASE("adapted type-4 (theta = 2) fixing reproduces the nine-equation display") {
  LieAlgebra p = adapted_type4_product();
  // The quasi-invariant ansatz J u = lambda u + (starred part) pins the two
  // other first-factor coordinates of column u to zero; everything else is
  // free. Variable names map as lambda = x_{1,1}, X = x_{1,2}, Y = x_{2,2},
  // Z = x_{3,2}, A = x_{1,3}, B = x_{2,3}, C = x_{3,3}.
  std::vector<FixedEntry> fixing = {{1, 0, q(0)}, {2, 0, q(0)}};
  PolynomialSystem sys = emit_polynomial_system(p, fixing, /*reduce=*/true);

  std::vector<std::string> got;
  for (size_t i = 0; i < sys.equations.size(); ++i)
    if (sys.provenance[i].kind == EquationProvenance::Kind::Nijenhuis)
      got.push_back(sys.equation_text(i));

  std::ifstream golden(std::string(LIECX_GOLDEN_DIR) + "/type4_theta2_gpart.txt");
  REQUIRE(golden.good());
  std::vector<std::string> want;
  std::string line;
  while (std::getline(golden, line))
    if (!line.empty()) want.push_back(line);

  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
}

TEST_CASE("full fixing to an integrable structure empties the system") {
  auto s = standard_structure({8, std::nullopt});
  std::vector<FixedEntry> fixing;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) fixing.push_back({r, c, s.structure.matrix()(r, c)});
  PolynomialSystem sys = emit_polynomial_system(s.algebra, fixing);
  CHECK(sys.equations.empty());
}

TEST_CASE("inconsistent fixing is rejected, repeated consistent fixing is not") {
  LieAlgebra p = direct_product(bianchi({8, std::nullopt}), bianchi({8, std::nullopt}));
  CHECK_THROWS_AS(emit_polynomial_system(p, {{0, 0, q(1)}, {0, 0, q(2)}}), InconsistentFixing);
  CHECK_NOTHROW(emit_polynomial_system(p, {{0, 0, q(1)}, {0, 0, q(1)}}));
  CHECK_THROWS_AS(emit_polynomial_system(p, {{0, 6, q(1)}}), IndexOutOfRange);
}

TEST_CASE("reduce requires a product algebra") {
  CHECK_THROWS_AS(emit_polynomial_system(bianchi({8, std::nullopt}), {}, true), InvalidInput);
}

TEST_CASE("equations vanish exactly at integrable structures") {
  std::vector<BianchiSpec> specs = {{2, std::nullopt}, {4, q(1)}, {6, q(1, 2)}, {8, std::nullopt}};
  for (const auto& spec : specs) {
    auto s = standard_structure(spec);
    PolynomialSystem sys = emit_polynomial_system(s.algebra);
    auto values = sys.evaluate(flatten(s.structure.matrix()));
    for (const Rational& v : values) REQUIRE(v.is_zero());
  }
}

TEST_CASE("polynomial evaluation matches the dense objective") {
  std::vector<BianchiSpec> specs = {{5, std::nullopt}, {4, q(2)}, {7, std::nullopt}};
  std::mt19937_64 rng(2024);
  for (const auto& spec : specs) {
    LieAlgebra p = direct_product(bianchi(spec), bianchi(spec));
    PolynomialSystem sys = emit_polynomial_system(p);
    SearchObjective obj(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> x(36);
      for (double& v : x) v = -2.0 + 4.0 * ((rng() >> 11) * 0x1.0p-53);
      double sum = 0.0;
      for (double v : sys.evaluate(x)) sum += v * v;
      double res = obj.residual(x);
      REQUIRE(res == doctest::Approx(sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("text and json renderings carry the provenance") {
  LieAlgebra p = direct_product(bianchi({3, std::nullopt}), bianchi({3, std::nullopt}));
  PolynomialSystem sys = emit_polynomial_system(p);
  std::string text = sys.to_text();
  CHECK(text.find("square(1,1):") != std::string::npos);
  CHECK(text.find("nijenhuis(") != std::string::npos);
  CHECK(text.find(" = 0") != std::string::npos);

  auto j = system_to_json(sys);
  CHECK(j["n_unknowns"] == 36);
  CHECK(j["equations"].size() == sys.equations.size());
  CHECK(j["equations"][0]["provenance"]["kind"] == "square");
}

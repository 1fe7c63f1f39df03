#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liecx/constructions.hpp"
#include "liecx/json_io.hpp"
#include "liecx/search.hpp"

using namespace liecx;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<double> flatten(const MatD& m) {
  std::vector<double> x;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) x.push_back(m(r, c));
  return x;
}

}  // namespace

TEST_CASE("residual is exactly zero at a known structure, 24 at the identity") {
  auto s = standard_structure({8, std::nullopt});
  auto [res, grad] = residual_and_gradient(s.algebra, flatten(to_double_matrix(s.structure.matrix())));
  CHECK(res == 0.0);
  for (double g : grad) CHECK(g == 0.0);

  LieAlgebra ab = direct_product(LieAlgebra(3, {}), LieAlgebra(3, {}));
  std::vector<double> identity(36, 0.0);
  for (int i = 0; i < 6; ++i) identity[i * 6 + i] = 1.0;
  CHECK(residual_and_gradient(ab, identity).first == 24.0);  // ||2 I||_F^2
}

TEST_CASE("analytic gradient matches central finite differences") {
  std::vector<BianchiSpec> specs = {{5, std::nullopt}, {4, q(2)}, {8, std::nullopt}, {6, q(1, 2)}};
  std::mt19937_64 rng(5150);
  const double h = 1e-6;
  for (const auto& spec : specs) {
    LieAlgebra p = direct_product(bianchi(spec), bianchi(spec));
    SearchObjective obj(p);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> x(36);
      for (double& v : x) v = -2.0 + 4.0 * ((rng() >> 11) * 0x1.0p-53);
      auto [f, grad] = obj.residual_and_gradient(x);
      double scale = 0.0;
      for (double g : grad) scale = std::max(scale, std::abs(g));
      for (int i = 0; i < 36; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        double fd = (obj.residual(xp) - obj.residual(xm)) / (2 * h);
        REQUIRE(std::abs(grad[i] - fd) <= 1e-6 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("search finds structures where they exist") {
  LieAlgebra p = direct_product(bianchi({8, std::nullopt}), bianchi({8, std::nullopt}));
  SearchConfig cfg;
  cfg.starts = 12;
  cfg.seed = 42;
  SearchResult r = numeric_search(p, cfg);
  CHECK(r.best_residual < 1e-8);
  CHECK(r.converged_starts > 0);
  CHECK(r.per_start_residuals.size() == 12);
  CHECK(r.best_residual == r.per_start_residuals[r.best_start]);
  double lowest = r.per_start_residuals[0];
  for (double v : r.per_start_residuals) lowest = std::min(lowest, v);
  CHECK(r.best_residual == lowest);
}

TEST_CASE("abelian product converges from a single start") {
  LieAlgebra ab = direct_product(LieAlgebra(3, {}), LieAlgebra(3, {}));
  SearchConfig cfg;
  cfg.starts = 1;
  cfg.seed = 7;
  SearchResult r = numeric_search(ab, cfg);
  CHECK(r.converged_starts == 1);
  CHECK(r.best_residual <= cfg.tol);
}

TEST_CASE("search is deterministic, including across thread counts") {
  LieAlgebra p = direct_product(bianchi({5, std::nullopt}), bianchi({5, std::nullopt}));
  SearchConfig cfg;
  cfg.starts = 8;
  cfg.seed = 99;
  cfg.max_iters = 120;
  SearchResult a = numeric_search(p, cfg);
  SearchResult b = numeric_search(p, cfg);
  cfg.threads = 2;
  SearchResult c = numeric_search(p, cfg);
  CHECK(search_result_to_json(a).dump() == search_result_to_json(b).dump());
  CHECK(search_result_to_json(a).dump() == search_result_to_json(c).dump());
}

TEST_CASE("rationalize_and_certify recovers a lightly perturbed exact structure") {
  auto s = standard_structure({7, std::nullopt});
  MatD noisy = to_double_matrix(s.structure.matrix());
  std::mt19937_64 rng(3);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) noisy(r, c) += 1e-13 * (((rng() >> 11) * 0x1.0p-53) - 0.5);
  auto certified = rationalize_and_certify(s.algebra, noisy, 100);
  REQUIRE(certified.has_value());
  CHECK(certified->matrix() == s.structure.matrix());
}

TEST_CASE("rationalize_and_certify rejects the identity and bad input") {
  LieAlgebra ab = direct_product(LieAlgebra(3, {}), LieAlgebra(3, {}));
  MatD id(6, 6);
  for (int i = 0; i < 6; ++i) id(i, i) = 1.0;
  CHECK_FALSE(rationalize_and_certify(ab, id, 1000000).has_value());
  MatD nan(6, 6);
  nan(0, 0) = std::nan("");
  CHECK_FALSE(rationalize_and_certify(ab, nan, 10).has_value());
  CHECK_THROWS_AS(rationalize_and_certify(ab, id, 0), InvalidInput);
}

TEST_CASE("exact snap certifies abelian limits") {
  LieAlgebra ab = direct_product(LieAlgebra(3, {}), LieAlgebra(3, {}));
  SearchConfig cfg;
  cfg.starts = 4;
  cfg.seed = 41;
  cfg.polish = false;  // raw limits
  SearchResult r = numeric_search(ab, cfg);
  REQUIRE(!r.converged_matrices.empty());
  int snapped = 0;
  for (const auto& [idx, m] : r.converged_matrices) {
    auto exact = exact_snap(ab, m);
    if (!exact) continue;
    ++snapped;
    CHECK(is_integrable(ab, *exact).integrable);
    // and the snapped matrix itself survives the certification pipeline
    auto certified = rationalize_and_certify(ab, to_double_matrix(exact->matrix()), 1000000);
    CHECK(certified.has_value());
  }
  CHECK(snapped == static_cast<int>(r.converged_matrices.size()));
}

TEST_CASE("exact snap certifies rotation-product limits") {
  LieAlgebra g = bianchi({8, std::nullopt});
  LieAlgebra p = direct_product(g, g);

  // A family member built from exact data, perturbed at double noise level,
  // snaps back to an exactly integrable matrix.
  auto e = [](int i) { return basis_vec(3, i); };
  JordanTriple t{e(2), e(0), e(1), JordanTriple::ComplexPair{q(0), q(1)}};
  Endomorphism member = build_product_j_scaled(g, t, {q(1, 2), q(-4, 3), -1});
  MatD noisy = to_double_matrix(member.matrix());
  std::mt19937_64 rng(8);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) noisy(r, c) += 2e-10 * (((rng() >> 11) * 0x1.0p-53) - 0.5);
  auto exact = exact_snap(p, noisy);
  REQUIRE(exact.has_value());
  CHECK(is_integrable(p, *exact).integrable);

  // End-to-end: searched limits snap inside numeric_search and certify.
  SearchConfig cfg;
  cfg.starts = 10;
  cfg.seed = 42;
  SearchResult r = numeric_search(p, cfg);
  bool any_certified = false;
  for (const auto& [idx, m] : r.converged_matrices)
    if (rationalize_and_certify(p, m, 1000000)) any_certified = true;
  CHECK(any_certified);
}

TEST_CASE("search on the obstructed type-5 product stays bounded away from zero") {
  LieAlgebra p = direct_product(bianchi({5, std::nullopt}), bianchi({5, std::nullopt}));
  SearchConfig cfg;
  cfg.starts = 10;
  cfg.seed = 7;
  SearchResult r = numeric_search(p, cfg);
  CHECK(r.best_residual > 1e-4);
  CHECK(r.converged_starts == 0);
  CHECK(r.converged_matrices.empty());
}

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liecx/complex_structure.hpp"
#include "liecx/lie_algebra.hpp"

namespace liecx {

/// Float-profile evaluation of the search objective
///   F(J) = ||J^2 + I||_F^2 + sum_{a<b} ||N(e_a, e_b)||^2
/// over the flattened (row-major) entries of a candidate d x d matrix.
/// Dense matrix arithmetic; independent of the polynomial-system route.
class SearchObjective {
 public:
  explicit SearchObjective(const LieAlgebra& g);

  int dim() const { return dim_; }
  int n_vars() const { return dim_ * dim_; }

  double residual(const std::vector<double>& x) const;
  std::pair<double, std::vector<double>> residual_and_gradient(const std::vector<double>& x) const;

 private:
  struct Triple {
    int i, j, k;
    double c;
  };
  std::vector<double> bracket(const std::vector<double>& x, const std::vector<double>& y) const;

  int dim_;
  std::vector<Triple> triples_;
};

std::pair<double, std::vector<double>> residual_and_gradient(const LieAlgebra& g,
                                                             const std::vector<double>& x);

struct SearchConfig {
  int starts = 200;
  std::uint64_t seed = 42;
  int max_iters = 500;
  double tol = 1e-12;
  int threads = 1;
  bool polish = true;       // snap converged starts to nearby exact structures
  double init_range = 2.0;  // entries start i.i.d. uniform on [-range, range]
};

struct SearchResult {
  double best_residual = 0.0;
  MatD best_matrix;
  int best_start = -1;
  int starts = 0;
  int converged_starts = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_start_residuals;
  // Final matrices of the converged starts, by start index.
  std::vector<std::pair<int, MatD>> converged_matrices;
};

/// Multistart damped Gauss-Newton / Levenberg-Marquardt minimization of the
/// objective. Deterministic for fixed (algebra, config); starts may run in
/// parallel, aggregation is by start index.
SearchResult numeric_search(const LieAlgebra& g, const SearchConfig& cfg = {});

/// Entrywise nearest-rational rounding (denominator <= max_denominator, by
/// continued fractions) followed by exact verification; returns the exact
/// matrix only when it is a certified integrable complex structure.
std::optional<Endomorphism> rationalize_and_certify(const LieAlgebra& g, const MatD& j_num,
                                                    long max_denominator);

/// Deterministic reconstruction of an exactly integrable rational structure
/// near a numeric candidate, used by the search to make converged starts
/// certifiable. Returns a matrix that passes exact verification, or nothing.
std::optional<Endomorphism> exact_snap(const LieAlgebra& g, const MatD& j_num,
                                       long max_denominator = 1000000);

MatD to_double_matrix(const MatQ& m);

}  // namespace liecx

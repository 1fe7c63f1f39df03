#include "liecx/complex_structure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace liecx {

bool is_complex_structure(const Endomorphism& j) {
  const int n = j.dim();
  MatQ sq = j.matrix() * j.matrix();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rational expect = r == c ? Rational(-1) : Rational(0);
      if (sq(r, c) != expect) return false;
    }
  return true;
}

bool is_complex_structure(const MatD& j, double tol) {
  if (!j.is_square()) return false;
  const int n = j.rows();
  MatD sq = j * j;
  double worst = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double v = sq(r, c) + (r == c ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(v));
    }
  return worst <= tol;
}

Vec nijenhuis(const LieAlgebra& g, const Endomorphism& j, const Vec& v, const Vec& w) {
  if (j.dim() != g.dim()) throw DimensionMismatch("nijenhuis: endomorphism/algebra dimension mismatch");
  if (static_cast<int>(v.size()) != g.dim() || static_cast<int>(w.size()) != g.dim())
    throw DimensionMismatch("nijenhuis: vector length mismatch");
  const MatQ& m = j.matrix();
  Vec jv = m * v;
  Vec jw = m * w;
  Vec out = g.bracket(v, w);
  out = vec_add(out, m * g.bracket(jv, w));
  out = vec_add(out, m * g.bracket(v, jw));
  out = vec_sub(out, g.bracket(jv, jw));
  return out;
}

IntegrabilityReport is_integrable(const LieAlgebra& g, const Endomorphism& j) {
  if (j.dim() != g.dim()) throw DimensionMismatch("is_integrable: endomorphism/algebra dimension mismatch");
  if (!is_complex_structure(j))
    throw NotAComplexStructure("is_integrable: J^2 != -id");

  const int n = g.dim();
  IntegrabilityReport report;
  report.integrable = true;
  report.max_residual_norm = Rational(0);
  report.pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec value = nijenhuis(g, j, basis_vec(n, a), basis_vec(n, b));
      for (const Rational& comp : value) {
        Rational mag = comp.abs();
        if (mag > report.max_residual_norm) report.max_residual_norm = mag;
        if (!comp.is_zero()) report.integrable = false;
      }
      report.pairs.push_back({a, b, std::move(value)});
    }
  return report;
}

namespace {

std::vector<std::pair<double, std::vector<double>>> real_eigenpairs(const Eigen::MatrixXd& block) {
  const int n = static_cast<int>(block.rows());
  Eigen::EigenSolver<Eigen::MatrixXd> solver(block);
  std::vector<std::pair<double, std::vector<double>>> out;
  for (int i = 0; i < n; ++i) {
    std::complex<double> lambda = solver.eigenvalues()(i);
    if (std::abs(lambda.imag()) > 1e-9 * std::max(1.0, std::abs(lambda))) continue;
    Eigen::VectorXcd v = solver.eigenvectors().col(i);
    // Rotate the complex phase away, then keep the real part.
    int arg_max = 0;
    for (int r = 1; r < n; ++r)
      if (std::abs(v(r)) > std::abs(v(arg_max))) arg_max = r;
    if (std::abs(v(arg_max)) == 0.0) continue;
    std::complex<double> phase = std::conj(v(arg_max)) / std::abs(v(arg_max));
    std::vector<double> vec(n);
    double norm = 0.0;
    for (int r = 0; r < n; ++r) {
      vec[r] = (v(r) * phase).real();
      norm += vec[r] * vec[r];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (double& x : vec) x /= norm;
    for (int r = 0; r < n; ++r) {
      if (std::abs(vec[r]) > 1e-9) {
        if (vec[r] < 0)
          for (double& x : vec) x = -x;
        break;
      }
    }
    out.emplace_back(lambda.real(), std::move(vec));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

}  // namespace

std::vector<std::pair<double, std::vector<double>>> quasi_invariant_vectors(const MatD& j,
                                                                            int split_dim) {
  if (!j.is_square() || j.rows() != 2 * split_dim)
    throw DimensionMismatch("quasi_invariant_vectors: expected a 2*split_dim endomorphism");
  Eigen::MatrixXd block(split_dim, split_dim);
  for (int r = 0; r < split_dim; ++r)
    for (int c = 0; c < split_dim; ++c) block(r, c) = j(r, c);
  return real_eigenpairs(block);
}

std::vector<std::pair<double, std::vector<double>>> quasi_invariant_vectors(const Endomorphism& j,
                                                                            int split_dim) {
  if (j.dim() != 2 * split_dim)
    throw DimensionMismatch("quasi_invariant_vectors: expected a 2*split_dim endomorphism");
  MatD m(j.dim(), j.dim());
  for (int r = 0; r < j.dim(); ++r)
    for (int c = 0; c < j.dim(); ++c) m(r, c) = j.matrix()(r, c).to_double();
  return quasi_invariant_vectors(m, split_dim);
}

}  // namespace liecx

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liecx/lie_algebra.hpp"
#include "liecx/matrix.hpp"

namespace liecx {

/// A linear endomorphism of the algebra's underlying vector space, candidate
/// complex structure. Wrapping checks squareness only; J^2 = -id is a
/// separate, explicit check.
class Endomorphism {
 public:
  explicit Endomorphism(MatQ m) : m_(std::move(m)) {
    if (!m_.is_square()) throw NotSquare("Endomorphism: matrix is not square");
  }
  int dim() const { return m_.rows(); }
  const MatQ& matrix() const { return m_; }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.m_ == b.m_; }

 private:
  MatQ m_;
};

// Exact profile: J^2 == -I.
bool is_complex_structure(const Endomorphism& j);
// Numeric profile: max-norm of J^2 + I within tol.
bool is_complex_structure(const MatD& j, double tol = 1e-9);

/// Nijenhuis tensor N(v,w) = [v,w] + J[Jv,w] + J[v,Jw] - [Jv,Jw], evaluated
/// as written; J is not required to square to -id so that infeasible search
/// candidates can be probed.
Vec nijenhuis(const LieAlgebra& g, const Endomorphism& j, const Vec& v, const Vec& w);

struct IntegrabilityReport {
  struct PairValue {
    int a, b;   // basis pair, a < b, 0-based
    Vec value;  // N(e_a, e_b)
  };
  std::vector<PairValue> pairs;  // all unordered basis pairs
  bool integrable = false;
  Rational max_residual_norm;  // max |component| over all pairs

  std::optional<std::pair<int, int>> first_nonzero() const {
    for (const auto& p : pairs)
      if (!vec_is_zero(p.value)) return std::make_pair(p.a, p.b);
    return std::nullopt;
  }
};

/// Evaluates N on every unordered basis pair. Vanishing on basis pairs is
/// sufficient for vanishing everywhere: N is bilinear and antisymmetric.
/// Throws NotAComplexStructure unless J^2 = -id holds exactly.
IntegrabilityReport is_integrable(const LieAlgebra& g, const Endomorphism& j);

/// Real eigenpairs of the top-left split_dim x split_dim block of J (the part
/// mapping the first factor to itself), float profile. Eigenvectors come back
/// unit-norm with the first nonzero coordinate positive, sorted by eigenvalue.
std::vector<std::pair<double, std::vector<double>>> quasi_invariant_vectors(const Endomorphism& j,
                                                                            int split_dim);
std::vector<std::pair<double, std::vector<double>>> quasi_invariant_vectors(const MatD& j,
                                                                            int split_dim);

}  // namespace liecx

#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "liecx/matrix.hpp"

namespace liecx {

/// Finite-dimensional real Lie algebra given by exact structure constants
/// c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k (0-based indices).
///
/// The constructor validates antisymmetry and the Jacobi identity eagerly;
/// every instance in circulation is a genuine Lie algebra. Values are
/// immutable after construction and safe to share across threads.
class LieAlgebra {
 public:
  // One structure constant c_{ij}^k for i < j; the i > j part is implied.
  struct Entry {
    int i, j, k;
    Rational c;
  };

  struct CTriple {
    int i, j, k;
    Rational c;
  };

  LieAlgebra(int dim, const std::vector<Entry>& entries, std::string name = "",
             std::vector<std::string> basis_labels = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Rational& c(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  bool is_abelian() const { return triples_.empty(); }

  // All nonzero c_{ij}^k, both index orders, grouped by i then j.
  const std::vector<CTriple>& nonzero_constants() const { return triples_; }
  // Slice of nonzero_constants() with first index i.
  std::pair<int, int> slice_by_first(int i) const { return {slice_begin_[i], slice_begin_[i + 1]}; }

  Vec bracket(const Vec& x, const Vec& y) const;
  MatQ adjoint_matrix(const Vec& u) const;
  LieAlgebra change_of_basis(const MatQ& p) const;

  static LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);

  // True when this algebra is g x g for equal 3x3... blocks: block-diagonal
  // constants with identical halves. Used by product-aware tooling.
  bool splits_as_equal_product() const;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= dim_) throw IndexOutOfRange("LieAlgebra: basis index out of range");
  }
  void validate() const;
  void build_sparse();
  Rational& c_mut(int i, int j, int k) { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

  int dim_;
  std::vector<Rational> c_;  // dense dim^3
  std::vector<CTriple> triples_;
  std::vector<int> slice_begin_;
  std::string name_;
  std::vector<std::string> labels_;
};

inline LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  return LieAlgebra::direct_product(g, h);
}

}  // namespace liecx

#include "liecx/lie_algebra.hpp"

#include <sstream>

namespace liecx {

namespace {

std::vector<std::string> default_labels(int dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, const std::vector<Entry>& entries, std::string name,
                       std::vector<std::string> basis_labels)
    : dim_(dim),
      c_(dim > 0 ? static_cast<size_t>(dim) * dim * dim : 0, Rational(0)),
      name_(std::move(name)),
      labels_(std::move(basis_labels)) {
  if (dim <= 0) throw InvalidInput("LieAlgebra: dimension must be positive");
  if (labels_.empty()) labels_ = default_labels(dim);
  if (static_cast<int>(labels_.size()) != dim)
    throw InvalidInput("LieAlgebra: label count does not match dimension");

  for (const Entry& e : entries) {
    check_index(e.i);
    check_index(e.j);
    check_index(e.k);
    if (e.i >= e.j) throw InvalidInput("LieAlgebra: entries must have i < j");
    Rational& slot = c_mut(e.i, e.j, e.k);
    if (!slot.is_zero()) throw InvalidInput("LieAlgebra: duplicate structure constant entry");
    slot = e.c;
    c_mut(e.j, e.i, e.k) = -e.c;
  }
  build_sparse();
  validate();
}

void LieAlgebra::build_sparse() {
  triples_.clear();
  slice_begin_.assign(dim_ + 1, 0);
  for (int i = 0; i < dim_; ++i) {
    slice_begin_[i] = static_cast<int>(triples_.size());
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Rational& v = c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
        if (!v.is_zero()) triples_.push_back({i, j, k, v});
      }
  }
  slice_begin_[dim_] = static_cast<int>(triples_.size());
}

void LieAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Rational& a = c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
        const Rational& b = c_[(static_cast<size_t>(j) * dim_ + i) * dim_ + k];
        if (a != -b) throw InvalidInput("LieAlgebra: antisymmetry violated");
      }

  // Jacobi on basis triples; bilinearity extends it to the whole space.
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec ei = basis_vec(dim_, i), ej = basis_vec(dim_, j), ek = basis_vec(dim_, k);
        Vec r = bracket(bracket(ei, ej), ek);
        r = vec_add(r, bracket(bracket(ej, ek), ei));
        r = vec_add(r, bracket(bracket(ek, ei), ej));
        if (!vec_is_zero(r)) {
          std::ostringstream os;
          os << "LieAlgebra: Jacobi identity fails on (" << labels_[i] << ", " << labels_[j]
             << ", " << labels_[k] << "); residual = (";
          for (int m = 0; m < dim_; ++m) os << (m ? ", " : "") << r[m];
          os << ")";
          throw JacobiViolation(os.str(), i, j, k);
        }
      }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket: vector length does not match algebra dimension");
  Vec out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    auto [b, e] = slice_by_first(i);
    for (int t = b; t < e; ++t) {
      const CTriple& tr = triples_[t];
      if (y[tr.j].is_zero()) continue;
      out[tr.k] += x[i] * y[tr.j] * tr.c;
    }
  }
  return out;
}

MatQ LieAlgebra::adjoint_matrix(const Vec& u) const {
  if (static_cast<int>(u.size()) != dim_)
    throw DimensionMismatch("adjoint_matrix: vector length does not match algebra dimension");
  MatQ m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    auto [b, e] = slice_by_first(i);
    for (int t = b; t < e; ++t) {
      const CTriple& tr = triples_[t];
      m(tr.k, tr.j) += u[i] * tr.c;
    }
  }
  return m;
}

LieAlgebra LieAlgebra::change_of_basis(const MatQ& p) const {
  if (!p.is_square() || p.rows() != dim_)
    throw DimensionMismatch("change_of_basis: matrix does not match algebra dimension");
  auto p_inv = p.inverse();
  if (!p_inv) throw SingularMatrix("change_of_basis: basis matrix is singular");

  std::vector<Entry> entries;
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      Vec y = bracket(p.column(a), p.column(b));
      Vec z = *p_inv * y;
      for (int k = 0; k < dim_; ++k)
        if (!z[k].is_zero()) entries.push_back({a, b, k, z[k]});
    }
  return LieAlgebra(dim_, entries, name_.empty() ? "" : name_ + "'", default_labels(dim_));
}

LieAlgebra LieAlgebra::direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  const int d = g.dim_ + h.dim_;
  std::vector<Entry> entries;
  for (const CTriple& t : g.triples_)
    if (t.i < t.j) entries.push_back({t.i, t.j, t.k, t.c});
  for (const CTriple& t : h.triples_)
    if (t.i < t.j) entries.push_back({g.dim_ + t.i, g.dim_ + t.j, g.dim_ + t.k, t.c});

  std::vector<std::string> labels = g.labels_;
  for (const std::string& l : h.labels_) labels.push_back(l + "*");
  std::string name;
  if (!g.name_.empty() && !h.name_.empty()) name = g.name_ + "x" + h.name_;
  return LieAlgebra(d, entries, name, labels);
}

bool LieAlgebra::splits_as_equal_product() const {
  if (dim_ % 2 != 0) return false;
  const int h = dim_ / 2;
  for (const CTriple& t : triples_) {
    bool first = t.i < h && t.j < h && t.k < h;
    bool second = t.i >= h && t.j >= h && t.k >= h;
    if (!first && !second) return false;
  }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      for (int k = 0; k < h; ++k)
        if (c(i, j, k) != c(h + i, h + j, h + k)) return false;
  return true;
}

}  // namespace liecx

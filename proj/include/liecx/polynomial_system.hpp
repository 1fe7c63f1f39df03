#pragma once

#include <array>
#include <string>
#include <vector>

#include "liecx/lie_algebra.hpp"

namespace liecx {

/// Quadratic polynomial system in the entries of an unknown d x d matrix:
/// the entries of J^2 + I and the components of N(e_a, e_b) for a < b.
/// Unknown index of entry (r, c) is r*d + c (0-based, row-major).
struct PolyTerm {
  Rational coef;
  std::array<int, 2> vars = {-1, -1};  // sorted ascending; -1 pads
  int degree = 0;
};

struct Polynomial {
  std::vector<PolyTerm> terms;  // canonical: degree desc, vars lex asc, constant last

  bool is_zero() const { return terms.empty(); }
  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;
};

struct EquationProvenance {
  enum class Kind { SquareIdentity, Nijenhuis };
  Kind kind = Kind::SquareIdentity;
  // SquareIdentity: (row, col) of J^2 + I. Nijenhuis: pair (a, b), component k.
  int a = 0, b = 0, k = 0;
  std::string str() const;  // 1-based display form
};

struct FixedEntry {
  int row, col;
  Rational value;
};

class PolynomialSystem {
 public:
  int dim = 0;
  int n_unknowns = 0;
  std::vector<Polynomial> equations;
  std::vector<EquationProvenance> provenance;

  std::vector<Rational> evaluate(const std::vector<Rational>& x) const;
  std::vector<double> evaluate(const std::vector<double>& x) const;

  // One equation per line: "prov: c * x_{r,c} * x_{r',c'} ... = 0", with a
  // header mapping unknown indices to 1-based matrix positions.
  std::string to_text() const;
  std::string equation_text(size_t idx) const;
};

/// Emits (a) every entry of J^2 + I and (b) every component of N(e_a, e_b)
/// for a < b, with the given entries of the unknown matrix substituted by
/// fixed values. Identically-zero equations are omitted. With reduce set,
/// only Nijenhuis equations whose pair and component all lie in the first
/// factor of a product g x g are kept (the square identities remain).
PolynomialSystem emit_polynomial_system(const LieAlgebra& g,
                                        const std::vector<FixedEntry>& fixed = {},
                                        bool reduce = false);

}  // namespace liecx

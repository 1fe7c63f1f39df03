#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "liecx/complex_structure.hpp"
#include "liecx/lie_algebra.hpp"

namespace liecx {

/// One of the eight 3-dimensional bracket types; theta parametrizes types 4
/// and 6 and must be nonzero there, and absent everywhere else.
struct BianchiSpec {
  int type_id = 1;
  std::optional<Rational> theta;
};

LieAlgebra bianchi(const BianchiSpec& spec);

/// Basis {u, v, w} adapted to the adjoint of u: either a complex-eigenvalue
/// pair [u,v] = A v + B w, [u,w] = -B v + A w with B != 0, or a repeated real
/// eigenvalue [u,v] = alpha v, [u,w] = alpha w.
struct JordanTriple {
  struct ComplexPair {
    Rational a, b;
  };
  struct RealEigen {
    Rational alpha;
  };
  Vec u, v, w;
  std::variant<ComplexPair, RealEigen> kind;
};

bool validate_jordan_triple(const LieAlgebra& g, const JordanTriple& t);

/// The product structure determined by J u = u*, J v = w, J v* = w* together
/// with J^2 = -id, expressed in the standard basis of g x g.
Endomorphism build_product_j(const LieAlgebra& g, const JordanTriple& t);

/// Scaled/sheared variant of the same construction: J u = lambda u + c u*,
/// J v = sigma w, J v* = sigma w* (lambda = 0, c = 1, sigma = +1 recovers
/// build_product_j). Integrable for every lambda, nonzero c, sigma = +-1.
struct ProductJOptions {
  Rational lambda = Rational(0);
  Rational u_scale = Rational(1);  // must be nonzero
  int orientation = 1;             // +1 or -1
};
Endomorphism build_product_j_scaled(const LieAlgebra& g, const JordanTriple& t,
                                    const ProductJOptions& opts);

struct StandardStructure {
  LieAlgebra algebra;  // the 6-dimensional product g x g
  Endomorphism structure;
  JordanTriple triple;
};

/// Known integrable structure on the product of the given type; available for
/// types 1, 2, 3, 6, 7, 8 and for type 4 only at theta = 1. Throws
/// NoKnownStructure for type 5 and type 4 with theta != 1.
StandardStructure standard_structure(const BianchiSpec& spec);

/// o(n): antisymmetric n x n matrices, basis e_{ij} (i < j) ordered
/// lexicographically; constants computed from matrix commutators.
LieAlgebra orthogonal_algebra(int n);

/// Lexicographic list of the (i, j) index pairs labelling the o(n) basis,
/// 1-based as in the e_{ij} notation.
std::vector<std::pair<int, int>> orthogonal_basis_pairs(int n);

/// The block-pairing complex structure on o(n) x o(n): partition indices into
/// blocks (1,2), (3,4), ...; e_{i,i+1} with odd i is quasi-invariant
/// (J e = e*), any other e_{ij} with odd i maps to e_{(i+1)j}, and even i
/// maps to -e_{(i-1)j}; same images on the starred copy.
Endomorphism orthogonal_pairing(int n);

}  // namespace liecx

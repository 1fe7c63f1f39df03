#include "liecx/constructions.hpp"

#include <string>

namespace liecx {

namespace {

const Rational kOne(1);

void check_theta(const BianchiSpec& spec) {
  const bool needs_theta = spec.type_id == 4 || spec.type_id == 6;
  if (needs_theta) {
    if (!spec.theta) throw ThetaRequired("type " + std::to_string(spec.type_id) + " requires theta");
    if (spec.theta->is_zero()) throw ThetaZero("theta must be nonzero");
  } else if (spec.theta) {
    throw ThetaForbidden("type " + std::to_string(spec.type_id) + " does not take theta");
  }
}

}  // namespace

LieAlgebra bianchi(const BianchiSpec& spec) {
  if (spec.type_id < 1 || spec.type_id > 8)
    throw InvalidInput("bianchi: type must be in 1..8");
  check_theta(spec);

  using E = LieAlgebra::Entry;
  std::vector<E> entries;
  std::string name = "type" + std::to_string(spec.type_id);
  const Rational theta = spec.theta.value_or(Rational(0));
  switch (spec.type_id) {
    case 1:
      break;
    case 2:
      entries = {{0, 1, 0, kOne}};
      break;
    case 3:
      entries = {{0, 1, 2, kOne}};
      break;
    case 4:
      entries = {{0, 2, 0, kOne}, {1, 2, 1, theta}};
      name += "(theta=" + theta.str() + ")";
      break;
    case 5:
      entries = {{0, 2, 0, kOne}, {1, 2, 0, kOne}, {1, 2, 1, kOne}};
      break;
    case 6:
      entries = {{0, 2, 0, theta}, {0, 2, 1, Rational(-1)}, {1, 2, 0, kOne}, {1, 2, 1, theta}};
      name += "(theta=" + theta.str() + ")";
      break;
    case 7:
      entries = {{0, 2, 1, kOne}, {1, 2, 0, kOne}, {0, 1, 2, kOne}};
      break;
    case 8:
      entries = {{0, 2, 1, Rational(-1)}, {1, 2, 0, kOne}, {0, 1, 2, kOne}};
      break;
  }
  return LieAlgebra(3, entries, name);
}

bool validate_jordan_triple(const LieAlgebra& g, const JordanTriple& t) {
  if (g.dim() != 3) throw DimensionMismatch("validate_jordan_triple: algebra must be 3-dimensional");
  if (static_cast<int>(t.u.size()) != 3 || static_cast<int>(t.v.size()) != 3 ||
      static_cast<int>(t.w.size()) != 3)
    throw DimensionMismatch("validate_jordan_triple: vectors must have length 3");

  MatQ basis(3, 3);
  for (int r = 0; r < 3; ++r) {
    basis(r, 0) = t.u[r];
    basis(r, 1) = t.v[r];
    basis(r, 2) = t.w[r];
  }
  if (!basis.inverse()) return false;  // linearly dependent

  Vec uv = g.bracket(t.u, t.v);
  Vec uw = g.bracket(t.u, t.w);
  if (const auto* cp = std::get_if<JordanTriple::ComplexPair>(&t.kind)) {
    if (cp->b.is_zero()) return false;
    Vec expect_uv = vec_add(vec_scale(cp->a, t.v), vec_scale(cp->b, t.w));
    Vec expect_uw = vec_add(vec_scale(-cp->b, t.v), vec_scale(cp->a, t.w));
    return uv == expect_uv && uw == expect_uw;
  }
  const auto& re = std::get<JordanTriple::RealEigen>(t.kind);
  return uv == vec_scale(re.alpha, t.v) && uw == vec_scale(re.alpha, t.w);
}

Endomorphism build_product_j_scaled(const LieAlgebra& g, const JordanTriple& t,
                                    const ProductJOptions& opts) {
  if (!validate_jordan_triple(g, t))
    throw InvalidJordanTriple("build_product_j: bracket relations do not hold for the triple");
  if (opts.u_scale.is_zero()) throw InvalidInput("build_product_j: u_scale must be nonzero");
  if (opts.orientation != 1 && opts.orientation != -1)
    throw InvalidInput("build_product_j: orientation must be +1 or -1");

  const int d = g.dim();
  const int n = 2 * d;
  // Frame (u, v, w, u*, v*, w*) as columns in the standard product basis.
  MatQ frame(n, n);
  for (int r = 0; r < d; ++r) {
    frame(r, 0) = t.u[r];
    frame(r, 1) = t.v[r];
    frame(r, 2) = t.w[r];
    frame(d + r, 3) = t.u[r];
    frame(d + r, 4) = t.v[r];
    frame(d + r, 5) = t.w[r];
  }
  auto frame_inv = frame.inverse();
  if (!frame_inv) throw SingularBasis("build_product_j: triple does not span the factor");

  const Rational& lam = opts.lambda;
  const Rational& c = opts.u_scale;
  const Rational sigma(opts.orientation);
  // Images in frame coordinates: J u = lam u + c u*, J u* = -(1+lam^2)/c u - lam u*,
  // J v = sigma w, J w = -sigma v, and the same rotation on the starred pair.
  MatQ jf(n, n);
  jf(0, 0) = lam;
  jf(3, 0) = c;
  jf(0, 3) = -(kOne + lam * lam) / c;
  jf(3, 3) = -lam;
  jf(2, 1) = sigma;
  jf(1, 2) = -sigma;
  jf(5, 4) = sigma;
  jf(4, 5) = -sigma;

  Endomorphism j(frame * jf * *frame_inv);
  if (!is_complex_structure(j))
    throw InvalidJordanTriple("build_product_j: constructed matrix does not square to -id");
  return j;
}

Endomorphism build_product_j(const LieAlgebra& g, const JordanTriple& t) {
  return build_product_j_scaled(g, t, ProductJOptions{});
}

StandardStructure standard_structure(const BianchiSpec& spec) {
  if (spec.type_id < 1 || spec.type_id > 8)
    throw InvalidInput("standard_structure: type must be in 1..8");
  check_theta(spec);
  if (spec.type_id == 5)
    throw NoKnownStructure("no integrable complex structure exists on the type 5 product");
  if (spec.type_id == 4 && *spec.theta != kOne)
    throw NoKnownStructure(
        "no integrable complex structure exists on the type 4 product unless theta = 1");

  LieAlgebra g = bianchi(spec);

  // Adapted vectors per type, with the adjoint eigendata read off the
  // brackets; a regression test re-derives these from scratch.
  JordanTriple t;
  auto e = [&](int i) { return basis_vec(3, i); };
  switch (spec.type_id) {
    case 1:
      t = {e(0), e(1), e(2), JordanTriple::RealEigen{Rational(0)}};
      break;
    case 2:
    case 3:
      t = {e(2), e(0), e(1), JordanTriple::RealEigen{Rational(0)}};
      break;
    case 4:  // theta = 1
      t = {e(2), e(0), e(1), JordanTriple::RealEigen{Rational(-1)}};
      break;
    case 6:
      t = {e(2), e(0), e(1), JordanTriple::ComplexPair{-*spec.theta, kOne}};
      break;
    case 7:
      t = {e(1), e(0), e(2), JordanTriple::ComplexPair{Rational(0), Rational(-1)}};
      break;
    case 8:
      t = {e(2), e(0), e(1), JordanTriple::ComplexPair{Rational(0), kOne}};
      break;
  }

  LieAlgebra product = direct_product(g, g);
  Endomorphism j = build_product_j(g, t);
  return {std::move(product), std::move(j), std::move(t)};
}

std::vector<std::pair<int, int>> orthogonal_basis_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

LieAlgebra orthogonal_algebra(int n) {
  if (n < 2) throw InvalidN("orthogonal_algebra: n must be at least 2");
  const auto pairs = orthogonal_basis_pairs(n);
  const int d = static_cast<int>(pairs.size());

  // e_{ij} has +1 at (i,j) and -1 at (j,i); constants come from commutators.
  auto elementary = [&](int i, int j) {
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    m[static_cast<size_t>(i - 1) * n + (j - 1)] = 1;
    m[static_cast<size_t>(j - 1) * n + (i - 1)] = -1;
    return m;
  };
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int aik = a[static_cast<size_t>(i) * n + k];
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
      }
    return out;
  };

  std::vector<LieAlgebra::Entry> entries;
  std::vector<std::string> labels;
  for (auto [i, j] : pairs) labels.push_back("e" + std::to_string(i) + std::to_string(j));

  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      auto ea = elementary(pairs[a].first, pairs[a].second);
      auto eb = elementary(pairs[b].first, pairs[b].second);
      auto ab = mul(ea, eb);
      auto ba = mul(eb, ea);
      for (size_t p = 0; p < ab.size(); ++p) ab[p] -= ba[p];
      // Read the upper triangle of the (antisymmetric) commutator.
      for (int k = 0; k < d; ++k) {
        int coeff = ab[static_cast<size_t>(pairs[k].first - 1) * n + (pairs[k].second - 1)];
        if (coeff != 0) entries.push_back({a, b, k, Rational(coeff)});
      }
    }
  return LieAlgebra(d, entries, "o(" + std::to_string(n) + ")", labels);
}

Endomorphism orthogonal_pairing(int n) {
  if (n < 2) throw InvalidN("orthogonal_pairing: n must be at least 2");
  const auto pairs = orthogonal_basis_pairs(n);
  const int d = static_cast<int>(pairs.size());
  auto index_of = [&](int i, int j) {
    for (int k = 0; k < d; ++k)
      if (pairs[k] == std::make_pair(i, j)) return k;
    throw IndexOutOfRange("orthogonal_pairing: no such basis pair");
  };

  MatQ m(2 * d, 2 * d);
  for (int a = 0; a < d; ++a) {
    auto [i, j] = pairs[a];
    if (i % 2 == 1 && j == i + 1) {
      // Quasi-invariant block head: J e = e*, J e* = -e.
      m(d + a, a) = Rational(1);
      m(a, d + a) = Rational(-1);
    } else if (i % 2 == 1) {
      int b = index_of(i + 1, j);
      m(b, a) = Rational(1);
      m(d + b, d + a) = Rational(1);
    } else {
      int b = index_of(i - 1, j);
      m(b, a) = Rational(-1);
      m(d + b, d + a) = Rational(-1);
    }
  }
  return Endomorphism(std::move(m));
}

}  // namespace liecx

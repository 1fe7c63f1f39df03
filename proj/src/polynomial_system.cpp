#include "liecx/polynomial_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liecx {

namespace {

using MonoKey = std::array<int, 2>;

// Accumulates coefficient-by-monomial, then freezes into canonical order.
class PolyBuilder {
 public:
  void add_const(const Rational& c) { add({-1, -1}, c); }
  void add_lin(int v, const Rational& c) { add({v, -1}, c); }
  void add_quad(int v1, int v2, const Rational& c) {
    if (v1 > v2) std::swap(v1, v2);
    add({v1, v2}, c);
  }

  // Adds c * X(va) * X(vb) where each factor is a variable (idx >= 0) or an
  // already-fixed constant (idx < 0, value supplied).
  void add_product(int va, const Rational& ca, int vb, const Rational& cb, const Rational& c) {
    if (va >= 0 && vb >= 0)
      add_quad(va, vb, c);
    else if (va >= 0)
      add_lin(va, c * cb);
    else if (vb >= 0)
      add_lin(vb, c * ca);
    else
      add_const(c * ca * cb);
  }

  Polynomial freeze() const {
    Polynomial p;
    for (const auto& [key, coef] : acc_) {
      if (coef.is_zero()) continue;
      PolyTerm t;
      t.coef = coef;
      t.vars = key;
      t.degree = (key[0] >= 0 ? 1 : 0) + (key[1] >= 0 ? 1 : 0);
      p.terms.push_back(std::move(t));
    }
    std::sort(p.terms.begin(), p.terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
      if (a.degree != b.degree) return a.degree > b.degree;
      return a.vars < b.vars;
    });
    return p;
  }

 private:
  void add(MonoKey key, const Rational& c) {
    if (key[0] < 0 && key[1] >= 0) std::swap(key[0], key[1]);
    acc_[key] += c;
  }
  std::map<MonoKey, Rational> acc_;
};

}  // namespace

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  Rational acc(0);
  for (const PolyTerm& t : terms) {
    Rational v = t.coef;
    if (t.vars[0] >= 0) v *= x[t.vars[0]];
    if (t.vars[1] >= 0) v *= x[t.vars[1]];
    acc += v;
  }
  return acc;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const PolyTerm& t : terms) {
    double v = t.coef.to_double();
    if (t.vars[0] >= 0) v *= x[t.vars[0]];
    if (t.vars[1] >= 0) v *= x[t.vars[1]];
    acc += v;
  }
  return acc;
}

std::string EquationProvenance::str() const {
  std::ostringstream os;
  if (kind == Kind::SquareIdentity)
    os << "square(" << a + 1 << "," << b + 1 << ")";
  else
    os << "nijenhuis(" << a + 1 << "," << b + 1 << "," << k + 1 << ")";
  return os.str();
}

std::vector<Rational> PolynomialSystem::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != n_unknowns)
    throw DimensionMismatch("PolynomialSystem::evaluate: expected d^2 values");
  std::vector<Rational> out;
  out.reserve(equations.size());
  for (const Polynomial& eq : equations) out.push_back(eq.evaluate(x));
  return out;
}

std::vector<double> PolynomialSystem::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_unknowns)
    throw DimensionMismatch("PolynomialSystem::evaluate: expected d^2 values");
  std::vector<double> out;
  out.reserve(equations.size());
  for (const Polynomial& eq : equations) out.push_back(eq.evaluate(x));
  return out;
}

std::string PolynomialSystem::equation_text(size_t idx) const {
  std::ostringstream os;
  os << provenance[idx].str() << ": ";
  const auto& terms = equations[idx].terms;
  auto var_name = [&](int v) {
    return "x_{" + std::to_string(v / dim + 1) + "," + std::to_string(v % dim + 1) + "}";
  };
  for (size_t t = 0; t < terms.size(); ++t) {
    Rational coef = terms[t].coef;
    if (t == 0) {
      if (coef.sign() < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    os << coef.str();
    for (int v : terms[t].vars)
      if (v >= 0) os << " * " << var_name(v);
  }
  if (terms.empty()) os << "0";
  os << " = 0";
  return os.str();
}

std::string PolynomialSystem::to_text() const {
  std::ostringstream os;
  os << "# quadratic system in the entries of a " << dim << "x" << dim << " matrix\n";
  os << "# unknown n is x_{r,c} = matrix entry (row r, col c), 1-based; n = (r-1)*" << dim
     << " + (c-1)\n";
  os << "# equations: " << equations.size() << "\n";
  for (size_t i = 0; i < equations.size(); ++i) os << equation_text(i) << "\n";
  return os.str();
}

PolynomialSystem emit_polynomial_system(const LieAlgebra& g, const std::vector<FixedEntry>& fixed,
                                        bool reduce) {
  const int d = g.dim();
  const int n = d * d;

  // var_idx[e] >= 0: still unknown; < 0: fixed to fixed_val[e].
  std::vector<int> var_idx(n);
  std::vector<Rational> fixed_val(n, Rational(0));
  for (int e = 0; e < n; ++e) var_idx[e] = e;
  for (const FixedEntry& f : fixed) {
    if (f.row < 0 || f.row >= d || f.col < 0 || f.col >= d)
      throw IndexOutOfRange("emit_polynomial_system: fixed entry out of range");
    int e = f.row * d + f.col;
    if (var_idx[e] < 0 && fixed_val[e] != f.value)
      throw InconsistentFixing("emit_polynomial_system: entry fixed twice with different values");
    var_idx[e] = -1;
    fixed_val[e] = f.value;
  }
  auto slot = [&](int r, int c) { return r * d + c; };

  int half = d / 2;
  if (reduce && !g.splits_as_equal_product())
    throw InvalidInput("emit_polynomial_system: reduce requires a product algebra g x g");

  PolynomialSystem sys;
  sys.dim = d;
  sys.n_unknowns = n;

  auto push = [&](const PolyBuilder& pb, EquationProvenance prov) {
    Polynomial p = pb.freeze();
    if (p.is_zero()) return;
    sys.equations.push_back(std::move(p));
    sys.provenance.push_back(prov);
  };

  // (a) entries of J^2 + I.
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      PolyBuilder pb;
      for (int k = 0; k < d; ++k) {
        int e1 = slot(r, k), e2 = slot(k, c);
        pb.add_product(var_idx[e1], fixed_val[e1], var_idx[e2], fixed_val[e2], Rational(1));
      }
      if (r == c) pb.add_const(Rational(1));
      push(pb, {EquationProvenance::Kind::SquareIdentity, r, c, 0});
    }

  // (b) components of N(e_a, e_b). With x_{r,c} the entry (r, c):
  //   N_k(a,b) = c_{ab}^k
  //            + sum_{p,m} c_{pb}^m x_{p,a} x_{k,m}
  //            + sum_{q,m} c_{aq}^m x_{q,b} x_{k,m}
  //            - sum_{p,q} c_{pq}^k x_{p,a} x_{q,b}
  const auto& triples = g.nonzero_constants();
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int k = 0; k < d; ++k) {
        if (reduce && !(a < half && b < half && k < half)) continue;
        PolyBuilder pb;
        pb.add_const(g.c(a, b, k));
        for (const auto& t : triples) {
          if (t.j == b) {  // c_{pb}^m with p = t.i, m = t.k
            int e1 = slot(t.i, a), e2 = slot(k, t.k);
            pb.add_product(var_idx[e1], fixed_val[e1], var_idx[e2], fixed_val[e2], t.c);
          }
          if (t.i == a) {  // c_{aq}^m with q = t.j, m = t.k
            int e1 = slot(t.j, b), e2 = slot(k, t.k);
            pb.add_product(var_idx[e1], fixed_val[e1], var_idx[e2], fixed_val[e2], t.c);
          }
          if (t.k == k) {  // c_{pq}^k with p = t.i, q = t.j
            int e1 = slot(t.i, a), e2 = slot(t.j, b);
            pb.add_product(var_idx[e1], fixed_val[e1], var_idx[e2], fixed_val[e2], -t.c);
          }
        }
        push(pb, {EquationProvenance::Kind::Nijenhuis, a, b, k});
      }

  return sys;
}

}  // namespace liecx

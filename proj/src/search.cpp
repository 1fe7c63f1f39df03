#include "liecx/search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "liecx/constructions.hpp"
#include "liecx/polynomial_system.hpp"

namespace liecx {

MatD to_double_matrix(const MatQ& m) {
  MatD out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
  return out;
}

// ---------------------------------------------------------------------------
// Matrix-path objective
// ---------------------------------------------------------------------------

SearchObjective::SearchObjective(const LieAlgebra& g) : dim_(g.dim()) {
  for (const auto& t : g.nonzero_constants()) triples_.push_back({t.i, t.j, t.k, t.c.to_double()});
}

std::vector<double> SearchObjective::bracket(const std::vector<double>& x,
                                             const std::vector<double>& y) const {
  std::vector<double> out(dim_, 0.0);
  for (const Triple& t : triples_) {
    if (x[t.i] == 0.0 || y[t.j] == 0.0) continue;
    out[t.k] += t.c * x[t.i] * y[t.j];
  }
  return out;
}

double SearchObjective::residual(const std::vector<double>& x) const {
  return residual_and_gradient(x).first;
}

std::pair<double, std::vector<double>> SearchObjective::residual_and_gradient(
    const std::vector<double>& x) const {
  const int d = dim_;
  if (static_cast<int>(x.size()) != d * d)
    throw DimensionMismatch("residual_and_gradient: expected d^2 entries");

  auto at = [&](int r, int c) { return x[r * d + c]; };
  double f = 0.0;
  std::vector<double> grad(d * d, 0.0);

  // ||J^2 + I||^2 with gradient 2 (G J^T + J^T G).
  std::vector<double> g2(d * d, 0.0);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      double v = at(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < d; ++c) g2[r * d + c] += v * at(k, c);
    }
  for (int r = 0; r < d; ++r) g2[r * d + r] += 1.0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) f += g2[r * d + c] * g2[r * d + c];
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      double acc = 0.0;
      for (int j = 0; j < d; ++j) acc += g2[r * d + j] * at(c, j) + at(j, r) * g2[j * d + c];
      grad[r * d + c] += 2.0 * acc;
    }

  // sum over pairs of ||N(e_a, e_b)||^2.
  std::vector<double> u(d), v(d), t12(d), n(d), h(d), mth(d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      for (int r = 0; r < d; ++r) {
        u[r] = at(r, a);  // J e_a
        v[r] = at(r, b);  // J e_b
      }
      // t12 = [Je_a, e_b] + [e_a, Je_b]; n = [e_a,e_b] + J t12 - [Je_a, Je_b]
      std::fill(t12.begin(), t12.end(), 0.0);
      std::fill(n.begin(), n.end(), 0.0);
      for (const Triple& t : triples_) {
        if (t.j == b) t12[t.k] += t.c * u[t.i];
        if (t.i == a) t12[t.k] += t.c * v[t.j];
        if (t.i == a && t.j == b) n[t.k] += t.c;
        n[t.k] -= t.c * u[t.i] * v[t.j];
      }
      for (int r = 0; r < d; ++r) {
        double acc = 0.0;
        for (int c = 0; c < d; ++c) acc += at(r, c) * t12[c];
        n[r] += acc;
      }
      double norm2 = 0.0;
      for (int r = 0; r < d; ++r) norm2 += n[r] * n[r];
      if (norm2 == 0.0) continue;
      f += norm2;

      for (int r = 0; r < d; ++r) h[r] = 2.0 * n[r];
      for (int c = 0; c < d; ++c) {
        double acc = 0.0;
        for (int r = 0; r < d; ++r) acc += at(r, c) * h[r];
        mth[c] = acc;  // (J^T h)_c
      }
      // dM applied to t12: outer product h t12^T.
      for (int r = 0; r < d; ++r) {
        if (h[r] == 0.0) continue;
        for (int c = 0; c < d; ++c) grad[r * d + c] += h[r] * t12[c];
      }
      // Remaining terms act on columns a and b.
      for (const Triple& t : triples_) {
        if (t.j == b) grad[t.i * d + a] += t.c * mth[t.k];  // J [d(Je_a), e_b]
        if (t.i == a) grad[t.j * d + b] += t.c * mth[t.k];  // J [e_a, d(Je_b)]
        grad[t.i * d + a] -= t.c * v[t.j] * h[t.k];         // -[d(Je_a), Je_b]
        grad[t.j * d + b] -= t.c * u[t.i] * h[t.k];         // -[Je_a, d(Je_b)]
      }
    }

  return {f, std::move(grad)};
}

std::pair<double, std::vector<double>> residual_and_gradient(const LieAlgebra& g,
                                                             const std::vector<double>& x) {
  return SearchObjective(g).residual_and_gradient(x);
}

// ---------------------------------------------------------------------------
// Levenberg-Marquardt over the emitted equations
// ---------------------------------------------------------------------------

namespace {

struct NumEquation {
  double c0 = 0.0;
  std::vector<std::pair<int, double>> lin;
  std::vector<std::tuple<int, int, double>> quad;
};

std::vector<NumEquation> to_numeric_equations(const PolynomialSystem& sys) {
  std::vector<NumEquation> eqs;
  eqs.reserve(sys.equations.size());
  for (const Polynomial& p : sys.equations) {
    NumEquation e;
    for (const PolyTerm& t : p.terms) {
      double c = t.coef.to_double();
      if (t.degree == 0)
        e.c0 += c;
      else if (t.degree == 1)
        e.lin.emplace_back(t.vars[1], c);
      else
        e.quad.emplace_back(t.vars[0], t.vars[1], c);
    }
    eqs.push_back(std::move(e));
  }
  return eqs;
}

double eval_equations(const std::vector<NumEquation>& eqs, const std::vector<double>& x,
                      Eigen::VectorXd& r) {
  double f = 0.0;
  for (size_t i = 0; i < eqs.size(); ++i) {
    const NumEquation& e = eqs[i];
    double v = e.c0;
    for (auto [a, c] : e.lin) v += c * x[a];
    for (auto [a, b, c] : e.quad) v += c * x[a] * x[b];
    r(static_cast<int>(i)) = v;
    f += v * v;
  }
  return f;
}

void eval_jacobian(const std::vector<NumEquation>& eqs, const std::vector<double>& x,
                   Eigen::MatrixXd& jac) {
  jac.setZero();
  for (size_t i = 0; i < eqs.size(); ++i) {
    const NumEquation& e = eqs[i];
    int row = static_cast<int>(i);
    for (auto [a, c] : e.lin) jac(row, a) += c;
    for (auto [a, b, c] : e.quad) {
      jac(row, a) += c * x[b];
      jac(row, b) += c * x[a];
    }
  }
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Damped Gauss-Newton with the fixed schedule: mu starts at 1e-3, x10 on a
// rejected step, x0.1 on an accepted one. Each linear solve counts as one
// iteration; runs until the objective reaches tol, max_iters is exhausted,
// or progress stalls (tiny gradient or runaway damping).
std::vector<double> lm_minimize(const std::vector<NumEquation>& eqs, std::vector<double> x,
                                int max_iters, double tol) {
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(eqs.size());
  if (m == 0) return x;
  Eigen::VectorXd r(m), rt(m), g(n);
  Eigen::MatrixXd jac(m, n), a(n, n);
  double f = eval_equations(eqs, x, r);
  double mu = 1e-3;
  std::vector<double> xt(x.size());
  bool refresh = true;
  for (int iter = 0; iter < max_iters && f > tol; ++iter) {
    if (refresh) {
      eval_jacobian(eqs, x, jac);
      g = jac.transpose() * r;
      if (g.lpNorm<Eigen::Infinity>() <= 1e-14) break;
      a = jac.transpose() * jac;
      refresh = false;
    }
    Eigen::MatrixXd damped = a;
    for (int i = 0; i < n; ++i) damped(i, i) += mu;
    Eigen::VectorXd step = damped.ldlt().solve(-g);
    for (int i = 0; i < n; ++i) xt[i] = x[i] + step(i);
    double ft = eval_equations(eqs, xt, rt);
    if (std::isfinite(ft) && ft < f) {
      x = xt;
      f = ft;
      r = rt;
      mu *= 0.1;
      refresh = true;
    } else {
      mu *= 10.0;
      if (mu > 1e15) break;  // stalled
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Exact snapping of converged candidates
// ---------------------------------------------------------------------------

// Largest denominator over all entries.
mpz_class max_denominator_of(const MatQ& m) {
  mpz_class worst = 1;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c).den() > worst) worst = m(r, c).den();
  return worst;
}

double max_abs_diff(const MatQ& exact, const MatD& num) {
  double worst = 0.0;
  for (int r = 0; r < exact.rows(); ++r)
    for (int c = 0; c < exact.cols(); ++c)
      worst = std::max(worst, std::abs(exact(r, c).to_double() - num(r, c)));
  return worst;
}

// Any J with J^2 = -I factors as J = Q K Q^{-1} with Q = I - J K, K the
// standard block rotation. Rounding Q to a fixed small denominator keeps the
// identity J_rat^2 = -I exact; on an abelian algebra that already certifies.
std::optional<Endomorphism> snap_via_conjugation(const LieAlgebra& g, const MatD& jn,
                                                 long max_den) {
  const int d = g.dim();
  if (d % 2 != 0) return std::nullopt;
  MatQ k(d, d);
  for (int i = 0; i + 1 < d; i += 2) {
    k(i, i + 1) = Rational(-1);
    k(i + 1, i) = Rational(1);
  }
  MatD kd = to_double_matrix(k);
  for (long q : {8, 6, 5, 4, 3, 2}) {
    MatQ qm(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        double v = (r == c ? 1.0 : 0.0);
        for (int t = 0; t < d; ++t) v -= jn(r, t) * kd(t, c);
        qm(r, c) = Rational(std::lround(v * q), q);
      }
    auto inv = qm.inverse();
    if (!inv) continue;
    MatQ cand = qm * k * *inv;
    if (max_denominator_of(cand) > max_den) continue;
    Endomorphism j(cand);
    if (!is_complex_structure(j)) continue;
    if (!is_integrable(g, j).integrable) continue;
    if (max_abs_diff(cand, jn) > 1.0) continue;
    return j;
  }
  return std::nullopt;
}

// Rational rotation from an integer quaternion (homogeneous, exactly
// orthogonal).
MatQ rotation_from_quat(long a, long b, long c, long d) {
  long n2 = a * a + b * b + c * c + d * d;
  MatQ r(3, 3);
  r(0, 0) = Rational(a * a + b * b - c * c - d * d, n2);
  r(0, 1) = Rational(2 * (b * c - a * d), n2);
  r(0, 2) = Rational(2 * (b * d + a * c), n2);
  r(1, 0) = Rational(2 * (b * c + a * d), n2);
  r(1, 1) = Rational(a * a - b * b + c * c - d * d, n2);
  r(1, 2) = Rational(2 * (c * d - a * b), n2);
  r(2, 0) = Rational(2 * (b * d - a * c), n2);
  r(2, 1) = Rational(2 * (c * d + a * b), n2);
  r(2, 2) = Rational(a * a - b * b - c * c + d * d, n2);
  return r;
}

std::array<double, 4> quat_from_rotation(const Eigen::Matrix3d& r) {
  double tr = r.trace();
  double qw, qx, qy, qz;
  if (tr > 0) {
    double s = std::sqrt(tr + 1.0) * 2;
    qw = 0.25 * s;
    qx = (r(2, 1) - r(1, 2)) / s;
    qy = (r(0, 2) - r(2, 0)) / s;
    qz = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2;
    qw = (r(2, 1) - r(1, 2)) / s;
    qx = 0.25 * s;
    qy = (r(0, 1) + r(1, 0)) / s;
    qz = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2;
    qw = (r(0, 2) - r(2, 0)) / s;
    qx = (r(0, 1) + r(1, 0)) / s;
    qy = 0.25 * s;
    qz = (r(1, 2) + r(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2;
    qw = (r(1, 0) - r(0, 1)) / s;
    qx = (r(0, 2) + r(2, 0)) / s;
    qy = (r(1, 2) + r(2, 1)) / s;
    qz = 0.25 * s;
  }
  return {qw, qx, qy, qz};
}

const LieAlgebra& rotation_product_reference() {
  static const LieAlgebra ref = [] {
    LieAlgebra g = bianchi({8, std::nullopt});
    return direct_product(g, g);
  }();
  return ref;
}

bool same_constants(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != b.c(i, j, k)) return false;
  return true;
}

// For the product of the rotation algebra ([e1,e2]=e3 cyclically) every
// integrable structure near a converged point decomposes as a pair of
// rotations conjugating the block family
//   J u = lambda u + c u*, J v = sigma w, J v* = sigma' w*
// (u the quasi-invariant direction). The parameters are read off the blocks
// of the numeric candidate, rounded to small rationals, and rebuilt exactly;
// exact verification is the gate.
std::optional<Endomorphism> snap_rotation_product(const LieAlgebra& g, const MatD& jn,
                                                  long max_den) {
  if (g.dim() != 6 || !same_constants(g, rotation_product_reference())) return std::nullopt;

  Eigen::Matrix3d a_gg, a_sg, a_ss;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      a_gg(r, c) = jn(r, c);
      a_sg(r, c) = jn(3 + r, c);
      a_ss(r, c) = jn(3 + r, 3 + c);
    }

  auto real_unit_eigvec = [](const Eigen::Matrix3d& m, double& lambda_out) -> std::optional<Eigen::Vector3d> {
    Eigen::EigenSolver<Eigen::Matrix3d> es(m);
    int best = -1;
    double best_imag = 1e-3;
    for (int i = 0; i < 3; ++i) {
      double im = std::abs(es.eigenvalues()(i).imag());
      if (im < best_imag) {
        best_imag = im;
        best = i;
      }
    }
    if (best < 0) return std::nullopt;
    lambda_out = es.eigenvalues()(best).real();
    Eigen::Vector3cd vc = es.eigenvectors().col(best);
    Eigen::Vector3d v = vc.real();
    if (v.norm() < 1e-6) v = vc.imag();
    if (v.norm() < 1e-6) return std::nullopt;
    v.normalize();
    return v;
  };

  double lambda = 0.0;
  auto u_a = real_unit_eigvec(a_gg, lambda);
  if (!u_a) return std::nullopt;
  Eigen::Vector3d y = a_sg * *u_a;
  double c_mag = y.norm();
  if (c_mag < 1e-8) return std::nullopt;
  Eigen::Vector3d u_b = y / c_mag;
  double c_signed = c_mag;

  // Complete each u to an oriented orthonormal frame (v, w, u); the rotation
  // phase around u is a stabilizer direction, any choice works.
  auto complete_frame = [](const Eigen::Vector3d& u) {
    int least = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(u(i)) < std::abs(u(least))) least = i;
    Eigen::Vector3d v = Eigen::Vector3d::Unit(least) - u(least) * u;
    v.normalize();
    return v;
  };
  Eigen::Vector3d v_a = complete_frame(*u_a);
  Eigen::Vector3d w_a_raw = a_gg * v_a;
  w_a_raw -= w_a_raw.dot(*u_a) * *u_a;
  if (w_a_raw.norm() < 1e-8) return std::nullopt;
  Eigen::Vector3d w_a = w_a_raw.normalized();
  double sigma = (v_a.cross(w_a)).dot(*u_a) > 0 ? 1.0 : -1.0;
  if (sigma < 0) w_a = -w_a;  // keep (v, w, u) right-handed; sigma carries the sign

  Eigen::Vector3d v_b = complete_frame(u_b);
  Eigen::Vector3d w_b_raw = a_ss * v_b;
  w_b_raw -= w_b_raw.dot(u_b) * u_b;
  if (w_b_raw.norm() < 1e-8) return std::nullopt;
  Eigen::Vector3d w_b = w_b_raw.normalized();
  double sigma2 = (v_b.cross(w_b)).dot(u_b) > 0 ? 1.0 : -1.0;
  if (sigma2 < 0) w_b = -w_b;

  // Rotations sending (e1, e2, e3) to (v, w, u).
  Eigen::Matrix3d ra, rb;
  ra.col(0) = v_a;
  ra.col(1) = w_a;
  ra.col(2) = *u_a;
  rb.col(0) = v_b;
  rb.col(1) = w_b;
  rb.col(2) = u_b;
  if (ra.determinant() < 0 || rb.determinant() < 0) return std::nullopt;

  auto qa = quat_from_rotation(ra);
  auto qb = quat_from_rotation(rb);

  for (auto [quat_scale, scal_den] : std::initializer_list<std::pair<long, long>>{
           {24, 12}, {16, 8}, {10, 6}, {8, 5}, {6, 4}, {4, 3}}) {
    auto round_quat = [&](const std::array<double, 4>& q) {
      std::array<long, 4> out{};
      long norm = 0;
      for (int i = 0; i < 4; ++i) {
        out[i] = std::lround(q[i] * quat_scale);
        norm += out[i] * out[i];
      }
      return norm == 0 ? std::optional<std::array<long, 4>>{} : std::optional(out);
    };
    auto qa_i = round_quat(qa);
    auto qb_i = round_quat(qb);
    if (!qa_i || !qb_i) continue;
    auto lam_r = Rational::from_double(lambda, scal_den);
    auto c_r = Rational::from_double(c_signed, scal_den);
    if (!lam_r || !c_r || c_r->is_zero()) continue;

    MatQ rot_a = rotation_from_quat((*qa_i)[0], (*qa_i)[1], (*qa_i)[2], (*qa_i)[3]);
    MatQ rot_b = rotation_from_quat((*qb_i)[0], (*qb_i)[1], (*qb_i)[2], (*qb_i)[3]);

    // Frame columns (v_a, w_a, u_a | v_b*, w_b*, u_b*).
    MatQ frame(6, 6);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        frame(r, c) = rot_a(r, c);
        frame(3 + r, 3 + c) = rot_b(r, c);
      }
    auto frame_inv = frame.inverse();
    if (!frame_inv) continue;

    const Rational lam = *lam_r, cc = *c_r;
    const Rational sig(static_cast<long>(sigma)), sig2(static_cast<long>(sigma2));
    MatQ jf(6, 6);
    // frame order (v, w, u): J v = sigma w, J w = -sigma v, J u = lam u + c u*.
    jf(1, 0) = sig;
    jf(0, 1) = -sig;
    jf(2, 2) = lam;
    jf(5, 2) = cc;
    jf(2, 5) = -(Rational(1) + lam * lam) / cc;
    jf(5, 5) = -lam;
    jf(4, 3) = sig2;
    jf(3, 4) = -sig2;

    MatQ cand = frame * jf * *frame_inv;
    if (max_denominator_of(cand) > max_den) continue;
    Endomorphism j(cand);
    if (!is_complex_structure(j)) continue;
    if (!is_integrable(g, j).integrable) continue;
    if (max_abs_diff(cand, jn) > 1.0) continue;
    return j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Endomorphism> rationalize_and_certify(const LieAlgebra& g, const MatD& j_num,
                                                    long max_denominator) {
  if (max_denominator < 1) throw InvalidInput("rationalize_and_certify: max_denominator must be >= 1");
  if (!j_num.is_square() || j_num.rows() != g.dim()) return std::nullopt;
  const int d = g.dim();
  MatQ m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      auto v = Rational::from_double(j_num(r, c), max_denominator);
      if (!v) return std::nullopt;
      m(r, c) = *v;
    }
  Endomorphism j(std::move(m));
  if (!is_complex_structure(j)) return std::nullopt;
  if (!is_integrable(g, j).integrable) return std::nullopt;
  return j;
}

std::optional<Endomorphism> exact_snap(const LieAlgebra& g, const MatD& j_num, long max_denominator) {
  if (auto direct = rationalize_and_certify(g, j_num, max_denominator)) return direct;
  if (g.is_abelian())
    if (auto j = snap_via_conjugation(g, j_num, max_denominator)) return j;
  if (auto j = snap_rotation_product(g, j_num, max_denominator)) return j;
  return std::nullopt;
}

SearchResult numeric_search(const LieAlgebra& g, const SearchConfig& cfg) {
  if (cfg.starts < 1) throw InvalidInput("numeric_search: starts must be >= 1");
  const int d = g.dim();
  const int n = d * d;

  const PolynomialSystem sys = emit_polynomial_system(g);
  const std::vector<NumEquation> eqs = to_numeric_equations(sys);
  const SearchObjective objective(g);

  struct StartOutcome {
    double residual = 0.0;
    bool converged = false;
    std::vector<double> x;
  };
  std::vector<StartOutcome> outcomes(cfg.starts);

  auto run_start = [&](int s) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(s) + 1)));
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
      double t = (rng() >> 11) * 0x1.0p-53;  // [0, 1)
      x[i] = -cfg.init_range + 2.0 * cfg.init_range * t;
    }
    x = lm_minimize(eqs, std::move(x), cfg.max_iters, cfg.tol);
    double res = objective.residual(x);
    bool converged = res <= cfg.tol;
    if (converged && cfg.polish) {
      MatD m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = x[r * d + c];
      if (auto snapped = exact_snap(g, m)) {
        MatD sd = to_double_matrix(snapped->matrix());
        std::vector<double> xs(n);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) xs[r * d + c] = sd(r, c);
        double rs = objective.residual(xs);
        if (rs <= cfg.tol) {
          x = std::move(xs);
          res = rs;
        }
      }
    }
    outcomes[s] = {res, converged, std::move(x)};
  };

  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (int s = 0; s < cfg.starts; ++s) run_start(s);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          int s = next.fetch_add(1);
          if (s >= cfg.starts) return;
          run_start(s);
        }
      });
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.starts = cfg.starts;
  result.seed = cfg.seed;
  result.per_start_residuals.reserve(cfg.starts);
  int best = 0;
  for (int s = 0; s < cfg.starts; ++s) {
    result.per_start_residuals.push_back(outcomes[s].residual);
    if (outcomes[s].converged) {
      ++result.converged_starts;
      MatD m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = outcomes[s].x[r * d + c];
      result.converged_matrices.emplace_back(s, std::move(m));
    }
    if (outcomes[s].residual < outcomes[best].residual) best = s;
  }
  result.best_start = best;
  result.best_residual = outcomes[best].residual;
  result.best_matrix = MatD(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) result.best_matrix(r, c) = outcomes[best].x[r * d + c];
  return result;
}

}  // namespace liecx

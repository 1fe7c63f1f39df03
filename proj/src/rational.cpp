#include "liecx/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace liecx {

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto valid = [](std::string_view t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = 0;
    if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num(s.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  if (!valid(num, true) || !valid(den, false)) return std::nullopt;
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::optional<Rational> Rational::from_double(double x, long max_den) {
  if (!std::isfinite(x) || max_den < 1) return std::nullopt;
  const bool neg = x < 0;
  double t = neg ? -x : x;

  // Continued-fraction convergents p/q of t, stopping before q exceeds
  // max_den; the final semiconvergent is considered as well and the closer
  // candidate wins.
  mpz_class p_prev = 0, q_prev = 1;  // h_{-2}/k_{-2}
  mpz_class p_cur = 1, q_cur = 0;    // h_{-1}/k_{-1}
  double frac = t;
  mpz_class best_p = 0, best_q = 1;
  bool have_best = false;
  auto closer = [&](const mpz_class& p, const mpz_class& q) {
    if (!have_best) return true;
    mpq_class cand(p, q), best(best_p, best_q);
    cand.canonicalize();
    best.canonicalize();
    mpq_class xs(t);
    mpq_class dc = cand - xs, db = best - xs;
    if (sgn(dc) < 0) dc = -dc;
    if (sgn(db) < 0) db = -db;
    int c = cmp(dc, db);
    if (c != 0) return c < 0;
    return q < best_q;
  };
  for (int iter = 0; iter < 64; ++iter) {
    double a_f = std::floor(frac);
    if (a_f > 9e18) break;
    mpz_class a(static_cast<long>(a_f));
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    if (q_next > max_den) {
      // Largest semiconvergent with denominator within bound.
      if (q_cur != 0) {
        mpz_class room = (mpz_class(max_den) - q_prev) / q_cur;
        if (room > 0) {
          mpz_class ps = room * p_cur + p_prev;
          mpz_class qs = room * q_cur + q_prev;
          if (qs >= 1 && qs <= max_den && closer(ps, qs)) {
            best_p = ps;
            best_q = qs;
            have_best = true;
          }
        }
      }
      break;
    }
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (closer(p_cur, q_cur)) {
      best_p = p_cur;
      best_q = q_cur;
      have_best = true;
    }
    double rem = frac - a_f;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (!have_best) return std::nullopt;
  mpq_class q(best_p, best_q);
  q.canonicalize();
  if (neg) q = -q;
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liecx

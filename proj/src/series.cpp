#include "dinikit/series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dinikit/bounds.hpp"

namespace dinikit::dini {

int max_terms() {
  if (const char* s = std::getenv("DINIKIT_MAX_TERMS")) {
    char* end = nullptr;
    const long val = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && val > 0 && val <= 1000000) return static_cast<int>(val);
  }
  return kDefaultMaxTerms;
}

Rational pochhammer(const Rational& x, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  Rational acc(1);
  for (long k = 0; k < n; ++k) acc *= x + Rational(k);
  return acc;
}

double pochhammer(double x, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double acc = 1.0;
  for (long k = 0; k < n; ++k) acc *= x + static_cast<double>(k);
  return acc;
}

Rational dini_coeff(const Params& p, long n) {
  require_series_domain(p);
  if (n < 1) throw std::invalid_argument("dini_coeff: n must be >= 1 (the z-coefficient is 1)");
  // a_n = (-1)^n (2n+alpha) / (alpha 4^n n! (v+1)_n), by the recurrence from a_0 = 1.
  Rational a(1);
  for (long k = 1; k <= n; ++k) {
    const Rational num = Rational(2 * k) + p.alpha;
    const Rational den = (Rational(2 * (k - 1)) + p.alpha) * Rational(4) * Rational(k) *
                         (p.v + Rational(k));
    a *= -(num / den);
  }
  return a;
}

std::vector<double> coeff_table(const Params& p, int order) {
  require_series_domain(p);
  if (order < 0) throw std::invalid_argument("coeff_table: order must be >= 0");
  const double alpha = p.alpha_d();
  const double v = p.v_d();
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1.0;
  double a = 1.0;
  for (int n = 1; n <= order; ++n) {
    a *= -(2.0 * n + alpha) / ((2.0 * (n - 1) + alpha) * 4.0 * n * (v + n));
    c[static_cast<std::size_t>(n)] = a;
  }
  return c;
}

namespace {

// The reduced deriv-0 series w(z)/z drops sum_{n>N} a_n z^n, whose majorant
// sum is the deriv-0 tail divided by r. The deriv-1 series is its own
// reduced form, so no adjustment there.
Truncation find_order(const Params& p, double r, int deriv, double tol, bool reduced) {
  require_series_domain(p);
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be positive");
  if (!(r >= 0) || !std::isfinite(r)) throw std::invalid_argument("radius must be finite and >= 0");
  if (deriv != 0 && deriv != 1) throw std::invalid_argument("deriv must be 0 or 1");

  const Rational rr = Rational::from_double(r);
  const Rational s = Rational(8) * (p.v + Rational(1));
  if (!(rr < s))
    throw EvalUnachievable("tolerance unachievable: radius " + std::to_string(r) +
                           " is not below the majorant threshold 8(v+1) = " + s.str());

  const int cap = max_terms();
  for (int N = 0; N <= cap; ++N) {
    Rational tail = bounds::tail_bound_exact(p.alpha, p.v, N, rr, deriv);
    if (reduced && deriv == 0 && rr.sign() > 0) tail /= rr;
    const double tail_d = tail.to_double_up();
    if (tail_d <= tol) return Truncation{N, tail_d};
  }
  char msg[128];
  std::snprintf(msg, sizeof msg, "tolerance %g unachievable within %d terms at radius %g", tol,
                cap, r);
  throw EvalUnachievable(msg);
}

}  // namespace

Truncation find_truncation_order(const Params& p, double r, int deriv, double tol) {
  return find_order(p, r, deriv, tol, false);
}

Complex eval_reduced_at_order(const Params& p, Complex z, int order, int deriv) {
  const std::vector<double> a = coeff_table(p, order);
  // Horner on 1 + sum w_n a_n z^n with w_n = 1 (deriv 0) or n+1 (deriv 1).
  Complex acc{0.0, 0.0};
  for (int n = order; n >= 1; --n) {
    const double w = deriv == 0 ? 1.0 : static_cast<double>(n + 1);
    acc = (acc + w * a[static_cast<std::size_t>(n)]) * z;
  }
  return acc + 1.0;
}

EvalResult eval_w(const Params& p, Complex z, int deriv, double tol) {
  const Truncation tr = find_truncation_order(p, std::abs(z), deriv, tol);
  const Complex reduced = eval_reduced_at_order(p, z, tr.order, deriv);
  return EvalResult{deriv == 0 ? z * reduced : reduced, tr.order, tr.tail, false};
}

EvalResult eval_w_reduced(const Params& p, Complex z, int deriv, double tol) {
  const Truncation tr = find_order(p, std::abs(z), deriv, tol, true);
  return EvalResult{eval_reduced_at_order(p, z, tr.order, deriv), tr.order, tr.tail, false};
}

Complex eval_partial(const Params& p, Complex z, int deriv) {
  const Complex reduced = eval_partial_reduced(p, z, deriv);
  return deriv == 0 ? z * reduced : reduced;
}

Complex eval_partial_reduced(const Params& p, Complex z, int deriv) {
  if (p.m < 0) throw std::invalid_argument("partial-sum order m must be >= 0");
  return eval_reduced_at_order(p, z, p.m, deriv);
}

}  // namespace dinikit::dini

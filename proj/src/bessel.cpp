#include "dinikit/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "dinikit/series.hpp"

namespace dinikit::dini {

namespace {

bool on_negative_axis(Complex x) { return x.imag() == 0.0 && x.real() < 0.0; }

bool is_integer(double v) { return v == std::floor(v); }

EvalResult bessel_at_zero(double v, int deriv) {
  if (deriv == 0) return EvalResult{Complex{v == 0.0 ? 1.0 : 0.0, 0.0}, 0, 0.0, false};
  if (v == 0.0) return EvalResult{Complex{0.0, 0.0}, 0, 0.0, false};
  if (v == 1.0) return EvalResult{Complex{0.5, 0.0}, 0, 0.0, false};
  if (v > 1.0) return EvalResult{Complex{0.0, 0.0}, 0, 0.0, false};
  throw std::domain_error("bessel_j: derivative is singular at x = 0 for 0 < v < 1 or v < 0");
}

}  // namespace

EvalResult bessel_j(double v, Complex x, int deriv, double tol) {
  if (!(v > -1.0)) throw std::domain_error("bessel_j: requires v > -1");
  if (deriv != 0 && deriv != 1) throw std::invalid_argument("bessel_j: deriv must be 0 or 1");
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("bessel_j: tol must be positive");
  if (x == Complex{0.0, 0.0}) return bessel_at_zero(v, deriv);

  const bool warn = on_negative_axis(x) && !is_integer(v);
  const Complex half = x / 2.0;
  const Complex y = half * half;
  const double ay = std::abs(y);

  // deriv 0: (x/2)^v / Gamma(v+1) * sum u_n,          u_0 = 1,
  // deriv 1: (x/2)^(v-1) / (2 Gamma(v+1)) * sum (2n+v) u_n,
  // with u_{n+1} = -u_n y / ((n+1)(v+n+1)).
  const Complex prefactor = deriv == 0
                                ? std::pow(half, Complex{v, 0.0}) / std::tgamma(v + 1.0)
                                : std::pow(half, Complex{v - 1.0, 0.0}) / (2.0 * std::tgamma(v + 1.0));
  const double apre = std::abs(prefactor);

  Complex sum{0.0, 0.0};
  Complex u{1.0, 0.0};
  const int cap = max_terms();
  for (int n = 0; n <= cap; ++n) {
    sum += deriv == 0 ? u : (2.0 * n + v) * u;
    const Complex u_next = -u * y / ((n + 1.0) * (v + n + 1.0));
    // Remaining terms shrink at least geometrically once the term ratio
    // rho = |y| / ((n+2)(v+n+2)) scaled by the weight growth is below 1.
    const double rho = ay / ((n + 2.0) * (v + n + 2.0));
    const double growth = deriv == 0 ? 1.0 : (2.0 * n + 4.0 + v) / (2.0 * n + 2.0 + v);
    const double grho = growth * rho;
    if (grho < 0.5) {
      const double head = deriv == 0 ? std::abs(u_next) : (2.0 * (n + 1.0) + v) * std::abs(u_next);
      const double tail = apre * head / (1.0 - grho);
      if (tail <= tol) return EvalResult{prefactor * sum, n, tail, warn};
    }
    u = u_next;
  }
  throw EvalUnachievable("bessel_j: tolerance unachievable within " + std::to_string(cap) +
                         " terms at |x| = " + std::to_string(std::abs(x)));
}

Complex w_via_bessel(const Params& p, Complex z, double tol) {
  require_series_domain(p);
  if (z == Complex{0.0, 0.0})
    throw std::invalid_argument("w_via_bessel: z must be nonzero (the series route handles 0)");
  const double v = p.v_d();
  const double alpha = p.alpha_d();
  const Complex u = std::sqrt(z);
  const EvalResult jv = bessel_j(v, u, 0, tol / 2);
  const EvalResult jvp = bessel_j(v, u, 1, tol / 2);
  const Complex pref = std::pow(2.0, v) * std::tgamma(v + 1.0) / alpha;
  return pref * std::pow(z, Complex{1.0 - v / 2.0, 0.0}) *
         ((alpha - v) * jv.value + u * jvp.value);
}

double ode_residual(double v, const std::vector<double>& points, double tol) {
  if (!(v > -1.0)) throw std::domain_error("ode_residual: requires v > -1");
  (void)tol;
  // Term-wise: y = sum c_n x^(2n+v), c_n = (-1)^n / (n! Gamma(v+n+1) 2^(2n+v)).
  // 30 terms put the boundary term of the telescoping residual far below
  // any tolerance of interest for x in (0, 1].
  constexpr int kOrder = 30;
  double worst = 0.0;
  for (const double x : points) {
    if (!(x > 0)) throw std::invalid_argument("ode_residual: points must be positive");
    double c = 1.0 / (std::tgamma(v + 1.0) * std::pow(2.0, v));
    double y = 0.0, yp = 0.0, ypp = 0.0;
    for (int n = 0; n <= kOrder; ++n) {
      const double mu = 2.0 * n + v;
      const double t = c * std::pow(x, mu);
      y += t;
      yp += mu * t / x;
      ypp += mu * (mu - 1.0) * t / (x * x);
      c *= -1.0 / (4.0 * (n + 1.0) * (v + n + 1.0));
    }
    const double res = std::abs(x * x * ypp + x * yp + (x * x - v * v) * y);
    worst = std::max(worst, res);
  }
  return worst;
}

}  // namespace dinikit::dini

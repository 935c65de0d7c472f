#include "dinikit/bounds.hpp"

#include <stdexcept>

namespace dinikit::bounds {

namespace {

void require_bounds(const Rational& alpha, const Rational& v) {
  require_bounds_domain(Params{alpha, v, 0});
}

void require_series(const Rational& alpha, const Rational& v) {
  require_series_domain(Params{alpha, v, 0});
}

// Numerator and denominator polynomials of the four ratio constants, kept
// unreduced so the recomposition identities between them stay visible.
Rational ratio_w_num(const Rational& a, const Rational& v) {
  return Rational(8) * (a - Rational(4)) * v + Rational(5) * a - Rational(32);
}

Rational ratio_w_den(const Rational& a, const Rational& v) {
  return (Rational(8) * v + Rational(7)) * a;
}

Rational ratio_wp_num(const Rational& a, const Rational& v) {
  return Rational(512) * a * v.pow_int(3) +
         Rational(64) * (Rational(17) * a - Rational(8)) * v.pow_int(2) +
         Rational(16) * (Rational(59) * a - Rational(32)) * v + Rational(133) * a -
         Rational(512);
}

Rational ratio_wp_den(const Rational& a, const Rational& v) {
  return Rational(256) * (Rational(2) + a) * v.pow_int(2) +
         Rational(8) * (Rational(64) + Rational(29) * a) * v + Rational(210) * a +
         Rational(512);
}

Rational ratio_wp_inv_den(const Rational& a, const Rational& v) {
  return Rational(512) * a * v.pow_int(3) +
         Rational(64) * (Rational(25) * a + Rational(8)) * v.pow_int(2) +
         Rational(128) * (Rational(11) * a + Rational(4)) * v + Rational(553) * a +
         Rational(512);
}

}  // namespace

Rational bound_value(BoundKind kind, const Rational& alpha, const Rational& v) {
  require_bounds(alpha, v);
  const Rational d = Rational(8) * v + Rational(7);  // positive on this domain
  switch (kind) {
    // Sup constants: 1 + full majorant sum at r = 1. The geometric sums
    // telescope to these closed forms; tail_bound_exact(N=0, r=1) re-derives
    // them, which the tests assert exactly.
    case BoundKind::kSupW:
      return Rational(1) + (Rational(2) * alpha * d + Rational(32) * (v + Rational(1))) /
                               (alpha * d.pow_int(2));
    case BoundKind::kSupWPrime:
      return Rational(1) +
             (Rational(256) * (Rational(2) + alpha) * v.pow_int(2) +
              Rational(16) * (Rational(64) + Rational(29) * alpha) * v +
              Rational(210) * alpha + Rational(512)) /
                 (alpha * d.pow_int(3));
    case BoundKind::kRatioW:
      return ratio_w_num(alpha, v) / ratio_w_den(alpha, v);
    case BoundKind::kRatioWInv:
      return ratio_w_den(alpha, v) /
             (ratio_w_den(alpha, v) + Rational(32) * v + Rational(2) * alpha + Rational(32));
    case BoundKind::kRatioWPrime:
      return ratio_wp_num(alpha, v) / ratio_wp_den(alpha, v);
    case BoundKind::kRatioWPrimeInv:
      return d.pow_int(3) * alpha / ratio_wp_inv_den(alpha, v);
  }
  throw std::logic_error("bound_value: unknown kind");
}

Hypothesis hypothesis(HypothesisKind kind, const Rational& alpha, const Rational& v) {
  require_bounds(alpha, v);
  Rational slack = kind == HypothesisKind::kRatioW ? ratio_w_num(alpha, v)
                                                   : ratio_wp_num(alpha, v);
  const bool ok = slack.sign() >= 0;
  return Hypothesis{std::move(slack), ok};
}

HypothesisKind hypothesis_for(BoundKind kind) {
  switch (kind) {
    case BoundKind::kRatioW:
    case BoundKind::kRatioWInv:
      return HypothesisKind::kRatioW;
    case BoundKind::kRatioWPrime:
    case BoundKind::kRatioWPrimeInv:
      return HypothesisKind::kRatioWPrime;
    default:
      throw std::invalid_argument("hypothesis_for: sup bounds carry no hypothesis");
  }
}

Rational coeff_majorant(const Rational& alpha, const Rational& v, long n) {
  require_series(alpha, v);
  if (n < 1) throw std::invalid_argument("coeff_majorant: n must be >= 1");
  // (2n+a) / (a 4^n 2^(n-1) (v+1)^n) = 2 (2n+a) / (a (8(v+1))^n)
  const Rational s = Rational(8) * (v + Rational(1));
  return Rational(2) * (Rational(2 * n) + alpha) / (alpha * s.pow_int(n));
}

Rational tail_bound_exact(const Rational& alpha, const Rational& v, long N, const Rational& r,
                          int deriv) {
  require_series(alpha, v);
  if (N < 0) throw std::invalid_argument("tail_bound: N must be >= 0");
  if (deriv != 0 && deriv != 1) throw std::invalid_argument("tail_bound: deriv must be 0 or 1");
  if (r.sign() < 0) throw std::invalid_argument("tail_bound: r must be >= 0");

  const Rational s = Rational(8) * (v + Rational(1));
  const Rational q = r / s;
  if (!(q < Rational(1)))
    throw std::domain_error("tail_bound: requires r < 8(v+1), got r = " + r.str() +
                            " with 8(v+1) = " + s.str());
  if (q.sign() == 0) return Rational(0);

  // With M_n = 2(2n+a)/(a s^n) and q = r/s, the tails are polynomials in the
  // weighted geometric sums
  //   S_k = sum_{n>N} n^k q^n,  k = 0, 1, 2:
  //   deriv 0:  sum_{n>N} (4n + 2a) r^(n+1) / (a s^n) = (2r/a) (2 S1 + a S0)
  //   deriv 1:  sum_{n>N} (n+1)(4n + 2a) r^n / (a s^n)
  //           = (2/a) (2 S2 + (2 + a) S1 + a S0)
  const Rational one(1);
  const Rational Q = q.pow_int(N + 1);
  const Rational p = one - q;
  const Rational nn(N);
  const Rational S0 = Q / p;
  const Rational S1 = Q * ((nn + one) - nn * q) / p.pow_int(2);
  const Rational S2 = Q *
                      ((nn + one).pow_int(2) -
                       (Rational(2) * nn.pow_int(2) + Rational(2) * nn - one) * q +
                       nn.pow_int(2) * q.pow_int(2)) /
                      p.pow_int(3);

  if (deriv == 0) return Rational(2) * r * (Rational(2) * S1 + alpha * S0) / alpha;
  return Rational(2) * (Rational(2) * S2 + (Rational(2) + alpha) * S1 + alpha * S0) / alpha;
}

double tail_bound(const Rational& alpha, const Rational& v, long N, double r, int deriv) {
  return tail_bound_exact(alpha, v, N, Rational::from_double(r), deriv).to_double_up();
}

}  // namespace dinikit::bounds

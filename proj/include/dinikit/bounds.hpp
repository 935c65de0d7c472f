#pragma once

#include "dinikit/params.hpp"
#include "dinikit/rational.hpp"

namespace dinikit::bounds {

// Closed-form constants attached to the unit-disk claims, exact rationals in
// lowest terms. The Sup* kinds bound moduli from above; the Ratio* kinds
// bound real parts of series quotients from below.
enum class BoundKind {
  kSupW,            // sup_{|z|<1} |w(z)|  <= this
  kSupWPrime,       // sup_{|z|<1} |w'(z)| <= this
  kRatioW,          // Re w/(w)_m          >= this
  kRatioWInv,       // Re (w)_m/w          >= this
  kRatioWPrime,     // Re w'/(w)_m'        >= this
  kRatioWPrimeInv,  // Re (w)_m'/w'        >= this
};

[[nodiscard]] Rational bound_value(BoundKind kind, const Rational& alpha, const Rational& v);

// Sign gates of the two ratio-claim families: each lower bound is asserted
// only when the matching polynomial in (alpha, v) is nonnegative.
enum class HypothesisKind { kRatioW, kRatioWPrime };

struct Hypothesis {
  Rational slack;  // polynomial value; the claim applies iff slack >= 0
  bool satisfied = false;
};

[[nodiscard]] Hypothesis hypothesis(HypothesisKind kind, const Rational& alpha, const Rational& v);
[[nodiscard]] HypothesisKind hypothesis_for(BoundKind kind);

// Termwise majorant of |a_n| for v > -1 and n >= 1:
//   M_n = (2n + alpha) / (alpha 4^n 2^(n-1) (v+1)^n),
// from n! >= 2^(n-1) and (v+1)_n >= (v+1)^n. Equality at n = 1.
[[nodiscard]] Rational coeff_majorant(const Rational& alpha, const Rational& v, long n);

// Exact geometric sum dominating the series tail beyond index N at radius r:
//   deriv = 0:  sum_{n>N}       M_n r^(n+1)   (tail of w)
//   deriv = 1:  sum_{n>N} (n+1) M_n r^n       (tail of w'; >= the r^(n+1) sum)
// Requires v > -1, r >= 0 and r < 8(v+1) so that q = r/(8(v+1)) < 1.
[[nodiscard]] Rational tail_bound_exact(const Rational& alpha, const Rational& v, long N,
                                        const Rational& r, int deriv);

// Same bound rounded upward into binary64; still a valid certificate.
[[nodiscard]] double tail_bound(const Rational& alpha, const Rational& v, long N, double r,
                                int deriv);

}  // namespace dinikit::bounds

#pragma once

#include <complex>

#include "dinikit/rational.hpp"

namespace dinikit {

using Complex = std::complex<double>;

// Parameters of the normalized series
//   w(z) = z + sum_{n>=1} a_n z^{n+1},
//   a_n  = (-1)^n (2n + alpha) / (alpha 4^n n! (v+1)_n),
// together with the partial-sum order m used by the ratio claims.
struct Params {
  Rational alpha;
  Rational v;
  int m = 0;

  [[nodiscard]] double alpha_d() const { return alpha.to_double(); }
  [[nodiscard]] double v_d() const { return v.to_double(); }
};

// Coefficients exist for alpha > 0 and v > -1 (every Pochhammer factor nonzero).
[[nodiscard]] bool in_series_domain(const Params& p);
// The closed-form disk constants additionally need 8v + 7 > 0, the threshold
// at which the coefficient majorant converges at radius 1.
[[nodiscard]] bool in_bounds_domain(const Params& p);

void require_series_domain(const Params& p);  // throws std::domain_error
void require_bounds_domain(const Params& p);  // throws std::domain_error

struct EvalResult {
  Complex value{};
  int terms_used = 0;       // highest series index n retained
  double tail_bound = 0.0;  // certified upper bound on the dropped tail's modulus
  bool branch_warning = false;
};

}  // namespace dinikit

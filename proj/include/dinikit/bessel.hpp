#pragma once

#include <vector>

#include "dinikit/params.hpp"

namespace dinikit::dini {

// J_v by the ascending series with a running geometric tail certificate.
// Principal branch of (x/2)^v for non-integer v; x on the negative real axis
// then sets branch_warning in the result. Requires v > -1.
[[nodiscard]] EvalResult bessel_j(double v, Complex x, int deriv = 0, double tol = 1e-12);

// w through the Bessel route:
//   (2^v / alpha) Gamma(v+1) z^(1-v/2) ((alpha-v) J_v(sqrt z) + sqrt z J_v'(sqrt z)),
// principal sqrt. The combination is even in sqrt z, so the value does not
// depend on the branch; agreement with eval_w is asserted by tests, not assumed.
// Requires z != 0.
[[nodiscard]] Complex w_via_bessel(const Params& p, Complex z, double tol = 1e-12);

// Max modulus over the given abscissas of the Bessel ODE residual
//   x^2 y'' + x y' + (x^2 - v^2) y
// with y the truncated series and derivatives taken term-wise.
[[nodiscard]] double ode_residual(double v, const std::vector<double>& points,
                                  double tol = 1e-12);

}  // namespace dinikit::dini

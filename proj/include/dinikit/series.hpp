#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dinikit/params.hpp"

namespace dinikit::dini {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultMaxTerms = 200;

// Series cap; DINIKIT_MAX_TERMS overrides (read per call, not cached).
[[nodiscard]] int max_terms();

// (x)_n = x (x+1) ... (x+n-1) by running product. (x)_0 = 1.
[[nodiscard]] Rational pochhammer(const Rational& x, long n);
[[nodiscard]] double pochhammer(double x, long n);

// Exact coefficient a_n of z^(n+1), n >= 1. The z-coefficient is fixed at 1
// by normalization, so n = 0 is rejected.
[[nodiscard]] Rational dini_coeff(const Params& p, long n);

// Thrown when the requested tolerance needs more terms than the cap allows,
// or the majorant ratio q = r/(8(v+1)) is not < 1.
struct EvalUnachievable : std::runtime_error {
  explicit EvalUnachievable(const std::string& what) : std::runtime_error(what) {}
};

struct Truncation {
  int order = 0;    // highest retained index N
  double tail = 0.0;  // certified bound on everything dropped
};

// Smallest N whose certified tail at radius r is <= tol.
[[nodiscard]] Truncation find_truncation_order(const Params& p, double r, int deriv, double tol);

// w (deriv = 0) or w' (deriv = 1) with a certified truncation error.
[[nodiscard]] EvalResult eval_w(const Params& p, Complex z, int deriv = 0,
                                double tol = kDefaultTol);

// Exact finite sum z + sum_{n=1..m} a_n z^(n+1), or its derivative.
[[nodiscard]] Complex eval_partial(const Params& p, Complex z, int deriv = 0);

// Constant-term-1 companions used wherever a ratio is formed, so that z = 0
// is a regular point with value exactly 1:
//   deriv = 0:  w(z)/z  = 1 + sum a_n z^n
//   deriv = 1:  w'(z)   = 1 + sum (n+1) a_n z^n
[[nodiscard]] EvalResult eval_w_reduced(const Params& p, Complex z, int deriv,
                                        double tol = kDefaultTol);
[[nodiscard]] Complex eval_partial_reduced(const Params& p, Complex z, int deriv);

// Fixed-order reduced evaluation; shares the code path of eval_w_reduced so
// ring scans can hoist the truncation search out of their inner loop.
[[nodiscard]] Complex eval_reduced_at_order(const Params& p, Complex z, int order, int deriv);

// c_0..c_N with c_n = a_n in binary64, built by the term recurrence
// a_{n+1}/a_n = -(2(n+1)+alpha) / ((2n+alpha) 4 (n+1) (v+n+1)).
[[nodiscard]] std::vector<double> coeff_table(const Params& p, int order);

}  // namespace dinikit::dini

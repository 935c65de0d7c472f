#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dinikit/bounds.hpp"
#include "dinikit/params.hpp"

namespace dinikit::dini {

// The four series quotients whose real parts carry claimed lower bounds.
enum class RatioKind { kWOverPartial, kPartialOverW, kWpOverPartialp, kPartialpOverWp };

[[nodiscard]] int ratio_deriv(RatioKind k);      // 0 for the w ratios, 1 for the w' ratios
[[nodiscard]] bool ratio_inverted(RatioKind k);  // true when the partial sum is on top
[[nodiscard]] bounds::BoundKind ratio_bound(RatioKind k);
[[nodiscard]] bounds::HypothesisKind ratio_hypothesis(RatioKind k);
[[nodiscard]] const char* ratio_name(RatioKind k);

// Raised when a quotient's denominator modulus falls below the floor.
struct DivisionNearZero : std::runtime_error {
  explicit DivisionNearZero(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kDenominatorFloor = 1e-14;
inline constexpr double kSeriesFallbackRadius = 1e-2;

// The ratio at z, both sides in constant-term-1 form so that z = 0 is regular
// with value exactly 1.
[[nodiscard]] Complex ratio_value(RatioKind kind, const Params& p, Complex z,
                                  double tol = 1e-12,
                                  double denom_floor = kDenominatorFloor);

// The six fixed ratio functions with elementary trig closed forms.
enum class CorollaryFn { kF1, kF2, kF3, kF4, kF5, kF6 };

struct CorollaryInfo {
  CorollaryFn fn;
  const char* name;        // "f1" .. "f6"
  Params params;           // alpha, v, m = 0
  RatioKind kind;
  Rational scale;          // fn == scale * ratio
  Rational claimed_bound;  // scale * bound_value(ratio_bound(kind))
};

[[nodiscard]] const std::array<CorollaryInfo, 6>& corollary_catalog();
[[nodiscard]] const CorollaryInfo& corollary_info(CorollaryFn fn);
[[nodiscard]] CorollaryFn corollary_from_name(std::string_view name);  // "f1" .. "f6"

// Elementary closed form away from the origin, series quotient inside
// |z| < kSeriesFallbackRadius where the trig forms cancel badly.
// Principal branch of sqrt(z); every form is even in sqrt(z).
[[nodiscard]] Complex corollary_fn(CorollaryFn fn, Complex z, double tol = 1e-12,
                                   double denom_floor = kDenominatorFloor);

}  // namespace dinikit::dini

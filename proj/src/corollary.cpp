#include "dinikit/corollary.hpp"

#include <cmath>
#include <sstream>

#include "dinikit/series.hpp"

namespace dinikit::dini {

int ratio_deriv(RatioKind k) {
  return (k == RatioKind::kWOverPartial || k == RatioKind::kPartialOverW) ? 0 : 1;
}

bool ratio_inverted(RatioKind k) {
  return k == RatioKind::kPartialOverW || k == RatioKind::kPartialpOverWp;
}

bounds::BoundKind ratio_bound(RatioKind k) {
  switch (k) {
    case RatioKind::kWOverPartial: return bounds::BoundKind::kRatioW;
    case RatioKind::kPartialOverW: return bounds::BoundKind::kRatioWInv;
    case RatioKind::kWpOverPartialp: return bounds::BoundKind::kRatioWPrime;
    case RatioKind::kPartialpOverWp: return bounds::BoundKind::kRatioWPrimeInv;
  }
  throw std::logic_error("ratio_bound: unknown kind");
}

bounds::HypothesisKind ratio_hypothesis(RatioKind k) {
  return bounds::hypothesis_for(ratio_bound(k));
}

const char* ratio_name(RatioKind k) {
  switch (k) {
    case RatioKind::kWOverPartial: return "w_over_partial";
    case RatioKind::kPartialOverW: return "partial_over_w";
    case RatioKind::kWpOverPartialp: return "wprime_over_partialprime";
    case RatioKind::kPartialpOverWp: return "partialprime_over_wprime";
  }
  throw std::logic_error("ratio_name: unknown kind");
}

namespace {

[[noreturn]] void throw_near_zero(const char* what, Complex z, double mod) {
  std::ostringstream os;
  os << what << " denominator modulus " << mod << " below floor at z = (" << z.real() << ", "
     << z.imag() << ")";
  throw DivisionNearZero(os.str());
}

}  // namespace

Complex ratio_value(RatioKind kind, const Params& p, Complex z, double tol, double denom_floor) {
  const int deriv = ratio_deriv(kind);
  // Both sides share the leading 1, so the quotient of the reduced series is
  // the ratio itself, for the w pair as well as the w' pair.
  const Complex full = eval_w_reduced(p, z, deriv, tol).value;
  const Complex part = eval_partial_reduced(p, z, deriv);
  const Complex num = ratio_inverted(kind) ? part : full;
  const Complex den = ratio_inverted(kind) ? full : part;
  const double dm = std::abs(den);
  if (dm < denom_floor) throw_near_zero(ratio_name(kind), z, dm);
  return num / den;
}

const std::array<CorollaryInfo, 6>& corollary_catalog() {
  using bounds::bound_value;
  static const std::array<CorollaryInfo, 6> cat = [] {
    const Params p1{Rational(1), Rational(1, 2), 0};
    const Params p32{Rational(3, 2), Rational(1, 2), 0};
    const Params p5{Rational(5), Rational(3, 2), 0};
    auto claimed = [](const Params& p, RatioKind k, const Rational& scale) {
      return scale * bound_value(ratio_bound(k), p.alpha, p.v);
    };
    std::array<CorollaryInfo, 6> c{{
        {CorollaryFn::kF1, "f1", p1, RatioKind::kWpOverPartialp, Rational(1), Rational(0)},
        {CorollaryFn::kF2, "f2", p1, RatioKind::kPartialpOverWp, Rational(1), Rational(0)},
        {CorollaryFn::kF3, "f3", p32, RatioKind::kWpOverPartialp, Rational(1), Rational(0)},
        {CorollaryFn::kF4, "f4", p32, RatioKind::kPartialpOverWp, Rational(1), Rational(0)},
        {CorollaryFn::kF5, "f5", p5, RatioKind::kWOverPartial, Rational(20, 3), Rational(0)},
        {CorollaryFn::kF6, "f6", p5, RatioKind::kPartialOverW, Rational(3, 20), Rational(0)},
    }};
    for (auto& info : c) info.claimed_bound = claimed(info.params, info.kind, info.scale);
    return c;
  }();
  return cat;
}

const CorollaryInfo& corollary_info(CorollaryFn fn) {
  return corollary_catalog()[static_cast<std::size_t>(fn)];
}

CorollaryFn corollary_from_name(std::string_view name) {
  for (const auto& info : corollary_catalog())
    if (name == info.name) return info.fn;
  throw std::invalid_argument("unknown function id \"" + std::string(name) +
                              "\" (expected f1..f6)");
}

namespace {

// Closed forms, u = sqrt(z), all even in u:
//   f1 = cos u - (u/2) sin u                       (w' at alpha=1,   v=1/2)
//   f3 = sin u/(6u) + (5/6) cos u - (u/3) sin u    (w' at alpha=3/2, v=1/2)
//   f5 = 4 (2 sin u/u - 2 cos u + u sin u) / u^2   ((20/3) w/z at alpha=5, v=3/2)
Complex trig_form(CorollaryFn fn, Complex z) {
  const Complex u = std::sqrt(z);
  const Complex su = std::sin(u);
  const Complex cu = std::cos(u);
  switch (fn) {
    case CorollaryFn::kF1:
    case CorollaryFn::kF2:
      return cu - 0.5 * u * su;
    case CorollaryFn::kF3:
    case CorollaryFn::kF4:
      return su / (6.0 * u) + (5.0 / 6.0) * cu - (u / 3.0) * su;
    case CorollaryFn::kF5:
    case CorollaryFn::kF6:
      return 4.0 * (2.0 * su / u - 2.0 * cu + u * su) / (u * u);
  }
  throw std::logic_error("trig_form: unknown fn");
}

bool is_reciprocal(CorollaryFn fn) {
  return fn == CorollaryFn::kF2 || fn == CorollaryFn::kF4 || fn == CorollaryFn::kF6;
}

}  // namespace

Complex corollary_fn(CorollaryFn fn, Complex z, double tol, double denom_floor) {
  const CorollaryInfo& info = corollary_info(fn);
  if (std::abs(z) < kSeriesFallbackRadius) {
    const Complex ratio = ratio_value(info.kind, info.params, z, tol, denom_floor);
    return info.scale.to_double() * ratio;
  }
  if (!is_reciprocal(fn)) return trig_form(fn, z);
  const Complex den = trig_form(fn, z);
  const double dm = std::abs(den);
  if (dm < denom_floor) throw_near_zero(info.name, z, dm);
  return 1.0 / den;
}

}  // namespace dinikit::dini

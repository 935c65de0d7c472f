#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dinikit/corollary.hpp"
#include "dinikit/params.hpp"

namespace dinikit::verify {

// Deterministic polar grid over the open unit disk: radii r_i = r_max (i+1)/R
// ascending, angles theta_j = 2 pi j / A ascending, r-major order. Doubling R
// and A reproduces every coarse point bit-for-bit.
struct DiskSampling {
  int radii = 64;
  int angles = 720;
  double r_max = 0.999;                // capped at 1 - 1e-3: claims are open-disk
  bool includes_zero_neighborhood = false;  // prepends a ring at kZeroRingRadius
  std::vector<double> explicit_radii;  // when nonempty, replaces the uniform ladder
};

inline constexpr double kMaxRadius = 1.0 - 1e-3;
inline constexpr double kZeroRingRadius = 1e-4;
inline constexpr double kViolationTol = 1e-9;

struct SamplePoint {
  double r = 0.0;
  double theta = 0.0;
  Complex z{0.0, 0.0};
};

// Validated, sorted, deduplicated ascending radii. Throws std::invalid_argument.
[[nodiscard]] std::vector<double> sampling_radii(const DiskSampling& spec);
[[nodiscard]] std::vector<SamplePoint> sample_disk(const DiskSampling& spec);

enum class Verdict { kConfirmed, kViolated, kHypothesisFailed };
[[nodiscard]] const char* verdict_name(Verdict v);

struct HypothesisRecord {
  bounds::HypothesisKind kind;
  Rational slack;
  bool satisfied = false;
};

struct VerificationReport {
  std::string id;
  std::string statistic;  // "min_re" | "sup_mod" | "max_dev" | "slack"
  Params params;
  std::optional<HypothesisRecord> hypothesis;
  std::optional<Rational> claimed_bound;
  std::optional<Rational> scale;  // set when the statistic is a scaled ratio
  double empirical = 0.0;
  SamplePoint arg{};   // extremal sample; zeros for sampling-free cases
  double margin = 0.0;  // min cases: empirical - bound; sup/dev cases: bound - empirical
  long samples = 0;
  long skipped = 0;  // denominator-floor or non-finite samples, counted not dropped silently
  std::optional<SamplePoint> first_skipped;
  Verdict verdict = Verdict::kConfirmed;
};

// Minimum of Re{ratio} over the grid. The hypothesis is recorded either way;
// verdict is HYPOTHESIS_FAILED when it does not hold, else CONFIRMED iff
// min >= bound - kViolationTol. z = 0 samples take the limit value 1.
[[nodiscard]] VerificationReport min_real_part(dini::RatioKind kind, const Params& params,
                                               const DiskSampling& spec);

// Sampled sup of |w| (deriv 0) or |w'| (deriv 1) against the closed-form
// sup constant.
[[nodiscard]] VerificationReport sup_modulus(const Params& params, int deriv,
                                             const DiskSampling& spec);

// Max deviation between the f5/f6 closed forms and their scaled series
// ratios; certifies the scale factors. fn must be kF5 or kF6.
[[nodiscard]] VerificationReport scaling_oracle(dini::CorollaryFn fn, const DiskSampling& spec);

// Max |eval_w - w_via_bessel| over a fixed pseudo-random sample of |z| <= 0.9.
[[nodiscard]] VerificationReport representation_check(const Params& params, int points = 100);

enum class GeometryCriterion { kStarlike, kConvex };
enum class GeometryTarget { kFullSeries, kPartialSum };

struct GeometryReport {
  double infimum = 0.0;
  SamplePoint arg{};
  long samples = 0;
  long skipped = 0;
};

// Sampled infimum of Re(z f'/f) (starlike) or Re(1 + z f''/f') (convex) for
// f = w or its order-m partial sum. Numerical evidence only.
[[nodiscard]] GeometryReport geometry_probe(GeometryCriterion criterion, GeometryTarget target,
                                            const Params& params, const DiskSampling& spec);

// The full claim catalog: 6 corollary minima, 6 sup checks, 2 scaling
// oracles, 6 hypothesis evaluations, 3 series-vs-Bessel cross-checks.
[[nodiscard]] std::vector<VerificationReport> run_catalog(const DiskSampling& spec = {});
[[nodiscard]] std::vector<std::string> catalog_ids();
[[nodiscard]] VerificationReport run_case(const std::string& id, const DiskSampling& spec = {});

}  // namespace dinikit::verify

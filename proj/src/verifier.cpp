#include "dinikit/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "dinikit/bessel.hpp"
#include "dinikit/series.hpp"

namespace dinikit::verify {

using dini::CorollaryFn;
using dini::RatioKind;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kViolated: return "VIOLATED";
    case Verdict::kHypothesisFailed: return "HYPOTHESIS_FAILED";
  }
  throw std::logic_error("verdict_name: unknown verdict");
}

std::vector<double> sampling_radii(const DiskSampling& spec) {
  if (spec.angles < 1) throw std::invalid_argument("sampling: angles must be >= 1");
  std::vector<double> radii;
  if (!spec.explicit_radii.empty()) {
    radii = spec.explicit_radii;
    for (const double r : radii)
      if (!(r >= 0.0) || r > kMaxRadius)
        throw std::invalid_argument("sampling: explicit radius " + std::to_string(r) +
                                    " outside [0, " + std::to_string(kMaxRadius) + "]");
  } else {
    if (spec.radii < 1) throw std::invalid_argument("sampling: radii must be >= 1");
    if (!(spec.r_max >= 0.0) || spec.r_max > kMaxRadius)
      throw std::invalid_argument("sampling: r_max must lie in [0, " +
                                  std::to_string(kMaxRadius) + "] (open-disk claims)");
    radii.reserve(static_cast<std::size_t>(spec.radii));
    for (int i = 0; i < spec.radii; ++i)
      radii.push_back(spec.r_max * (i + 1) / spec.radii);
  }
  if (spec.includes_zero_neighborhood) radii.push_back(kZeroRingRadius);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::vector<SamplePoint> sample_disk(const DiskSampling& spec) {
  const std::vector<double> radii = sampling_radii(spec);
  std::vector<SamplePoint> points;
  points.reserve(radii.size() * static_cast<std::size_t>(spec.angles));
  for (const double r : radii) {
    for (int j = 0; j < spec.angles; ++j) {
      const double theta = 2.0 * M_PI * j / spec.angles;
      points.push_back(SamplePoint{r, theta, Complex{r * std::cos(theta), r * std::sin(theta)}});
    }
  }
  return points;
}

namespace {

constexpr const char* kPairTags[3] = {"a1-v0.5", "a1.5-v0.5", "a5-v1.5"};

std::array<Params, 3> featured_pairs() {
  return {Params{Rational(1), Rational(1, 2), 0}, Params{Rational(3, 2), Rational(1, 2), 0},
          Params{Rational(5), Rational(3, 2), 0}};
}

struct Extremum {
  double value = 0.0;
  SamplePoint at{};
  long samples = 0;
  long skipped = 0;
  std::optional<SamplePoint> first_skipped;
};

// Scans ring-major with a per-ring evaluator so truncation searches hoist out
// of the inner loop. Ties keep the first hit in (r, theta) order.
Extremum scan(const DiskSampling& spec, bool minimize_re,
              const std::function<std::function<Complex(Complex)>(double)>& ring_factory) {
  const std::vector<double> radii = sampling_radii(spec);
  Extremum ex;
  bool have = false;
  for (const double r : radii) {
    const auto eval = ring_factory(r);
    for (int j = 0; j < spec.angles; ++j) {
      const double theta = 2.0 * M_PI * j / spec.angles;
      const Complex z{r * std::cos(theta), r * std::sin(theta)};
      ++ex.samples;
      double stat;
      try {
        const Complex val = eval(z);
        if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
          throw dini::DivisionNearZero("non-finite sample");
        stat = minimize_re ? val.real() : std::abs(val);
      } catch (const dini::DivisionNearZero&) {
        ++ex.skipped;
        if (!ex.first_skipped) ex.first_skipped = SamplePoint{r, theta, z};
        continue;
      }
      if (!have || (minimize_re ? stat < ex.value : stat > ex.value)) {
        ex.value = stat;
        ex.at = SamplePoint{r, theta, z};
        have = true;
      }
    }
  }
  if (!have) throw std::runtime_error("scan: every sample was skipped");
  return ex;
}

// Ratio of reduced series with the full-series truncation hoisted per ring.
// Agrees with ratio_value to within the shared tolerance; the hoisted order
// may differ by a term since ratio_value re-derives it from |z|, not r.
std::function<Complex(Complex)> ratio_ring(RatioKind kind, const Params& p, double r,
                                           double tol) {
  if (r == 0.0) {
    return [](Complex) { return Complex{1.0, 0.0}; };  // removable limit
  }
  const int deriv = dini::ratio_deriv(kind);
  const double tol_eff = deriv == 0 ? tol * r : tol;  // reduced deriv-0 tail is T0/r
  const int order = dini::find_truncation_order(p, r, deriv, tol_eff).order;
  const bool inverted = dini::ratio_inverted(kind);
  return [kind, p, deriv, order, inverted](Complex z) {
    const Complex full = dini::eval_reduced_at_order(p, z, order, deriv);
    const Complex part = dini::eval_partial_reduced(p, z, deriv);
    const Complex num = inverted ? part : full;
    const Complex den = inverted ? full : part;
    const double dm = std::abs(den);
    if (dm < dini::kDenominatorFloor)
      throw dini::DivisionNearZero(std::string(dini::ratio_name(kind)) + " denominator");
    return num / den;
  };
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

void fill_extremum(VerificationReport& rep, const Extremum& ex) {
  rep.empirical = ex.value;
  rep.arg = ex.at;
  rep.samples = ex.samples;
  rep.skipped = ex.skipped;
  rep.first_skipped = ex.first_skipped;
}

}  // namespace

VerificationReport min_real_part(RatioKind kind, const Params& params, const DiskSampling& spec) {
  require_bounds_domain(params);
  if (params.m < 0) throw std::invalid_argument("partial-sum order m must be >= 0");
  VerificationReport rep;
  rep.id = std::string("min-re-") + dini::ratio_name(kind);
  rep.statistic = "min_re";
  rep.params = params;
  const bounds::BoundKind bk = dini::ratio_bound(kind);
  const Rational bound = bounds::bound_value(bk, params.alpha, params.v);
  const bounds::Hypothesis hyp = bounds::hypothesis(dini::ratio_hypothesis(kind), params.alpha, params.v);
  rep.hypothesis = HypothesisRecord{dini::ratio_hypothesis(kind), hyp.slack, hyp.satisfied};
  rep.claimed_bound = bound;

  const Extremum ex = scan(spec, true, [&](double r) { return ratio_ring(kind, params, r, dini::kDefaultTol); });
  fill_extremum(rep, ex);
  rep.margin = rep.empirical - bound.to_double();
  rep.verdict = !hyp.satisfied ? Verdict::kHypothesisFailed
                : rep.margin >= -kViolationTol ? Verdict::kConfirmed
                                               : Verdict::kViolated;
  return rep;
}

VerificationReport sup_modulus(const Params& params, int deriv, const DiskSampling& spec) {
  require_bounds_domain(params);
  if (deriv != 0 && deriv != 1) throw std::invalid_argument("deriv must be 0 or 1");
  VerificationReport rep;
  rep.id = deriv == 0 ? "sup-w" : "sup-wprime";
  rep.statistic = "sup_mod";
  rep.params = params;
  const Rational bound = bounds::bound_value(
      deriv == 0 ? bounds::BoundKind::kSupW : bounds::BoundKind::kSupWPrime, params.alpha,
      params.v);
  rep.claimed_bound = bound;

  const Extremum ex = scan(spec, false, [&](double r) {
    const int order = dini::find_truncation_order(params, r, deriv, dini::kDefaultTol).order;
    return std::function<Complex(Complex)>([params, order, deriv](Complex z) {
      const Complex reduced = dini::eval_reduced_at_order(params, z, order, deriv);
      return deriv == 0 ? z * reduced : reduced;
    });
  });
  fill_extremum(rep, ex);
  rep.margin = bound.to_double() - rep.empirical;
  rep.verdict = rep.margin >= -kViolationTol ? Verdict::kConfirmed : Verdict::kViolated;
  return rep;
}

VerificationReport scaling_oracle(CorollaryFn fn, const DiskSampling& spec) {
  if (fn != CorollaryFn::kF5 && fn != CorollaryFn::kF6)
    throw std::invalid_argument("scaling_oracle: only f5 and f6 carry scale factors");
  const dini::CorollaryInfo& info = dini::corollary_info(fn);
  VerificationReport rep;
  rep.id = std::string("scaling-") + info.name;
  rep.statistic = "max_dev";
  rep.params = info.params;
  rep.scale = info.scale;
  rep.claimed_bound = Rational(1, 1000000000);

  const double scale = info.scale.to_double();
  const bool inverted = dini::ratio_inverted(info.kind);
  const Extremum ex = scan(spec, false, [&](double r) {
    const int order =
        r == 0.0 ? 0
                 : dini::find_truncation_order(info.params, r, 0, dini::kDefaultTol * std::max(r, 1e-6)).order;
    return std::function<Complex(Complex)>([=, params = info.params](Complex z) {
      const Complex reduced = dini::eval_reduced_at_order(params, z, order, 0);
      const Complex series = inverted ? scale / reduced : scale * reduced;
      const Complex closed = dini::corollary_fn(fn, z);
      return Complex{std::abs(closed - series), 0.0};
    });
  });
  fill_extremum(rep, ex);
  rep.margin = kViolationTol - rep.empirical;
  rep.verdict = rep.empirical <= kViolationTol ? Verdict::kConfirmed : Verdict::kViolated;
  return rep;
}

VerificationReport representation_check(const Params& params, int points) {
  require_series_domain(params);
  if (points < 1) throw std::invalid_argument("representation_check: points must be >= 1");
  VerificationReport rep;
  rep.id = "series-bessel";
  rep.statistic = "max_dev";
  rep.params = params;
  rep.claimed_bound = Rational(1, 1000000000);

  uint64_t state = 0x44494e49u;  // fixed seed, deterministic sample
  double worst = -1.0;
  for (int i = 0; i < points; ++i) {
    const double r = 0.9 * std::sqrt(unit_double(state));
    const double theta = 2.0 * M_PI * unit_double(state);
    const Complex z{r * std::cos(theta), r * std::sin(theta)};
    ++rep.samples;
    if (z == Complex{0.0, 0.0}) continue;
    const Complex direct = dini::eval_w(params, z, 0, 1e-12).value;
    const Complex composite = dini::w_via_bessel(params, z, 1e-12);
    const double dev = std::abs(direct - composite);
    if (dev > worst) {
      worst = dev;
      rep.arg = SamplePoint{r, theta, z};
    }
  }
  rep.empirical = worst;
  rep.margin = kViolationTol - worst;
  rep.verdict = worst <= kViolationTol ? Verdict::kConfirmed : Verdict::kViolated;
  return rep;
}

GeometryReport geometry_probe(GeometryCriterion criterion, GeometryTarget target,
                              const Params& params, const DiskSampling& spec) {
  require_series_domain(params);
  if (params.m < 0) throw std::invalid_argument("partial-sum order m must be >= 0");
  const bool starlike = criterion == GeometryCriterion::kStarlike;
  const bool partial = target == GeometryTarget::kPartialSum;

  // starlike: z f'/f      = [1 + sum (n+1) a_n z^n] / [1 + sum a_n z^n]
  // convex:   1 + z f''/f' = 1 + [sum n(n+1) a_n z^n] / [1 + sum (n+1) a_n z^n]
  const Extremum ex = scan(spec, true, [&](double r) -> std::function<Complex(Complex)> {
    if (r == 0.0) return [](Complex) { return Complex{1.0, 0.0}; };
    // Quadratic coefficient growth decays against the geometric majorant;
    // a handful of extra orders keeps the dropped tail far below 1e-12.
    const int order = partial ? params.m
                              : dini::find_truncation_order(params, r, 1, dini::kDefaultTol).order + 8;
    const std::vector<double> c = dini::coeff_table(params, order);
    return [starlike, order, c](Complex z) {
      Complex r0{0.0, 0.0}, r1{0.0, 0.0}, quad{0.0, 0.0};
      for (int n = order; n >= 1; --n) {
        const double a = c[static_cast<std::size_t>(n)];
        r0 = (r0 + a) * z;
        r1 = (r1 + (n + 1.0) * a) * z;
        quad = (quad + static_cast<double>(n) * (n + 1.0) * a) * z;
      }
      r0 += 1.0;
      r1 += 1.0;
      const Complex num = starlike ? r1 : quad;
      const Complex den = starlike ? r0 : r1;
      if (std::abs(den) < dini::kDenominatorFloor)
        throw dini::DivisionNearZero(starlike ? "starlike denominator" : "convex denominator");
      return starlike ? num / den : 1.0 + num / den;
    };
  });
  return GeometryReport{ex.value, ex.at, ex.samples, ex.skipped};
}

namespace {

VerificationReport corollary_case(CorollaryFn fn, const std::string& id,
                                  const DiskSampling& spec) {
  const dini::CorollaryInfo& info = dini::corollary_info(fn);
  VerificationReport rep;
  rep.id = id;
  rep.statistic = "min_re";
  rep.params = info.params;
  rep.scale = info.scale;
  rep.claimed_bound = info.claimed_bound;
  const bounds::Hypothesis hyp =
      bounds::hypothesis(dini::ratio_hypothesis(info.kind), info.params.alpha, info.params.v);
  rep.hypothesis = HypothesisRecord{dini::ratio_hypothesis(info.kind), hyp.slack, hyp.satisfied};

  // Same per-point computation as plotkit's image_domain, so the two minima
  // agree bit-for-bit on equal sampling specs.
  const Extremum ex = scan(spec, true, [fn](double) {
    return std::function<Complex(Complex)>([fn](Complex z) { return dini::corollary_fn(fn, z); });
  });
  fill_extremum(rep, ex);
  rep.margin = rep.empirical - info.claimed_bound.to_double();
  rep.verdict = !hyp.satisfied ? Verdict::kHypothesisFailed
                : rep.margin >= -kViolationTol ? Verdict::kConfirmed
                                               : Verdict::kViolated;
  return rep;
}

VerificationReport hypothesis_case(bounds::HypothesisKind kind, const Params& params,
                                   const std::string& id) {
  VerificationReport rep;
  rep.id = id;
  rep.statistic = "slack";
  rep.params = params;
  const bounds::Hypothesis hyp = bounds::hypothesis(kind, params.alpha, params.v);
  rep.hypothesis = HypothesisRecord{kind, hyp.slack, hyp.satisfied};
  rep.empirical = hyp.slack.to_double();
  rep.margin = rep.empirical;
  rep.samples = 0;
  rep.verdict = hyp.satisfied ? Verdict::kConfirmed : Verdict::kHypothesisFailed;
  return rep;
}

struct CatalogEntry {
  std::string id;
  std::function<VerificationReport(const DiskSampling&)> build;
};

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> entries;
  const auto pairs = featured_pairs();

  const char* corollary_ids[6] = {"corollary-2.3a", "corollary-2.3b", "corollary-2.4a",
                                  "corollary-2.4b", "corollary-2.5a", "corollary-2.5b"};
  const CorollaryFn fns[6] = {CorollaryFn::kF1, CorollaryFn::kF2, CorollaryFn::kF3,
                              CorollaryFn::kF4, CorollaryFn::kF5, CorollaryFn::kF6};
  for (int i = 0; i < 6; ++i) {
    const std::string id = corollary_ids[i];
    const CorollaryFn fn = fns[i];
    entries.push_back({id, [fn, id](const DiskSampling& s) { return corollary_case(fn, id, s); }});
  }

  for (int d = 0; d <= 1; ++d) {
    for (int i = 0; i < 3; ++i) {
      const std::string id = std::string(d == 0 ? "sup-w-" : "sup-wprime-") + kPairTags[i];
      const Params p = pairs[static_cast<std::size_t>(i)];
      entries.push_back({id, [p, d, id](const DiskSampling& s) {
                           VerificationReport rep = sup_modulus(p, d, s);
                           rep.id = id;
                           return rep;
                         }});
    }
  }

  for (const CorollaryFn fn : {CorollaryFn::kF5, CorollaryFn::kF6}) {
    const std::string id = std::string("scaling-") + dini::corollary_info(fn).name;
    entries.push_back({id, [fn](const DiskSampling& s) { return scaling_oracle(fn, s); }});
  }

  for (int k = 0; k <= 1; ++k) {
    const auto kind = k == 0 ? bounds::HypothesisKind::kRatioW : bounds::HypothesisKind::kRatioWPrime;
    for (int i = 0; i < 3; ++i) {
      const std::string id =
          std::string(k == 0 ? "hypothesis-ratio-w-" : "hypothesis-ratio-wprime-") + kPairTags[i];
      const Params p = pairs[static_cast<std::size_t>(i)];
      entries.push_back(
          {id, [kind, p, id](const DiskSampling&) { return hypothesis_case(kind, p, id); }});
    }
  }

  for (int i = 0; i < 3; ++i) {
    const std::string id = std::string("series-bessel-") + kPairTags[i];
    const Params p = pairs[static_cast<std::size_t>(i)];
    entries.push_back({id, [p, id](const DiskSampling&) {
                         VerificationReport rep = representation_check(p);
                         rep.id = id;
                         return rep;
                       }});
  }
  return entries;
}

}  // namespace

std::vector<VerificationReport> run_catalog(const DiskSampling& spec) {
  std::vector<VerificationReport> reports;
  for (const CatalogEntry& e : catalog_entries()) reports.push_back(e.build(spec));
  return reports;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : catalog_entries()) ids.push_back(e.id);
  return ids;
}

VerificationReport run_case(const std::string& id, const DiskSampling& spec) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.id == id) return e.build(spec);
  throw std::invalid_argument("unknown catalog case \"" + id + "\"");
}

}  // namespace dinikit::verify

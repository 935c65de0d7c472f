#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dinikit/bounds.hpp"
#include "dinikit/series.hpp"

using dinikit::Params;
using dinikit::Rational;
namespace bounds = dinikit::bounds;
using bounds::BoundKind;
using bounds::HypothesisKind;

namespace {

struct Pair {
  Rational alpha, v;
};

const Pair kFeatured[3] = {{Rational(1), Rational(1, 2)},
                           {Rational(3, 2), Rational(1, 2)},
                           {Rational(5), Rational(3, 2)}};

// Admissible draws: alpha in (0, 10], v in (-7/8, 5].
Pair random_pair(std::mt19937_64& rng) {
  const long a = static_cast<long>(rng() % 2000) + 1;
  const long k = -699 + static_cast<long>(rng() % 4700);
  return {Rational(a, 200), Rational(k, 800)};
}

}  // namespace

TEST_CASE("sup constants at the featured pairs") {
  const Rational w[3] = {Rational(191, 121), Rational(175, 121), Rational(415, 361)};
  const Rational wp[3] = {Rational(2989, 1331), Rational(2605, 1331), Rational(8981, 6859)};
  for (int i = 0; i < 3; ++i) {
    CHECK(bounds::bound_value(BoundKind::kSupW, kFeatured[i].alpha, kFeatured[i].v) == w[i]);
    CHECK(bounds::bound_value(BoundKind::kSupWPrime, kFeatured[i].alpha, kFeatured[i].v) == wp[i]);
  }
}

TEST_CASE("ratio constants at the featured pairs") {
  const Rational rw[3] = {Rational(-39, 11), Rational(-23, 11), Rational(1, 19)};
  const Rational rwi[3] = {Rational(11, 61), Rational(11, 45), Rational(19, 37)};
  const Rational rwp[3] = {Rational(45, 1286), Rational(1031, 2962), Rational(26193, 8102)};
  const Rational rwpi[3] = {Rational(1331, 2617), Rational(3993, 6955), Rational(34295, 42397)};
  for (int i = 0; i < 3; ++i) {
    const auto& [alpha, v] = kFeatured[i];
    CHECK(bounds::bound_value(BoundKind::kRatioW, alpha, v) == rw[i]);
    CHECK(bounds::bound_value(BoundKind::kRatioWInv, alpha, v) == rwi[i]);
    CHECK(bounds::bound_value(BoundKind::kRatioWPrime, alpha, v) == rwp[i]);
    CHECK(bounds::bound_value(BoundKind::kRatioWPrimeInv, alpha, v) == rwpi[i]);
  }
}

TEST_CASE("ratio-w constant complements its increment") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    const Rational den = (Rational(8) * v + Rational(7)) * alpha;
    const Rational increment = (Rational(32) * v + Rational(2) * alpha + Rational(32)) / den;
    const Rational rw = bounds::bound_value(BoundKind::kRatioW, alpha, v);
    CHECK(rw + increment == Rational(1));
    CHECK(bounds::bound_value(BoundKind::kRatioWInv, alpha, v) ==
          Rational(1) / (Rational(2) - rw));
  }
}

TEST_CASE("wprime ratio constants match independently typed polynomials") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    const Rational num = Rational(512) * alpha * v.pow_int(3) +
                         Rational(64) * (Rational(17) * alpha - Rational(8)) * v.pow_int(2) +
                         Rational(16) * (Rational(59) * alpha - Rational(32)) * v +
                         Rational(133) * alpha - Rational(512);
    const Rational den = Rational(256) * (Rational(2) + alpha) * v.pow_int(2) +
                         Rational(8) * (Rational(64) + Rational(29) * alpha) * v +
                         Rational(210) * alpha + Rational(512);
    const Rational cube = (Rational(8) * v + Rational(7)).pow_int(3) * alpha;
    CHECK(bounds::bound_value(BoundKind::kRatioWPrime, alpha, v) == num / den);
    CHECK(bounds::bound_value(BoundKind::kRatioWPrimeInv, alpha, v) == cube / (cube + den));
  }
}

TEST_CASE("inverse ratios sit strictly inside the unit interval") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    for (const BoundKind k : {BoundKind::kRatioWInv, BoundKind::kRatioWPrimeInv}) {
      const Rational b = bounds::bound_value(k, alpha, v);
      CHECK(b > Rational(0));
      CHECK(b < Rational(1));
    }
  }
}

TEST_CASE("hypothesis slacks are the ratio numerators") {
  const Rational w_slack[3] = {Rational(-39), Rational(-69, 2), Rational(5)};
  const Rational wp_slack[3] = {Rational(45), Rational(1031, 2), Rational(26193)};
  const bool w_ok[3] = {false, false, true};
  for (int i = 0; i < 3; ++i) {
    const auto& [alpha, v] = kFeatured[i];
    const auto hw = bounds::hypothesis(HypothesisKind::kRatioW, alpha, v);
    CHECK(hw.slack == w_slack[i]);
    CHECK(hw.satisfied == w_ok[i]);
    const auto hp = bounds::hypothesis(HypothesisKind::kRatioWPrime, alpha, v);
    CHECK(hp.slack == wp_slack[i]);
    CHECK(hp.satisfied);
  }

  std::mt19937_64 rng(64);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    const Rational den = (Rational(8) * v + Rational(7)) * alpha;
    const auto h = bounds::hypothesis(HypothesisKind::kRatioW, alpha, v);
    CHECK(h.slack == bounds::bound_value(BoundKind::kRatioW, alpha, v) * den);
    CHECK(h.satisfied == (h.slack >= Rational(0)));
  }
}

TEST_CASE("bound kinds map to their sign gates") {
  CHECK(bounds::hypothesis_for(BoundKind::kRatioW) == HypothesisKind::kRatioW);
  CHECK(bounds::hypothesis_for(BoundKind::kRatioWInv) == HypothesisKind::kRatioW);
  CHECK(bounds::hypothesis_for(BoundKind::kRatioWPrime) == HypothesisKind::kRatioWPrime);
  CHECK(bounds::hypothesis_for(BoundKind::kRatioWPrimeInv) == HypothesisKind::kRatioWPrime);
  CHECK_THROWS_AS(bounds::hypothesis_for(BoundKind::kSupW), std::invalid_argument);
  CHECK_THROWS_AS(bounds::hypothesis_for(BoundKind::kSupWPrime), std::invalid_argument);
}

TEST_CASE("coefficient majorant values and dominance") {
  CHECK(bounds::coeff_majorant(Rational(1), Rational(0), 2) == Rational(5, 32));
  CHECK(bounds::coeff_majorant(Rational(1), Rational(1, 2), 1) == Rational(1, 2));
  // equality at n = 1: M_1 = |a_1|
  CHECK(bounds::coeff_majorant(Rational(1), Rational(1, 2), 1) ==
        dinikit::dini::dini_coeff(Params{Rational(1), Rational(1, 2), 0}, 1).abs());
  CHECK_THROWS_AS(bounds::coeff_majorant(Rational(1), Rational(0), 0), std::invalid_argument);

  std::mt19937_64 rng(65);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    const Params p{alpha, v, 0};
    for (long n = 1; n <= 20; ++n)
      CHECK(dinikit::dini::dini_coeff(p, n).abs() <= bounds::coeff_majorant(alpha, v, n));
  }
}

TEST_CASE("tail closed forms at pinned spots") {
  const Rational one(1), half(1, 2);
  CHECK(bounds::tail_bound_exact(one, half, 0, one, 0) == Rational(70, 121));
  CHECK(bounds::tail_bound_exact(one, half, 0, one, 1) == Rational(1658, 1331));
  CHECK(bounds::tail_bound_exact(one, half, 3, half, 0) == Rational(209, 7312896));
  const double spot = bounds::tail_bound(Rational(5), Rational(3, 2), 5, 0.999, 1);
  CHECK(spot == doctest::Approx(7.895861e-07).epsilon(1e-5));
  // the double form rounds the exact value upward
  CHECK(spot >= bounds::tail_bound_exact(Rational(5), Rational(3, 2), 5,
                                         Rational::from_double(0.999), 1)
                    .to_double());
}

TEST_CASE("tail telescopes exactly against explicit terms") {
  std::mt19937_64 rng(66);
  for (int i = 0; i < 50; ++i) {
    const auto [alpha, v] = random_pair(rng);
    const Rational r(static_cast<long>(rng() % 999) + 1, 1000);
    const long N = static_cast<long>(rng() % 6);
    const long K = static_cast<long>(rng() % 6) + 1;
    for (int deriv = 0; deriv <= 1; ++deriv) {
      Rational sum(0);
      for (long n = N + 1; n <= N + K; ++n) {
        const Rational m = bounds::coeff_majorant(alpha, v, n);
        sum += deriv == 0 ? m * r.pow_int(n + 1) : Rational(n + 1) * m * r.pow_int(n);
      }
      CHECK(bounds::tail_bound_exact(alpha, v, N, r, deriv) -
                bounds::tail_bound_exact(alpha, v, N + K, r, deriv) ==
            sum);
    }
  }
}

TEST_CASE("tail shrinks as the cut deepens") {
  const Rational alpha(2), v(1, 4), r(9, 10);
  for (int deriv = 0; deriv <= 1; ++deriv) {
    Rational prev = bounds::tail_bound_exact(alpha, v, 0, r, deriv);
    CHECK(prev > Rational(0));
    for (long N = 1; N <= 12; ++N) {
      const Rational next = bounds::tail_bound_exact(alpha, v, N, r, deriv);
      CHECK(next < prev);
      prev = next;
    }
  }
}

TEST_CASE("tail edge cases and rejections") {
  const Rational one(1), half(1, 2);
  CHECK(bounds::tail_bound_exact(one, half, 0, Rational(0), 0) == Rational(0));
  CHECK(bounds::tail_bound_exact(one, half, 0, Rational(0), 1) == Rational(0));
  // q = r/(8(v+1)) must stay below 1
  const Rational v_low(-15, 16);  // threshold 8(v+1) = 1/2
  CHECK(bounds::tail_bound_exact(one, v_low, 0, Rational(1, 4), 0) > Rational(0));
  CHECK_THROWS_AS(bounds::tail_bound_exact(one, v_low, 0, Rational(1, 2), 0), std::domain_error);
  CHECK_THROWS_AS(bounds::tail_bound_exact(one, v_low, 0, Rational(3, 4), 0), std::domain_error);
  CHECK_THROWS_AS(bounds::tail_bound_exact(one, half, -1, one, 0), std::invalid_argument);
  CHECK_THROWS_AS(bounds::tail_bound_exact(one, half, 0, one, 2), std::invalid_argument);
  CHECK_THROWS_AS(bounds::tail_bound_exact(one, half, 0, Rational(-1, 2), 0),
                  std::invalid_argument);
}

TEST_CASE("full tail at radius one recomposes the sup constants") {
  std::mt19937_64 rng(67);
  const Rational one(1);
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, v] = random_pair(rng);
    CHECK(one + bounds::tail_bound_exact(alpha, v, 0, one, 0) ==
          bounds::bound_value(BoundKind::kSupW, alpha, v));
    CHECK(one + bounds::tail_bound_exact(alpha, v, 0, one, 1) ==
          bounds::bound_value(BoundKind::kSupWPrime, alpha, v));
  }
}

TEST_CASE("domain preconditions") {
  CHECK_THROWS_AS(bounds::bound_value(BoundKind::kSupW, Rational(0), Rational(1, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(bounds::bound_value(BoundKind::kSupW, Rational(-1), Rational(1, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(bounds::bound_value(BoundKind::kSupW, Rational(1), Rational(-7, 8)),
                  std::domain_error);
  CHECK_THROWS_AS(bounds::hypothesis(HypothesisKind::kRatioW, Rational(0), Rational(1, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(bounds::coeff_majorant(Rational(1), Rational(-1), 1), std::domain_error);
  CHECK_THROWS_AS(bounds::tail_bound_exact(Rational(1), Rational(-1), 0, Rational(1, 2), 0),
                  std::domain_error);
  // series domain admits v in (-1, -7/8] even though bound constants do not
  CHECK(bounds::coeff_majorant(Rational(1), Rational(-15, 16), 1) > Rational(0));
}

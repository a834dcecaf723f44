// Copyright 2026 The cbgb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbgb/matfun.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <cmath>
#include <numbers>

#include "cbgb/errors.hpp"
#include "support.hpp"

namespace cbgb {
namespace {

using testing::Gen;
using testing::rel_err;

constexpr double kPi = std::numbers::pi;

TEST(MvGamma, Values) {
  EXPECT_NEAR(log_mv_gamma(2.0, 1), 0.0, 1e-15);
  EXPECT_NEAR(log_mv_gamma(3.0, 2), std::log(2 * kPi), 1e-12);
  const double direct = 3 * std::log(kPi) + std::lgamma(4.5) +
                        std::lgamma(3.5) + std::lgamma(2.5);
  EXPECT_NEAR(log_mv_gamma(4.5, 3), direct, 1e-12);
  EXPECT_THROW(log_mv_gamma(1.0, 2), DomainError);
  EXPECT_THROW(log_mv_gamma(3.0, 0), DomainError);
}

TEST(MvBeta, Values) {
  EXPECT_NEAR(log_mv_beta(2.5, 4.0, 1), std::log(boost::math::beta(2.5, 4.0)),
              1e-13);
  EXPECT_NEAR(log_mv_beta(2.0, 2.0, 2), std::log(kPi / 12.0), 1e-12);
  Gen g(31);
  for (int i = 0; i < 20; ++i) {
    const int m = g.integer(1, 4);
    const double a = g.uniform(m - 1 + 0.01, m + 6);
    const double b = g.uniform(m - 1 + 0.01, m + 6);
    EXPECT_EQ(log_mv_beta(a, b, m), log_mv_beta(b, a, m));
  }
  EXPECT_THROW(log_mv_beta(2.0, 0.5, 2), DomainError);
}

TEST(MvBetaStar, Values) {
  EXPECT_NEAR(log_mv_beta_star({1, 1, 1, 1}), -std::log(2.0), 1e-14);
  const double want = 3 * log_mv_gamma(3.0, 2) - log_mv_gamma(9.0, 2);
  EXPECT_NEAR(log_mv_beta_star({3, 3, 3, 2}), want, 1e-12);
  Gen g(32);
  for (int i = 0; i < 20; ++i) {
    const int m = g.integer(1, 4);
    const double a = g.uniform(m - 1 + 0.01, m + 6);
    const double b = g.uniform(m - 1 + 0.01, m + 6);
    const double c = g.uniform(m - 1 + 0.01, m + 6);
    const double ref = log_mv_beta_star({a, b, c, m});
    EXPECT_EQ(log_mv_beta_star({b, c, a, m}), ref);
    EXPECT_EQ(log_mv_beta_star({c, a, b, m}), ref);
    EXPECT_EQ(log_mv_beta_star({b, a, c, m}), ref);
  }
  EXPECT_THROW(log_mv_beta_star({3, 3, 0.9, 2}), DomainError);
}

TEST(VolStiefel, Values) {
  EXPECT_NEAR(log_vol_stiefel(1, 1), std::log(2 * kPi), 1e-12);
  EXPECT_NEAR(log_vol_stiefel(1, 2), std::log(2 * kPi * kPi), 1e-12);
  // 2 pi^n / Gamma(n) rises up to n = 4 and falls after.
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(log_vol_stiefel(1, n),
                std::log(2.0) + n * std::log(kPi) - std::lgamma(n), 1e-12);
  }
  for (int n = 1; n < 4; ++n) {
    EXPECT_LT(log_vol_stiefel(1, n), log_vol_stiefel(1, n + 1)) << n;
  }
  EXPECT_GT(log_vol_stiefel(1, 4), log_vol_stiefel(1, 5));
  EXPECT_THROW(log_vol_stiefel(3, 2), DomainError);
}

TEST(HypPfq, ExponentialTrace) {
  const std::vector<double> none;
  const auto r = hyp_pfq(none, none, Hermitian::diagonal({0.5, -0.2}));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(rel_err(r.value, std::exp(0.3)), 1e-12);
}

TEST(HypPfq, DeterminantPower) {
  const std::vector<double> num{2.5}, none;
  const auto r = hyp_pfq(num, none, Hermitian::diagonal({0.3, 0.1}));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(rel_err(r.value, std::pow(0.7 * 0.9, -2.5)), 1e-9);
}

TEST(HypPfq, DeterminantIdentityProperty) {
  Gen g(33);
  const std::vector<double> none;
  for (int m = 1; m <= 3; ++m) {
    for (double a : {0.5, 2.0, 7.25}) {
      for (int trial = 0; trial < 10; ++trial) {
        const Hermitian x = g.with_spectrum_in(m, -0.5, 0.5);
        const std::vector<double> num{a};
        const auto r = hyp_pfq(num, none, x, {120, 1e-16});
        double det = 1.0;
        for (double v : eigenvalues(x).values) det *= 1.0 - v;
        EXPECT_LE(rel_err(r.value, std::pow(det, -a)), 1e-8)
            << "m=" << m << " a=" << a;
      }
    }
  }
}

// At degree 30 the truncation error is the scalar tail exactly; reference
// partial sums computed in 50-digit arithmetic.
TEST(HypPfq, DegreeThirtyTruncationMatchesScalarTail) {
  const std::vector<double> none, eig{0.5};
  struct Case {
    double a, rel_tail;
  };
  for (const auto& c :
       {Case{0.5, 6.5468297449911e-11}, Case{2.0, 7.683411240577698e-09},
        Case{7.25, 2.7016573433069624e-05}}) {
    const std::vector<double> num{c.a};
    const auto r = hyp_pfq(num, none, eig, {30, 1e-300});
    EXPECT_EQ(r.degree_reached, 30);
    const double exact = std::pow(0.5, -c.a);
    EXPECT_NEAR(1.0 - r.value / exact, c.rel_tail, 1e-6 * c.rel_tail + 1e-15);
  }
}

TEST(HypPfq, ScalarMultipleOfIdentityPath) {
  const std::vector<double> num{1.5}, none;
  for (int m = 1; m <= 4; ++m) {
    for (double s : {-0.4, 0.0, 0.35}) {
      const auto r = hyp_pfq(num, none, Hermitian::identity(m) * s);
      EXPECT_LE(rel_err(r.value, std::pow(1.0 - s, -1.5 * m)), 1e-9);
    }
  }
}

TEST(HypPfq, ConjugationInvariant) {
  Gen g(34);
  const std::vector<double> num{1.2, 3.4}, den{2.7};
  for (int trial = 0; trial < 10; ++trial) {
    const int m = g.integer(2, 4);
    const Hermitian x = g.with_spectrum_in(m, -0.6, 0.6);
    const CMatrix q = g.unitary(m);
    const Hermitian y(CMatrix(q * x.matrix() * q.adjoint()));
    EXPECT_NEAR(hyp_pfq(num, den, x).value, hyp_pfq(num, den, y).value, 1e-10);
  }
}

TEST(HypPfq, LayersDecayGeometrically) {
  Gen g(35);
  const std::vector<double> num{1.5, 2.5}, den{3.0};
  const auto table_m = 3;
  HypergeometricSeries series(num, den, table_m, 40);
  const auto x = g.spectrum(table_m, -0.5, 0.5);
  double prev = std::numeric_limits<double>::infinity();
  for (int t = 11; t <= 30; ++t) {
    const auto r = series.evaluate(x, {t, 1e-300});
    EXPECT_EQ(r.degree_reached, t);
    EXPECT_LT(r.last_layer_mag, prev) << t;
    prev = r.last_layer_mag;
  }
}

// At m = 1 the matrix series is the classical scalar series.
TEST(HypPfq, ScalarCaseMatchesClassicalSeries) {
  struct Case {
    std::vector<double> num, den;
    double x;
  };
  const Case cases[] = {{{1.5}, {2.5}, 0.9},
                        {{1.5, 2.0}, {3.0, 0.7}, -1.2},
                        {{0.3, 1.1}, {2.2}, 0.6},
                        {{2.0, 3.0, 1.5}, {4.0, 2.5}, 0.4}};
  for (const auto& c : cases) {
    const double want = boost::math::hypergeometric_pFq(c.num, c.den, c.x);
    const std::vector<double> eig{c.x};
    const auto got = hyp_pfq(c.num, c.den, eig, {200, 1e-15});
    EXPECT_TRUE(got.converged);
    EXPECT_LE(rel_err(got.value, want), 1e-10) << c.x;
  }
}

// Euler integral: 2F1(a, a1; c; x) = int_0^1 t^{a-1}(1-t)^{c-a-1}
// (1 - x t)^{-a1} dt / B(a, c - a).
TEST(HypPfq, TwoFOneMatchesEulerIntegral) {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (const auto& [a, a1, c, x] : std::vector<std::array<double, 4>>{
           {1.5, 2.0, 4.0, 0.5}, {2.2, 0.7, 3.1, -0.8}, {3.0, 3.0, 7.5, 0.9}}) {
    const double integral = ts.integrate(
        [&](double t) {
          return std::pow(t, a - 1) * std::pow(1 - t, c - a - 1) *
                 std::pow(1 - x * t, -a1);
        },
        0.0, 1.0);
    const double want = integral / boost::math::beta(a, c - a);
    const std::vector<double> num{a, a1}, den{c}, eig{x};
    const auto got = hyp_pfq(num, den, eig, {400, 1e-14});
    EXPECT_LE(rel_err(got.value, want), 1e-6) << a << " " << x;
  }
}

TEST(HypPfq, VanishingDenominatorNamesPartition) {
  const std::vector<double> num{1.0}, den{1.0};
  try {
    hyp_pfq(num, den, Hermitian::diagonal({0.2, 0.1}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos)
        << e.what();
  }
}

TEST(HypPfq, TerminatingNumeratorIsPolynomial) {
  // [-2]_tau vanishes once tau has a part above 2 in row 1, so at m = 1
  // the series is 1 - 2x + x^2.
  const std::vector<double> num{-2.0}, none, eig{3.0};
  const auto r = hyp_pfq(num, none, eig);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 4.0, 1e-12);
}

TEST(HypPfq, DivergenceDetected) {
  const std::vector<double> num{2.5}, none;
  EXPECT_THROW(hyp_pfq(num, none, Hermitian::diagonal({1.5, 0.1})),
               DivergenceError);
  const std::vector<double> two{1.0, 1.0};
  EXPECT_THROW(hyp_pfq(two, none, Hermitian::diagonal({2.0})), DivergenceError);
}

TEST(HypPfq, NonConvergenceReportedNotThrown) {
  const std::vector<double> num{2.0, 2.0}, den{3.0};
  const auto r = hyp_pfq(num, den, Hermitian::identity(2) * 0.999, {10, 1e-12});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.degree_reached, 10);
  EXPECT_GT(r.last_layer_mag, 0.0);
}

TEST(TruncationPolicy, Validation) {
  EXPECT_THROW((TruncationPolicy{0, 1e-10}.validate()), DomainError);
  EXPECT_THROW((TruncationPolicy{10, 0.0}.validate()), DomainError);
}

TEST(PairwiseSum, ExactOnSmallIntegers) {
  std::vector<double> v(1000);
  for (int i = 0; i < 1000; ++i) v[static_cast<std::size_t>(i)] = i;
  EXPECT_EQ(pairwise_sum(v), 499500.0);
}

}  // namespace
}  // namespace cbgb

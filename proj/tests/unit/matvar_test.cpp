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

#include "cbgb/matvar.hpp"

#include <gtest/gtest.h>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <vector>

#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"
#include "cbgb/quadrature.hpp"
#include "cbgb/stats.hpp"
#include "support.hpp"

namespace cbgb {
namespace {

using testing::Gen;

// Lower integration limit; 1x1 matrices below it fail the PD floor.
constexpr double kLo = 1e-20;

Hermitian scalar(double x) { return Hermitian::diagonal({x}); }

double integrate_positive(const std::function<double(double)>& f) {
  return integrate_1d(f, kLo, 1.0) +
         integrate_1d([&](double t) { return f(1.0 / t) / (t * t); }, 0.0, 1.0);
}

TEST(CGamma, ScalarKs) {
  for (double a : {0.6, 3.0}) {
    RngStream r(101);
    std::vector<double> x(100000);
    for (double& v : x) v = sample_cgamma(a, 1, r)(0, 0).real();
    const boost::math::gamma_distribution<double> gd(a);
    const auto t = ks_one_sample(x, [&](double v) { return cdf(gd, v); });
    EXPECT_TRUE(t.passes(0.01)) << "a = " << a << " D = " << t.statistic;
  }
}

TEST(CGamma, FirstMoment) {
  RngStream r(102);
  const int n = 100000;
  std::vector<MeanAccumulator> acc(4);
  for (int i = 0; i < n; ++i) {
    const Hermitian s = sample_cgamma(3.0, 2, r);
    acc[0].add(s(0, 0).real());
    acc[1].add(s(1, 1).real());
    acc[2].add(s(0, 1).real());
    acc[3].add(s(0, 1).imag());
  }
  const double want[] = {3.0, 3.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(acc[k].mean(), want[k], 3 * acc[k].std_error()) << k;
  }
}

TEST(CGamma, ScaleEquivariance) {
  RngStream r1(103), r2(104);
  const CGammaParams id{2.5, Hermitian::identity(2)};
  const CGammaParams four{2.5, Hermitian::identity(2) * 4.0};
  MeanAccumulator a, b;
  for (int i = 0; i < 50000; ++i) {
    a.add(logdet(sample_cgamma(id, r1)) + 2 * std::log(4.0));
    b.add(logdet(sample_cgamma(four, r2)));
  }
  const double se = std::hypot(a.std_error(), b.std_error());
  EXPECT_NEAR(a.mean(), b.mean(), 3 * se);
}

TEST(CGamma, UnitaryInvarianceOfSpectrum) {
  RngStream r1(105), r2(106);
  std::vector<double> x(50000), y(50000);
  for (auto& v : x) v = eigenvalues(sample_cgamma(3.0, 3, r1)).max();
  for (auto& v : y) {
    const CMatrix q = random_unitary(3, r2);
    const Hermitian a = sample_cgamma(3.0, 3, r2);
    v = eigenvalues(Hermitian(CMatrix(q * a.matrix() * q.adjoint()))).max();
  }
  EXPECT_TRUE(ks_two_sample(x, y).passes(0.01));
}

TEST(CGamma, LogpdfScalarAndNormalization) {
  for (double a : {0.7, 2.5, 6.0}) {
    const CGammaParams p{a, scalar(1.0)};
    const boost::math::gamma_distribution<double> gd(a);
    for (double x : {0.1, 1.0, 4.5}) {
      EXPECT_NEAR(cgamma_logpdf(scalar(x), p), std::log(pdf(gd, x)), 1e-12);
    }
    const double mass = integrate_positive(
        [&](double x) { return std::exp(cgamma_logpdf(scalar(x), p)); });
    EXPECT_NEAR(mass, 1.0, 1e-8) << "a = " << a;
  }
}

TEST(CGamma, LogpdfConjugationInvariance) {
  Gen g(107);
  const CGammaParams p{4.0, Hermitian::identity(3)};
  for (int i = 0; i < 20; ++i) {
    const Hermitian a = g.positive_definite(3);
    const CMatrix q = g.unitary(3);
    const Hermitian b(CMatrix(q * a.matrix() * q.adjoint()));
    EXPECT_NEAR(cgamma_logpdf(a, p), cgamma_logpdf(b, p), 1e-10);
  }
}

TEST(CGamma, Domain) {
  RngStream r(1);
  EXPECT_THROW(sample_cgamma(1.0, 2, r), DomainError);
  EXPECT_THROW(cgamma_logpdf(Hermitian::diagonal({1.0, -1.0}),
                             {3.0, Hermitian::identity(2)}),
               DomainError);
  EXPECT_THROW((CGammaParams{3.0, Hermitian::diagonal({1.0, 0.0})}.validate()),
               DomainError);
}

TEST(CBeta1, ScalarKsAndSupport) {
  RngStream r(108);
  std::vector<double> x(100000);
  for (double& v : x) v = sample_cbeta1(2.5, 4.0, 1, r)(0, 0).real();
  const boost::math::beta_distribution<double> bd(2.5, 4.0);
  EXPECT_TRUE(
      ks_one_sample(x, [&](double v) { return cdf(bd, v); }).passes(0.01));
  RngStream r2(109);
  for (int i = 0; i < 2000; ++i) {
    const auto s = eigenvalues(sample_cbeta1(3.0, 3.0, 3, r2));
    ASSERT_GT(s.min(), 0.0);
    ASSERT_LT(s.max(), 1.0);
  }
}

TEST(CBeta1, FirstMoment) {
  RngStream r(110);
  MeanAccumulator d0, d1, off_re, off_im;
  for (int i = 0; i < 100000; ++i) {
    const Hermitian u = sample_cbeta1(3.0, 3.0, 2, r);
    d0.add(u(0, 0).real());
    d1.add(u(1, 1).real());
    off_re.add(u(0, 1).real());
    off_im.add(u(0, 1).imag());
  }
  EXPECT_NEAR(d0.mean(), 0.5, 3 * d0.std_error());
  EXPECT_NEAR(d1.mean(), 0.5, 3 * d1.std_error());
  EXPECT_NEAR(off_re.mean(), 0.0, 3 * off_re.std_error());
  EXPECT_NEAR(off_im.mean(), 0.0, 3 * off_im.std_error());
}

TEST(CBeta1, DeterminantMoment) {
  const double a = 3.0, b = 2.5;
  RngStream r(111);
  MeanAccumulator acc;
  for (int i = 0; i < 100000; ++i) {
    acc.add(std::exp(logdet(sample_cbeta1(a, b, 2, r))));
  }
  const double want = std::exp(log_mv_beta(a + 1, b, 2) - log_mv_beta(a, b, 2));
  EXPECT_NEAR(acc.mean(), want, 3 * acc.std_error());
}

TEST(CBeta1, LogpdfScalarNormalizationSymmetry) {
  const boost::math::beta_distribution<double> bd(2.5, 4.0);
  EXPECT_NEAR(cbeta1_logpdf(scalar(0.3), 2.5, 4.0), std::log(pdf(bd, 0.3)),
              1e-12);
  for (auto [a, b] : {std::pair{0.8, 1.5}, std::pair{2.5, 4.0}}) {
    const double mass = integrate_1d(
        [&](double u) { return std::exp(cbeta1_logpdf(scalar(u), a, b)); }, kLo,
        1.0);
    EXPECT_NEAR(mass, 1.0, 1e-8);
  }
  Gen g(112);
  for (int i = 0; i < 20; ++i) {
    const Hermitian u = g.with_spectrum_in(3, 0.05, 0.95);
    const Hermitian w = Hermitian::identity(3) - u;
    EXPECT_NEAR(cbeta1_logpdf(u, 3.5, 4.25), cbeta1_logpdf(w, 4.25, 3.5),
                1e-12);
  }
  EXPECT_THROW(cbeta1_logpdf(Hermitian::diagonal({0.5, 1.0}), 3, 3),
               DomainError);
}

TEST(CBeta2, ScalarKsAndNormalization) {
  RngStream r(113);
  std::vector<double> x(100000);
  for (double& v : x) v = sample_cbeta2(2.0, 3.5, 1, r)(0, 0).real();
  const auto cdf_bp = [](double f) {
    return boost::math::ibeta(2.0, 3.5, f / (1.0 + f));
  };
  EXPECT_TRUE(ks_one_sample(x, cdf_bp).passes(0.01));
  for (auto [a, b] : {std::pair{2.0, 3.5}, std::pair{0.9, 1.2}}) {
    const double mass = integrate_positive(
        [&](double f) { return std::exp(cbeta2_logpdf(scalar(f), a, b)); });
    EXPECT_NEAR(mass, 1.0, 1e-7);
  }
}

TEST(CBeta2, PushforwardOfBeta1) {
  RngStream r1(114), r2(115);
  std::vector<double> x(100000), y(100000);
  for (double& v : x) v = logdet(beta1_to_beta2(sample_cbeta1(3, 4, 2, r1)));
  for (double& v : y) v = logdet(sample_cbeta2(3, 4, 2, r2));
  EXPECT_TRUE(ks_two_sample(x, y).passes(0.01));
}

TEST(Beta1ToBeta2, Examples) {
  const Hermitian f = beta1_to_beta2(Hermitian::identity(2) * 0.5);
  EXPECT_LT((f.matrix() - CMatrix::Identity(2, 2)).norm(), 1e-15);
  const Hermitian small = beta1_to_beta2(Hermitian::identity(2) * 1e-6);
  EXPECT_NEAR(small(0, 0).real(), 1e-6, 1e-11);
  // (I - U)^{-1} - I by direct inversion.
  Gen g(116);
  for (int i = 0; i < 50; ++i) {
    const int m = g.integer(1, 4);
    const Hermitian u = g.with_spectrum_in(m, 0.01, 0.99);
    const Hermitian direct =
        herm_inverse(Hermitian::identity(m) - u) - Hermitian::identity(m);
    EXPECT_LT((beta1_to_beta2(u).matrix() - direct.matrix()).norm(), 1e-10);
    const Hermitian back = beta2_to_beta1(beta1_to_beta2(u));
    EXPECT_LT((back.matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-10);
  }
  EXPECT_THROW(beta1_to_beta2(Hermitian::identity(2)), DomainError);
}

TEST(Beta1ToBeta2, JacobianIdentity) {
  Gen g(117);
  for (int i = 0; i < 50; ++i) {
    const int m = g.integer(1, 4);
    const double a = g.uniform(m - 0.5, m + 5), b = g.uniform(m - 0.5, m + 5);
    const Hermitian u = g.with_spectrum_in(m, 0.02, 0.98);
    const Hermitian f = beta1_to_beta2(u);
    const double rhs =
        cbeta2_logpdf(f, a, b) + 2.0 * m * logdet(Hermitian::identity(m) + f);
    EXPECT_NEAR(cbeta1_logpdf(u, a, b), rhs, 1e-10);
  }
}

TEST(Sampler, RejectionCountsReported) {
  // Shapes just above m - 1 put mass at the boundary; the count is non-zero
  // and every returned draw is strictly inside.
  RngStream r(118);
  SamplerDiagnostics diag;
  for (int i = 0; i < 20000; ++i) {
    const auto s = eigenvalues(sample_cbeta1(0.05, 0.05, 1, r, &diag));
    ASSERT_GT(s.min(), kBoundaryMargin);
    ASSERT_LT(s.max(), 1.0 - kBoundaryMargin);
  }
  EXPECT_GT(diag.rejections, 0);
}

}  // namespace
}  // namespace cbgb

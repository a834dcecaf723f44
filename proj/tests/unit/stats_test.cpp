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

#include "cbgb/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cbgb/errors.hpp"
#include "support.hpp"

namespace cbgb {
namespace {

TEST(Kolmogorov, TailValues) {
  // Reference quantiles of the Kolmogorov distribution.
  EXPECT_NEAR(kolmogorov_sf(1.3580986), 0.05, 1e-6);
  EXPECT_NEAR(kolmogorov_sf(1.6276236), 0.01, 1e-6);
  EXPECT_NEAR(kolmogorov_sf(0.8275735), 0.5, 1e-6);
  EXPECT_EQ(kolmogorov_sf(0.0), 1.0);
  // Both series agree where they meet.
  EXPECT_NEAR(kolmogorov_sf(1.0 - 1e-12), kolmogorov_sf(1.0), 1e-10);
}

TEST(Kolmogorov, Monotone) {
  double prev = 1.0;
  for (double l = 0.05; l < 3.0; l += 0.05) {
    const double v = kolmogorov_sf(l);
    EXPECT_LE(v, prev + 1e-15);
    prev = v;
  }
}

TEST(KsOneSample, UniformSampleHasUniformPValues) {
  // Under the null the p-value is roughly uniform; a level-0.05 test should
  // reject about 5% of 200 replicates.
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> u;
  int rejects = 0;
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> x(500);
    for (double& v : x) v = u(eng);
    if (!ks_one_sample(x, [](double v) { return v; }).passes(0.05)) ++rejects;
  }
  EXPECT_GE(rejects, 2);
  EXPECT_LE(rejects, 22);
}

TEST(KsOneSample, DetectsShift) {
  std::mt19937_64 eng(4);
  std::uniform_real_distribution<double> u;
  std::vector<double> x(2000);
  for (double& v : x) v = std::sqrt(u(eng));
  EXPECT_FALSE(ks_one_sample(x, [](double v) { return v; }).passes(0.01));
}

TEST(KsOneSample, HandComputedStatistic) {
  const auto t = ks_one_sample({0.1, 0.4, 0.8}, [](double v) { return v; });
  // max(1/3 - 0.1, 2/3 - 0.4, 1 - 0.8, 0.1, 0.4 - 1/3, 0.8 - 2/3) = 0.2667
  EXPECT_NEAR(t.statistic, 2.0 / 3.0 - 0.4, 1e-15);
}

TEST(KsTwoSample, SameAndDifferent) {
  std::mt19937_64 eng(5);
  std::normal_distribution<double> n;
  std::vector<double> x(3000), y(4000), z(4000);
  for (double& v : x) v = n(eng);
  for (double& v : y) v = n(eng);
  for (double& v : z) v = n(eng) + 0.2;
  EXPECT_TRUE(ks_two_sample(x, y).passes(0.01));
  EXPECT_FALSE(ks_two_sample(x, z).passes(0.01));
  EXPECT_NEAR(ks_two_sample({1, 2}, {3, 4}).statistic, 1.0, 0.0);
}

TEST(ChiSquare, SurvivalValues) {
  EXPECT_NEAR(chi_square_sf(3.841458820694124, 1), 0.05, 1e-10);
  EXPECT_NEAR(chi_square_sf(2.0, 2), std::exp(-1.0), 1e-12);
  EXPECT_EQ(chi_square_sf(0.0, 3), 1.0);
}

TEST(ChiSquare, GofHandComputed) {
  const std::vector<double> obs{30, 20, 50};
  const std::vector<double> p{0.25, 0.25, 0.5};
  const auto t = chi_square_gof(obs, p);
  EXPECT_NEAR(t.statistic, 25.0 / 25 + 25.0 / 25 + 0.0, 1e-12);
  EXPECT_EQ(t.dof, 2);
  EXPECT_THROW(chi_square_gof(obs, std::vector<double>{0.2, 0.2, 0.5}),
               DomainError);
}

TEST(ChiSquare, QuadraticDiagonalMatchesSum) {
  const std::vector<double> d{0.5, -1.0};
  const std::vector<double> cov{0.25, 0.0, 0.0, 4.0};
  const auto t = chi_square_quadratic(d, cov);
  EXPECT_NEAR(t.statistic, 1.0 + 0.25, 1e-14);
  EXPECT_EQ(t.dof, 2);
  EXPECT_THROW(chi_square_quadratic(d, std::vector<double>{1, 2, 2, 1}),
               DomainError);
}

TEST(BinOf, Edges) {
  const std::vector<double> e{0.2, 0.5};
  EXPECT_EQ(bin_of(0.1, e), 0);
  EXPECT_EQ(bin_of(0.2, e), 1);
  EXPECT_EQ(bin_of(0.49, e), 1);
  EXPECT_EQ(bin_of(0.9, e), 2);
}

}  // namespace
}  // namespace cbgb

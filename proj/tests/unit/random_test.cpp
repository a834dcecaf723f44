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

#include "cbgb/random.hpp"

#include <gtest/gtest.h>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <set>
#include <vector>

#include "cbgb/errors.hpp"
#include "cbgb/stats.hpp"

namespace cbgb {
namespace {

// Published known-answer vectors for Philox4x32-10.
TEST(Philox, KnownAnswers) {
  using W = std::array<std::uint32_t, 4>;
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (W{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu}),
            (W{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u}),
            (W{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(RngStream, WordLayout) {
  RngStream r(0x0123456789abcdefULL, 7);
  const auto out = philox4x32_10({0, 0, 7, 0}, {0x89abcdefu, 0x01234567u});
  EXPECT_EQ(r.next_u64(), (std::uint64_t{out[1]} << 32) | out[0]);
  EXPECT_EQ(r.next_u64(), (std::uint64_t{out[3]} << 32) | out[2]);
  const auto next = philox4x32_10({1, 0, 7, 0}, {0x89abcdefu, 0x01234567u});
  EXPECT_EQ(r.next_u64(), (std::uint64_t{next[1]} << 32) | next[0]);
  EXPECT_EQ(r.position(), 3u);
}

TEST(RngStream, Deterministic) {
  RngStream a(42, 3), b(42, 3);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.normal(), b.normal());
    ASSERT_EQ(a.gamma(0.7), b.gamma(0.7));
  }
}

TEST(RngStream, StreamsAndSeedsDiffer) {
  std::set<std::uint64_t> first;
  for (std::uint64_t seed : {1, 2}) {
    for (std::uint64_t stream : {0, 1, 2}) {
      RngStream r(seed, stream);
      first.insert(r.next_u64());
    }
  }
  EXPECT_EQ(first.size(), 6u);
}

TEST(RngStream, UniformStrictlyInside) {
  RngStream r(5);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(RngStream, NormalKs) {
  RngStream r(11);
  std::vector<double> x(50000);
  for (double& v : x) v = r.normal();
  const boost::math::normal_distribution<double> nd;
  const auto t = ks_one_sample(x, [&](double v) { return cdf(nd, v); });
  EXPECT_TRUE(t.passes(0.01)) << t.statistic;
}

TEST(RngStream, GammaKsAcrossShapes) {
  for (double shape : {0.3, 1.0, 2.5, 9.0}) {
    RngStream r(12, static_cast<std::uint64_t>(shape * 10));
    std::vector<double> x(50000);
    for (double& v : x) v = r.gamma(shape);
    const boost::math::gamma_distribution<double> gd(shape);
    const auto t = ks_one_sample(x, [&](double v) { return cdf(gd, v); });
    EXPECT_TRUE(t.passes(0.01)) << "shape " << shape << " D " << t.statistic;
  }
  RngStream r(1);
  EXPECT_THROW(r.gamma(0.0), DomainError);
}

TEST(RngStream, ComplexNormalVariance) {
  RngStream r(13);
  double re2 = 0.0, im2 = 0.0, cross = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Complex z = r.complex_normal();
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
    cross += z.real() * z.imag();
  }
  // Var(x^2) = 2 sigma^4 = 1/2 for sigma^2 = 1/2.
  const double se = std::sqrt(0.5 / n);
  EXPECT_NEAR(re2 / n, 0.5, 4 * se);
  EXPECT_NEAR(im2 / n, 0.5, 4 * se);
  EXPECT_NEAR(cross / n, 0.0, 4 * std::sqrt(0.25 / n));
}

TEST(RandomUnitary, IsUnitary) {
  RngStream r(14);
  for (int m = 1; m <= 5; ++m) {
    const CMatrix q = random_unitary(m, r);
    EXPECT_LT((q.adjoint() * q - CMatrix::Identity(m, m)).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace cbgb

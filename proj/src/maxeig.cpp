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

#include "cbgb/maxeig.hpp"

#include <cmath>
#include <sstream>

#include "cbgb/bimatrix.hpp"
#include "cbgb/errors.hpp"
#include "cbgb/montecarlo.hpp"
#include "cbgb/quadrature.hpp"

namespace cbgb {

namespace {

void require_threshold(const Hermitian& d, int m, const char* name) {
  if (d.dim() != m) {
    std::ostringstream os;
    os << "rect_prob_mc: " << name << " has dimension " << d.dim()
       << ", expected " << m;
    throw DomainError(os.str());
  }
  const auto s = eigenvalues(d);
  if (!(s.min() > 0.0) || s.max() > 1.0) {
    std::ostringstream os;
    os << "rect_prob_mc: " << name << " must satisfy 0 < " << name
       << " <= I (eigenvalues in [" << s.min() << ", " << s.max() << "])";
    throw DomainError(os.str());
  }
}

// Scalar bgb1 log-density from log-gamma directly.
double scalar_bgb1_logpdf(double u1, double u2, const BimatrixParams& p) {
  const double log_beta_star = std::lgamma(p.a) + std::lgamma(p.b) +
                               std::lgamma(p.c) - std::lgamma(p.a + p.b + p.c);
  return -log_beta_star + (p.a - 1.0) * std::log(u1) +
         (p.b - 1.0) * std::log(u2) + (p.b + p.c - 1.0) * std::log1p(-u1) +
         (p.a + p.c - 1.0) * std::log1p(-u2) -
         (p.a + p.b + p.c) * std::log1p(-u1 * u2);
}

}  // namespace

void RectProbe::validate() const {
  if (!(x > 0.0 && x <= 1.0) || !(y > 0.0 && y <= 1.0)) {
    std::ostringstream os;
    os << "RectProbe: thresholds must lie in (0, 1] (x = " << x << ", y = " << y
       << ")";
    throw DomainError(os.str());
  }
}

MCEstimate rect_prob_mc(const BimatrixParams& p, const Hermitian& d1,
                        const Hermitian& d2, std::int64_t n, std::uint64_t seed,
                        int shards) {
  p.validate();
  require_threshold(d1, p.m, "Delta1");
  require_threshold(d2, p.m, "Delta2");
  return sharded_mean(n, seed, shards, [&](ShardContext& ctx) {
    const auto s = sample_bgb1(p, ctx.rng, &ctx.sampler);
    const double g1 = eigenvalues(d1 - s.u1).min();
    const double g2 = eigenvalues(d2 - s.u2).min();
    if (std::abs(g1) < kTieThreshold || std::abs(g2) < kTieThreshold) {
      ++ctx.boundary_ties;
      return 0.0;
    }
    return g1 > 0.0 && g2 > 0.0 ? 1.0 : 0.0;
  });
}

MCEstimate maxeig_cdf_mc(const BimatrixParams& p, const RectProbe& probe,
                         std::int64_t n, std::uint64_t seed, int shards) {
  probe.validate();
  p.validate();
  return rect_prob_mc(p, Hermitian::identity(p.m) * probe.x,
                      Hermitian::identity(p.m) * probe.y, n, seed, shards);
}

double rect_prob_quad_m1(const BimatrixParams& p, double x, double y) {
  p.validate();
  if (p.m != 1) throw DomainError("rect_prob_quad_m1: requires m = 1");
  RectProbe{x, y}.validate();
  // Each axis is split at 1/2.
  double total = 0.0;
  const double xs[] = {0.0, std::min(0.5, x), x};
  const double ys[] = {0.0, std::min(0.5, y), y};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!(xs[i] < xs[i + 1]) || !(ys[j] < ys[j + 1])) continue;
      total += integrate_2d(
          [&](double u1, double u2) {
            return std::exp(scalar_bgb1_logpdf(u1, u2, p));
          },
          xs[i], xs[i + 1], ys[j], ys[j + 1], 1e-10);
    }
  }
  return total;
}

}  // namespace cbgb

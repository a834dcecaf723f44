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

#ifndef CBGB_MAXEIG_HPP
#define CBGB_MAXEIG_HPP

#include <cstdint>

#include "cbgb/estimate.hpp"
#include "cbgb/hermitian.hpp"
#include "cbgb/matfun.hpp"

namespace cbgb {

/// Thresholds for (lambda_max, delta_max); Delta1 = x I, Delta2 = y I.
struct RectProbe {
  double x = 1.0;
  double y = 1.0;

  void validate() const;
};

/// Smallest eigenvalues of Delta - U with |lambda_min| below this count as
/// boundary ties (failures, tallied separately).
inline constexpr double kTieThreshold = 1e-14;

/// P(U1 < Delta1, U2 < Delta2) by Monte Carlo over bgb1 draws.
MCEstimate rect_prob_mc(const BimatrixParams& p, const Hermitian& d1,
                        const Hermitian& d2, std::int64_t n, std::uint64_t seed,
                        int shards = 1);

/// P(lambda_max < x, delta_max < y) by Monte Carlo.
MCEstimate maxeig_cdf_mc(const BimatrixParams& p, const RectProbe& probe,
                         std::int64_t n, std::uint64_t seed, int shards = 1);

/// m = 1 oracle: iterated tanh-sinh quadrature of the scalar bgb1 density
/// over (0, x) x (0, y).
double rect_prob_quad_m1(const BimatrixParams& p, double x, double y);

}  // namespace cbgb

#endif  // CBGB_MAXEIG_HPP

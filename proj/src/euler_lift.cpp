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

#include <sstream>

#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"
#include "cbgb/matvar.hpp"
#include "cbgb/montecarlo.hpp"

namespace cbgb {

MCEstimate euler_lift_estimate(std::span<const double> num,
                               std::span<const double> den, double a, double c,
                               const Hermitian& x, std::int64_t n,
                               std::uint64_t seed, TruncationPolicy policy,
                               int shards) {
  policy.validate();
  const int m = x.dim();
  if (!(a > m - 1) || !(c - a > m - 1)) {
    std::ostringstream os;
    os << "euler_lift_estimate: need a > m - 1 and c - a > m - 1 (a = " << a
       << ", c = " << c << ", m = " << m << ")";
    throw DomainError(os.str());
  }
  const HypergeometricSeries series(std::vector<double>(num.begin(), num.end()),
                                    std::vector<double>(den.begin(), den.end()),
                                    m, policy.max_degree);
  return sharded_mean(n, seed, shards, [&](ShardContext& ctx) {
    const Hermitian y = sample_cbeta1(a, c - a, m, ctx.rng, &ctx.sampler);
    const auto xy = eigenvalues(herm_sqrt(y).sandwich(x));
    return series.evaluate(xy.values, policy).value;
  });
}

}  // namespace cbgb

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

#ifndef CBGB_STATS_HPP
#define CBGB_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace cbgb {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  int dof = 0;  // chi-square tests only

  bool passes(double level) const { return p_value >= level; }
};

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_sf(double lambda);

/// One-sample KS test of `data` against a continuous CDF. The p-value uses
/// the Stephens small-sample correction
///   lambda = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) D.
TestResult ks_one_sample(std::vector<double> data,
                         const std::function<double(double)>& cdf);

/// Two-sample KS test; effective size n1 n2 / (n1 + n2).
TestResult ks_two_sample(std::vector<double> x, std::vector<double> y);

/// Pearson chi-square of observed counts against cell probabilities (which
/// must sum to 1); dof = cells - 1.
TestResult chi_square_gof(std::span<const double> observed,
                          std::span<const double> probs);

/// Quadratic form d' S^{-1} d referred to chi-square with d.size() degrees of
/// freedom. S is given row-major.
TestResult chi_square_quadratic(std::span<const double> diff,
                                std::span<const double> cov);

/// Upper tail of the chi-square distribution.
double chi_square_sf(double x, int dof);

/// Bin index of x in the sorted interior edges (edges.size() + 1 bins).
int bin_of(double x, std::span<const double> edges);

}  // namespace cbgb

#endif  // CBGB_STATS_HPP

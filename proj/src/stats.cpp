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

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "cbgb/errors.hpp"

namespace cbgb {

double kolmogorov_sf(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  if (lambda < 1.0) {
    // P(K <= l) = sqrt(2 pi) / l * sum_k exp(-(2k-1)^2 pi^2 / (8 l^2))
    const double f =
        -std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double cdf = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double j = 2.0 * k - 1.0;
      cdf += std::exp(f * j * j);
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sf = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sf += (k % 2 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(sf, 0.0, 1.0);
}

namespace {

double stephens_lambda(double d, double n) {
  const double r = std::sqrt(n);
  return (r + 0.12 + 0.11 / r) * d;
}

}  // namespace

TestResult ks_one_sample(std::vector<double> data,
                         const std::function<double(double)>& cdf) {
  if (data.empty()) throw DomainError("ks_one_sample: empty sample");
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double f = cdf(data[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_sf(stephens_lambda(d, n)), 0};
}

TestResult ks_two_sample(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || y.empty()) throw DomainError("ks_two_sample: empty sample");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(
        d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return {d, kolmogorov_sf(stephens_lambda(d, nx * ny / (nx + ny))), 0};
}

double chi_square_sf(double x, int dof) {
  if (dof < 1) throw DomainError("chi_square_sf: dof < 1");
  if (!(x > 0.0)) return 1.0;
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, x));
}

TestResult chi_square_gof(std::span<const double> observed,
                          std::span<const double> probs) {
  if (observed.size() != probs.size() || observed.size() < 2) {
    throw DomainError("chi_square_gof: need matching counts and probabilities");
  }
  double n = 0.0, mass = 0.0;
  for (double o : observed) n += o;
  for (double p : probs) {
    if (!(p > 0.0)) throw DomainError("chi_square_gof: cell probability <= 0");
    mass += p;
  }
  if (std::abs(mass - 1.0) > 1e-6) {
    throw DomainError("chi_square_gof: cell probabilities do not sum to 1");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = n * probs[i];
    stat += (observed[i] - e) * (observed[i] - e) / e;
  }
  const int dof = static_cast<int>(observed.size()) - 1;
  return {stat, chi_square_sf(stat, dof), dof};
}

TestResult chi_square_quadratic(std::span<const double> diff,
                                std::span<const double> cov) {
  const auto k = static_cast<Eigen::Index>(diff.size());
  if (k < 1 || cov.size() != diff.size() * diff.size()) {
    throw DomainError("chi_square_quadratic: covariance shape mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> d(diff.data(), k);
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      s(cov.data(), k, k);
  const Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw DomainError("chi_square_quadratic: covariance not positive definite");
  }
  const double stat = d.dot(llt.solve(d));
  const int dof = static_cast<int>(k);
  return {stat, chi_square_sf(stat, dof), dof};
}

int bin_of(double x, std::span<const double> edges) {
  return static_cast<int>(std::upper_bound(edges.begin(), edges.end(), x) -
                          edges.begin());
}

}  // namespace cbgb

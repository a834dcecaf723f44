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

#ifndef CBGB_MATFUN_HPP
#define CBGB_MATFUN_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cbgb/estimate.hpp"
#include "cbgb/hermitian.hpp"
#include "cbgb/zonal.hpp"

namespace cbgb {

// ---------------------------------------------------------------------------
// Scalar constants. Everything is returned on the log scale.
// ---------------------------------------------------------------------------

/// log CGamma_m[a] = m(m-1)/2 log(pi) + sum_{j=1..m} log Gamma(a - j + 1).
/// Requires a > m - 1.
double log_mv_gamma(double a, int m);

/// log CBeta_m[a, b] = log CGamma_m[a] + log CGamma_m[b] - log CGamma_m[a+b].
double log_mv_beta(double a, double b, int m);

/// Shape triple shared by the bimatrix distributions; each of a, b, c must
/// exceed m - 1.
struct BimatrixParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  int m = 1;

  void validate() const;
};

/// log of CGamma_m[a] CGamma_m[b] CGamma_m[c] / CGamma_m[a+b+c].
double log_mv_beta_star(const BimatrixParams& p);

/// log volume of the complex Stiefel manifold of n x m matrices with
/// orthonormal columns: log(2^m pi^{mn} / CGamma_m[n]). Requires m <= n.
double log_vol_stiefel(int m, int n);

// ---------------------------------------------------------------------------
// Hypergeometric functions of a Hermitian matrix argument.
// ---------------------------------------------------------------------------

struct TruncationPolicy {
  int max_degree = 40;
  double tail_tol = 1e-10;

  void validate() const;
};

inline constexpr TruncationPolicy kDefaultPolicy{40, 1e-10};
/// Floor for series evaluated at X = I.
inline constexpr TruncationPolicy kIdentityPolicy{120, 1e-10};
/// Identity-argument policy for dimension m: degrees 400000, 30000, 2000,
/// 500, 250, 180 for m = 1..6 (about 2 10^8 partitions at most), never below
/// kIdentityPolicy; tail_tol 1e-13.
TruncationPolicy identity_policy(int m);

/// A truncated series result.
///
/// `last_layer_mag` is the sum of absolute values of the terms of the final
/// total-degree layer. `converged` holds when that magnitude is at most
/// tail_tol * max(1, |value|); the evaluation stops early once two
/// consecutive layers satisfy it.
struct SeriesValue {
  double value = 0.0;
  int degree_reached = 0;
  double last_layer_mag = 0.0;
  bool converged = false;
};

/// Precomputed coefficients prod [a_i]_k / prod [b_j]_k for one parameter
/// set, reusable across many arguments of the same dimension.
class HypergeometricSeries {
 public:
  HypergeometricSeries(std::vector<double> num, std::vector<double> den, int m,
                       int max_degree);

  int m() const { return m_; }
  int max_degree() const { return max_degree_; }
  std::size_t p() const { return num_.size(); }
  std::size_t q() const { return den_.size(); }

  /// pFq(num; den; X) at the eigenvalues of X.
  SeriesValue evaluate(std::span<const double> eigs,
                       TruncationPolicy policy) const;

  /// Two-argument series
  ///   sum_k sum_kappa coef_kappa C~_kappa(X) C~_kappa(Y) / (k! C~_kappa(I)),
  /// the unitary average of pFq(num; den; X G Y G^H).
  SeriesValue evaluate_pair(std::span<const double> x,
                            std::span<const double> y,
                            TruncationPolicy policy) const;

 private:
  struct Coefficient {
    double log_abs = 0.0;
    int sign = 1;   // 0 when the coefficient vanishes
    int pole = -1;  // index of the partition whose [b]_tau vanished, if any
  };

  template <typename TermFn>
  SeriesValue run(TermFn&& layer_term, double spectral_radius,
                  TruncationPolicy policy) const;
  const Coefficient& coefficient(int idx) const { return coef_[idx]; }

  std::vector<double> num_;
  std::vector<double> den_;
  int m_;
  int max_degree_;
  std::shared_ptr<const PartitionTable> table_;
  std::vector<Coefficient> coef_;
};

SeriesValue hyp_pfq(std::span<const double> num, std::span<const double> den,
                    std::span<const double> eigs,
                    TruncationPolicy policy = kDefaultPolicy);
SeriesValue hyp_pfq(std::span<const double> num, std::span<const double> den,
                    const Hermitian& x,
                    TruncationPolicy policy = kDefaultPolicy);

/// Monte Carlo estimate of
///   E[ pFq(num; den; X Y) ],  Y ~ CBI_m(a, c - a),
/// which equals p+1Fq+1(a, num; c, den; X). The spectrum of XY is taken
/// from the Hermitian matrix Y^{1/2} X Y^{1/2}.
MCEstimate euler_lift_estimate(std::span<const double> num,
                               std::span<const double> den, double a, double c,
                               const Hermitian& x, std::int64_t n,
                               std::uint64_t seed,
                               TruncationPolicy policy = kDefaultPolicy,
                               int shards = 1);

/// Sum with pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace cbgb

#endif  // CBGB_MATFUN_HPP

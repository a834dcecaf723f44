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

#ifndef CBGB_BIMATRIX_HPP
#define CBGB_BIMATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cbgb/estimate.hpp"
#include "cbgb/hermitian.hpp"
#include "cbgb/matfun.hpp"
#include "cbgb/matvar.hpp"
#include "cbgb/random.hpp"

namespace cbgb {

/// Correlated pair of beta type I matrices sharing the gamma matrix C:
///   U1 = (A + C)^{-1/2} A (A + C)^{-1/2},
///   U2 = (B + C)^{-1/2} B (B + C)^{-1/2},
/// with A ~ CG(a, I), B ~ CG(b, I), C ~ CG(c, I) independent.
struct Bgb1Sample {
  Hermitian u1;
  Hermitian u2;
};

/// Type II pair F1 = C^{-1/2} A C^{-1/2}, F2 = C^{-1/2} B C^{-1/2}.
struct Bgb2Sample {
  Hermitian f1;
  Hermitian f2;
};

Bgb1Sample sample_bgb1(const BimatrixParams& p, RngStream& rng,
                       SamplerDiagnostics* diag = nullptr);
Bgb2Sample sample_bgb2(const BimatrixParams& p, RngStream& rng,
                       SamplerDiagnostics* diag = nullptr);

/// Closed-form joint log-density of (U1, U2). det(I - U1 U2) is taken from
/// the Hermitian similarity U1^{1/2} U2 U1^{1/2}.
double bgb1_logpdf(const Hermitian& u1, const Hermitian& u2,
                   const BimatrixParams& p);

/// Same density through the mixture series
///   kernel(U1, U2) * 1F0(a + b + c; U1 U2).
/// `value` is the log-density; the remaining fields describe the series.
SeriesValue bgb1_logpdf_series(const Hermitian& u1, const Hermitian& u2,
                               const BimatrixParams& p,
                               TruncationPolicy policy = kDefaultPolicy);

double bgb2_logpdf(const Hermitian& f1, const Hermitian& f2,
                   const BimatrixParams& p);

/// |logdet(I+F1) + logdet(I+F2) + logdet(I - (I+F1)^{-1} F1 F2 (I+F2)^{-1})
///  - logdet(I+F1+F2)|, using complex LU for the non-Hermitian factor.
double det_identity_check(const Hermitian& f1, const Hermitian& f2);

/// E(|U1|^r |U2|^s) as a 3F2 series at the identity. r = s = 0 returns 1
/// without evaluating a series. Without a policy, identity_policy(m).
SeriesValue det_moment(const BimatrixParams& p, double r, double s,
                       std::optional<TruncationPolicy> policy = std::nullopt);
MCEstimate det_moment_mc(const BimatrixParams& p, double r, double s,
                         std::int64_t n, std::uint64_t seed, int shards = 1);

/// Z = U2^{1/2} U1 U2^{1/2}.
Hermitian sample_z(const BimatrixParams& p, RngStream& rng,
                   SamplerDiagnostics* diag = nullptr);
/// Log-density of Z; the 2F1 factor is evaluated at I - Z.
SeriesValue z_logpdf(const Hermitian& z, const BimatrixParams& p,
                     TruncationPolicy policy = kDefaultPolicy);
/// E|Z|^r as a 3F2 series at the identity.
SeriesValue z_det_moment(const BimatrixParams& p, double r,
                         std::optional<TruncationPolicy> policy = std::nullopt);

/// Log-density of (V1, V2) = (U1^{-1}, U2^{-1}); requires V1, V2 > I.
double inverse_pair_logpdf(const Hermitian& v1, const Hermitian& v2,
                           const BimatrixParams& p);

/// Eigenvalues of U1 (lambda) and U2 (delta).
struct EigPairSpectra {
  std::vector<double> lambda;
  std::vector<double> delta;

  int dim() const { return static_cast<int>(lambda.size()); }
  /// Both strictly decreasing inside (0, 1); ties raise DomainError.
  void validate() const;
};

EigPairSpectra spectra_of(const Bgb1Sample& s);

/// Joint density of the two spectra. Reuses the series coefficients
/// across evaluations; safe to share between threads.
class JointEigDensity {
 public:
  JointEigDensity(const BimatrixParams& p,
                  TruncationPolicy policy = kDefaultPolicy);

  const BimatrixParams& params() const { return params_; }
  /// `value` is the log-density.
  SeriesValue logpdf(const EigPairSpectra& e) const;

 private:
  BimatrixParams params_;
  TruncationPolicy policy_;
  double log_const_;
  HypergeometricSeries series_;
};

SeriesValue joint_eig_logpdf(const EigPairSpectra& e, const BimatrixParams& p,
                             TruncationPolicy policy = kDefaultPolicy);

}  // namespace cbgb

#endif  // CBGB_BIMATRIX_HPP

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

#ifndef CBGB_MATVAR_HPP
#define CBGB_MATVAR_HPP

#include <cstdint>

#include "cbgb/hermitian.hpp"
#include "cbgb/random.hpp"

namespace cbgb {

/// Draws whose spectrum comes within this distance of a cone boundary are
/// redrawn.
inline constexpr double kBoundaryMargin = 1e-12;

struct SamplerDiagnostics {
  std::int64_t rejections = 0;
};

/// Complex matrix gamma law with shape a > m - 1 and Hermitian PD scale.
struct CGammaParams {
  double a = 0.0;
  Hermitian theta;

  int m() const { return theta.dim(); }
  void validate() const;
};

/// A = Theta^{1/2} T T^H Theta^{1/2}; T lower triangular with
/// |t_jj|^2 ~ Gamma(a - j + 1) (1-based j, t_jj > 0) and standard complex
/// normal entries below the diagonal.
Hermitian sample_cgamma(const CGammaParams& p, RngStream& rng);
/// Theta = I.
Hermitian sample_cgamma(double a, int m, RngStream& rng);

/// -log CGamma_m[a] - a logdet Theta + (a - m) logdet A - tr(Theta^{-1} A).
double cgamma_logpdf(const Hermitian& a, const CGammaParams& p);

/// U = (A + B)^{-1/2} A (A + B)^{-1/2}, A ~ CG(a, I), B ~ CG(b, I).
Hermitian sample_cbeta1(double a, double b, int m, RngStream& rng,
                        SamplerDiagnostics* diag = nullptr);
double cbeta1_logpdf(const Hermitian& u, double a, double b);

/// F = B^{-1/2} A B^{-1/2}.
Hermitian sample_cbeta2(double a, double b, int m, RngStream& rng,
                        SamplerDiagnostics* diag = nullptr);
double cbeta2_logpdf(const Hermitian& f, double a, double b);

/// F = (I - U)^{-1} - I for 0 < U < I, computed on the spectrum.
Hermitian beta1_to_beta2(const Hermitian& u);
/// U = I - (I + F)^{-1} for F > 0.
Hermitian beta2_to_beta1(const Hermitian& f);

/// True when every eigenvalue lies in (margin, 1 - margin).
bool inside_unit_cone(const EigenSpectrum& s, double margin = kBoundaryMargin);

/// Throws DomainError unless 0 < U < I.
void require_unit_cone(const Hermitian& u, const char* op);

}  // namespace cbgb

#endif  // CBGB_MATVAR_HPP

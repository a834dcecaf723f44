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

#include "cbgb/matvar.hpp"

#include <cmath>
#include <sstream>

#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"

namespace cbgb {

namespace {

void require_shape(const char* op, double a, int m) {
  if (m < 1) throw DomainError(std::string(op) + ": m must be positive");
  if (!(a > m - 1)) {
    std::ostringstream os;
    os << op << ": shape " << a << " must exceed m - 1 = " << m - 1;
    throw DomainError(os.str());
  }
}

CMatrix bartlett_factor(double a, int m, RngStream& rng) {
  CMatrix t = CMatrix::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    t(j, j) = std::sqrt(rng.gamma(a - j));
    for (int k = 0; k < j; ++k) t(j, k) = rng.complex_normal();
  }
  return t;
}

Hermitian map_spectrum(const Hermitian& x, double (*f)(double)) {
  const auto d = eig_hermitian(x);
  std::vector<double> v(d.spectrum.values);
  for (double& e : v) e = f(e);
  return Hermitian::from_spectrum(v, d.vectors);
}

}  // namespace

bool inside_unit_cone(const EigenSpectrum& s, double margin) {
  return s.min() > margin && s.max() < 1.0 - margin;
}

void require_unit_cone(const Hermitian& u, const char* op) {
  const auto s = eigenvalues(u);
  if (!(s.min() > 0.0) || !(s.max() < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": matrix outside 0 < U < I (eigenvalues in [" << s.min()
       << ", " << s.max() << "])";
    throw DomainError(os.str());
  }
}

void CGammaParams::validate() const {
  require_shape("cgamma", a, m());
  if (!is_positive_definite(theta)) {
    throw DomainError("cgamma: scale matrix is not positive definite");
  }
}

Hermitian sample_cgamma(double a, int m, RngStream& rng) {
  require_shape("sample_cgamma", a, m);
  const CMatrix t = bartlett_factor(a, m, rng);
  return Hermitian(CMatrix(t * t.adjoint()));
}

Hermitian sample_cgamma(const CGammaParams& p, RngStream& rng) {
  p.validate();
  const Hermitian w = sample_cgamma(p.a, p.m(), rng);
  return herm_sqrt(p.theta).sandwich(w);
}

double cgamma_logpdf(const Hermitian& a, const CGammaParams& p) {
  p.validate();
  if (a.dim() != p.m()) throw DomainError("cgamma_logpdf: dimension mismatch");
  const int m = p.m();
  const double tr =
      (herm_inverse(p.theta).matrix() * a.matrix()).trace().real();
  return -log_mv_gamma(p.a, m) - p.a * logdet(p.theta) + (p.a - m) * logdet(a) -
         tr;
}

Hermitian sample_cbeta1(double a, double b, int m, RngStream& rng,
                        SamplerDiagnostics* diag) {
  require_shape("sample_cbeta1", a, m);
  require_shape("sample_cbeta1", b, m);
  for (;;) {
    const Hermitian ga = sample_cgamma(a, m, rng);
    const Hermitian gb = sample_cgamma(b, m, rng);
    const Hermitian sum = ga + gb;
    if (is_positive_definite(sum)) {
      const Hermitian u = herm_inv_sqrt(sum).sandwich(ga);
      if (inside_unit_cone(eigenvalues(u))) return u;
    }
    if (diag) ++diag->rejections;
  }
}

double cbeta1_logpdf(const Hermitian& u, double a, double b) {
  const int m = u.dim();
  require_shape("cbeta1_logpdf", a, m);
  require_shape("cbeta1_logpdf", b, m);
  require_unit_cone(u, "cbeta1_logpdf");
  double acc = -log_mv_beta(a, b, m);
  for (double v : eigenvalues(u).values) {
    acc += (a - m) * std::log(v) + (b - m) * std::log1p(-v);
  }
  return acc;
}

Hermitian sample_cbeta2(double a, double b, int m, RngStream& rng,
                        SamplerDiagnostics* diag) {
  require_shape("sample_cbeta2", a, m);
  require_shape("sample_cbeta2", b, m);
  for (;;) {
    const Hermitian ga = sample_cgamma(a, m, rng);
    const Hermitian gb = sample_cgamma(b, m, rng);
    if (is_positive_definite(gb)) {
      const Hermitian f = herm_inv_sqrt(gb).sandwich(ga);
      const auto s = eigenvalues(f);
      if (s.min() > kBoundaryMargin && std::isfinite(s.max())) return f;
    }
    if (diag) ++diag->rejections;
  }
}

double cbeta2_logpdf(const Hermitian& f, double a, double b) {
  const int m = f.dim();
  require_shape("cbeta2_logpdf", a, m);
  require_shape("cbeta2_logpdf", b, m);
  const auto s = eigenvalues(f);
  if (!(s.min() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "cbeta2_logpdf: matrix is not positive definite (eigenvalue "
       << s.min() << ")";
    throw DomainError(os.str());
  }
  double acc = -log_mv_beta(a, b, m);
  for (double v : s.values) {
    acc += (a - m) * std::log(v) - (a + b) * std::log1p(v);
  }
  return acc;
}

Hermitian beta1_to_beta2(const Hermitian& u) {
  require_unit_cone(u, "beta1_to_beta2");
  return map_spectrum(u, [](double v) { return v / (1.0 - v); });
}

Hermitian beta2_to_beta1(const Hermitian& f) {
  const auto s = eigenvalues(f);
  if (!(s.min() > 0.0)) {
    throw DomainError("beta2_to_beta1: matrix is not positive definite");
  }
  return map_spectrum(f, [](double v) { return v / (1.0 + v); });
}

}  // namespace cbgb

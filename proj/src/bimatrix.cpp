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

#include "cbgb/bimatrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cbgb/errors.hpp"
#include "cbgb/montecarlo.hpp"

namespace cbgb {

namespace {

struct UnitSpectra {
  std::vector<double> u1;
  std::vector<double> u2;
  std::vector<double> product;  // spectrum of U1^{1/2} U2 U1^{1/2}
};

void require_same_dim(const Hermitian& x, const Hermitian& y,
                      const BimatrixParams& p, const char* op) {
  if (x.dim() != p.m || y.dim() != p.m) {
    std::ostringstream os;
    os << op << ": matrices must be " << p.m << " x " << p.m;
    throw DomainError(os.str());
  }
}

std::vector<double> unit_spectrum(const Hermitian& u, const char* op) {
  auto s = eigenvalues(u);
  if (!(s.min() > 0.0) || !(s.max() < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": matrix outside 0 < U < I (eigenvalues in [" << s.min()
       << ", " << s.max() << "])";
    throw DomainError(os.str());
  }
  return std::move(s.values);
}

// Lexicographic order on (real, imag) of the entries, column-major.
bool entry_order_less(const CMatrix& x, const CMatrix& y) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Complex a = x.data()[i];
    const Complex b = y.data()[i];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  return false;
}

UnitSpectra unit_spectra(const Hermitian& u1, const Hermitian& u2,
                         const char* op) {
  UnitSpectra out;
  out.u1 = unit_spectrum(u1, op);
  out.u2 = unit_spectrum(u2, op);
  // Sandwich in a canonical operand order so that exchanging U1 and U2
  // yields the same spectrum bitwise.
  const bool swap = entry_order_less(u2.matrix(), u1.matrix());
  const Hermitian& outer = swap ? u2 : u1;
  const Hermitian& inner = swap ? u1 : u2;
  out.product = eigenvalues(herm_sqrt(outer).sandwich(inner)).values;
  // 0 < eig(U1 U2) < 1 on the domain; rounding may only push the smallest
  // one to a tiny negative value.
  if (!(out.product.front() < 1.0) || !(out.product.back() > -kAbsFloor)) {
    std::ostringstream os;
    os << op << ": det(I - U1 U2) not positive";
    throw DomainError(os.str());
  }
  return out;
}

// Everything except the det(I - U1 U2) factor.
double bgb1_log_kernel(const UnitSpectra& s, const BimatrixParams& p) {
  const double m = p.m;
  double k1 = 0.0, k2 = 0.0;
  for (double v : s.u1) {
    k1 += (p.a - m) * std::log(v) + (p.b + p.c - m) * std::log1p(-v);
  }
  for (double v : s.u2) {
    k2 += (p.b - m) * std::log(v) + (p.a + p.c - m) * std::log1p(-v);
  }
  return -log_mv_beta_star(p) + (k1 + k2);
}

double log_abs_det(const CMatrix& a) {
  const Eigen::PartialPivLU<CMatrix> lu(a);
  double acc = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    acc += std::log(std::abs(lu.matrixLU()(i, i)));
  return acc;
}

void require_moment_shape(const char* op, const char* name, double v, int m) {
  if (!(v > m - 1)) {
    std::ostringstream os;
    os << op << ": " << name << " = " << v << " must exceed m - 1 = " << m - 1;
    throw DomainError(os.str());
  }
}

}  // namespace

Bgb1Sample sample_bgb1(const BimatrixParams& p, RngStream& rng,
                       SamplerDiagnostics* diag) {
  p.validate();
  for (;;) {
    const Hermitian a = sample_cgamma(p.a, p.m, rng);
    const Hermitian b = sample_cgamma(p.b, p.m, rng);
    const Hermitian c = sample_cgamma(p.c, p.m, rng);
    const Hermitian ac = a + c;
    const Hermitian bc = b + c;
    if (is_positive_definite(ac) && is_positive_definite(bc)) {
      Bgb1Sample s{herm_inv_sqrt(ac).sandwich(a),
                   herm_inv_sqrt(bc).sandwich(b)};
      if (inside_unit_cone(eigenvalues(s.u1)) &&
          inside_unit_cone(eigenvalues(s.u2))) {
        return s;
      }
    }
    if (diag) ++diag->rejections;
  }
}

Bgb2Sample sample_bgb2(const BimatrixParams& p, RngStream& rng,
                       SamplerDiagnostics* diag) {
  p.validate();
  for (;;) {
    const Hermitian a = sample_cgamma(p.a, p.m, rng);
    const Hermitian b = sample_cgamma(p.b, p.m, rng);
    const Hermitian c = sample_cgamma(p.c, p.m, rng);
    if (is_positive_definite(c)) {
      const Hermitian ci = herm_inv_sqrt(c);
      Bgb2Sample s{ci.sandwich(a), ci.sandwich(b)};
      if (eigenvalues(s.f1).min() > kBoundaryMargin &&
          eigenvalues(s.f2).min() > kBoundaryMargin) {
        return s;
      }
    }
    if (diag) ++diag->rejections;
  }
}

double bgb1_logpdf(const Hermitian& u1, const Hermitian& u2,
                   const BimatrixParams& p) {
  p.validate();
  require_same_dim(u1, u2, p, "bgb1_logpdf");
  const auto s = unit_spectra(u1, u2, "bgb1_logpdf");
  double log_det = 0.0;
  for (double w : s.product) log_det += std::log1p(-w);
  return bgb1_log_kernel(s, p) - (p.a + p.b + p.c) * log_det;
}

SeriesValue bgb1_logpdf_series(const Hermitian& u1, const Hermitian& u2,
                               const BimatrixParams& p,
                               TruncationPolicy policy) {
  p.validate();
  require_same_dim(u1, u2, p, "bgb1_logpdf_series");
  const auto s = unit_spectra(u1, u2, "bgb1_logpdf_series");
  const std::vector<double> num{p.a + p.b + p.c};
  SeriesValue out = hyp_pfq(num, {}, s.product, policy);
  out.value = bgb1_log_kernel(s, p) + std::log(out.value);
  return out;
}

double bgb2_logpdf(const Hermitian& f1, const Hermitian& f2,
                   const BimatrixParams& p) {
  p.validate();
  require_same_dim(f1, f2, p, "bgb2_logpdf");
  const auto s1 = eigenvalues(f1);
  const auto s2 = eigenvalues(f2);
  if (!(s1.min() > 0.0) || !(s2.min() > 0.0)) {
    throw DomainError("bgb2_logpdf: F1 and F2 must be positive definite");
  }
  const double m = p.m;
  double acc = -log_mv_beta_star(p);
  for (double v : s1.values) acc += (p.a - m) * std::log(v);
  for (double v : s2.values) acc += (p.b - m) * std::log(v);
  const CMatrix id = CMatrix::Identity(p.m, p.m);
  acc -= (p.a + p.b + p.c) *
         logdet(Hermitian(CMatrix(id + f1.matrix() + f2.matrix())));
  return acc;
}

double det_identity_check(const Hermitian& f1, const Hermitian& f2) {
  if (f1.dim() != f2.dim()) {
    throw DomainError("det_identity_check: dimension mismatch");
  }
  if (eigenvalues(f1).min() < 0.0 || eigenvalues(f2).min() < 0.0) {
    throw DomainError("det_identity_check: F1 and F2 must be PSD");
  }
  const int m = f1.dim();
  const CMatrix id = CMatrix::Identity(m, m);
  const CMatrix p1 = id + f1.matrix();
  const CMatrix p2 = id + f2.matrix();
  const CMatrix inner =
      id - p1.inverse() * f1.matrix() * f2.matrix() * p2.inverse();
  return std::abs(log_abs_det(p1) + log_abs_det(p2) + log_abs_det(inner) -
                  log_abs_det(id + f1.matrix() + f2.matrix()));
}

SeriesValue det_moment(const BimatrixParams& p, double r, double s,
                       std::optional<TruncationPolicy> policy_override) {
  p.validate();
  const TruncationPolicy policy =
      policy_override.value_or(identity_policy(p.m));
  policy.validate();
  require_moment_shape("det_moment", "a + r", p.a + r, p.m);
  require_moment_shape("det_moment", "b + s", p.b + s, p.m);
  if (r == 0.0 && s == 0.0) return {1.0, 0, 0.0, true};
  const double abc = p.a + p.b + p.c;
  const std::vector<double> num{p.a + r, p.b + s, abc};
  const std::vector<double> den{abc + r, abc + s};
  const std::vector<double> ones(static_cast<std::size_t>(p.m), 1.0);
  SeriesValue out = hyp_pfq(num, den, ones, policy);
  const double log_pre = log_mv_beta(p.a + r, p.b + p.c, p.m) +
                         log_mv_beta(p.b + s, p.a + p.c, p.m) -
                         log_mv_beta_star(p);
  out.value *= std::exp(log_pre);
  return out;
}

MCEstimate det_moment_mc(const BimatrixParams& p, double r, double s,
                         std::int64_t n, std::uint64_t seed, int shards) {
  p.validate();
  if (r == 0.0 && s == 0.0) {
    if (n < 0) throw DomainError("det_moment_mc: negative sample count");
    MCEstimate out;
    out.mean = n > 0 ? 1.0 : 0.0;
    out.n = n;
    out.seed = seed;
    out.shards = shards;
    return out;
  }
  return sharded_mean(n, seed, shards, [&](ShardContext& ctx) {
    const auto draw = sample_bgb1(p, ctx.rng, &ctx.sampler);
    return std::exp(r * logdet(draw.u1) + s * logdet(draw.u2));
  });
}

Hermitian sample_z(const BimatrixParams& p, RngStream& rng,
                   SamplerDiagnostics* diag) {
  const auto s = sample_bgb1(p, rng, diag);
  return herm_sqrt(s.u2).sandwich(s.u1);
}

SeriesValue z_logpdf(const Hermitian& z, const BimatrixParams& p,
                     TruncationPolicy policy) {
  p.validate();
  if (z.dim() != p.m) throw DomainError("z_logpdf: dimension mismatch");
  const auto zs = unit_spectrum(z, "z_logpdf");
  std::vector<double> complement(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) complement[i] = 1.0 - zs[i];
  const double ac = p.a + p.c;
  const std::vector<double> num{ac, ac};
  const std::vector<double> den{p.a + p.b + 2.0 * p.c};
  SeriesValue out = hyp_pfq(num, den, complement, policy);
  const double m = p.m;
  double acc = log_mv_beta(ac, p.b + p.c, p.m) - log_mv_beta_star(p);
  for (double v : zs) {
    acc += (p.a - m) * std::log(v) + (p.c - m) * std::log1p(-v);
  }
  out.value = acc + std::log(out.value);
  return out;
}

SeriesValue z_det_moment(const BimatrixParams& p, double r,
                         std::optional<TruncationPolicy> policy_override) {
  p.validate();
  const TruncationPolicy policy =
      policy_override.value_or(identity_policy(p.m));
  policy.validate();
  require_moment_shape("z_det_moment", "a + r", p.a + r, p.m);
  const double ac = p.a + p.c;
  const std::vector<double> num{p.c, ac, ac};
  const std::vector<double> den{ac + r, p.a + p.b + 2.0 * p.c};
  const std::vector<double> ones(static_cast<std::size_t>(p.m), 1.0);
  SeriesValue out = hyp_pfq(num, den, ones, policy);
  const double log_pre = log_mv_beta(ac, p.b + p.c, p.m) +
                         log_mv_beta(p.a + r, p.c, p.m) - log_mv_beta_star(p);
  out.value *= std::exp(log_pre);
  return out;
}

double inverse_pair_logpdf(const Hermitian& v1, const Hermitian& v2,
                           const BimatrixParams& p) {
  p.validate();
  require_same_dim(v1, v2, p, "inverse_pair_logpdf");
  if (!(eigenvalues(v1).min() > 1.0) || !(eigenvalues(v2).min() > 1.0)) {
    throw DomainError("inverse_pair_logpdf: V1 and V2 must exceed I");
  }
  return bgb1_logpdf(herm_inverse(v1), herm_inverse(v2), p) -
         2.0 * p.m * (logdet(v1) + logdet(v2));
}

void EigPairSpectra::validate() const {
  if (lambda.empty() || lambda.size() != delta.size()) {
    throw DomainError("EigPairSpectra: spectra must be non-empty, equal size");
  }
  for (const auto* v : {&lambda, &delta}) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      const double x = (*v)[i];
      if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("EigPairSpectra: eigenvalues must lie in (0, 1)");
      }
      if (i > 0 && !((*v)[i - 1] > x)) {
        throw DomainError(
            "EigPairSpectra: eigenvalues must be strictly decreasing (tie or "
            "misordering)");
      }
    }
  }
}

EigPairSpectra spectra_of(const Bgb1Sample& s) {
  return {eigenvalues(s.u1).values, eigenvalues(s.u2).values};
}

JointEigDensity::JointEigDensity(const BimatrixParams& p,
                                 TruncationPolicy policy)
    : params_(p),
      policy_(policy),
      log_const_(0.0),
      series_({p.a + p.b + p.c}, {}, p.m, policy.max_degree) {
  p.validate();
  policy.validate();
  const int m = p.m;
  log_const_ = 2.0 * m * (m - 1) * std::log(std::numbers::pi) -
               2.0 * log_mv_gamma(m, m) - log_mv_beta_star(p);
}

SeriesValue JointEigDensity::logpdf(const EigPairSpectra& e) const {
  e.validate();
  const BimatrixParams& p = params_;
  if (e.dim() != p.m) throw DomainError("joint_eig_logpdf: dimension mismatch");
  const double m = p.m;
  // The lambda and delta parts are summed separately so that swapping
  // (lambda, a) with (delta, b) reproduces the value bitwise.
  double lam = 0.0, del = 0.0;
  for (int r = 0; r < p.m; ++r) {
    lam += (p.a - m) * std::log(e.lambda[r]) +
           (p.b + p.c - m) * std::log1p(-e.lambda[r]);
    del += (p.b - m) * std::log(e.delta[r]) +
           (p.a + p.c - m) * std::log1p(-e.delta[r]);
    for (int s = r + 1; s < p.m; ++s) {
      lam += 2.0 * std::log(e.lambda[r] - e.lambda[s]);
      del += 2.0 * std::log(e.delta[r] - e.delta[s]);
    }
  }
  const double acc = log_const_ + (lam + del);
  SeriesValue out = series_.evaluate_pair(e.lambda, e.delta, policy_);
  out.value = acc + std::log(out.value);
  return out;
}

SeriesValue joint_eig_logpdf(const EigPairSpectra& e, const BimatrixParams& p,
                             TruncationPolicy policy) {
  return JointEigDensity(p, policy).logpdf(e);
}

}  // namespace cbgb

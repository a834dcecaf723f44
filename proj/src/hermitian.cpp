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

#include "cbgb/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cbgb/errors.hpp"

namespace cbgb {

namespace {

double max_abs_entry(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

std::string format_eigenvalue_error(const char* op, double ev, int idx) {
  std::ostringstream os;
  os.precision(17);
  os << op << ": matrix is not positive definite (eigenvalue[" << idx
     << "] = " << ev << ")";
  return os.str();
}

// Eigen returns ascending eigenvalues; we expose non-increasing order.
EigenDecomposition decompose(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw DomainError("eig_hermitian: eigensolver failed to converge");
  }
  const int m = static_cast<int>(a.rows());
  EigenDecomposition out;
  out.spectrum.values.resize(m);
  out.vectors.resize(m, m);
  for (int i = 0; i < m; ++i) {
    out.spectrum.values[i] = es.eigenvalues()(m - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(m - 1 - i);
  }
  return out;
}

void require_pd(const EigenSpectrum& s, const char* op) {
  const double top = std::max(std::abs(s.max()), kAbsFloor);
  for (int i = s.dim() - 1; i >= 0; --i) {
    if (!(s.values[i] > kPdRelTol * top)) {
      throw DomainError(format_eigenvalue_error(op, s.values[i], i));
    }
  }
}

Hermitian spectral_map(const Hermitian& a, const char* op,
                       double (*f)(double)) {
  const auto d = eig_hermitian(a);
  require_pd(d.spectrum, op);
  Eigen::VectorXd fv(a.dim());
  for (int i = 0; i < a.dim(); ++i) fv(i) = f(d.spectrum.values[i]);
  const CMatrix out = d.vectors * fv.asDiagonal() * d.vectors.adjoint();
  return Hermitian(out);
}

}  // namespace

Hermitian::Hermitian(const CMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DomainError("Hermitian: matrix must be square and non-empty");
  }
  const CMatrix adj = a.adjoint();
  const double scale = std::max(max_abs_entry(a), kAbsFloor);
  correction_ = max_abs_entry(a - adj) / 2.0;
  if (!std::isfinite(scale) || !a.allFinite()) {
    throw DomainError("Hermitian: non-finite entries");
  }
  if (correction_ > kHermitianRejectTol * scale) {
    std::ostringstream os;
    os << "Hermitian: input is not Hermitian (relative asymmetry "
       << correction_ / scale << ")";
    throw DomainError(os.str());
  }
  m_ = (a + adj) / 2.0;
}

Hermitian Hermitian::identity(int m) {
  return Hermitian(CMatrix::Identity(m, m));
}

Hermitian Hermitian::zero(int m) { return Hermitian(CMatrix::Zero(m, m)); }

Hermitian Hermitian::diagonal(std::span<const double> d) {
  const int m = static_cast<int>(d.size());
  CMatrix a = CMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) a(i, i) = d[i];
  return Hermitian(a);
}

Hermitian Hermitian::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

Hermitian Hermitian::from_spectrum(std::span<const double> d,
                                   const CMatrix& g) {
  Eigen::VectorXd dv(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) dv(i) = d[i];
  return Hermitian(CMatrix(g * dv.asDiagonal() * g.adjoint()));
}

Hermitian Hermitian::operator+(const Hermitian& o) const {
  return Hermitian(CMatrix(m_ + o.m_));
}

Hermitian Hermitian::operator-(const Hermitian& o) const {
  return Hermitian(CMatrix(m_ - o.m_));
}

Hermitian Hermitian::operator*(double s) const {
  return Hermitian(CMatrix(m_ * s));
}

Hermitian Hermitian::sandwich(const Hermitian& a) const {
  return Hermitian(CMatrix(m_ * a.m_ * m_));
}

double Hermitian::trace() const { return m_.trace().real(); }

double Hermitian::max_abs() const { return max_abs_entry(m_); }

EigenDecomposition eig_hermitian(const Hermitian& a) {
  return decompose(a.matrix());
}

EigenSpectrum eigenvalues(const Hermitian& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw DomainError("eig_hermitian: eigensolver failed to converge");
  }
  const int m = a.dim();
  EigenSpectrum s;
  s.values.resize(m);
  for (int i = 0; i < m; ++i) s.values[i] = es.eigenvalues()(m - 1 - i);
  return s;
}

Hermitian herm_sqrt(const Hermitian& a) {
  return spectral_map(a, "herm_sqrt", [](double x) { return std::sqrt(x); });
}

Hermitian herm_inv_sqrt(const Hermitian& a) {
  return spectral_map(a, "herm_inv_sqrt",
                      [](double x) { return 1.0 / std::sqrt(x); });
}

Hermitian herm_inverse(const Hermitian& a) {
  return spectral_map(a, "herm_inverse", [](double x) { return 1.0 / x; });
}

double logdet(const Hermitian& a) {
  const auto s = eigenvalues(a);
  require_pd(s, "logdet");
  double acc = 0.0;
  for (double v : s.values) acc += std::log(v);
  return acc;
}

bool is_positive_definite(const Hermitian& a) {
  const auto s = eigenvalues(a);
  const double top = std::max(std::abs(s.max()), kAbsFloor);
  return s.min() > kPdRelTol * top;
}

bool in_unit_cone(const Hermitian& u) {
  const auto s = eigenvalues(u);
  return s.min() > 0.0 && s.max() < 1.0;
}

CMatrix haar_unitary_from_gaussian(const CMatrix& z) {
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

}  // namespace cbgb

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

#ifndef CBGB_HERMITIAN_HPP
#define CBGB_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace cbgb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Tolerances for Hermitian validation, relative to the largest absolute
/// entry with an absolute floor.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kHermitianRejectTol = 1e-8;
inline constexpr double kAbsFloor = 1e-14;
/// A matrix is treated as positive definite when its smallest eigenvalue
/// exceeds this fraction of the largest.
inline constexpr double kPdRelTol = 1e-10;

/// Eigenvalues sorted non-increasing.
struct EigenSpectrum {
  std::vector<double> values;

  int dim() const { return static_cast<int>(values.size()); }
  double max() const { return values.front(); }
  double min() const { return values.back(); }
};

/// An m x m complex Hermitian matrix.
///
/// Construction symmetrizes the input to (A + A^H)/2 and records the size of
/// the correction. Inputs whose relative asymmetry exceeds
/// kHermitianRejectTol are rejected with DomainError.
class Hermitian {
 public:
  Hermitian() = default;
  explicit Hermitian(const CMatrix& a);

  static Hermitian identity(int m);
  static Hermitian zero(int m);
  static Hermitian diagonal(std::span<const double> d);
  static Hermitian diagonal(std::initializer_list<double> d);
  /// G diag(d) G^H for a unitary G (not checked).
  static Hermitian from_spectrum(std::span<const double> d, const CMatrix& g);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  /// Max |a_rs - conj(a_sr)| removed by symmetrization.
  double correction() const { return correction_; }

  Complex operator()(int r, int s) const { return m_(r, s); }

  Hermitian operator+(const Hermitian& o) const;
  Hermitian operator-(const Hermitian& o) const;
  Hermitian operator*(double s) const;
  /// S A S for Hermitian S.
  Hermitian sandwich(const Hermitian& a) const;

  double trace() const;
  double max_abs() const;

 private:
  CMatrix m_;
  double correction_ = 0.0;
};

struct EigenDecomposition {
  EigenSpectrum spectrum;
  CMatrix vectors;  // columns ordered as spectrum.values
};

/// A = G diag(lambda) G^H with lambda non-increasing.
EigenDecomposition eig_hermitian(const Hermitian& a);
EigenSpectrum eigenvalues(const Hermitian& a);

/// Unique Hermitian PD square root. DomainError names the offending
/// eigenvalue when A is not PD.
Hermitian herm_sqrt(const Hermitian& a);
Hermitian herm_inv_sqrt(const Hermitian& a);
Hermitian herm_inverse(const Hermitian& a);

/// Sum of log eigenvalues of a PD matrix.
double logdet(const Hermitian& a);

bool is_positive_definite(const Hermitian& a);
/// Both U and I - U positive definite.
bool in_unit_cone(const Hermitian& u);

/// Haar-distributed unitary from a matrix of iid standard complex normals
/// (QR with phase correction).
CMatrix haar_unitary_from_gaussian(const CMatrix& z);

}  // namespace cbgb

#endif  // CBGB_HERMITIAN_HPP

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

// Seeded generators shared by the unit tests. They use std::mt19937_64 so
// test inputs do not depend on the library's own generator.

#ifndef CBGB_TESTS_SUPPORT_HPP
#define CBGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cbgb/hermitian.hpp"

namespace cbgb::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  double normal() { return std::normal_distribution<double>()(eng_); }

  CMatrix gaussian(int m) {
    CMatrix z(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) z(i, j) = {normal(), normal()};
    return z;
  }

  CMatrix unitary(int m) { return haar_unitary_from_gaussian(gaussian(m)); }

  Hermitian hermitian(int m) {
    const CMatrix z = gaussian(m);
    return Hermitian(0.5 * (z + z.adjoint()));
  }

  /// Hermitian with eigenvalues drawn uniformly from (lo, hi), random
  /// eigenvectors.
  Hermitian with_spectrum_in(int m, double lo, double hi) {
    return Hermitian::from_spectrum(spectrum(m, lo, hi), unitary(m));
  }

  Hermitian positive_definite(int m) { return with_spectrum_in(m, 0.1, 3.0); }

  /// Non-increasing values in (lo, hi).
  std::vector<double> spectrum(int m, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(m));
    for (double& x : v) x = uniform(lo, hi);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace cbgb::testing

#endif  // CBGB_TESTS_SUPPORT_HPP

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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"

namespace cbgb {

namespace {

void require_shape(const char* op, const char* name, double v, int m) {
  if (!(v > m - 1)) {
    std::ostringstream os;
    os << op << ": " << name << " = " << v << " must exceed m - 1 = " << m - 1;
    throw DomainError(os.str());
  }
}

}  // namespace

double log_mv_gamma(double a, int m) {
  if (m < 1) throw DomainError("mv_gamma: m must be positive");
  require_shape("mv_gamma", "a", a, m);
  double acc = 0.5 * m * (m - 1) * std::log(std::numbers::pi);
  for (int j = 1; j <= m; ++j) acc += std::lgamma(a - j + 1);
  return acc;
}

double log_mv_beta(double a, double b, int m) {
  require_shape("mv_beta", "a", a, m);
  require_shape("mv_beta", "b", b, m);
  return log_mv_gamma(a, m) + log_mv_gamma(b, m) - log_mv_gamma(a + b, m);
}

void BimatrixParams::validate() const {
  if (m < 1) throw DomainError("BimatrixParams: m must be positive");
  require_shape("BimatrixParams", "a", a, m);
  require_shape("BimatrixParams", "b", b, m);
  require_shape("BimatrixParams", "c", c, m);
}

double log_mv_beta_star(const BimatrixParams& p) {
  p.validate();
  // Sorted so that the result is bitwise symmetric in (a, b, c).
  std::array<double, 3> s{p.a, p.b, p.c};
  std::sort(s.begin(), s.end());
  return log_mv_gamma(s[0], p.m) + log_mv_gamma(s[1], p.m) +
         log_mv_gamma(s[2], p.m) - log_mv_gamma((s[0] + s[1]) + s[2], p.m);
}

double log_vol_stiefel(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("vol_stiefel: m, n must be positive");
  if (m > n) {
    std::ostringstream os;
    os << "vol_stiefel: m = " << m << " exceeds n = " << n;
    throw DomainError(os.str());
  }
  return m * std::log(2.0) + m * n * std::log(std::numbers::pi) -
         log_mv_gamma(n, m);
}

}  // namespace cbgb

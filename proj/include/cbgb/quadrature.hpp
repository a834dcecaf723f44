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

#ifndef CBGB_QUADRATURE_HPP
#define CBGB_QUADRATURE_HPP

#include <functional>

namespace cbgb {

/// Tanh-sinh quadrature over (lo, hi); integrable endpoint singularities are
/// allowed. `tol` is the relative termination tolerance.
double integrate_1d(const std::function<double(double)>& f, double lo,
                    double hi, double tol = 1e-10);

/// Integral over (0, inf) through f = u / (1 - u), u in (0, 1).
double integrate_half_line(const std::function<double(double)>& f,
                           double tol = 1e-10);

/// Iterated tanh-sinh over (x0, x1) x (y0, y1).
double integrate_2d(const std::function<double(double, double)>& f, double x0,
                    double x1, double y0, double y1, double tol = 1e-10);

/// Iterated integral over (0, inf)^2, each axis mapped by f = u / (1 - u).
double integrate_2d_half_line(const std::function<double(double, double)>& f,
                              double tol = 1e-10);

}  // namespace cbgb

#endif  // CBGB_QUADRATURE_HPP

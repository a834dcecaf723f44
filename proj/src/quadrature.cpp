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

#include "cbgb/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "cbgb/errors.hpp"

namespace cbgb {

namespace {

using boost::math::quadrature::tanh_sinh;

// Integrand value, or zero where rounding put the abscissa on a boundary at
// which the analytic integrand vanishes or is integrably singular.
double guarded(double v) { return std::isfinite(v) ? v : 0.0; }

double half_line_weight(double u) {
  const double w = 1.0 - u;
  return 1.0 / (w * w);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double lo,
                    double hi, double tol) {
  if (!(lo < hi)) throw DomainError("integrate_1d: need lo < hi");
  tanh_sinh<double> q;
  return q.integrate([&](double x) { return guarded(f(x)); }, lo, hi, tol);
}

double integrate_half_line(const std::function<double(double)>& f, double tol) {
  return integrate_1d(
      [&](double u) { return f(u / (1.0 - u)) * half_line_weight(u); }, 0.0,
      1.0, tol);
}

double integrate_2d(const std::function<double(double, double)>& f, double x0,
                    double x1, double y0, double y1, double tol) {
  if (!(x0 < x1) || !(y0 < y1)) throw DomainError("integrate_2d: empty box");
  tanh_sinh<double> outer;
  tanh_sinh<double> inner;
  return outer.integrate(
      [&](double x) {
        return inner.integrate([&](double y) { return guarded(f(x, y)); }, y0,
                               y1, tol);
      },
      x0, x1, tol);
}

double integrate_2d_half_line(const std::function<double(double, double)>& f,
                              double tol) {
  return integrate_2d(
      [&](double u, double v) {
        return f(u / (1.0 - u), v / (1.0 - v)) * half_line_weight(u) *
               half_line_weight(v);
      },
      0.0, 1.0, 0.0, 1.0, tol);
}

}  // namespace cbgb

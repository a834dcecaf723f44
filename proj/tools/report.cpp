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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace cbgb::verify {

std::string strf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  const int len = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out(static_cast<std::size_t>(std::max(len, 0)), '\0');
  std::vsnprintf(out.data(), out.size() + 1, fmt, args);
  va_end(args);
  return out;
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.pass; });
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

void Report::abs_err(const std::string& name, double got, double want,
                     double tol) {
  const double err = std::abs(got - want);
  add({name, strf("%.9f (err %.3e)", got, err), strf("err <= %.0e", tol),
       err <= tol});
}

void Report::rel_err(const std::string& name, double got, double want,
                     double tol) {
  const double err = std::abs(got - want) / std::abs(want);
  add({name, strf("%.12g (rel err %.3e)", got, err),
       strf("rel err <= %.0e", tol), err <= tol});
}

void Report::max_err(const std::string& name, double worst, double tol) {
  add({name, strf("max err %.3e", worst), strf("<= %.0e", tol), worst <= tol});
}

void Report::within_se(const std::string& name, const MCEstimate& est,
                       double want, double k) {
  const double z = est.std_error > 0 ? (est.mean - want) / est.std_error : 0.0;
  const bool ok = std::abs(est.mean - want) <= k * est.std_error;
  add({name,
       strf("%.6f +- %.6f vs %.6f (z %.2f)", est.mean, est.std_error, want, z),
       strf("|z| <= %.0f", k), ok});
}

void Report::within_joint_se(const std::string& name, double x, double y,
                             double se, double k) {
  const double z = se > 0 ? (x - y) / se : 0.0;
  add({name, strf("%.6f vs %.6f, se %.6f (z %.2f)", x, y, se, z),
       strf("|z| <= %.0f", k), std::abs(x - y) <= k * se});
}

void Report::test(const std::string& name, const TestResult& t, double level) {
  const std::string dof = t.dof > 0 ? strf(", dof %d", t.dof) : "";
  add({name, strf("stat %.5f, p %.4f%s", t.statistic, t.p_value, dof.c_str()),
       strf("p >= %.2f", level), t.passes(level)});
}

void Report::exact(const std::string& name, double got, double want) {
  add({name, strf("%.17g", got), strf("== %.17g", want), got == want});
}

void Report::flag(const std::string& name, bool ok, const std::string& detail) {
  add({name, detail, "holds", ok});
}

std::string Report::text() const {
  std::string out = "# " + title_ + "\n";
  for (const auto& c : checks_) {
    out += (c.pass ? "PASS  " : "FAIL  ") + c.name + ": " + c.measured + " [" +
           c.bound + "]\n";
  }
  out += passed() ? "# result: PASS\n" : "# result: FAIL\n";
  return out;
}

}  // namespace cbgb::verify

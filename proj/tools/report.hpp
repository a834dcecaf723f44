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

// Pass/fail records produced by the verification suites.

#ifndef CBGB_TOOLS_REPORT_HPP
#define CBGB_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cbgb/estimate.hpp"
#include "cbgb/stats.hpp"

namespace cbgb::verify {

struct Check {
  std::string name;
  std::string measured;
  std::string bound;
  bool pass = false;
};

class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;

  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const Report& other);

  /// |got - want| <= tol.
  void abs_err(const std::string& name, double got, double want, double tol);
  /// |got - want| / |want| <= tol.
  void rel_err(const std::string& name, double got, double want, double tol);
  /// Largest error over a batch against `tol`.
  void max_err(const std::string& name, double worst, double tol);
  /// |est.mean - want| <= k * est.std_error.
  void within_se(const std::string& name, const MCEstimate& est, double want,
                 double k = 3.0);
  /// |x - y| <= k * se, se supplied by the caller.
  void within_joint_se(const std::string& name, double x, double y, double se,
                       double k = 3.0);
  /// p-value >= level.
  void test(const std::string& name, const TestResult& t, double level);
  /// got == want bitwise.
  void exact(const std::string& name, double got, double want);
  void flag(const std::string& name, bool ok, const std::string& detail);

  /// One line per check, fixed formatting; identical inputs give identical
  /// text.
  std::string text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

/// printf-style formatting into a std::string.
std::string strf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

}  // namespace cbgb::verify

#endif  // CBGB_TOOLS_REPORT_HPP

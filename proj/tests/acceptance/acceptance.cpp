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

// Acceptance report: one PASS/FAIL line per criterion.
//
//   cbgb_acceptance [-v] [id ...]
//
// With no ids every criterion runs. A criterion passes when all of its checks
// pass within its runtime budget. Exit status is the number of failures,
// capped at 125.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "suites.hpp"

namespace {

using cbgb::verify::kCriteria;

// Runtime budget in seconds; 0 for none.
constexpr double kBudget[kCriteria] = {1,   10, 10,  30,  60, 5, 120,
                                       120, 60, 300, 180, 30, 0};

struct Outcome {
  bool pass = false;
  std::string summary;
  std::string checks;
};

Outcome run(int id, bool verbose) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto report = cbgb::verify::run_criterion(id);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const double budget = kBudget[id - 1];
    const bool in_time = budget == 0 || secs < budget;
    std::string detail =
        cbgb::verify::strf("%zu checks, %.1f s", report.checks().size(), secs);
    if (budget > 0) detail += cbgb::verify::strf(" of %.0f s", budget);
    if (!in_time) detail += ", over budget";
    std::string lines;
    for (const auto& c : report.checks()) {
      if (verbose || !c.pass) {
        lines += "      " + std::string(c.pass ? "pass " : "FAIL ") + c.name +
                 ": " + c.measured + " [" + c.bound + "]\n";
      }
    }
    return {report.passed() && in_time, detail, lines};
  } catch (const std::exception& e) {
    return {false, std::string("error: ") + e.what(), ""};
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "-v") {
      verbose = true;
      continue;
    }
    char* end = nullptr;
    const long id = std::strtol(arg.c_str(), &end, 10);
    if (*end != '\0' || id < 1 || id > kCriteria) {
      std::fprintf(stderr, "usage: %s [-v] [criterion 1..%d ...]\n", argv[0],
                   kCriteria);
      return 2;
    }
    ids.push_back(static_cast<int>(id));
  }
  if (ids.empty()) {
    for (int id = 1; id <= kCriteria; ++id) ids.push_back(id);
  }
  int failures = 0;
  for (int id : ids) {
    const auto out = run(id, verbose);
    failures += out.pass ? 0 : 1;
    std::printf("%s  %2d  %s (%s)\n%s", out.pass ? "PASS" : "FAIL", id,
                cbgb::verify::criterion_title(id).c_str(), out.summary.c_str(),
                out.checks.c_str());
    std::fflush(stdout);
  }
  return failures > 125 ? 125 : failures;
}

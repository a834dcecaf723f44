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

// Verification suites behind `cbgb verify` and the acceptance binary.

#ifndef CBGB_TOOLS_SUITES_HPP
#define CBGB_TOOLS_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace cbgb::verify {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SuiteConfig {
  /// constants | hyp | zonal | bgb1 | maxeig
  std::string suite;
  /// bgb1 parts; empty selects all of them.
  std::vector<std::string> parts;
  int m = 1;
  std::uint64_t seed = kDefaultSeed;
};

const std::vector<std::string>& suite_names();
/// normalization, series, determinant, moments, z, inverse, eig, marginals.
const std::vector<std::string>& bgb1_parts();

/// Throws DomainError for unknown suites or parts and for dimensions a part
/// does not support.
Report run_suite(const SuiteConfig& cfg);

inline constexpr int kCriteria = 13;

std::string criterion_title(int id);
/// Checks making up acceptance criterion `id` (1-based).
Report run_criterion(int id, std::uint64_t seed = kDefaultSeed);

/// Independent stream seed for check `tag` under `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace cbgb::verify

#endif  // CBGB_TOOLS_SUITES_HPP

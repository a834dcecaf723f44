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

#ifndef CBGB_ERRORS_HPP
#define CBGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cbgb {

/// Raised when an argument lies outside the domain of an operation
/// (non-Hermitian input, non-PD matrix, shape parameter too small, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a matrix-argument series is detected to diverge.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cbgb

#endif  // CBGB_ERRORS_HPP

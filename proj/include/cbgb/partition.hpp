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

#ifndef CBGB_PARTITION_HPP
#define CBGB_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cbgb {

/// Integer partition with strictly positive, non-increasing parts.
/// Trailing zeros are stripped on construction; the empty partition has
/// weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 beyond the length.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  std::span<const int> parts() const { return parts_; }

  /// "2,1" style; empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Parse "2,1" (whitespace tolerant). Throws DomainError on malformed input.
Partition parse_partition(const std::string& text);

/// All partitions of t with at most max_parts parts, reverse-lexicographic
/// order. t = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int t, int max_parts);

/// Generalized hypergeometric coefficient for the complex case,
/// [a]_tau = prod_j (a - j + 1)_{t_j}.
double ghc(double a, const Partition& tau);

/// log of the product of hook lengths.
double log_hook_product(const Partition& tau);

/// Number of standard Young tableaux of shape tau (hook-length formula),
/// as a double. Memoized per partition; safe for concurrent use.
double standard_tableaux_count(const Partition& tau);
double log_standard_tableaux_count(const Partition& tau);

}  // namespace cbgb

#endif  // CBGB_PARTITION_HPP

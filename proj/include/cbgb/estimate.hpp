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

#ifndef CBGB_ESTIMATE_HPP
#define CBGB_ESTIMATE_HPP

#include <cmath>
#include <cstdint>

namespace cbgb {

/// Monte Carlo result: sample mean and its standard error
/// (sample standard deviation / sqrt(n)).
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  /// Draws redrawn because they fell within 1e-12 of a cone boundary.
  std::int64_t rejections = 0;
  /// Probability estimands only: draws whose PD margin was within 1e-14
  /// of zero (counted as failures).
  std::int64_t boundary_ties = 0;
};

/// Welford accumulator with Chan's parallel merge. Merging shards in a fixed
/// order gives results independent of thread timing.
class MeanAccumulator {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  void merge(const MeanAccumulator& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n_ + o.n_);
    const double d = o.mean_ - mean_;
    mean_ += d * static_cast<double>(o.n_) / total;
    m2_ += o.m2_ +
           d * d * static_cast<double>(n_) * static_cast<double>(o.n_) / total;
    n_ += o.n_;
  }

  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const {
    return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
  }
  double std_error() const {
    return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace cbgb

#endif  // CBGB_ESTIMATE_HPP

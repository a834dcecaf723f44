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

#ifndef CBGB_RANDOM_HPP
#define CBGB_RANDOM_HPP

#include <array>
#include <cstdint>

#include "cbgb/hermitian.hpp"

namespace cbgb {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

/// Deterministic random stream.
///
/// Layout: Philox key = seed (64 bits); counter = (block index, stream id),
/// 64 bits each. Every block yields two 64-bit words. Distinct stream ids
/// give independent sub-streams for sharded Monte Carlo: shard s of a run
/// with seed S reads stream s.
///
/// Variates:
///   uniform()  53-bit mantissa, (k + 0.5) / 2^53, strictly inside (0, 1)
///   normal()   Box-Muller on two uniforms; the second value is cached
///   gamma(k)   Marsaglia-Tsang squeeze for k >= 1; k < 1 via
///              gamma(k + 1) * U^{1/k}
///
/// Identical (seed, stream) and call sequence give identical output on every
/// platform whose libm is correctly rounded for log/sqrt/cos/sin/pow.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  /// Number of 64-bit words consumed so far.
  std::uint64_t position() const { return position_; }

  std::uint64_t next_u64();
  double uniform();
  double normal();
  double gamma(double shape);
  /// Standard complex normal: real and imaginary parts independent with
  /// variance 1/2 each (E|z|^2 = 1).
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 2> block_{};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix of iid standard complex normals.
CMatrix complex_gaussian_matrix(int rows, int cols, RngStream& rng);

/// Haar-distributed m x m unitary.
CMatrix random_unitary(int m, RngStream& rng);

}  // namespace cbgb

#endif  // CBGB_RANDOM_HPP

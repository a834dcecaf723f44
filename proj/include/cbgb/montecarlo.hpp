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

#ifndef CBGB_MONTECARLO_HPP
#define CBGB_MONTECARLO_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "cbgb/errors.hpp"
#include "cbgb/estimate.hpp"
#include "cbgb/matvar.hpp"
#include "cbgb/random.hpp"

namespace cbgb {

/// Per-shard state handed to a draw function.
struct ShardContext {
  RngStream rng;
  SamplerDiagnostics sampler;
  std::int64_t boundary_ties = 0;
};

/// Number of draws assigned to `shard` when n draws are split over
/// `shards`: the first n % shards shards take one extra.
inline std::int64_t shard_size(std::int64_t n, int shards, int shard) {
  return n / shards + (shard < n % shards ? 1 : 0);
}

/// Mean of draw(ctx) over n draws. Shard s reads stream s of `seed`; shards
/// run on their own threads when shards > 1 and are merged in shard order,
/// so the result depends only on (seed, n, shards).
template <typename Draw>
MCEstimate sharded_mean(std::int64_t n, std::uint64_t seed, int shards,
                        Draw&& draw) {
  if (n < 0) throw DomainError("Monte Carlo: negative sample count");
  if (shards < 1) throw DomainError("Monte Carlo: shards must be >= 1");
  std::vector<MeanAccumulator> acc(static_cast<std::size_t>(shards));
  std::vector<ShardContext> ctx;
  ctx.reserve(static_cast<std::size_t>(shards));
  for (int s = 0; s < shards; ++s) {
    ctx.push_back({RngStream(seed, static_cast<std::uint64_t>(s)), {}, 0});
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  auto run = [&](int s) {
    try {
      auto& c = ctx[static_cast<std::size_t>(s)];
      auto& a = acc[static_cast<std::size_t>(s)];
      const std::int64_t count = shard_size(n, shards, s);
      for (std::int64_t i = 0; i < count; ++i) a.add(draw(c));
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < shards; ++s) threads.emplace_back(run, s);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  MeanAccumulator total;
  MCEstimate out;
  for (int s = 0; s < shards; ++s) {
    total.merge(acc[static_cast<std::size_t>(s)]);
    out.rejections += ctx[static_cast<std::size_t>(s)].sampler.rejections;
    out.boundary_ties += ctx[static_cast<std::size_t>(s)].boundary_ties;
  }
  out.mean = total.mean();
  out.std_error = total.std_error();
  out.n = n;
  out.seed = seed;
  out.shards = shards;
  return out;
}

}  // namespace cbgb

#endif  // CBGB_MONTECARLO_HPP

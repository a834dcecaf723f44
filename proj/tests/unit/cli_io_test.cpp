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

#include <gtest/gtest.h>

#include "cbgb/errors.hpp"
#include "io.hpp"
#include "support.hpp"

namespace cbgb::cli {
namespace {

TEST(ParseList, Values) {
  EXPECT_EQ(parse_list("0.3,0.1"), (std::vector<double>{0.3, 0.1}));
  EXPECT_EQ(parse_list(" 2.5 , -1e-3"), (std::vector<double>{2.5, -1e-3}));
  EXPECT_TRUE(parse_list("").empty());
  EXPECT_TRUE(parse_list("  ").empty());
}

TEST(ParseList, Malformed) {
  EXPECT_THROW(parse_list("0.3,,0.1"), DomainError);
  EXPECT_THROW(parse_list("0.3x"), DomainError);
  EXPECT_THROW(parse_list("abc"), DomainError);
}

TEST(MatrixJson, RoundTripIsExact) {
  testing::Gen g(601);
  for (int m = 1; m <= 4; ++m) {
    const Hermitian h = g.hermitian(m);
    const json j = matrix_to_json(h);
    EXPECT_EQ(j.at("dim").get<int>(), m);
    const Hermitian back = matrix_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.matrix(), h.matrix());
  }
}

TEST(MatrixJson, ImaginaryPartOptional) {
  const auto h = matrix_from_json(
      json::parse(R"({"dim": 2, "re": [[1, 0.5], [0.5, 2]]})"));
  EXPECT_EQ(h(0, 1), Complex(0.5, 0.0));
}

TEST(MatrixJson, Rejections) {
  EXPECT_THROW(matrix_from_json(json::parse(R"({"re": [[1]]})")), DomainError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 2, "re": [[1, 0]]})")),
               DomainError);
  EXPECT_THROW(
      matrix_from_json(json::parse(
          R"({"dim": 2, "re": [[1, 0], [0, 1]], "im": [[0, 1], [1, 0]]})")),
      DomainError);
}

TEST(Envelope, SeriesAndEstimateFields) {
  const json s = to_json(SeriesValue{1.5, 12, 1e-12, true});
  EXPECT_EQ(s.at("degree_reached").get<int>(), 12);
  EXPECT_TRUE(s.at("converged").get<bool>());
  MCEstimate e;
  e.mean = 0.25;
  e.n = 100;
  e.seed = 7;
  const json j = to_json(e);
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 7u);
  EXPECT_EQ(j.at("n").get<std::int64_t>(), 100);
}

}  // namespace
}  // namespace cbgb::cli

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

// JSON and text I/O for the command-line front end.

#ifndef CBGB_TOOLS_CLI_IO_HPP
#define CBGB_TOOLS_CLI_IO_HPP

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "cbgb/estimate.hpp"
#include "cbgb/hermitian.hpp"
#include "cbgb/matfun.hpp"

namespace cbgb::cli {

using nlohmann::json;

/// {"dim": m, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const Hermitian& h);
/// Validates shape and Hermitian symmetry; throws DomainError.
Hermitian matrix_from_json(const json& j);
Hermitian read_matrix(const std::string& path);

json to_json(const SeriesValue& v);
json to_json(const MCEstimate& e);

/// Comma-separated reals; an empty or blank string is an empty list.
std::vector<double> parse_list(const std::string& text);

/// Writes `text` to `path`, or to stdout when `path` is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace cbgb::cli

#endif  // CBGB_TOOLS_CLI_IO_HPP

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

#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cbgb/errors.hpp"

namespace cbgb::cli {

json matrix_to_json(const Hermitian& h) {
  const int m = h.dim();
  json re = json::array(), im = json::array();
  for (int r = 0; r < m; ++r) {
    json rr = json::array(), ri = json::array();
    for (int c = 0; c < m; ++c) {
      rr.push_back(h(r, c).real());
      ri.push_back(h(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"dim", m}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Hermitian matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    throw DomainError("matrix JSON: expected {\"dim\", \"re\", \"im\"}");
  }
  const int m = j.at("dim").get<int>();
  if (m < 1) throw DomainError("matrix JSON: dim < 1");
  const json zero = json::array();
  const json& re = j.at("re");
  const json& im = j.contains("im") ? j.at("im") : zero;
  auto check_rows = [m](const json& a, const char* name) {
    if (!a.is_array() || static_cast<int>(a.size()) != m) {
      throw DomainError(std::string("matrix JSON: '") + name +
                        "' must have dim rows");
    }
    for (const auto& row : a) {
      if (!row.is_array() || static_cast<int>(row.size()) != m) {
        throw DomainError(std::string("matrix JSON: '") + name +
                          "' rows must have dim entries");
      }
    }
  };
  check_rows(re, "re");
  if (!im.empty()) check_rows(im, "im");
  CMatrix a(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      const double y = im.empty() ? 0.0 : im[r][c].get<double>();
      a(r, c) = {re[r][c].get<double>(), y};
    }
  }
  return Hermitian(a);
}

Hermitian read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read matrix file '" + path + "'");
  try {
    return matrix_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw DomainError("matrix file '" + path + "': " + e.what());
  }
}

json to_json(const SeriesValue& v) {
  return {{"value", v.value},
          {"degree_reached", v.degree_reached},
          {"last_layer_mag", v.last_layer_mag},
          {"converged", v.converged}};
}

json to_json(const MCEstimate& e) {
  return {{"mean", e.mean},
          {"std_error", e.std_error},
          {"n", e.n},
          {"seed", e.seed},
          {"shards", e.shards},
          {"rejections", e.rejections},
          {"boundary_ties", e.boundary_ties}};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw DomainError("empty entry in list '" + text + "'");
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw DomainError("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

}  // namespace cbgb::cli

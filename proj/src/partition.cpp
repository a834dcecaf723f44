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

#include "cbgb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "cbgb/errors.hpp"

namespace cbgb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw DomainError("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("Partition: parts must be non-increasing");
    }
    weight_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DomainError("parse_partition: bad part '" + token + "'");
    }
    if (used != token.size()) {
      throw DomainError("parse_partition: bad part '" + token + "'");
    }
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots,
                   std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // remaining - p must fit into slots - 1 parts of size <= p
    if (static_cast<long long>(p) * slots < remaining) break;
    cur.push_back(p);
    enumerate_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int t, int max_parts) {
  if (t < 0) throw DomainError("enumerate_partitions: negative weight");
  if (max_parts < 1) throw DomainError("enumerate_partitions: max_parts < 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(t, t, max_parts, cur, out);
  return out;
}

double ghc(double a, const Partition& tau) {
  double acc = 1.0;
  for (int j = 0; j < tau.length(); ++j) {
    const double base = a - j;
    for (int l = 0; l < tau[j]; ++l) acc *= base + l;
  }
  return acc;
}

double log_hook_product(const Partition& tau) {
  // Column lengths give the leg of each cell.
  const int rows = tau.length();
  const int cols = rows ? tau[0] : 0;
  std::vector<int> col_len(static_cast<std::size_t>(cols), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < tau[i]; ++j) ++col_len[static_cast<std::size_t>(j)];
  double acc = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < tau[i]; ++j) {
      const int arm = tau[i] - j - 1;
      const int leg = col_len[static_cast<std::size_t>(j)] - i - 1;
      acc += std::log(static_cast<double>(arm + leg + 1));
    }
  }
  return acc;
}

namespace {

class TableauxCache {
 public:
  double log_count(const Partition& tau) {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(tau);
      if (it != cache_.end()) return it->second;
    }
    const double v = std::lgamma(static_cast<double>(tau.weight()) + 1.0) -
                     log_hook_product(tau);
    std::unique_lock lock(mu_);
    cache_.emplace(tau, v);
    return v;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<Partition, double, PartitionHash> cache_;
};

TableauxCache& tableaux_cache() {
  static TableauxCache cache;
  return cache;
}

}  // namespace

double log_standard_tableaux_count(const Partition& tau) {
  return tableaux_cache().log_count(tau);
}

double standard_tableaux_count(const Partition& tau) {
  return std::round(std::exp(log_standard_tableaux_count(tau)));
}

}  // namespace cbgb

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

#include "cbgb/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "cbgb/errors.hpp"

namespace cbgb {

namespace {

// Bialternant is abandoned for Jacobi-Trudi below this argument gap.
constexpr double kBialternantGap = 1e-6;

}  // namespace

PartitionTable::PartitionTable(int m, int max_degree)
    : m_(m), max_degree_(max_degree) {
  if (m < 1) throw DomainError("PartitionTable: m < 1");
  if (max_degree < 0) throw DomainError("PartitionTable: negative degree");

  degree_begin_.push_back(0);
  for (int t = 0; t <= max_degree; ++t) {
    for (auto& p : enumerate_partitions(t, m)) {
      const int idx = static_cast<int>(weight_.size());
      for (int r = 0; r < m; ++r) parts_.push_back(p[r]);
      weight_.push_back(p.weight());
      length_.push_back(p.length());
      index_.emplace(std::move(p), idx);
    }
    degree_begin_.push_back(static_cast<int>(weight_.size()));
  }

  const int n = size();
  parent_.assign(n, -1);
  parent_row_.assign(n, -1);
  parent_col_.assign(n, -1);
  minus_.assign(static_cast<std::size_t>(n) * m, -1);
  drop_last_.assign(n, -1);
  log_inv_hook_.assign(n, 0.0);
  log_schur_identity_.assign(n, 0.0);

  std::vector<int> buf(static_cast<std::size_t>(m));
  auto lookup = [&](const std::vector<int>& v) {
    auto it = index_.find(Partition(v));
    return it == index_.end() ? -1 : it->second;
  };

  for (int idx = 0; idx < n; ++idx) {
    for (int r = 0; r < m; ++r) buf[r] = part(idx, r);
    const int len = length_[idx];
    if (len > 0) {
      const int row = len - 1;
      --buf[row];
      parent_[idx] = lookup(buf);
      parent_row_[idx] = row;
      parent_col_[idx] = part(idx, row) - 1;
      ++buf[row];

      const int saved = buf[row];
      buf[row] = 0;
      drop_last_[idx] = lookup(buf);
      buf[row] = saved;
    }
    for (int r = 0; r < m; ++r) {
      const int next = r + 1 < m ? buf[r + 1] : 0;
      if (buf[r] > next) {
        --buf[r];
        minus_[static_cast<std::size_t>(idx) * m + r] = lookup(buf);
        ++buf[r];
      }
    }
    // With l_i = k_i + m - 1 - i:
    //   1/H = prod_{i<j} (l_i - l_j) / prod_i l_i!
    //   s(1^m) = prod_{i<j} (l_i - l_j) / (j - i)
    double inv_hook = 0.0;
    double schur_id = 0.0;
    for (int i = 0; i < m; ++i) {
      const int li = buf[i] + m - 1 - i;
      inv_hook -= std::lgamma(static_cast<double>(li) + 1.0);
      for (int j = i + 1; j < m; ++j) {
        const int lj = buf[j] + m - 1 - j;
        const double diff = std::log(static_cast<double>(li - lj));
        inv_hook += diff;
        schur_id += diff - std::log(static_cast<double>(j - i));
      }
    }
    log_inv_hook_[idx] = inv_hook;
    log_schur_identity_[idx] = schur_id;
  }
}

Partition PartitionTable::partition(int idx) const {
  std::vector<int> v(
      parts_.begin() + static_cast<std::ptrdiff_t>(idx) * m_,
      parts_.begin() + static_cast<std::ptrdiff_t>(idx + 1) * m_);
  return Partition(std::move(v));
}

int PartitionTable::index_of(const Partition& p) const {
  if (p.length() > m_ || p.weight() > max_degree_) return -1;
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<const PartitionTable> PartitionTable::get(int m,
                                                          int max_degree) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PartitionTable>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end() && it->second->max_degree() >= max_degree) {
    return it->second;
  }
  auto table = std::make_shared<const PartitionTable>(m, max_degree);
  cache[m] = table;
  return table;
}

SchurStepper::SchurStepper(const PartitionTable& table,
                           std::span<const double> x)
    : table_(table), m_(table.m()), x_(x.begin(), x.end()) {
  if (static_cast<int>(x.size()) != m_) {
    throw DomainError("SchurStepper: argument count must equal table m");
  }
  double top = 0.0;
  for (double v : x_) top = std::max(top, std::abs(v));
  scale_ = top > 0.0 ? top : 1.0;
  for (double& v : x_) v /= scale_;
  pow_.assign(static_cast<std::size_t>(m_), std::vector<double>{});
}

void SchurStepper::advance(int t) {
  if (t > table_.max_degree()) {
    throw DomainError("SchurStepper: degree beyond table");
  }
  for (int n = 0; n < m_; ++n) {
    auto& p = pow_[static_cast<std::size_t>(n)];
    if (static_cast<int>(p.size()) != t) {
      throw DomainError("SchurStepper: degrees must be advanced in order");
    }
    p.push_back(t == 0 ? 1.0 : p.back() * x_[static_cast<std::size_t>(n)]);
  }
  const int begin = table_.degree_begin(t);
  const int end = table_.degree_end(t);
  s_.resize(static_cast<std::size_t>(end) * m_, 0.0);
  g_.resize(static_cast<std::size_t>(end) * m_ * m_, 0.0);

  const std::size_t mm = static_cast<std::size_t>(m_);
  for (int idx = begin; idx < end; ++idx) {
    const int len = table_.length(idx);
    const std::size_t sbase = static_cast<std::size_t>(idx) * mm;
    for (int level = 0; level < m_; ++level) {
      const int nvars = level + 1;
      if (len > nvars) {
        s_[sbase + level] = 0.0;
        continue;
      }
      if (level == 0) {
        s_[sbase] = pow_[0][static_cast<std::size_t>(table_.part(idx, 0))];
        continue;
      }
      // G(nu, j): rows before j are final, row j may still lose boxes
      // (down to nu_{j+1}); G(nu, nvars) drops the last row entirely.
      const double xn = x_[static_cast<std::size_t>(level)];
      const std::size_t gbase = (sbase + level) * mm;
      const int bar = len == nvars ? table_.drop_last(idx) : idx;
      double g = s_[static_cast<std::size_t>(bar) * mm + (level - 1)];
      g_[gbase + level] = g;
      for (int r = level - 1; r >= 0; --r) {
        if (table_.part(idx, r) > table_.part(idx, r + 1)) {
          const int mi = table_.minus(idx, r);
          g += xn * g_[(static_cast<std::size_t>(mi) * mm + level) * mm + r];
        }
        g_[gbase + r] = g;
      }
      const int last = table_.part(idx, level);
      s_[sbase + level] = pow_[static_cast<std::size_t>(level)]
                              [static_cast<std::size_t>(last)] *
                          g;
    }
  }
}

ScaledSchurValues schur_all(const PartitionTable& table,
                            std::span<const double> x, int max_degree) {
  SchurStepper stepper(table, x);
  for (int t = 0; t <= max_degree; ++t) stepper.advance(t);
  ScaledSchurValues out;
  out.scale = stepper.scale();
  const int end = table.degree_end(max_degree);
  out.values.resize(static_cast<std::size_t>(end));
  for (int i = 0; i < end; ++i) out.values[i] = stepper.value(i);
  return out;
}

namespace {

double schur_branching(const Partition& kappa, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  auto table = PartitionTable::get(n, kappa.weight());
  const int idx = table->index_of(kappa);
  SchurStepper stepper(*table, x);
  for (int t = 0; t <= kappa.weight(); ++t) stepper.advance(t);
  return stepper.value(idx) *
         std::pow(stepper.scale(), static_cast<double>(kappa.weight()));
}

double schur_jacobi_trudi(const Partition& kappa, std::span<const double> x) {
  const int len = kappa.length();
  if (len == 0) return 1.0;
  const int top = kappa[0] + len;
  // h[k] over all variables, built one variable at a time.
  std::vector<double> h(static_cast<std::size_t>(top) + 1, 0.0);
  h[0] = 1.0;
  for (double xi : x) {
    for (int k = 1; k <= top; ++k) h[k] += xi * h[k - 1];
  }
  Eigen::MatrixXd mat(len, len);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      const int k = kappa[i] - i + j;
      mat(i, j) = k < 0 ? 0.0 : h[static_cast<std::size_t>(k)];
    }
  }
  return mat.fullPivLu().determinant();
}

double schur_bialternant(const Partition& kappa, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(x[i] - x[j]) < kBialternantGap) {
        return schur_jacobi_trudi(kappa, x);
      }
    }
  }
  Eigen::MatrixXd num(n, n);
  double vandermonde = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num(i, j) = std::pow(x[i], kappa[j] + n - 1 - j);
    }
    for (int j = i + 1; j < n; ++j) vandermonde *= x[i] - x[j];
  }
  return num.fullPivLu().determinant() / vandermonde;
}

}  // namespace

double schur(const Partition& kappa, std::span<const double> x,
             SchurMethod method) {
  if (x.empty()) throw DomainError("schur: no arguments");
  if (kappa.length() > static_cast<int>(x.size())) return 0.0;
  switch (method) {
    case SchurMethod::kBranching:
      return schur_branching(kappa, x);
    case SchurMethod::kBialternant:
      return schur_bialternant(kappa, x);
    case SchurMethod::kJacobiTrudi:
      return schur_jacobi_trudi(kappa, x);
  }
  return 0.0;
}

double zonal_C(const Partition& tau, std::span<const double> eigs,
               SchurMethod method) {
  if (tau.length() > static_cast<int>(eigs.size())) return 0.0;
  return std::exp(log_standard_tableaux_count(tau)) * schur(tau, eigs, method);
}

double zonal_C(const Partition& tau, const EigenSpectrum& eigs) {
  return zonal_C(tau, std::span<const double>(eigs.values));
}

double log_zonal_at_identity(const Partition& tau, int m) {
  if (m < 1) throw DomainError("zonal_at_identity: m < 1");
  if (tau.length() > m) return -std::numeric_limits<double>::infinity();
  double acc = log_standard_tableaux_count(tau);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      acc += std::log(static_cast<double>(tau[i] - tau[j] + j - i)) -
             std::log(static_cast<double>(j - i));
    }
  }
  return acc;
}

double zonal_at_identity(const Partition& tau, int m) {
  if (tau.length() > m) return 0.0;
  return std::exp(log_zonal_at_identity(tau, m));
}

}  // namespace cbgb

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

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>

#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"

namespace cbgb {

namespace {

// Layer magnitudes must grow this many degrees in a row (past kDivergeAfter)
// before a series outside its disc of convergence is declared divergent.
constexpr int kDivergeRun = 3;
constexpr int kDivergeAfter = 5;
constexpr double kUnitRadiusTol = 1e-12;

double pairwise_sum_impl(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum_impl(v, h) + pairwise_sum_impl(v + h, n - h);
}

// Equal eigenvalues (X = s I) take the table-free identity path.
std::optional<double> scalar_multiple(std::span<const double> x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double tol = 1e-15 * std::max(std::abs(*lo), std::abs(*hi));
  if (*hi - *lo <= tol) return *hi;
  return std::nullopt;
}

double spectral_radius(std::span<const double> x) {
  double r = 0.0;
  for (double v : x) r = std::max(r, std::abs(v));
  return r;
}

std::string pole_message(const Partition& p) {
  std::ostringstream os;
  os << "hyp_pfq: denominator coefficient vanishes at partition ("
     << p.to_string() << ")";
  return os.str();
}

struct SeriesShape {
  std::span<const double> num;
  std::span<const double> den;
  int m;
};

// Returns whether layer growth should be monitored; throws when the series
// is known to diverge on the unit sphere.
bool monitor_growth(const SeriesShape& shape, double radius) {
  const std::size_t p = shape.num.size();
  const std::size_t q = shape.den.size();
  if (p > q + 1) return radius > 0.0;
  if (p != q + 1 || radius == 0.0) return false;
  if (std::abs(radius - 1.0) > kUnitRadiusTol) return radius > 1.0;
  // On the unit sphere the series converges iff the parameter excess
  // sum(den) - sum(num) exceeds m - 1.
  double excess = 0.0;
  for (double b : shape.den) excess += b;
  for (double a : shape.num) excess -= a;
  if (!(excess > shape.m - 1)) {
    std::ostringstream os;
    os << "hyp_pfq: series diverges at spectral radius 1 (parameter excess "
       << excess << " <= m - 1 = " << shape.m - 1 << ")";
    throw DivergenceError(os.str());
  }
  return false;
}

// Sums total-degree layers 0..T. fill(t, terms) appends the non-zero terms
// of layer t in a fixed order.
template <typename FillLayer>
SeriesValue sum_layers(const SeriesShape& shape, double radius,
                       TruncationPolicy policy, FillLayer&& fill) {
  const bool check_growth = monitor_growth(shape, radius);
  SeriesValue out;
  std::vector<double> terms;
  double value = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int growth_run = 0;
  int small_run = 0;
  for (int t = 0; t <= policy.max_degree; ++t) {
    terms.clear();
    fill(t, terms);
    double mag = 0.0;
    for (double v : terms) mag += std::abs(v);
    value += pairwise_sum(terms);
    out.degree_reached = t;
    out.last_layer_mag = mag;

    if (!std::isfinite(value)) {
      throw DivergenceError("hyp_pfq: series overflowed");
    }
    if (check_growth && t > kDivergeAfter) {
      growth_run = mag > prev_mag ? growth_run + 1 : 0;
      if (growth_run >= kDivergeRun) {
        std::ostringstream os;
        os << "hyp_pfq: series diverges (layer magnitude grew for "
           << kDivergeRun << " consecutive degrees at degree " << t
           << ", spectral radius " << radius << ")";
        throw DivergenceError(os.str());
      }
    }
    prev_mag = mag;

    const bool small = mag <= policy.tail_tol * std::max(1.0, std::abs(value));
    out.converged = t > 0 && small;
    if (t > 0) {
      small_run = small ? small_run + 1 : 0;
      if (small_run >= 2) break;
    }
  }
  out.value = value;
  return out;
}

// Terms of pFq(num; den; s I) computed directly from the partition parts:
//   [a]_k      = prod_i prod_{j < k_i} (a - i + j)
//   C~_k(I)/k! = prod_{i<j} (l_i - l_j)^2 / (j - i) / prod_i l_i!,
// with l_i = k_i + m - 1 - i (0-based i). Everything except the Vandermonde
// part factors over rows and is tabulated per (row, part). No partition
// table is needed, so the degree can go far beyond the tabulated path.
class ScalarTerms {
 public:
  ScalarTerms(const SeriesShape& shape, double s, int max_degree)
      : m_(shape.m),
        width_(max_degree + 1),
        s_(s),
        log_s_(s == 0.0 ? 0.0 : std::log(std::abs(s))),
        kappa_(static_cast<std::size_t>(shape.m), 0),
        row_log_(static_cast<std::size_t>(shape.m) * (max_degree + 1), 0.0),
        row_sign_(row_log_.size(), 1),
        first_pole_(static_cast<std::size_t>(shape.m), INT_MAX),
        first_zero_(static_cast<std::size_t>(shape.m), INT_MAX) {
    const int top = max_degree + m_;
    log_int_.assign(static_cast<std::size_t>(top) + 1, 0.0);
    std::vector<double> log_fact(static_cast<std::size_t>(top) + 1, 0.0);
    for (int n = 1; n <= top; ++n) {
      log_int_[n] = std::log(static_cast<double>(n));
      log_fact[n] = log_fact[n - 1] + log_int_[n];
    }
    for (int i = 0; i < m_; ++i) {
      double* lg = &row_log_[static_cast<std::size_t>(i) * width_];
      std::int8_t* sg = &row_sign_[static_cast<std::size_t>(i) * width_];
      for (int k = 0; k <= max_degree; ++k) lg[k] = -log_fact[k + m_ - 1 - i];
      accumulate_row(shape.num, i, 1.0, lg, sg, first_zero_[i]);
      accumulate_row(shape.den, i, -1.0, lg, sg, first_pole_[i]);
    }
  }

  void fill(int t, std::vector<double>& terms) {
    if (s_ == 0.0 && t > 0) return;
    layer_log_ = t * log_s_;
    layer_sign_ = (s_ < 0.0 && (t % 2)) ? -1 : 1;
    enumerate(0, t, t, terms);
  }

 private:
  // Adds dir * log|(a - i)_k| for each parameter to the row, k = 0..width-1.
  // `first` records the smallest k whose factor product vanishes.
  void accumulate_row(std::span<const double> params, int i, double dir,
                      double* lg, std::int8_t* sg, int& first) const {
    for (double a : params) {
      double acc = 0.0;
      int sign = 1;
      for (int k = 1; k < width_; ++k) {
        const double f = a - i + (k - 1);
        if (f == 0.0) {
          first = std::min(first, k);
          break;
        }
        acc += std::log(std::abs(f));
        if (f < 0.0) sign = -sign;
        lg[k] += dir * acc;
        if (sign < 0) sg[k] = static_cast<std::int8_t>(-sg[k]);
      }
    }
  }

  // Reverse-lexicographic: each part as large as allowed first.
  void enumerate(int row, int left, int cap, std::vector<double>& terms) {
    if (row == m_ - 1) {
      if (left > cap) return;
      kappa_[row] = left;
      emit(terms);
      return;
    }
    const int rows_after = m_ - row - 1;
    for (int v = std::min(left, cap); v >= 0; --v) {
      if (left - v > v * rows_after) break;
      kappa_[row] = v;
      enumerate(row + 1, left - v, v, terms);
    }
  }

  void emit(std::vector<double>& terms) {
    bool zero = false;
    for (int i = 0; i < m_; ++i) {
      if (kappa_[i] >= first_pole_[i]) {
        throw DomainError(pole_message(Partition(kappa_)));
      }
      zero = zero || kappa_[i] >= first_zero_[i];
    }
    if (zero) return;
    double log_term = layer_log_;
    int sign = layer_sign_;
    for (int i = 0; i < m_; ++i) {
      const std::size_t cell = static_cast<std::size_t>(i) * width_ + kappa_[i];
      log_term += row_log_[cell];
      sign *= row_sign_[cell];
      const int li = kappa_[i] + m_ - 1 - i;
      for (int j = i + 1; j < m_; ++j) {
        const int lj = kappa_[j] + m_ - 1 - j;
        log_term += 2.0 * log_int_[li - lj] - log_int_[j - i];
      }
    }
    const double term = sign * std::exp(log_term);
    if (term != 0.0) terms.push_back(term);
  }

  int m_;
  int width_;
  double s_;
  double log_s_;
  double layer_log_ = 0.0;
  int layer_sign_ = 1;
  std::vector<int> kappa_;
  std::vector<double> row_log_;
  std::vector<std::int8_t> row_sign_;
  std::vector<int> first_pole_;
  std::vector<int> first_zero_;
  std::vector<double> log_int_;
};

SeriesValue scalar_series(const SeriesShape& shape, double s,
                          TruncationPolicy policy) {
  ScalarTerms terms(shape, s, policy.max_degree);
  return sum_layers(
      shape, std::abs(s), policy,
      [&](int t, std::vector<double>& out) { terms.fill(t, out); });
}

void require_finite(std::span<const double> eigs) {
  for (double v : eigs) {
    if (!std::isfinite(v)) throw DomainError("hyp_pfq: non-finite eigenvalue");
  }
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

void TruncationPolicy::validate() const {
  if (max_degree < 1) throw DomainError("TruncationPolicy: max_degree < 1");
  if (!(tail_tol > 0.0)) throw DomainError("TruncationPolicy: tail_tol <= 0");
}

TruncationPolicy identity_policy(int m) {
  if (m < 1) throw DomainError("identity_policy: m < 1");
  // Keeps the number of partitions summed near 2 10^8 or below.
  static constexpr int kDegree[] = {400000, 30000, 2000, 500, 250, 180};
  const int t = m <= 6 ? kDegree[m - 1] : kIdentityPolicy.max_degree;
  return {std::max(t, kIdentityPolicy.max_degree), 1e-13};
}

HypergeometricSeries::HypergeometricSeries(std::vector<double> num,
                                           std::vector<double> den, int m,
                                           int max_degree)
    : num_(std::move(num)),
      den_(std::move(den)),
      m_(m),
      max_degree_(max_degree),
      table_(PartitionTable::get(m, max_degree)) {
  const int end = table_->degree_end(max_degree);
  coef_.resize(static_cast<std::size_t>(end));
  for (int idx = 1; idx < end; ++idx) {
    const int parent = table_->parent(idx);
    Coefficient c = coef_[parent];
    // [a]_kappa / [a]_parent = a - row + col for the added box.
    const double shift =
        static_cast<double>(table_->parent_col(idx) - table_->parent_row(idx));
    for (double a : num_) {
      const double f = a + shift;
      if (f == 0.0) {
        c.sign = 0;
      } else {
        c.log_abs += std::log(std::abs(f));
        if (f < 0.0) c.sign = -c.sign;
      }
    }
    for (double b : den_) {
      const double f = b + shift;
      if (f == 0.0) {
        if (c.pole < 0) c.pole = idx;
      } else {
        c.log_abs -= std::log(std::abs(f));
        if (f < 0.0) c.sign = -c.sign;
      }
    }
    coef_[idx] = c;
  }
}

template <typename TermFn>
SeriesValue HypergeometricSeries::run(TermFn&& layer_term, double radius,
                                      TruncationPolicy policy) const {
  policy.validate();
  if (policy.max_degree > max_degree_) {
    throw DomainError("HypergeometricSeries: policy degree beyond table");
  }
  const SeriesShape shape{num_, den_, m_};
  return sum_layers(
      shape, radius, policy, [&](int t, std::vector<double>& terms) {
        for (int idx = table_->degree_begin(t); idx < table_->degree_end(t);
             ++idx) {
          const Coefficient& c = coef_[idx];
          if (c.pole >= 0) {
            throw DomainError(pole_message(table_->partition(c.pole)));
          }
          if (c.sign == 0) continue;
          const double term = layer_term(idx, t, c.log_abs, c.sign);
          if (term != 0.0) terms.push_back(term);
        }
      });
}

SeriesValue HypergeometricSeries::evaluate(std::span<const double> eigs,
                                           TruncationPolicy policy) const {
  if (static_cast<int>(eigs.size()) != m_) {
    throw DomainError("hyp_pfq: argument dimension does not match series");
  }
  require_finite(eigs);
  if (auto s = scalar_multiple(eigs)) {
    policy.validate();
    return scalar_series({num_, den_, m_}, *s, policy);
  }
  SchurStepper schur(*table_, eigs);
  const double log_scale = std::log(schur.scale());
  int advanced = -1;
  return run(
      [&](int idx, int t, double log_coef, int sign) {
        while (advanced < t) schur.advance(++advanced);
        const double s = schur.value(idx);
        if (s == 0.0) return 0.0;
        return sign * s *
               std::exp(log_coef + table_->log_inv_hook(idx) + t * log_scale);
      },
      spectral_radius(eigs), policy);
}

SeriesValue HypergeometricSeries::evaluate_pair(std::span<const double> x,
                                                std::span<const double> y,
                                                TruncationPolicy policy) const {
  if (static_cast<int>(x.size()) != m_ || static_cast<int>(y.size()) != m_) {
    throw DomainError("hyp_pfq: argument dimension does not match series");
  }
  require_finite(x);
  require_finite(y);
  if (m_ == 1) {
    // C~_k(x) C~_k(y) / C~_k(1) = C~_k(x y) for a single variable.
    policy.validate();
    return scalar_series({num_, den_, m_}, x[0] * y[0], policy);
  }
  SchurStepper sx(*table_, x);
  SchurStepper sy(*table_, y);
  const double log_scale = std::log(sx.scale()) + std::log(sy.scale());
  const double radius = spectral_radius(x) * spectral_radius(y);
  int advanced = -1;
  return run(
      [&](int idx, int t, double log_coef, int sign) {
        while (advanced < t) {
          ++advanced;
          sx.advance(advanced);
          sy.advance(advanced);
        }
        const double s = sx.value(idx) * sy.value(idx);
        if (s == 0.0) return 0.0;
        return sign * s *
               std::exp(log_coef + table_->log_inv_hook(idx) -
                        table_->log_schur_identity(idx) + t * log_scale);
      },
      radius, policy);
}

SeriesValue hyp_pfq(std::span<const double> num, std::span<const double> den,
                    std::span<const double> eigs, TruncationPolicy policy) {
  policy.validate();
  if (eigs.empty()) throw DomainError("hyp_pfq: empty argument");
  require_finite(eigs);
  const int m = static_cast<int>(eigs.size());
  if (auto s = scalar_multiple(eigs)) {
    return scalar_series({num, den, m}, *s, policy);
  }
  HypergeometricSeries series(std::vector<double>(num.begin(), num.end()),
                              std::vector<double>(den.begin(), den.end()), m,
                              policy.max_degree);
  return series.evaluate(eigs, policy);
}

SeriesValue hyp_pfq(std::span<const double> num, std::span<const double> den,
                    const Hermitian& x, TruncationPolicy policy) {
  const auto spec = eigenvalues(x);
  return hyp_pfq(num, den, std::span<const double>(spec.values), policy);
}

}  // namespace cbgb

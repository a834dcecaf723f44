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

#ifndef CBGB_ZONAL_HPP
#define CBGB_ZONAL_HPP

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "cbgb/hermitian.hpp"
#include "cbgb/partition.hpp"

namespace cbgb {

/// Every partition with at most `m` parts and weight at most `max_degree`,
/// laid out flat and grouped by weight (reverse-lexicographic within a
/// weight), together with the index links used by the Schur recursion and
/// by incremental coefficient updates.
class PartitionTable {
 public:
  PartitionTable(int m, int max_degree);

  /// Shared table covering at least (m, max_degree). Thread-safe.
  static std::shared_ptr<const PartitionTable> get(int m, int max_degree);

  int m() const { return m_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(weight_.size()); }

  /// Index range [begin, end) of partitions of weight t.
  int degree_begin(int t) const { return degree_begin_[t]; }
  int degree_end(int t) const { return degree_begin_[t + 1]; }

  int part(int idx, int row) const { return parts_[idx * m_ + row]; }
  int weight(int idx) const { return weight_[idx]; }
  int length(int idx) const { return length_[idx]; }
  Partition partition(int idx) const;
  /// -1 when absent (more than m parts or weight beyond the table).
  int index_of(const Partition& p) const;

  /// Partition with the last box of the last row removed (-1 for empty)
  /// and the (row, column) of that box.
  int parent(int idx) const { return parent_[idx]; }
  int parent_row(int idx) const { return parent_row_[idx]; }
  int parent_col(int idx) const { return parent_col_[idx]; }
  /// Index of kappa - e_row, or -1 if that is not a partition.
  int minus(int idx, int row) const { return minus_[idx * m_ + row]; }
  /// Index of kappa with its last non-zero row removed.
  int drop_last(int idx) const { return drop_last_[idx]; }

  /// log(1 / prod hooks) = log(f^kappa / |kappa|!).
  double log_inv_hook(int idx) const { return log_inv_hook_[idx]; }
  /// log s_kappa(1, ..., 1) with m ones.
  double log_schur_identity(int idx) const { return log_schur_identity_[idx]; }

 private:
  int m_;
  int max_degree_;
  std::vector<int> degree_begin_;
  std::vector<int> parts_;
  std::vector<int> weight_;
  std::vector<int> length_;
  std::vector<int> parent_;
  std::vector<int> parent_row_;
  std::vector<int> parent_col_;
  std::vector<int> minus_;
  std::vector<int> drop_last_;
  std::vector<double> log_inv_hook_;
  std::vector<double> log_schur_identity_;
  std::unordered_map<Partition, int, PartitionHash> index_;
};

/// Schur polynomials s_kappa(x) for every partition of `table` up to
/// degree `max_degree`, evaluated by the horizontal-strip branching rule
/// (one variable at a time). Exact for repeated or zero arguments. The
/// returned values are for the scaled arguments x / scale, where scale is
/// max |x_i| (or 1 when x = 0), so that large degrees neither overflow nor
/// underflow prematurely.
struct ScaledSchurValues {
  double scale = 1.0;
  std::vector<double> values;  // indexed like the table
};
ScaledSchurValues schur_all(const PartitionTable& table,
                            std::span<const double> x, int max_degree);

/// Incremental form of schur_all: values are produced one degree at a time,
/// which lets truncated series stop early.
class SchurStepper {
 public:
  SchurStepper(const PartitionTable& table, std::span<const double> x);
  double scale() const { return scale_; }
  /// Computes all partitions of weight t. Must be called with t = 0, 1, ...
  void advance(int t);
  double value(int idx) const { return s_[idx * m_ + (m_ - 1)]; }

 private:
  const PartitionTable& table_;
  int m_;
  double scale_ = 1.0;
  std::vector<double> x_;
  std::vector<std::vector<double>> pow_;
  std::vector<double> s_;  // per partition, per level
  std::vector<double> g_;  // per partition, per level, per row
};

enum class SchurMethod {
  /// Horizontal-strip branching rule (default).
  kBranching,
  /// Ratio of alternants, falling back to Jacobi-Trudi when two arguments
  /// are closer than 1e-6.
  kBialternant,
  /// Determinant of complete homogeneous symmetric polynomials.
  kJacobiTrudi,
};

double schur(const Partition& kappa, std::span<const double> x,
             SchurMethod method = SchurMethod::kBranching);

/// Complex zonal polynomial C~_tau at the given eigenvalues,
/// C~_tau = f^tau s_tau, normalized so that sum_{tau |- t} C~_tau = (tr X)^t.
/// Returns 0 when tau has more parts than there are eigenvalues.
double zonal_C(const Partition& tau, std::span<const double> eigs,
               SchurMethod method = SchurMethod::kBranching);
double zonal_C(const Partition& tau, const EigenSpectrum& eigs);

/// C~_tau(I_m) in closed form (Weyl dimension formula times f^tau).
double zonal_at_identity(const Partition& tau, int m);
double log_zonal_at_identity(const Partition& tau, int m);

}  // namespace cbgb

#endif  // CBGB_ZONAL_HPP

// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact symmetric matrices and positive semidefiniteness by rational LDL^T.

#ifndef FLAGCERT_PSD_HPP_
#define FLAGCERT_PSD_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "flagcert/rational.hpp"

namespace flagcert {

using RationalVector = std::vector<Rational>;

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order) {
    if (order < 0) throw std::invalid_argument("negative matrix order");
  }
  /// Throws if `rows` is not square or not symmetric.
  explicit SymMatrix(const std::vector<RationalVector>& rows) : SymMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < order_; ++i) {
      if (static_cast<int>(rows[i].size()) != order_) {
        throw std::invalid_argument("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(order_));
      }
      for (int j = 0; j < order_; ++j) entries_[idx(i, j)] = rows[i][j];
    }
    for (int i = 0; i < order_; ++i) {
      for (int j = 0; j < i; ++j) {
        if (entries_[idx(i, j)] != entries_[idx(j, i)]) {
          throw std::invalid_argument("matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }

  static SymMatrix identity(int order) {
    SymMatrix m(order);
    for (int i = 0; i < order; ++i) m.entries_[m.idx(i, i)] = 1;
    return m;
  }

  int order() const { return order_; }
  const Rational& operator()(int i, int j) const { return entries_[idx(i, j)]; }

  /// Sets (i,j) and (j,i).
  void set(int i, int j, const Rational& value) {
    entries_[idx(i, j)] = value;
    entries_[idx(j, i)] = value;
  }

  SymMatrix operator-() const {
    SymMatrix out(order_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
  }

  RationalVector multiply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != order_) throw std::invalid_argument("vector length mismatch");
    RationalVector y(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) y[i] += entries_[idx(i, j)] * x[j];
    return y;
  }

  Rational quadratic_form(const RationalVector& x) const {
    const auto y = multiply(x);
    Rational s;
    for (int i = 0; i < order_; ++i) s += x[i] * y[i];
    return s;
  }

  std::vector<RationalVector> rows() const {
    std::vector<RationalVector> out(order_, RationalVector(order_));
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) out[i][j] = entries_[idx(i, j)];
    return out;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= order_ || j >= order_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * order_ + j;
  }

  int order_ = 0;
  RationalVector entries_;
};

struct PsdReport {
  bool is_psd = false;
  /// Positive pivots in elimination order; a failing pivot is appended last.
  RationalVector pivot_sequence;
  /// Exact nullspace basis (only filled when is_psd).
  std::vector<RationalVector> kernel_basis;
  std::string reason;
};

/// Symmetric Gaussian elimination (LDL^T) with diagonal pivoting.
///
/// Each step takes the largest remaining diagonal entry as pivot. When no
/// positive diagonal remains, the matrix is PSD iff the whole residual block
/// is zero; those directions span the kernel together with the recorded
/// elimination rows. A negative diagonal or a zero diagonal with a nonzero
/// off-diagonal residual is a certificate of indefiniteness.
inline PsdReport psd_check(const SymMatrix& m) {
  const int n = m.order();
  auto work = m.rows();
  std::vector<bool> active(n, true);
  struct Step {
    int pivot;
    Rational value;
    RationalVector row;  // residual row of the pivot, restricted to still-active columns
  };
  std::vector<Step> steps;
  PsdReport report;

  for (;;) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (active[i] && work[i][i].sign() > 0 && (best < 0 || work[i][i] > work[best][best])) best = i;
    }
    if (best < 0) break;
    const Rational d = work[best][best];
    report.pivot_sequence.push_back(d);
    RationalVector row(n);
    for (int j = 0; j < n; ++j) {
      if (active[j] && j != best) row[j] = work[best][j];
    }
    steps.push_back({best, d, std::move(row)});
    active[best] = false;
    for (int i = 0; i < n; ++i) {
      if (!active[i] || work[i][best].is_zero()) continue;
      const Rational factor = work[i][best] / d;
      for (int j = 0; j < n; ++j) {
        if (active[j]) work[i][j] -= factor * work[best][j];
      }
    }
  }

  std::vector<int> free_vars;
  for (int i = 0; i < n; ++i) {
    if (!active[i]) continue;
    if (work[i][i].sign() < 0) {
      report.pivot_sequence.push_back(work[i][i]);
      report.reason = "negative pivot at index " + std::to_string(i);
      return report;
    }
    free_vars.push_back(i);
  }
  for (int i : free_vars) {
    for (int j : free_vars) {
      if (!work[i][j].is_zero()) {
        report.reason = "zero pivot with nonzero residual at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return report;
      }
    }
  }

  report.is_psd = true;
  for (int f : free_vars) {
    RationalVector x(n);
    x[f] = 1;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      Rational s;
      for (int j = 0; j < n; ++j) {
        if (!it->row[j].is_zero()) s += it->row[j] * x[j];
      }
      x[it->pivot] = -s / it->value;
    }
    report.kernel_basis.push_back(std::move(x));
  }
  return report;
}

}  // namespace flagcert

#endif  // FLAGCERT_PSD_HPP_

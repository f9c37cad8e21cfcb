// Copyright 2026 The qembed authors
//
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

#include "qembed/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qembed {

namespace {

Vec residual_vector(const RMat& a, const Vec& x, const Vec& b) {
  Vec r = a.apply(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  return r;
}

// Least squares restricted to the passive columns.
Vec solve_passive(const RMat& a, const Vec& b, const std::vector<int>& passive) {
  RMat sub(a.rows(), static_cast<int>(passive.size()));
  for (std::size_t j = 0; j < passive.size(); ++j) sub.set_column(static_cast<int>(j), a.column(passive[j]));
  return lstsq(sub, b);
}

}  // namespace

NnlsResult nnls(const RMat& a, const Vec& b) {
  const int n = a.cols();
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("nnls: length mismatch");
  }
  Vec x(n, 0.0);
  std::vector<bool> passive(n, false);
  std::vector<int> passive_idx;

  double scale = std::max(1.0, norm2(b));
  for (int j = 0; j < n; ++j) scale = std::max(scale, norm2(a.column(j)));
  const double w_tol = 1e-12 * scale * scale;

  const int max_outer = 3 * n + 30;
  for (int outer = 0; outer < max_outer; ++outer) {
    Vec r = residual_vector(a, x, b);
    Vec w = a.apply_transposed(r);
    int best = -1;
    double best_w = w_tol;
    for (int j = 0; j < n; ++j) {
      if (!passive[j] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    }
    if (best < 0) break;
    passive[best] = true;
    passive_idx.push_back(best);

    for (int inner = 0; inner < max_outer; ++inner) {
      Vec z = solve_passive(a, b, passive_idx);
      bool feasible = true;
      for (double zj : z) {
        if (zj <= 0.0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t j = 0; j < passive_idx.size(); ++j) x[passive_idx[j]] = z[j];
        break;
      }
      // Step toward z until the first passive coefficient hits zero.
      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < passive_idx.size(); ++j) {
        if (z[j] <= 0.0) {
          double xj = x[passive_idx[j]];
          double denom = xj - z[j];
          if (denom > 0.0) alpha = std::min(alpha, xj / denom);
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (std::size_t j = 0; j < passive_idx.size(); ++j) {
        int col = passive_idx[j];
        x[col] += alpha * (z[j] - x[col]);
      }
      // Retire columns that reached zero.
      std::vector<int> keep;
      for (int col : passive_idx) {
        if (x[col] > 1e-14 * scale) {
          keep.push_back(col);
        } else {
          x[col] = 0.0;
          passive[col] = false;
        }
      }
      passive_idx = keep;
      if (passive_idx.empty()) break;
    }
  }

  NnlsResult out;
  out.coefficients = x;
  out.residual = norm2(residual_vector(a, x, b));
  return out;
}

}  // namespace qembed

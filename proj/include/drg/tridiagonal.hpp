// Copyright 2026 The drgkit Authors.
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

#ifndef DRG_TRIDIAGONAL_HPP_
#define DRG_TRIDIAGONAL_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "drg/error.hpp"

namespace drg {

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
/// off-diagonal (off.size() == diag.size() - 1), sorted descending.
/// Implicit-shift QL with Wilkinson shifts; eigenvalues only.
inline std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> diag,
                                                             std::vector<double> off) {
  const int n = static_cast<int>(diag.size());
  require(n >= 1, "tridiagonal matrix must be non-empty");
  require(static_cast<int>(off.size()) == n - 1, "off-diagonal must have n-1 entries");
  off.push_back(0.0);
  constexpr int kMaxSweeps = 60;
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
        if (std::fabs(off[m]) <= 1e-15 * scale) break;
      }
      if (m == l) break;
      if (++iterations > kMaxSweeps) fail(ErrorKind::kInternal, "QL iteration did not converge");
      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    } while (m != l);
  }
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

}  // namespace drg

#endif  // DRG_TRIDIAGONAL_HPP_

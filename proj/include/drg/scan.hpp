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

#ifndef DRG_SCAN_HPP_
#define DRG_SCAN_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drg/classifier.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/params.hpp"
#include "drg/spectral.hpp"

namespace drg {

inline constexpr std::int64_t kMaxScanDegree = 10'000;

/// Candidate arrays with k <= k_max, b_0 = k >= b_1 >= ... >= b_{d-1} >= 1,
/// 1 = c_1 <= ... <= c_d <= k, a_i >= 0 and integral layer sizes, visited in
/// lexicographic order of (k, b_1, c_2, b_2, c_3, ...).
inline void for_each_candidate_array(
    int d, std::int64_t k_max,
    const std::function<void(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&)>&
        visit) {
  require(d >= 1, "scan needs d >= 1");
  require(k_max >= 1 && k_max <= kMaxScanDegree, "scan needs 1 <= k_max <= 10^4");
  std::vector<std::int64_t> b(static_cast<std::size_t>(d)), c(static_cast<std::size_t>(d));
  // Chooses b_i then c_{i+1}; `layer` is k_i, kept integral.
  std::function<void(int, std::int64_t)> extend = [&](int i, std::int64_t layer) {
    const std::int64_t k = b[0];
    if (i == d) {
      visit(b, c);
      return;
    }
    for (std::int64_t bi = 1; bi <= b[i - 1]; ++bi) {
      if (c[i - 1] + bi > k) break;
      b[i] = bi;
      for (std::int64_t ci = c[i - 1]; ci <= k - (i + 1 < d ? 1 : 0); ++ci) {
        if ((layer * bi) % ci != 0) continue;
        c[i] = ci;
        extend(i + 1, layer * bi / ci);
      }
    }
  };
  for (std::int64_t k = 1; k <= k_max; ++k) {
    b[0] = k;
    c[0] = 1;
    if (d == 1) {
      visit(b, c);
      continue;
    }
    extend(1, k);
  }
}

struct ScanRecord {
  IntersectionArray array;
  SpectralProfile profile;
  CliqueGeometryReport geometry;
  ClassificationOutcome outcome;
  /// "J(s,d)" or "H(d,s)" when the array equals a family closed form.
  std::string family_match;
};

/// Closed-form family whose array equals `arr`, if any.
inline std::string family_match(const IntersectionArray& arr) {
  const int d = arr.d();
  const auto k = arr.k();
  if (k % d == 0) {
    const std::int64_t s = 1 + k / d;
    if (s >= 2 && hamming_array(d, s) == arr) {
      return "H(" + std::to_string(d) + "," + std::to_string(s) + ")";
    }
    const std::int64_t js = k / d + d;
    try {
      if (js >= 2 * d && johnson_array(js, d) == arr) {
        return "J(" + std::to_string(js) + "," + std::to_string(d) + ")";
      }
    } catch (const Error&) {
    }
  }
  return {};
}

/// Feasible arrays of diameter d with k <= k_max, classified in lexicographic
/// order. Feasible: valid array, integral k_i, integral Biggs multiplicities
/// summing to n, and non-negative integral intersection numbers.
inline void scan_arrays(int d, std::int64_t k_max, const ClassifierConfig& config,
                        const std::function<void(const ScanRecord&)>& emit) {
  require(d >= 2, "scan needs d >= 2");
  for_each_candidate_array(d, k_max, [&](const auto& b, const auto& c) {
    std::optional<IntersectionArray> candidate;
    try {
      candidate = IntersectionArray::from_sequences(b, c);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
      return;
    }
    const auto& arr = *candidate;
    if (!all_hold(feasibility_check(arr))) return;
    ScanRecord record{arr, eigen_solve(arr), {}, {}, family_match(arr)};
    record.geometry = infer_geometry_from_array(arr, record.profile);
    record.outcome = babai_case_analysis(arr, record.profile, record.geometry, nullptr, config);
    emit(record);
  });
}

}  // namespace drg

#endif  // DRG_SCAN_HPP_

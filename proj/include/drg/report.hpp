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

#ifndef DRG_REPORT_HPP_
#define DRG_REPORT_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace drg {

/// One checked inequality `lhs (relation) rhs`. `slack` is oriented so that
/// a non-strict check holds iff slack >= 0 and a strict one iff slack > 0.
/// Inapplicable checks hold vacuously with zero slack and say why in `note`.
struct InequalityReport {
  std::string name;
  bool applicable = true;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::map<std::string, double> witness;
  std::string note;

  /// lhs >= rhs (or lhs > rhs when `strict`).
  static InequalityReport at_least(std::string name, double lhs, double rhs,
                                   bool strict = false) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.holds = strict ? lhs > rhs : lhs >= rhs;
    return r;
  }

  /// lhs <= rhs (or lhs < rhs when `strict`).
  static InequalityReport at_most(std::string name, double lhs, double rhs,
                                  bool strict = false) {
    InequalityReport r = at_least(std::move(name), rhs, lhs, strict);
    r.lhs = lhs;
    r.rhs = rhs;
    return r;
  }

  static InequalityReport equal(std::string name, double lhs, double rhs,
                                double tolerance = 0.0) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    const double gap = lhs > rhs ? lhs - rhs : rhs - lhs;
    r.slack = tolerance - gap;
    r.holds = gap <= tolerance;
    return r;
  }

  static InequalityReport skipped(std::string name, std::string reason) {
    InequalityReport r;
    r.name = std::move(name);
    r.applicable = false;
    r.holds = true;
    r.note = std::move(reason);
    return r;
  }

  InequalityReport& with(const std::string& key, double value) {
    witness[key] = value;
    return *this;
  }

  InequalityReport& because(std::string text) {
    note = std::move(text);
    return *this;
  }
};

inline bool all_hold(const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.holds) return false;
  }
  return true;
}

}  // namespace drg

#endif  // DRG_REPORT_HPP_

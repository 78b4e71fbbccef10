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

#ifndef DRG_PARAMS_HPP_
#define DRG_PARAMS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"
#include "drg/report.hpp"

namespace drg {

/// Largest vertex count an array may imply; integers up to 2^53 are exact as doubles.
inline constexpr std::int64_t kMaxVertexCount = std::int64_t{1} << 53;

/// Intersection array {b_0..b_{d-1}; c_1..c_d} with its derived parameters.
///
/// Storage is padded to d+1 entries so that b(d) = 0 and c(0) = 0 are
/// addressable. Construction validates every invariant and throws
/// ErrorKind::kInfeasible when the numbers cannot come from a
/// distance-regular graph.
class IntersectionArray {
 public:
  IntersectionArray() = default;

  static IntersectionArray from_sequences(const std::vector<std::int64_t>& b,
                                          const std::vector<std::int64_t>& c) {
    require(!b.empty(), "intersection array needs diameter >= 1");
    require(b.size() == c.size(),
            "intersection array needs as many b entries as c entries (got " +
                std::to_string(b.size()) + " and " + std::to_string(c.size()) + ")");
    IntersectionArray arr;
    arr.d_ = static_cast<int>(b.size());
    arr.b_ = b;
    arr.b_.push_back(0);
    arr.c_.push_back(0);
    arr.c_.insert(arr.c_.end(), c.begin(), c.end());
    arr.validate_and_derive();
    return arr;
  }

  int d() const noexcept { return d_; }
  std::int64_t k() const { return b_[0]; }
  std::int64_t b(int i) const { return b_.at(static_cast<std::size_t>(i)); }
  std::int64_t c(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  std::int64_t a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  std::int64_t k_i(int i) const { return ki_.at(static_cast<std::size_t>(i)); }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t lambda() const { return a_[1]; }
  /// c_2, or 0 for diameter 1 (no pairs at distance two).
  std::int64_t mu() const { return d_ >= 2 ? c_[2] : 0; }

  /// b_0..b_{d-1} and c_1..c_d, as written in the array notation.
  std::vector<std::int64_t> b_sequence() const { return {b_.begin(), b_.end() - 1}; }
  std::vector<std::int64_t> c_sequence() const { return {c_.begin() + 1, c_.end()}; }
  const std::vector<std::int64_t>& layer_sizes() const noexcept { return ki_; }

  /// True when the array was extracted from an explicit graph.
  bool realized() const noexcept { return realized_; }
  void mark_realized() noexcept { realized_ = true; }

  std::string to_string() const {
    std::string out = "{";
    for (int i = 0; i < d_; ++i) out += (i ? "," : "") + std::to_string(b_[i]);
    out += ";";
    for (int i = 1; i <= d_; ++i) out += (i > 1 ? "," : "") + std::to_string(c_[i]);
    return out + "}";
  }

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  void validate_and_derive() {
    const auto infeasible = [this](const std::string& why) {
      fail(ErrorKind::kInfeasible, "array " + to_string() + ": " + why);
    };
    const std::int64_t k = b_[0];
    if (k < 1) infeasible("k = b_0 must be positive");
    if (c_[1] != 1) infeasible("c_1 must equal 1");
    for (int i = 0; i <= d_; ++i) {
      if (i < d_ && b_[i] < 1) infeasible("b_" + std::to_string(i) + " must be positive");
      if (i > 0 && c_[i] < 1) infeasible("c_" + std::to_string(i) + " must be positive");
      if (b_[i] + c_[i] > k) {
        infeasible("b_" + std::to_string(i) + " + c_" + std::to_string(i) + " exceeds k");
      }
    }
    for (int i = 0; i < d_; ++i) {
      if (b_[i + 1] > b_[i]) infeasible("b sequence must be non-increasing");
      if (c_[i + 1] < c_[i]) infeasible("c sequence must be non-decreasing");
    }
    a_.assign(static_cast<std::size_t>(d_) + 1, 0);
    for (int i = 0; i <= d_; ++i) a_[i] = k - b_[i] - c_[i];
    ki_.assign(1, 1);
    n_ = 1;
    for (int i = 0; i < d_; ++i) {
      std::int64_t numerator = 0;
      if (__builtin_mul_overflow(ki_[i], b_[i], &numerator)) infeasible("vertex count overflows");
      if (numerator % c_[i + 1] != 0) {
        infeasible("k_" + std::to_string(i + 1) + " = " + std::to_string(numerator) + "/" +
                   std::to_string(c_[i + 1]) + " is not an integer");
      }
      ki_.push_back(numerator / c_[i + 1]);
      n_ += ki_.back();
      if (n_ > kMaxVertexCount) infeasible("vertex count overflows");
    }
  }

  int d_ = 0;
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> ki_;
  std::int64_t n_ = 0;
  bool realized_ = false;
};

/// J(s,d): b_i = (d-i)(s-d-i), c_i = i^2.
inline IntersectionArray johnson_array(std::int64_t s, int d) {
  require(d >= 1 && s >= 2 * d, "Johnson array requires d >= 1 and s >= 2d");
  std::vector<std::int64_t> b, c;
  for (std::int64_t i = 0; i < d; ++i) {
    b.push_back((d - i) * (s - d - i));
    c.push_back((i + 1) * (i + 1));
  }
  return IntersectionArray::from_sequences(b, c);
}

/// H(d,s): b_i = (d-i)(s-1), c_i = i.
inline IntersectionArray hamming_array(int d, std::int64_t s) {
  require(d >= 1 && s >= 2, "Hamming array requires d >= 1 and s >= 2");
  std::vector<std::int64_t> b, c;
  for (std::int64_t i = 0; i < d; ++i) {
    b.push_back((d - i) * (s - 1));
    c.push_back(i + 1);
  }
  return IntersectionArray::from_sequences(b, c);
}

/// Exhaustive distance-regularity test: every ordered vertex pair is visited.
inline IntersectionArray check_distance_regular(const Graph& g) {
  require(g.order() >= 2, "distance-regularity needs at least two vertices");
  if (!is_connected(g)) fail(ErrorKind::kNotConnected, "graph is not connected");
  const auto k = g.regular_degree();
  if (!k) {
    for (Vertex v = 1; v < g.order(); ++v) {
      if (g.degree(v) != g.degree(0)) {
        fail(ErrorKind::kNotRegular, "vertex 0 has degree " + std::to_string(g.degree(0)) +
                                         " but vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(g.degree(v)));
      }
    }
  }

  std::vector<std::int64_t> b, c;  // indexed by distance; -1 until first seen
  std::vector<std::int64_t> a;
  int diameter = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (diameter < 0) {
      diameter = ecc;
      b.assign(static_cast<std::size_t>(diameter) + 1, -1);
      c.assign(static_cast<std::size_t>(diameter) + 1, -1);
      a.assign(static_cast<std::size_t>(diameter) + 1, -1);
    } else if (ecc != diameter) {
      fail(ErrorKind::kNotDistanceRegular,
           "vertex " + std::to_string(v) + " has eccentricity " + std::to_string(ecc) +
               " but vertex 0 has eccentricity " + std::to_string(diameter));
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      const int i = dist[w];
      std::int64_t down = 0, level = 0, up = 0;
      for (Vertex x : g.neighbors(w)) {
        if (dist[x] == i - 1) ++down;
        else if (dist[x] == i) ++level;
        else ++up;
      }
      const auto check = [&](std::vector<std::int64_t>& table, std::int64_t value,
                             const char* symbol) {
        if (table[i] < 0) {
          table[i] = value;
        } else if (table[i] != value) {
          fail(ErrorKind::kNotDistanceRegular,
               "pair (" + std::to_string(v) + "," + std::to_string(w) + ") at distance " +
                   std::to_string(i) + " has " + symbol + " = " + std::to_string(value) +
                   ", expected " + std::to_string(table[i]));
        }
      };
      check(c, down, "c");
      check(a, level, "a");
      check(b, up, "b");
    }
  }
  std::vector<std::int64_t> bs(b.begin(), b.end() - 1);
  std::vector<std::int64_t> cs(c.begin() + 1, c.end());
  IntersectionArray arr = IntersectionArray::from_sequences(bs, cs);
  if (arr.n() != g.order()) {
    fail(ErrorKind::kInternal, "layer sizes do not sum to the vertex count");
  }
  arr.mark_realized();
  return arr;
}

/// p[s][i][j] = |N_i(u) ∩ N_j(v)| for any u, v at distance s.
class IntersectionNumbers {
 public:
  IntersectionNumbers(int d, std::vector<std::int64_t> values)
      : d_(d), values_(std::move(values)) {}

  std::int64_t operator()(int s, int i, int j) const {
    return values_[index(s, i, j)];
  }
  int d() const noexcept { return d_; }

 private:
  std::size_t index(int s, int i, int j) const {
    const auto size = static_cast<std::size_t>(d_) + 1;
    return (static_cast<std::size_t>(s) * size + static_cast<std::size_t>(i)) * size +
           static_cast<std::size_t>(j);
  }
  int d_;
  std::vector<std::int64_t> values_;
};

/// Exact recurrence from A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}.
/// A remainder, a negative entry or a broken row sum means the array is infeasible.
inline IntersectionNumbers intersection_numbers(const IntersectionArray& arr) {
  const int d = arr.d();
  const auto size = static_cast<std::size_t>(d) + 1;
  std::vector<std::int64_t> p(size * size * size, 0);
  const auto at = [&](int s, int i, int j) -> std::int64_t& {
    return p[(static_cast<std::size_t>(s) * size + static_cast<std::size_t>(i)) * size +
             static_cast<std::size_t>(j)];
  };
  const auto infeasible = [&](int s, int i, int j, const std::string& why) {
    fail(ErrorKind::kInfeasible, "array " + arr.to_string() + ": p^" + std::to_string(s) +
                                     "_{" + std::to_string(i) + "," + std::to_string(j) +
                                     "} " + why);
  };
  for (int s = 0; s <= d; ++s) {
    at(s, 0, s) = 1;
    if (d >= 1) {
      if (s >= 1) at(s, 1, s - 1) = arr.c(s);
      at(s, 1, s) = arr.a(s);
      if (s + 1 <= d) at(s, 1, s + 1) = arr.b(s);
    }
  }
  for (int i = 1; i < d; ++i) {
    for (int s = 0; s <= d; ++s) {
      for (int j = 0; j <= d; ++j) {
        std::int64_t total = 0;
        for (int r = std::max(0, s - 1); r <= std::min(d, s + 1); ++r) {
          total += at(r, i, j) * at(s, 1, r);
        }
        total -= arr.b(i - 1) * at(s, i - 1, j) + arr.a(i) * at(s, i, j);
        if (total % arr.c(i + 1) != 0) infeasible(s, i + 1, j, "is not an integer");
        at(s, i + 1, j) = total / arr.c(i + 1);
      }
    }
  }
  for (int s = 0; s <= d; ++s) {
    for (int i = 0; i <= d; ++i) {
      std::int64_t row = 0;
      for (int j = 0; j <= d; ++j) {
        if (at(s, i, j) < 0) infeasible(s, i, j, "is negative");
        if (at(s, i, j) != at(s, j, i)) infeasible(s, i, j, "is not symmetric in i, j");
        row += at(s, i, j);
      }
      if (row != arr.k_i(i)) infeasible(s, i, d, "row does not sum to k_i");
    }
  }
  return IntersectionNumbers(d, std::move(p));
}

/// Elementary necessary conditions on the array. Terwilliger's inequality is
/// only checked when the graph is known to contain an induced quadrangle.
inline std::vector<InequalityReport> basic_inequalities(const IntersectionArray& arr,
                                                        bool has_quadrangle) {
  std::vector<InequalityReport> out;
  const auto k = static_cast<double>(arr.k());
  const auto lambda = static_cast<double>(arr.lambda());
  const auto mu = static_cast<double>(arr.mu());

  if (arr.d() >= 2) {
    out.push_back(InequalityReport::at_most("lambda_mu", 2 * lambda, k + mu)
                      .with("lambda", lambda)
                      .with("k", k)
                      .with("mu", mu));
  } else {
    out.push_back(InequalityReport::skipped("lambda_mu", "diameter < 2"));
  }

  if (has_quadrangle) {
    for (int i = 1; i <= arr.d(); ++i) {
      const double lhs = static_cast<double>(arr.c(i) - arr.b(i));
      const double rhs = static_cast<double>(arr.c(i - 1) - arr.b(i - 1)) + lambda + 2;
      out.push_back(InequalityReport::at_least("terwilliger_" + std::to_string(i), lhs, rhs)
                        .with("i", i)
                        .with("lambda", lambda));
    }
  } else {
    out.push_back(InequalityReport::skipped("terwilliger", "no induced quadrangle"));
  }

  if (arr.d() >= 3 && arr.mu() >= 2) {
    const double c3 = static_cast<double>(arr.c(3));
    const double b2 = static_cast<double>(arr.b(2));
    const bool first = 2 * c3 >= 3 * mu;
    const bool second = arr.d() == 3 && c3 >= mu + b2;
    const double threshold = arr.d() == 3 ? std::min(1.5 * mu, mu + b2) : 1.5 * mu;
    auto r = InequalityReport::at_least("c3_bound", c3, threshold)
                 .with("c3", c3)
                 .with("mu", mu)
                 .with("b2", b2);
    r.holds = first || second;
    out.push_back(r);
    out.push_back(InequalityReport::at_least("c3_gt_mu", c3, mu, true));
  } else {
    const char* why = arr.d() < 3 ? "diameter < 3" : "mu < 2";
    out.push_back(InequalityReport::skipped("c3_bound", why));
    out.push_back(InequalityReport::skipped("c3_gt_mu", why));
  }
  return out;
}

}  // namespace drg

#endif  // DRG_PARAMS_HPP_

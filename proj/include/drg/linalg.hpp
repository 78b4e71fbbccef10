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

#ifndef DRG_LINALG_HPP_
#define DRG_LINALG_HPP_

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

inline constexpr int kMaxDenseOrder = 3000;

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

/// Eigenvalues of a dense symmetric matrix, sorted descending.
inline std::vector<double> dense_symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::kInternal, "dense eigensolve failed");
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

inline std::vector<double> adjacency_eigenvalues(const Graph& g) {
  require(g.order() <= kMaxDenseOrder, "dense eigensolve is capped at 3000 vertices");
  return dense_symmetric_eigenvalues(adjacency_matrix(g));
}

}  // namespace drg

#endif  // DRG_LINALG_HPP_

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

#ifndef DRG_SPECTRAL_HPP_
#define DRG_SPECTRAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drg/error.hpp"
#include "drg/generators.hpp"
#include "drg/graph.hpp"
#include "drg/linalg.hpp"
#include "drg/params.hpp"
#include "drg/report.hpp"
#include "drg/tridiagonal.hpp"

namespace drg {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kSnapTolerance = 1e-6;
inline constexpr double kDistinctTolerance = 1e-9;

/// Limit of the Hoffman sequence of smallest-eigenvalue suprema.
inline const double kHoffmanLimit = -1.0 - std::sqrt(2.0);

struct SpectralProfile {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t b1 = 0;
  /// theta_0 > theta_1 > ... > theta_d.
  std::vector<double> eigenvalues;
  std::vector<bool> integral;
  /// Biggs multiplicities rounded to the nearest integer.
  std::vector<std::int64_t> multiplicities;
  std::vector<double> raw_multiplicities;
  std::vector<double> multiplicity_residuals;
  /// standard_sequences[j][i] = u_i(theta_j).
  std::vector<std::vector<double>> standard_sequences;
  /// b1/(theta_1+1) and b1/(theta_d+1); absent for diameter 1.
  std::optional<double> b_plus;
  std::optional<double> b_minus;
  /// max(|theta_1|, |theta_d|).
  double xi = 0.0;

  int d() const { return static_cast<int>(eigenvalues.size()) - 1; }
  double theta1() const { return eigenvalues.at(1); }
  double theta_min() const { return eigenvalues.back(); }

  std::int64_t multiplicity_sum() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
  }

  double trace() const {
    double total = 0.0;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      total += raw_multiplicities[j] * eigenvalues[j];
    }
    return total;
  }

  bool multiplicities_integral(double tolerance = kSnapTolerance) const {
    return std::all_of(multiplicity_residuals.begin(), multiplicity_residuals.end(),
                       [&](double r) { return r <= tolerance; });
  }
};

/// Rows of the tridiagonal matrix with sub-diagonal c_i, diagonal a_i, super-diagonal b_i.
inline std::vector<std::vector<std::int64_t>> intersection_matrix(const IntersectionArray& arr) {
  const int d = arr.d();
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(d) + 1,
                                           std::vector<std::int64_t>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    m[i][i] = arr.a(i);
    if (i > 0) m[i][i - 1] = arr.c(i);
    if (i < d) m[i][i + 1] = arr.b(i);
  }
  return m;
}

namespace detail {

/// Parameters as reals; k_i may be fractional for arrays that fail integrality.
struct RealArray {
  std::vector<double> a, b, c, ki;
  double n = 0.0;

  int d() const { return static_cast<int>(a.size()) - 1; }

  static RealArray from(const IntersectionArray& arr) {
    RealArray r;
    for (int i = 0; i <= arr.d(); ++i) {
      r.a.push_back(static_cast<double>(arr.a(i)));
      r.b.push_back(static_cast<double>(arr.b(i)));
      r.c.push_back(static_cast<double>(arr.c(i)));
      r.ki.push_back(static_cast<double>(arr.k_i(i)));
    }
    r.n = static_cast<double>(arr.n());
    return r;
  }
};

inline std::vector<double> real_eigenvalues(const RealArray& r) {
  std::vector<double> off;
  for (int i = 0; i < r.d(); ++i) off.push_back(std::sqrt(r.b[i] * r.c[i + 1]));
  return symmetric_tridiagonal_eigenvalues(r.a, off);
}

inline std::vector<double> real_standard_sequence(const RealArray& r, double theta) {
  std::vector<double> u{1.0};
  if (r.d() >= 1) u.push_back(theta / r.b[0]);
  for (int i = 1; i < r.d(); ++i) {
    u.push_back(((theta - r.a[i]) * u[i] - r.c[i] * u[i - 1]) / r.b[i]);
  }
  return u;
}

inline double real_biggs(const RealArray& r, const std::vector<double>& u) {
  double denominator = 0.0;
  for (int i = 0; i <= r.d(); ++i) denominator += r.ki[i] * u[i] * u[i];
  return r.n / denominator;
}

inline std::vector<Rational> exact_standard_sequence(const IntersectionArray& arr,
                                                     std::int64_t theta) {
  std::vector<Rational> u{Rational(1)};
  if (arr.d() >= 1) u.emplace_back(Rational(theta, arr.k()));
  for (int i = 1; i < arr.d(); ++i) {
    u.push_back(((Rational(theta) - arr.a(i)) * u[i] - Rational(arr.c(i)) * u[i - 1]) /
                Rational(arr.b(i)));
  }
  return u;
}

/// Residual of the last row c_d u_{d-1} + a_d u_d = theta u_d; zero iff theta is an eigenvalue.
inline Rational exact_last_row_residual(const IntersectionArray& arr, std::int64_t theta,
                                        const std::vector<Rational>& u) {
  const int d = arr.d();
  Rational lhs = Rational(arr.a(d)) * u[d];
  if (d >= 1) lhs += Rational(arr.c(d)) * u[d - 1];
  return lhs - Rational(theta) * u[d];
}

}  // namespace detail

/// u_0(theta)..u_d(theta) in double precision.
inline std::vector<double> standard_sequence(const IntersectionArray& arr, double theta) {
  return detail::real_standard_sequence(detail::RealArray::from(arr), theta);
}

/// Exact standard sequence at an integral eigenvalue.
inline std::vector<Rational> exact_standard_sequence(const IntersectionArray& arr,
                                                     std::int64_t theta) {
  return detail::exact_standard_sequence(arr, theta);
}

/// Biggs multiplicity n / sum k_i u_i(theta)^2, exact for integral theta.
inline Rational exact_biggs_multiplicity(const IntersectionArray& arr, std::int64_t theta) {
  const auto u = detail::exact_standard_sequence(arr, theta);
  Rational denominator = 0;
  for (int i = 0; i <= arr.d(); ++i) denominator += Rational(arr.k_i(i)) * u[i] * u[i];
  return Rational(arr.n()) / denominator;
}

inline double biggs_multiplicity(const IntersectionArray& arr, double theta) {
  const auto r = detail::RealArray::from(arr);
  return detail::real_biggs(r, detail::real_standard_sequence(r, theta));
}

/// Eigenvalues, standard sequences and Biggs multiplicities of an array.
/// Throws kInfeasible when two eigenvalues coincide within 1e-9.
inline SpectralProfile eigen_solve(const IntersectionArray& arr) {
  const auto real = detail::RealArray::from(arr);
  SpectralProfile p;
  p.n = arr.n();
  p.k = arr.k();
  p.b1 = arr.d() >= 1 ? arr.b(1) : 0;
  p.eigenvalues = detail::real_eigenvalues(real);
  for (std::size_t j = 1; j < p.eigenvalues.size(); ++j) {
    if (p.eigenvalues[j - 1] - p.eigenvalues[j] < kDistinctTolerance) {
      fail(ErrorKind::kInfeasible, "array " + arr.to_string() +
                                       " has a repeated eigenvalue near " +
                                       std::to_string(p.eigenvalues[j]));
    }
  }
  for (double& theta : p.eigenvalues) {
    const double nearest = std::round(theta);
    bool exact = false;
    std::vector<double> u;
    double raw = 0.0;
    if (std::fabs(theta - nearest) <= kSnapTolerance) {
      const auto t = static_cast<std::int64_t>(nearest);
      const auto exact_u = detail::exact_standard_sequence(arr, t);
      if (detail::exact_last_row_residual(arr, t, exact_u) == 0) {
        exact = true;
        theta = nearest;
        for (const auto& value : exact_u) u.push_back(static_cast<double>(value));
        const Rational f = exact_biggs_multiplicity(arr, t);
        raw = static_cast<double>(f);
        const bool whole = boost::multiprecision::denominator(f) == 1;
        p.multiplicities.push_back(whole ? static_cast<std::int64_t>(
                                               boost::multiprecision::numerator(f))
                                         : static_cast<std::int64_t>(std::llround(raw)));
        p.multiplicity_residuals.push_back(whole ? 0.0 : std::fabs(raw - std::round(raw)));
      }
    }
    if (!exact) {
      u = detail::real_standard_sequence(real, theta);
      raw = detail::real_biggs(real, u);
      p.multiplicities.push_back(static_cast<std::int64_t>(std::llround(raw)));
      p.multiplicity_residuals.push_back(std::fabs(raw - std::round(raw)));
    }
    p.integral.push_back(exact);
    p.raw_multiplicities.push_back(raw);
    p.standard_sequences.push_back(std::move(u));
  }
  if (arr.d() >= 1) {
    p.xi = std::max(std::fabs(p.eigenvalues[1]), std::fabs(p.eigenvalues.back()));
  }
  if (arr.d() >= 2) {
    const auto b1 = static_cast<double>(arr.b(1));
    p.b_plus = b1 / (p.eigenvalues[1] + 1.0);
    p.b_minus = b1 / (p.eigenvalues.back() + 1.0);
  }
  return p;
}

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t value = 1;
  for (std::int64_t i = 1; i <= r; ++i) value = value * (n - r + i) / i;
  return value;
}

}  // namespace detail

/// Exact spectrum of J(s,d) or H(d,s) from the closed forms
///   J: theta_j = (d-j)(s-d-j) - j,  f_j = C(s,j) - C(s,j-1)
///   H: theta_j = d(s-1) - js,       f_j = C(d,j) (s-1)^j
/// Standard sequences and b+/b- come from the family's closed-form array.
inline SpectralProfile closed_form_spectrum(const GeneratorSpec& spec) {
  spec.validate();
  const std::int64_t s = spec.s;
  const int d = spec.d;
  IntersectionArray arr;
  SpectralProfile p;
  if (spec.family == Family::kJohnson) {
    arr = johnson_array(s, d);
    for (int j = 0; j <= d; ++j) {
      p.eigenvalues.push_back(static_cast<double>((d - j) * (s - d - j) - j));
      p.multiplicities.push_back(detail::binomial(s, j) - detail::binomial(s, j - 1));
    }
  } else if (spec.family == Family::kHamming) {
    arr = hamming_array(d, s);
    for (int j = 0; j <= d; ++j) {
      p.eigenvalues.push_back(static_cast<double>(d * (s - 1) - j * s));
      std::int64_t power = 1;
      for (int t = 0; t < j; ++t) power *= s - 1;
      p.multiplicities.push_back(detail::binomial(d, j) * power);
    }
  } else {
    fail(ErrorKind::kParameter, "closed-form spectra exist only for johnson and hamming, not " +
                                    std::string(to_string(spec.family)));
  }
  p.n = arr.n();
  p.k = arr.k();
  p.b1 = arr.b(1);
  p.integral.assign(p.eigenvalues.size(), true);
  p.multiplicity_residuals.assign(p.eigenvalues.size(), 0.0);
  for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
    p.raw_multiplicities.push_back(static_cast<double>(p.multiplicities[j]));
    p.standard_sequences.push_back(standard_sequence(arr, p.eigenvalues[j]));
  }
  p.xi = std::max(std::fabs(p.eigenvalues[1]), std::fabs(p.eigenvalues.back()));
  if (d >= 2) {
    p.b_plus = static_cast<double>(arr.b(1)) / (p.eigenvalues[1] + 1.0);
    p.b_minus = static_cast<double>(arr.b(1)) / (p.eigenvalues.back() + 1.0);
  }
  return p;
}

/// Realizability filters: integral k_i, distinct eigenvalues, integral
/// positive multiplicities summing to n, integral intersection numbers.
inline std::vector<InequalityReport> feasibility_check(const IntersectionArray& arr) {
  std::vector<InequalityReport> out;
  out.push_back(InequalityReport::equal("k_integral", 1, 1).because("all k_i are integers"));
  try {
    const auto p = eigen_solve(arr);
    double worst = 0.0;
    bool positive = true;
    for (std::size_t j = 0; j < p.multiplicities.size(); ++j) {
      worst = std::max(worst, p.multiplicity_residuals[j]);
      positive = positive && p.multiplicities[j] >= 1;
    }
    out.push_back(InequalityReport::at_most("multiplicities_integral", worst, kSnapTolerance)
                      .with("max_residual", worst));
    if (!positive) {
      out.back().holds = false;
      out.back().note = "a multiplicity rounds to zero";
    }
    out.push_back(InequalityReport::equal("multiplicity_sum",
                                          static_cast<double>(p.multiplicity_sum()),
                                          static_cast<double>(arr.n())));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
    auto r = InequalityReport::equal("distinct_eigenvalues", 0, 1);
    r.note = e.what();
    out.push_back(r);
  }
  try {
    intersection_numbers(arr);
    out.push_back(InequalityReport::equal("intersection_numbers_integral", 1, 1));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
    auto r = InequalityReport::equal("intersection_numbers_integral", 0, 1);
    r.note = e.what();
    out.push_back(r);
  }
  return out;
}

/// Same checks for raw sequences that may not even have integral k_i.
inline std::vector<InequalityReport> feasibility_check(const std::vector<std::int64_t>& b,
                                                       const std::vector<std::int64_t>& c) {
  try {
    return feasibility_check(IntersectionArray::from_sequences(b, c));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
    std::vector<InequalityReport> out;
    const int d = static_cast<int>(b.size());
    const bool basic_ok = b[0] >= 1 && c[0] == 1 &&
                          std::all_of(c.begin(), c.end(), [](auto x) { return x >= 1; });
    if (!basic_ok) {
      auto r = InequalityReport::equal("array_valid", 0, 1);
      r.note = e.what();
      return {r};
    }
    detail::RealArray r;
    std::vector<Rational> ki{Rational(1)};
    for (int i = 0; i <= d; ++i) {
      const double bi = i < d ? static_cast<double>(b[i]) : 0.0;
      const double ci = i > 0 ? static_cast<double>(c[i - 1]) : 0.0;
      r.b.push_back(bi);
      r.c.push_back(ci);
      r.a.push_back(static_cast<double>(b[0]) - bi - ci);
      if (i < d) ki.push_back(ki.back() * b[i] / c[i]);
    }
    Rational n = 0;
    bool integral = true;
    for (const auto& value : ki) {
      r.ki.push_back(static_cast<double>(value));
      n += value;
      integral = integral && boost::multiprecision::denominator(value) == 1;
    }
    r.n = static_cast<double>(n);
    auto k_report = InequalityReport::equal("k_integral", integral ? 1 : 0, 1);
    k_report.note = e.what();
    out.push_back(k_report);
    if (integral) {
      // Rejected for a reason other than k_i integrality.
      auto invalid = InequalityReport::equal("array_valid", 0, 1);
      invalid.note = e.what();
      out.push_back(invalid);
    }
    double worst = 0.0;
    double sum = 0.0;
    for (double theta : detail::real_eigenvalues(r)) {
      const double f = detail::real_biggs(r, detail::real_standard_sequence(r, theta));
      worst = std::max(worst, std::fabs(f - std::round(f)));
      sum += f;
    }
    out.push_back(InequalityReport::at_most("multiplicities_integral", worst, kSnapTolerance)
                      .with("max_residual", worst));
    out.push_back(InequalityReport::equal("multiplicity_sum", sum, r.n, kSnapTolerance));
    return out;
  }
}

struct EigRange {
  double vartheta_1 = 0.0;
  double epsilon_star = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// theta^2 (theta^2-1)^2 (theta^2-3)(theta^2-4) - 1.
inline double vartheta_polynomial(double theta) {
  const double t2 = theta * theta;
  return t2 * (t2 - 1) * (t2 - 1) * (t2 - 3) * (t2 - 4) - 1.0;
}

/// Smallest root of the defining polynomial, by bisection on [-2.1, -2.0]; the
/// loop runs until both the bracket width and the residual are below `tolerance`.
inline EigRange solve_vartheta(double tolerance) {
  require(tolerance > 0, "tolerance must be positive");
  double lo = -2.1, hi = -2.0;
  double f_lo = vartheta_polynomial(lo);
  if (f_lo * vartheta_polynomial(hi) >= 0) {
    fail(ErrorKind::kInternal, "bracket [-2.1, -2.0] does not straddle a root");
  }
  EigRange out;
  double mid = 0.5 * (lo + hi);
  for (; out.iterations < 200; ++out.iterations) {
    mid = 0.5 * (lo + hi);
    const double f_mid = vartheta_polynomial(mid);
    if (hi - lo <= tolerance && std::fabs(f_mid) <= tolerance) break;
    if (mid == lo || mid == hi) break;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  out.vartheta_1 = mid;
  out.residual = vartheta_polynomial(mid);
  out.epsilon_star = (-2.0 - mid) / (-1.0 - mid);
  return out;
}

/// Local eigenvalue bounds on every neighborhood graph:
///   smallest eigenvalue of X(v)       >= -1 - b+
///   second largest eigenvalue of X(v) <= -1 - b-
/// `rhs` carries the bound relaxed by `tolerance`; `bound` the exact one.
inline std::vector<InequalityReport> terwilliger_local_bounds(const Graph& g,
                                                              const SpectralProfile& profile,
                                                              double tolerance = 1e-6) {
  if (!profile.b_plus || !profile.b_minus) {
    return {InequalityReport::skipped("local_smallest_eigenvalue", "diameter < 2"),
            InequalityReport::skipped("local_second_largest_eigenvalue", "diameter < 2")};
  }
  double smallest = std::numeric_limits<double>::infinity();
  double second = -std::numeric_limits<double>::infinity();
  Vertex worst_low = 0, worst_high = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto local = neighborhood_subgraph(g, v);
    const auto values = adjacency_eigenvalues(local.graph);
    if (values.empty()) continue;
    if (values.back() < smallest) {
      smallest = values.back();
      worst_low = v;
    }
    if (values.size() >= 2 && values[1] > second) {
      second = values[1];
      worst_high = v;
    }
  }
  const double low_bound = -1.0 - *profile.b_plus;
  const double high_bound = -1.0 - *profile.b_minus;
  auto low = InequalityReport::at_least("local_smallest_eigenvalue", smallest,
                                        low_bound - tolerance)
                 .with("bound", low_bound)
                 .with("vertex", worst_low)
                 .with("tolerance", tolerance);
  auto high = InequalityReport::at_most("local_second_largest_eigenvalue", second,
                                        high_bound + tolerance)
                  .with("bound", high_bound)
                  .with("vertex", worst_high)
                  .with("tolerance", tolerance);
  return {low, high};
}

/// Equality case theta_1 = b_1 - 1.
inline bool theta1_equals_b1_minus_1(const SpectralProfile& profile) {
  return profile.d() >= 1 &&
         std::fabs(profile.theta1() - static_cast<double>(profile.b1 - 1)) <= kSnapTolerance;
}

}  // namespace drg

#endif  // DRG_SPECTRAL_HPP_

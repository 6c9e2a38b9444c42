// Copyright 2026 The wt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Power-series expansions of the principal branch W^(1):
//
//   small x:  W = sqrt(x) * sum_k a_k x^k,     (W / sqrt(x))^3 = sum_k d_k x^k
//   large x:  W = pi/2 * sum_k b_k x^-k,       pi / (2 W) = sum_k c_k x^-k
//
// Both coefficient pairs come from coupled recursions derived from the
// differential equation W' = W / (x + x^2 + W^2). The large-x coefficients
// can also be obtained independently by Lagrange inversion, which is used as
// an oracle.

#ifndef WT_SERIES_HPP_
#define WT_SERIES_HPP_

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace wt::series {

// Storage type for coefficients; wide enough for every supported working
// precision and for exponents far beyond double range.
using HighPrecision = boost::multiprecision::cpp_bin_float_100;

enum class ExpansionKind { kSmallX, kLargeX };

// Closest singularities of W^(1): |x_1| = 2.639705... bounds both expansions.
inline constexpr double kConvergenceRadius = 2.6397;
// Reference growth rate used to keep scaled coefficients O(1).
inline constexpr double kGrowthScale = 2.64;

// Working precision of the recursions, in decimal digits. kAuto selects double
// for orders up to 40 and 50 digits beyond.
inline constexpr int kAutoPrecision = 0;

struct SeriesTable {
  ExpansionKind kind = ExpansionKind::kSmallX;
  int order = 0;
  std::vector<HighPrecision> primary;    // a_k or b_k
  std::vector<HighPrecision> auxiliary;  // d_k or c_k
  int precision_digits = 16;
  int valid_digits = 16;  // estimated surviving digits at the highest order

  double coefficient(int k) const;
  // coefficient(k) * kGrowthScale^k (large x) or / kGrowthScale^k (small x).
  double scaled(int k) const;
};

SeriesTable small_x_coeffs(int order, int precision_digits = kAutoPrecision);
SeriesTable large_x_coeffs(int order, int precision_digits = kAutoPrecision);

// |a_k + a_{k-1} + ...| style residuals of the recursion identities at k,
// evaluated in HighPrecision.
double recursion_residual(const SeriesTable& table, int k);

// b_k from Lagrange's expansion theorem via truncated power-series
// arithmetic. trunc is the number of retained series terms and must be >= k.
double lagrange_b(int k, int trunc);

struct SeriesValue {
  double value;
  double truncation_estimate;  // magnitude of the last retained term
};

SeriesValue eval_series(double x, const SeriesTable& table);

// Derivative of the truncated small-x series, sum a_k (k + 1/2) x^(k - 1/2).
double eval_small_x_derivative(double x, const SeriesTable& table);

struct RadiusEstimate {
  int k;
  double rho;
  ExpansionKind kind;
};

// Root-test estimates |a_k|^(-1/k) or |b_k|^(1/k) for k = 1..order.
std::vector<RadiusEstimate> radius_estimates(const SeriesTable& table);

// coeff_k ~ c k^(-3/2) rho^(+-k) sin(a k + b) with c > 0, a in (0, pi) and
// b in (-2 pi, 0].
struct AsymptoticFit {
  double c;
  double a;
  double b;
  double rho;
  double residual;  // relative RMS misfit of the scaled sequence
};

AsymptoticFit fit_asymptotic(const SeriesTable& table, int k_min, int k_max);

// Number of sign changes of the primary coefficients over [k_min, k_max].
int sign_changes(const SeriesTable& table, int k_min, int k_max);

}  // namespace wt::series

#endif  // WT_SERIES_HPP_

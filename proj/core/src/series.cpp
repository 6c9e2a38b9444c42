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

#include "wt/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "wt/core.hpp"
#include "wt/error.hpp"

namespace wt::series {

namespace {

using Extended50 = boost::multiprecision::cpp_bin_float_50;

template <class R>
void small_x_recursion(int order, std::vector<R>& a, std::vector<R>& d) {
  a.assign(order + 1, R(0));
  d.assign(order + 1, R(0));
  a[0] = 1;
  d[0] = 1;
  for (int k = 1; k <= order; ++k) {
    // d_k = 3 a_k + S_k, where S_k collects the j < k terms of the
    // convolution; substituting into the first recursion isolates a_k.
    R s = 0;
    for (int j = 1; j < k; ++j) s += R(4 * j - k) * a[j] * d[k - j];
    s /= k;
    const R ratio = R(2 * k + 3) / R(2 * k - 1);
    a[k] = (-a[k - 1] - ratio * s / 3) / (1 + ratio);
    d[k] = 3 * a[k] + s;
  }
}

template <class R>
void large_x_recursion(int order, std::vector<R>& b, std::vector<R>& c) {
  const R quarter_pi2 = boost::math::constants::pi<R>() *
                        boost::math::constants::pi<R>() / 4;
  b.assign(order + 1, R(0));
  c.assign(order + 2, R(0));
  b[0] = 1;
  c[0] = 1;
  c[1] = c[0];  // k = 0 row: c_1 - c_0 = 0
  for (int k = 1; k <= order; ++k) {
    R s = 0;
    for (int j = 1; j <= k; ++j) s += b[k - j] * c[j];
    b[k] = -s;
    c[k + 1] = (quarter_pi2 * R(k - 1) * b[k - 1] - R(k - 1) * c[k]) / R(k + 1);
  }
  c.resize(order + 1);
}

template <class R>
std::vector<HighPrecision> widen(const std::vector<R>& v) {
  std::vector<HighPrecision> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

int resolve_precision(int requested, int order) {
  if (requested == kAutoPrecision) return order > 40 ? 50 : 16;
  if (requested <= 17) return 16;
  if (requested <= 50) return 50;
  if (requested <= 100) return 100;
  throw Error(ErrorCode::kInvalidArgument,
              "precision above 100 digits is not supported");
}

template <class Recursion>
void run_recursion(Recursion recursion, int order, int digits,
                   std::vector<HighPrecision>& primary,
                   std::vector<HighPrecision>& auxiliary) {
  if (digits == 16) {
    std::vector<double> p, q;
    recursion(order, p, q);
    primary = widen(p);
    auxiliary = widen(q);
  } else if (digits == 50) {
    std::vector<Extended50> p, q;
    recursion(order, p, q);
    primary = widen(p);
    auxiliary = widen(q);
  } else {
    recursion(order, primary, auxiliary);
  }
}

// Smallest number of agreeing digits between two runs, measured against a
// local envelope so that isolated near-zero coefficients do not dominate.
double agreeing_digits(const std::vector<HighPrecision>& x,
                       const std::vector<HighPrecision>& y) {
  double worst = 100.0;
  const int n = static_cast<int>(std::min(x.size(), y.size()));
  for (int k = 0; k < n; ++k) {
    const double xk = static_cast<double>(x[k]);
    if (!std::isfinite(xk) || !std::isnormal(xk)) continue;
    HighPrecision envelope = 0;
    for (int j = std::max(0, k - 2); j <= std::min(n - 1, k + 2); ++j) {
      envelope = std::max(envelope, HighPrecision(abs(y[j])));
    }
    if (envelope == 0) continue;
    const HighPrecision diff = abs(HighPrecision(x[k]) - y[k]);
    if (diff == 0) continue;
    const double digits = -static_cast<double>(log10(diff / envelope));
    worst = std::min(worst, digits);
  }
  return worst;
}

template <class Recursion>
SeriesTable build_table(ExpansionKind kind, Recursion recursion, int order,
                        int requested_digits) {
  if (order < 0) throw Error(ErrorCode::kInvalidArgument, "order must be >= 0");
  SeriesTable table;
  table.kind = kind;
  table.order = order;
  table.precision_digits = resolve_precision(requested_digits, order);
  run_recursion(recursion, order, table.precision_digits, table.primary,
                table.auxiliary);

  // Cancellation estimate: compare against a companion run at a different
  // precision.
  std::vector<HighPrecision> companion, companion_aux;
  if (table.precision_digits == 16) {
    run_recursion(recursion, order, 50, companion, companion_aux);
    const double agree = agreeing_digits(table.primary, companion);
    table.valid_digits = static_cast<int>(std::min(16.0, std::floor(agree)));
  } else {
    run_recursion(recursion, order, 16, companion, companion_aux);
    const double lost = std::max(0.0, 15.95 - agreeing_digits(companion, table.primary));
    table.valid_digits = table.precision_digits - static_cast<int>(std::ceil(lost));
  }
  if (table.valid_digits < 6) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "only " + std::to_string(table.valid_digits) +
                    " valid digits survive at order " + std::to_string(order));
  }
  return table;
}

struct SmallXRecursion {
  template <class R>
  void operator()(int order, std::vector<R>& a, std::vector<R>& d) const {
    small_x_recursion(order, a, d);
  }
};

struct LargeXRecursion {
  template <class R>
  void operator()(int order, std::vector<R>& b, std::vector<R>& c) const {
    large_x_recursion(order, b, c);
  }
};

// Truncated power series in v with `terms` coefficients.
using Poly = std::vector<HighPrecision>;

Poly multiply(const Poly& p, const Poly& q, std::size_t terms) {
  Poly out(terms, HighPrecision(0));
  for (std::size_t i = 0; i < std::min(terms, p.size()); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size() && i + j < terms; ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

Poly divide(const Poly& num, const Poly& den, std::size_t terms) {
  Poly out(terms, HighPrecision(0));
  for (std::size_t n = 0; n < terms; ++n) {
    HighPrecision s = n < num.size() ? num[n] : HighPrecision(0);
    for (std::size_t j = 1; j <= n && j < den.size(); ++j) s -= den[j] * out[n - j];
    out[n] = s / den[0];
  }
  return out;
}

Poly power(Poly base, int exponent, std::size_t terms) {
  Poly result(terms, HighPrecision(0));
  result[0] = 1;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base, terms);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base, terms);
  }
  return result;
}

}  // namespace

double SeriesTable::coefficient(int k) const {
  return static_cast<double>(primary.at(k));
}

double SeriesTable::scaled(int k) const {
  const HighPrecision scale = pow(HighPrecision(kGrowthScale), k);
  const HighPrecision v = kind == ExpansionKind::kLargeX ? primary.at(k) / scale
                                                         : primary.at(k) * scale;
  return static_cast<double>(v);
}

SeriesTable small_x_coeffs(int order, int precision_digits) {
  return build_table(ExpansionKind::kSmallX, SmallXRecursion{}, order,
                     precision_digits);
}

SeriesTable large_x_coeffs(int order, int precision_digits) {
  return build_table(ExpansionKind::kLargeX, LargeXRecursion{}, order,
                     precision_digits);
}

double recursion_residual(const SeriesTable& table, int k) {
  if (k < 0 || k > table.order) {
    throw Error(ErrorCode::kInvalidArgument, "k outside the table");
  }
  const auto& p = table.primary;
  const auto& q = table.auxiliary;
  HighPrecision r1, r2, scale;
  if (table.kind == ExpansionKind::kSmallX) {
    const HighPrecision ratio = HighPrecision(2 * k + 3) / HighPrecision(2 * k - 1);
    r1 = p[k] + (k > 0 ? p[k - 1] : HighPrecision(0)) + ratio * q[k] / 3;
    if (k == 0) {
      r2 = abs(p[0] - 1) + abs(q[0] - 1);
    } else {
      HighPrecision s = 0;
      for (int j = 1; j <= k; ++j) s += HighPrecision(4 * j - k) * p[j] * q[k - j];
      r2 = s / k - q[k];
    }
    scale = std::max({HighPrecision(abs(p[k])), HighPrecision(abs(q[k])),
                      HighPrecision(k > 0 ? abs(p[k - 1]) : abs(p[0]))});
  } else {
    const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
    if (k < table.order) {
      r1 = HighPrecision(k + 1) * q[k + 1] + HighPrecision(k - 1) * q[k] -
           (k > 0 ? pi * pi / 4 * HighPrecision(k - 1) * p[k - 1] : HighPrecision(0));
    } else {
      r1 = 0;
    }
    HighPrecision s = 0;
    for (int j = 0; j <= k; ++j) s += p[k - j] * q[j];
    r2 = s - (k == 0 ? 1 : 0);
    scale = std::max({HighPrecision(abs(p[k])), HighPrecision(abs(q[k])),
                      HighPrecision(k > 0 ? abs(p[k - 1]) : abs(p[0]))});
  }
  return static_cast<double>(std::max(abs(r1), abs(r2)) / scale);
}

double lagrange_b(int k, int trunc) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  if (trunc < k) {
    throw Error(ErrorCode::kTruncationTooSmall,
                "need at least k series terms for b_" + std::to_string(k));
  }
  if (k == 0) return 1.0;

  // b_k = -(pi/2)^k / k! * d^(k-1)/dv^(k-1) [v(1-v)/tan(pi v/2)]^k at v = 0.
  // With z = pi v / 2 the bracket is (2/pi) g(v), g = (1 - v) z cot z, so
  // b_k = -(1/k) [v^(k-1)] g^k.
  const std::size_t terms = static_cast<std::size_t>(trunc);
  const HighPrecision half_pi = boost::math::constants::half_pi<HighPrecision>();
  Poly cos_z(terms, HighPrecision(0));
  Poly sinc_z(terms, HighPrecision(0));
  HighPrecision z_pow = 1;  // (pi/2)^(2m)
  HighPrecision fact_even = 1;  // (2m)!
  for (std::size_t m = 0; 2 * m < terms; ++m) {
    if (m > 0) {
      z_pow *= half_pi * half_pi;
      fact_even *= HighPrecision(2 * m - 1) * HighPrecision(2 * m);
    }
    const HighPrecision sign = (m % 2 == 0) ? 1 : -1;
    cos_z[2 * m] = sign * z_pow / fact_even;
    sinc_z[2 * m] = sign * z_pow / (fact_even * HighPrecision(2 * m + 1));
  }
  Poly z_cot_z = divide(cos_z, sinc_z, terms);
  Poly one_minus_v(terms, HighPrecision(0));
  one_minus_v[0] = 1;
  if (terms > 1) one_minus_v[1] = -1;
  const Poly g = multiply(one_minus_v, z_cot_z, terms);
  const Poly gk = power(g, k, terms);
  return static_cast<double>(-gk[k - 1] / k);
}

SeriesValue eval_series(double x, const SeriesTable& table) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kNonFiniteArgument, "eval_series needs finite x");
  }
  const int order = table.order;
  double rho_k = kConvergenceRadius;
  if (order >= 1) {
    const auto est = radius_estimates(table);
    if (!est.empty()) rho_k = est.back().rho;
  }
  if (table.kind == ExpansionKind::kSmallX) {
    const double bound = std::min(rho_k, kConvergenceRadius);
    if (!(x >= 0.0 && x < bound)) {
      throw Error(ErrorCode::kOutsideConvergence,
                  "small-x series needs 0 <= x < " + std::to_string(bound));
    }
    double sum = 0.0;
    for (int k = order; k >= 0; --k) sum = sum * x + table.coefficient(k);
    const double root = std::sqrt(x);
    const double last = std::abs(table.coefficient(order) * std::pow(x, order)) * root;
    return {root * sum, last};
  }
  const double bound = std::max(rho_k, kConvergenceRadius);
  if (!(std::abs(x) > bound)) {
    throw Error(ErrorCode::kOutsideConvergence,
                "large-x series needs |x| > " + std::to_string(bound));
  }
  const double t = 1.0 / x;
  double sum = 0.0;
  for (int k = order; k >= 0; --k) sum = sum * t + table.coefficient(k);
  const double last = 0.5 * kPi * std::abs(table.coefficient(order) * std::pow(t, order));
  return {0.5 * kPi * sum, last};
}

double eval_small_x_derivative(double x, const SeriesTable& table) {
  if (table.kind != ExpansionKind::kSmallX) {
    throw Error(ErrorCode::kInvalidArgument, "needs a small-x table");
  }
  if (!(x > 0.0 && x < kConvergenceRadius)) {
    throw Error(ErrorCode::kOutsideConvergence, "derivative needs 0 < x < rho");
  }
  double sum = 0.0;
  for (int k = table.order; k >= 0; --k) sum = sum * x + table.coefficient(k) * (k + 0.5);
  return sum / std::sqrt(x);
}

std::vector<RadiusEstimate> radius_estimates(const SeriesTable& table) {
  std::vector<RadiusEstimate> out;
  out.reserve(table.order);
  const double sign = table.kind == ExpansionKind::kSmallX ? -1.0 : 1.0;
  for (int k = 1; k <= table.order; ++k) {
    const HighPrecision mag = abs(table.primary[k]);
    if (mag == 0) continue;
    const double log_mag = static_cast<double>(log(mag));
    out.push_back({k, std::exp(sign * log_mag / k), table.kind});
  }
  return out;
}

AsymptoticFit fit_asymptotic(const SeriesTable& table, int k_min, int k_max) {
  if (k_min < 1 || k_max > table.order || k_max - k_min < 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "fit window must satisfy 1 <= k_min, k_max <= order, span >= 20");
  }
  // Remove the algebraic prefactor and the bulk exponential growth; what is
  // left is r^k (C1 sin(a k) + C2 cos(a k)), a solution of the two-term
  // linear recurrence s_{k+1} = p s_k + q s_{k-1} with q = -r^2 and
  // p = 2 r cos(a). Fit (p, q) by least squares, then (C1, C2).
  std::vector<double> s;
  s.reserve(k_max - k_min + 1);
  for (int k = k_min; k <= k_max; ++k) s.push_back(table.scaled(k) * std::pow(k, 1.5));

  double m11 = 0, m12 = 0, m22 = 0, r1 = 0, r2 = 0;
  for (std::size_t i = 2; i < s.size(); ++i) {
    const double u = s[i - 1], w = s[i - 2], y = s[i];
    m11 += u * u;
    m12 += u * w;
    m22 += w * w;
    r1 += u * y;
    r2 += w * y;
  }
  const double det = m11 * m22 - m12 * m12;
  if (!(std::abs(det) > 0.0)) throw Error(ErrorCode::kFitDiverged, "singular recurrence fit");
  const double p = (r1 * m22 - r2 * m12) / det;
  const double q = (m11 * r2 - m12 * r1) / det;
  if (!(q < 0.0)) throw Error(ErrorCode::kFitDiverged, "no damped oscillation found");
  const double r = std::sqrt(-q);
  const double cos_a = p / (2.0 * r);
  if (!(std::abs(cos_a) < 1.0)) throw Error(ErrorCode::kFitDiverged, "no oscillation found");
  const double a = std::acos(cos_a);

  double n11 = 0, n12 = 0, n22 = 0, t1 = 0, t2 = 0;
  std::vector<double> basis_sin(s.size()), basis_cos(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int k = k_min + static_cast<int>(i);
    const double rk = std::pow(r, k);
    basis_sin[i] = rk * std::sin(a * k);
    basis_cos[i] = rk * std::cos(a * k);
    n11 += basis_sin[i] * basis_sin[i];
    n12 += basis_sin[i] * basis_cos[i];
    n22 += basis_cos[i] * basis_cos[i];
    t1 += basis_sin[i] * s[i];
    t2 += basis_cos[i] * s[i];
  }
  const double det2 = n11 * n22 - n12 * n12;
  if (!(std::abs(det2) > 0.0)) throw Error(ErrorCode::kFitDiverged, "singular amplitude fit");
  const double c1 = (t1 * n22 - t2 * n12) / det2;
  const double c2 = (n11 * t2 - n12 * t1) / det2;

  double misfit = 0, norm = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double model = c1 * basis_sin[i] + c2 * basis_cos[i];
    misfit += (s[i] - model) * (s[i] - model);
    norm += s[i] * s[i];
  }

  double phase = std::atan2(c2, c1);
  while (phase > 0.0) phase -= 2.0 * kPi;
  while (phase <= -2.0 * kPi) phase += 2.0 * kPi;

  AsymptoticFit fit;
  fit.c = std::hypot(c1, c2);
  fit.a = a;
  fit.b = phase;
  fit.rho = table.kind == ExpansionKind::kLargeX ? kGrowthScale * r : kGrowthScale / r;
  fit.residual = std::sqrt(misfit / norm);
  if (!std::isfinite(fit.rho) || !(fit.rho > 0.0)) {
    throw Error(ErrorCode::kFitDiverged, "non-finite radius from fit");
  }
  return fit;
}

int sign_changes(const SeriesTable& table, int k_min, int k_max) {
  int changes = 0;
  for (int k = std::max(k_min, 0) + 1; k <= std::min(k_max, table.order); ++k) {
    if ((table.primary[k] > 0) != (table.primary[k - 1] > 0)) ++changes;
  }
  return changes;
}

}  // namespace wt::series

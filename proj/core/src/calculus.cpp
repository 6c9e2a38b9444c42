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


#include "wt/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "wt/core.hpp"
#include "wt/series.hpp"

namespace wt::calculus {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

double w1(double x) { return eval_real(x, BranchIndex(1)); }

template <class F>
double integrate(F f, double lo, double hi, const QuadratureConfig& cfg) {
  double error = 0.0;
  double l1 = 0.0;
  // A single panel first: on short intervals it is already accurate, while the
  // purely relative adaptive target can sit below the abscissa rounding floor.
  double value = Kronrod::integrate(f, lo, hi, 0, cfg.rel_tol, &error, &l1);
  if (!(error <= std::max(cfg.abs_tol, cfg.rel_tol * l1))) {
    const double rel = std::max(cfg.rel_tol, l1 > 0.0 ? cfg.abs_tol / l1 : 0.0);
    value = Kronrod::integrate(f, lo, hi, static_cast<unsigned>(cfg.max_subdivisions), rel,
                               &error, &l1);
  }
  if (!(error <= std::max(cfg.abs_tol, cfg.rel_tol * l1))) {
    std::ostringstream msg;
    msg << "error estimate " << error << " above tolerance on [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::kQuadratureFailure, msg.str());
  }
  return value;
}

// Double-exponential rule for integrands with a logarithmic end point.
template <class F>
double integrate_singular_end(F f, double lo, double hi, const QuadratureConfig& cfg) {
  boost::math::quadrature::tanh_sinh<double> rule;
  double error = 0.0;
  double l1 = 0.0;
  const double value = rule.integrate(f, lo, hi, cfg.rel_tol, &error, &l1);
  if (!(error <= std::max(cfg.abs_tol, cfg.rel_tol * l1))) {
    std::ostringstream msg;
    msg << "error estimate " << error << " above tolerance on [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::kQuadratureFailure, msg.str());
  }
  return value;
}

void check_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::kNonFiniteArgument, "interval ends must be finite");
  }
  if (!(lo > 0.0) || hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < x_lo <= x_hi");
  }
}

using Poly = std::vector<double>;

Poly multiply(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n, 0.0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
  if (max_subdivisions < 1) throw Error(ErrorCode::kInvalidArgument, "max_subdivisions must be >= 1");
  if (!(tail_cutoff > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tail cutoff must be positive");
}

double check_indefinite_log(double x_lo, double x_hi, const QuadratureConfig& cfg) {
  cfg.validate();
  check_interval(x_lo, x_hi);
  if (x_lo == x_hi) return 0.0;
  const double q = integrate([](double x) { return std::log(w1(x)); }, x_lo, x_hi, cfg);
  auto anti = [](double x) {
    const double w = w1(x);
    return x * std::log(w) + std::log(std::abs(std::cos(w)));
  };
  return std::abs(q - (anti(x_hi) - anti(x_lo)));
}

double check_indefinite_logsin(double x_lo, double x_hi, const QuadratureConfig& cfg) {
  cfg.validate();
  check_interval(x_lo, x_hi);
  if (x_lo == x_hi) return 0.0;
  const double q = integrate_lnsin(x_lo, x_hi, cfg);
  auto anti = [](double x) {
    const double w = w1(x);
    return x * std::log(std::sin(w)) - 0.5 * w * w;
  };
  return std::abs(q - (anti(x_hi) - anti(x_lo)));
}

double check_substitution_square(double x_lo, double x_hi, const QuadratureConfig& cfg) {
  cfg.validate();
  check_interval(x_lo, x_hi);
  if (x_lo == x_hi) return 0.0;
  const double direct = integrate(
      [](double x) {
        const double w = w1(x);
        return w * w;
      },
      x_lo, x_hi, cfg);
  const double y_lo = w1(x_lo);
  const double y_hi = w1(x_hi);
  const double inner =
      integrate([](double y) { return 2.0 * y * y * std::tan(y); }, y_lo, y_hi, cfg);
  const double by_parts = x_hi * y_hi * y_hi - x_lo * y_lo * y_lo - inner;
  return std::abs(direct - by_parts);
}

double integrate_lnsin(double x_lo, double x_hi, const QuadratureConfig& cfg) {
  cfg.validate();
  if (x_lo < 0.0 || x_hi < x_lo) throw Error(ErrorCode::kInvalidArgument, "need 0 <= x_lo <= x_hi");
  if (x_lo == x_hi) return 0.0;
  // Near 0, x = s^2 turns the ln sqrt(x) end point into 2 s ln s.
  constexpr double kSplit = 1.0;
  double total = 0.0;
  if (x_lo < kSplit) {
    total += integrate_singular_end(
        [](double s) { return s * s == 0.0 ? 0.0 : 2.0 * s * std::log(std::sin(w1(s * s))); },
        std::sqrt(x_lo), std::sqrt(std::min(x_hi, kSplit)), cfg);
  }
  if (x_hi > kSplit) {
    total += integrate([](double x) { return std::log(std::sin(w1(x))); },
                       std::max(x_lo, kSplit), x_hi, cfg);
  }
  return total;
}

std::vector<double> lnsin_tail_coefficients(int order) {
  if (order < 2) throw Error(ErrorCode::kInvalidArgument, "order must be >= 2");
  const std::size_t n = order + 1;
  const series::SeriesTable table = series::large_x_coeffs(order, 16);
  // delta = pi/2 - W = -(pi/2) sum_{k>=1} b_k t^k, t = 1/x; sin W = cos delta.
  Poly delta(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) delta[k] = -0.5 * kPi * table.coefficient(static_cast<int>(k));
  const Poly delta2 = multiply(delta, delta, n);
  // u = cos(delta) - 1 = sum_j (-1)^j delta^(2j) / (2j)!
  Poly u(n, 0.0);
  Poly power = delta2;
  double factorial = 2.0;
  for (int j = 1; 2 * j < static_cast<int>(n); ++j) {
    const double sign = j % 2 == 1 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k) u[k] += sign * power[k] / factorial;
    power = multiply(power, delta2, n);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  // ln(1 + u) = sum_j (-1)^(j+1) u^j / j; u = O(t^2).
  Poly result(n, 0.0);
  Poly up = u;
  for (int j = 1; 2 * j < static_cast<int>(n); ++j) {
    const double sign = j % 2 == 1 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) result[k] += sign * up[k] / j;
    up = multiply(up, u, n);
  }
  return result;
}

double lnsin_tail(double cutoff) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be positive and finite");
  }
  if (cutoff < 10.0) throw Error(ErrorCode::kOutsideConvergence, "tail expansion needs cutoff >= 10");
  static const std::vector<double> e = lnsin_tail_coefficients(16);
  // int_X^inf x^-k dx = X^(1-k) / (k - 1)
  double sum = 0.0;
  for (std::size_t k = e.size() - 1; k >= 2; --k) {
    sum = sum / cutoff + e[k] / (k - 1.0);
  }
  return sum / cutoff;
}

double definite_lnsin(const QuadratureConfig& cfg) {
  cfg.validate();
  return integrate_lnsin(0.0, cfg.tail_cutoff, cfg) + lnsin_tail(cfg.tail_cutoff);
}

double integral_w(double a, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error(ErrorCode::kInvalidArgument, "need a >= 0");
  if (a == 0.0) return 0.0;
  return integrate(
      [](double s) { return s * s == 0.0 ? 0.0 : 2.0 * s * w1(s * s); }, 0.0, std::sqrt(a), cfg);
}

double definite_catalan(const QuadratureConfig& cfg) { return integral_w(0.25 * kPi, cfg); }

double catalan_closed_form() {
  const double g = boost::math::constants::catalan<double>();
  return kPi * kPi / 16.0 + kPi / 8.0 * std::log(2.0) - 0.5 * g;
}

double young_lower_bound(double a) {
  const double g = boost::math::constants::catalan<double>();
  return 0.25 * kPi * a + kPi / 8.0 * std::log(2.0) - 0.5 * g;
}

}  // namespace wt::calculus

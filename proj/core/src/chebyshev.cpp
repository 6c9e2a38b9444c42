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


#include "wt/chebyshev.hpp"

#include <cmath>
#include <string>

namespace wt::cheb {

namespace {

// Target function of each region as a function of the mapped argument t.
double target(Region region, double t, double a, const SolverConfig& cfg) {
  const BranchIndex principal(1);
  switch (region) {
    case Region::kSmall: {
      const double x = 0.5 * a * (t + 1.0);
      return eval_real(x, principal, cfg) / std::sqrt(x);
    }
    case Region::kLarge: {
      const double x = a / t;
      return eval_real(x, principal, cfg) / (0.5 * kPi);
    }
    case Region::kNegative: {
      const double x = 0.5 * a * (t - 1.0);
      return eval_real(x, principal, cfg) / kPi;
    }
  }
  return 0.0;
}

std::vector<double> interpolate(Region region, double a, int order, const SolverConfig& cfg) {
  const int n = order;
  std::vector<double> f(n);
  for (int j = 0; j < n; ++j) {
    const double t = std::cos(kPi * (j + 0.5) / n);
    try {
      f[j] = target(region, t, a, cfg);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSamplingFailure,
                  "node " + std::to_string(j) + " failed: " + e.what());
    }
  }
  std::vector<double> c(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += f[j] * std::cos(kPi * k * (j + 0.5) / n);
    c[k] = (k == 0 ? 1.0 : 2.0) * s / n;
  }
  return c;
}

}  // namespace

const std::vector<double>& ChebyshevModel::coefficients(Region region) const {
  switch (region) {
    case Region::kSmall: return alpha;
    case Region::kLarge: return beta;
    case Region::kNegative: return gamma;
  }
  return alpha;
}

double ChebyshevModel::truncation_estimate(Region region) const {
  const auto& c = coefficients(region);
  return c.empty() ? 0.0 : std::abs(c.back());
}

Region region_of(double x, double split_a) {
  if (std::abs(x) > split_a) return Region::kLarge;
  if (x < 0.0 || (x == 0.0 && std::signbit(x))) return Region::kNegative;
  return Region::kSmall;
}

double region_argument(double x, double split_a) {
  switch (region_of(x, split_a)) {
    case Region::kSmall: return 2.0 * x / split_a - 1.0;
    case Region::kLarge: return split_a / x;
    case Region::kNegative: return 2.0 * x / split_a + 1.0;
  }
  return 0.0;
}

ChebyshevModel fit(double split_a, int order, const SolverConfig& cfg) {
  if (!(split_a > 0.0) || !std::isfinite(split_a)) {
    throw Error(ErrorCode::kInvalidArgument, "split point must be positive");
  }
  if (order < 4) throw Error(ErrorCode::kInvalidArgument, "order must be >= 4");
  cfg.validate();
  ChebyshevModel model;
  model.split_a = split_a;
  model.alpha = interpolate(Region::kSmall, split_a, order, cfg);
  model.beta = interpolate(Region::kLarge, split_a, order, cfg);
  model.gamma = interpolate(Region::kNegative, split_a, order, cfg);
  return model;
}

double clenshaw(std::span<const double> c, double t) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return c.empty() ? 0.0 : t * b1 - b2 + c[0];
}

double eval_cheb(double x, const ChebyshevModel& model) {
  if (std::isnan(x)) return x;
  const Region region = region_of(x, model.split_a);
  const double t = region_argument(x, model.split_a);
  const double s = clenshaw(model.coefficients(region), t);
  switch (region) {
    case Region::kSmall: return std::sqrt(x) * s;
    case Region::kLarge: return 0.5 * kPi * s;
    case Region::kNegative: return kPi * s;
  }
  return s;
}

}  // namespace wt::cheb

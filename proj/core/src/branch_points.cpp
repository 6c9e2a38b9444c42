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


#include "wt/branch_points.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/roots.hpp>

namespace wt::branch {

std::pair<double, double> u_interval(int n) {
  return {(2.0 * n - 1.0) * kPi, (2.0 * n - 0.5) * kPi};
}

double u_equation(double u) {
  const double s = std::sin(u);
  return std::tan(u) * std::acosh(-u / s) - std::sqrt(u * u - s * s);
}

BranchPoint find_branch_point(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "branch point index must be >= 1");
  const auto [lo0, hi0] = u_interval(n);
  // The expressions are singular at both ends of the interval.
  const double lo = lo0 + 1e-9;
  const double hi = hi0 - 1e-9;
  const double f_lo = u_equation(lo);
  const double f_hi = u_equation(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw Error(ErrorCode::kBracketFailure,
                "no sign change for u_" + std::to_string(n));
  }
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      u_equation, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52),
      max_iter);
  double u = 0.5 * (a + b);
  double v = std::acosh(-u / std::sin(u));

  // Polish w = u + iv on sin w + w = 0; the u equation alone loses digits
  // through the arccosh.
  cplx w(u, v);
  for (int it = 0; it < 4; ++it) {
    const cplx dw = (std::sin(w) + w) / (std::cos(w) + 1.0);
    w -= dw;
    if (std::abs(dw) < 1e-16 * std::abs(w)) break;
  }
  u = w.real();
  v = std::abs(w.imag());

  BranchPoint p;
  p.n = n;
  p.u = u;
  p.v = v;
  p.y = 0.5 * cplx(u, v);
  p.x = p.y * std::tan(p.y);
  p.b_n = (2.0 * n - 0.5) * kPi;
  return p;
}

std::vector<BranchPoint> find_branch_points(int count) {
  std::vector<BranchPoint> out;
  out.reserve(count > 0 ? count : 0);
  for (int n = 1; n <= count; ++n) out.push_back(find_branch_point(n));
  return out;
}

AsymptoticBranchPoint asymptotic_branch_point(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "branch point index must be >= 1");
  const double b = (2.0 * n - 0.5) * kPi;
  const double l = std::log(2.0 * b);
  return {b - l / b, cplx(-0.5 * l - 0.5, 0.5 * b), cplx(0.5 * b, 0.5 * l)};
}

double angle_residual(const BranchPoint& p) {
  return std::abs(std::sin(p.y) * std::cos(p.y) + p.y);
}

double derivative_residual(const BranchPoint& p) {
  return std::abs(p.y * p.y + p.x * p.x + p.x);
}

}  // namespace wt::branch

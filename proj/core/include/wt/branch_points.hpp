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


// Branch points of W_t. Away from y = 0 the derivative diverges where
// y^2 + x^2 + x = 0, equivalently sin(y) cos(y) + y = 0. Writing 2y = u + iv
// the real part u_n of the n-th solution lies in [(2n-1) pi, (2n-1/2) pi].

#ifndef WT_BRANCH_POINTS_HPP_
#define WT_BRANCH_POINTS_HPP_

#include <span>
#include <vector>

#include "wt/core.hpp"

namespace wt::plane {
class SheetAtlas;
}

namespace wt::branch {

// Representative with Im x_n > 0; the conjugate pair is implied.
struct BranchPoint {
  int n = 0;
  double u = 0.0;  // 2 Re y_n
  double v = 0.0;  // 2 Im y_n, positive
  cplx y;
  cplx x;
  double b_n = 0.0;  // (2n - 1/2) pi
};

// Interval [(2n-1) pi, (2n-1/2) pi] containing u_n.
std::pair<double, double> u_interval(int n);

// tan u * arccosh(-u / sin u) - sqrt(u^2 - sin^2 u); vanishes at u_n.
double u_equation(double u);

BranchPoint find_branch_point(int n);
std::vector<BranchPoint> find_branch_points(int count);

struct AsymptoticBranchPoint {
  double u;
  cplx x;
  cplx y;
};

// Leading large-n behaviour with b_n = (2n - 1/2) pi.
AsymptoticBranchPoint asymptotic_branch_point(int n);

// |sin y cos y + y| and |y^2 + x^2 + x| at the stored point.
double angle_residual(const BranchPoint& p);
double derivative_residual(const BranchPoint& p);

struct CircleSample {
  double radius;
  double mean_log_distance;  // mean of log|W - y_n| over the circle
  cplx c2;                   // mean of (W - y_n)^2 / (x - x_n)
  double swap_error;         // |W(one turn) - (2 y_n - W(start))|, relative to r
  double closure_error;      // |W(two turns) - W(start)|
};

struct LocalExpansion {
  double kappa;  // slope of mean log|W - y_n| against log r
  cplx c2;       // at the smallest radius
  double closure_error;  // worst double-loop mismatch over all radii
  std::vector<CircleSample> circles;
};

// Continues W around circles |x - x_n| = r (twice) starting on sheet n.
// Every radius must stay below 0.3 times the distance to the nearest other
// branch point.
LocalExpansion local_expansion_check(int n, std::span<const double> radii,
                                     const plane::SheetAtlas& atlas,
                                     int points_per_turn = 256);

}  // namespace wt::branch

#endif  // WT_BRANCH_POINTS_HPP_

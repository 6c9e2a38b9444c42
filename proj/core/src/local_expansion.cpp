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


#include <algorithm>
#include <cmath>
#include <string>

#include "wt/branch_points.hpp"
#include "wt/complex.hpp"

namespace wt::branch {

LocalExpansion local_expansion_check(int n, std::span<const double> radii,
                                     const plane::SheetAtlas& atlas, int points_per_turn) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "branch point index must be >= 1");
  if (radii.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two radii");
  if (points_per_turn < 16) throw Error(ErrorCode::kInvalidArgument, "too few points per turn");
  const BranchPoint& bp = atlas.branch_point(n);
  const BranchIndex sheet(n);
  atlas.require_sheet(sheet);

  double clearance = std::min(std::abs(bp.x), 2.0 * bp.x.imag());
  for (const auto& other : atlas.branch_points()) {
    if (other.n == n) continue;
    clearance = std::min({clearance, std::abs(bp.x - other.x), std::abs(bp.x - std::conj(other.x))});
  }

  LocalExpansion out{};
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double r : radii) {
    if (!(r > 0.0) || r > 0.3 * clearance) {
      throw Error(ErrorCode::kInvalidArgument,
                  "radius " + std::to_string(r) + " outside (0, 0.3 * clearance]");
    }
    const int m = points_per_turn;
    plane::ContinuationPath path;
    path.waypoints.reserve(2 * m + 1);
    for (int j = 0; j <= 2 * m; ++j) {
      path.waypoints.push_back(bp.x + r * std::polar(1.0, 2.0 * kPi * j / m));
    }
    std::vector<plane::TracePoint> trace;
    try {
      const cplx start = plane::eval_complex(path.waypoints.front(), sheet, atlas).y;
      trace = plane::trace_path(path, sheet, start, atlas);
    } catch (const Error& e) {
      throw Error(ErrorCode::kContinuationFailure,
                  "circle of radius " + std::to_string(r) + ": " + e.what());
    }

    // Averages over both turns cover the full circle in sqrt(x - x_n), which
    // removes the higher-order terms of the local expansion exactly.
    double mean_log = 0.0;
    cplx c2(0.0);
    for (int j = 0; j < 2 * m; ++j) {
      const cplx w = trace[j].y - bp.y;
      mean_log += std::log(std::abs(w));
      c2 += w * w / (trace[j].x - bp.x);
    }
    mean_log /= 2 * m;
    c2 /= 2.0 * m;

    CircleSample s;
    s.radius = r;
    s.mean_log_distance = mean_log;
    s.c2 = c2;
    s.swap_error = std::abs(trace[m].y - (2.0 * bp.y - trace[0].y)) / r;
    s.closure_error = std::abs(trace[2 * m].y - trace[0].y);
    out.circles.push_back(s);
    out.closure_error = std::max(out.closure_error, s.closure_error);

    const double lr = std::log(r);
    sx += lr;
    sy += mean_log;
    sxx += lr * lr;
    sxy += lr * mean_log;
  }
  const double k = static_cast<double>(radii.size());
  out.kappa = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const auto smallest = std::min_element(out.circles.begin(), out.circles.end(),
                                         [](const CircleSample& a, const CircleSample& b) {
                                           return a.radius < b.radius;
                                         });
  out.c2 = smallest->c2;
  return out;
}

}  // namespace wt::branch

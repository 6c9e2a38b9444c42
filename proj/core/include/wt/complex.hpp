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


// W_t in the complex plane.
//
// Sheets are evaluated on the finite-cuts atlas: sheet +-1 carries the
// vertical cut joining x_1 to conj(x_1) and the real cut [Re x_1, 0]; sheet
// +-m (m >= 2) carries the vertical cuts through x_{m-1} and x_m and the real
// cut [Re x_m, Re x_{m-1}]. Crossing the vertical cut through x_m moves
// between sheets m and m+1; crossing a real cut moves from n to -n.
//
// Values are produced by predictor-corrector continuation from a large
// positive anchor R where the sheet is fixed by its limit at infinity.

#ifndef WT_COMPLEX_HPP_
#define WT_COMPLEX_HPP_

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "wt/branch_points.hpp"
#include "wt/core.hpp"

namespace wt::plane {

enum class CutKind { kRealSegment, kVerticalSegment, kHorizontalRay };

struct Cut {
  CutKind kind;
  // Segment endpoints. A horizontal ray starts at `from` and runs to
  // Re = -infinity; `to` is then unused.
  cplx from;
  cplx to;
  // Sheets glued along the cut; absent for documentation-only schemes.
  std::optional<std::pair<BranchIndex, BranchIndex>> connects;

  double distance(cplx z) const;
  // True when the closed segment [p, q] shares a point with the cut.
  bool touches(cplx p, cplx q) const;
  // True when moving from p to q changes side across the cut.
  bool crossed(cplx p, cplx q) const;
  // Sheet reached by crossing from `sheet`; `sheet` if the cut does not
  // border it.
  BranchIndex other_side(BranchIndex sheet) const;
};

// One-sided limits of a sheet on the real axis. Unset entries have no single
// real limit in the scheme.
struct SheetLimits {
  double at_infinity;
  std::optional<double> at_plus_zero;
  std::optional<double> at_minus_zero;
};

class SheetAtlas {
 public:
  static constexpr int kDefaultSheets = 8;

  static SheetAtlas finite_cuts(int max_sheet = kDefaultSheets);
  // Table of the alternative scheme with cuts running to -infinity. Kept for
  // documentation and limit checks; continuation requires finite cuts.
  static SheetAtlas cuts_to_minus_infinity(int max_sheet = kDefaultSheets);

  CutScheme scheme() const { return scheme_; }
  int max_sheet() const { return max_sheet_; }

  // Branch point records x_1 .. x_{max_sheet + 1}.
  const std::vector<branch::BranchPoint>& branch_points() const { return points_; }
  const branch::BranchPoint& branch_point(int m) const;

  std::vector<Cut> cuts_for(BranchIndex n) const;
  // Span [lo, hi] of the real cut of sheet n.
  std::pair<double, double> real_cut_span(BranchIndex n) const;
  SheetLimits limits(BranchIndex n) const;

  // Distance from z to the nearest branch point, counting x = 0 and the
  // conjugate points.
  double branch_point_distance(cplx z) const;
  // Same, restricted to the singular points of sheet n: the endpoints of its
  // cuts, plus x = 0 on sheets +-1 only.
  double branch_point_distance(cplx z, BranchIndex n) const;

  void require_sheet(BranchIndex n) const;

 private:
  SheetAtlas(CutScheme scheme, int max_sheet);

  CutScheme scheme_;
  int max_sheet_;
  std::vector<branch::BranchPoint> points_;
};

struct StepControl {
  double max_step = std::numeric_limits<double>::infinity();
  double shrink = 0.5;
  double grow = 1.5;
  // Floor on the step, scaled by min(1, distance to nearest branch point).
  double min_step = 1e-6;
  double max_correction = 0.2;  // largest accepted |Halley correction|
};

struct ContinuationPath {
  std::vector<cplx> waypoints;
  StepControl step_control;
};

struct TracePoint {
  cplx x;
  cplx y;
  BranchIndex sheet;
};

// Guard distance to cuts and the relative exclusion radius around x_n.
inline constexpr double kCutGuard = 1e-10;
inline constexpr double kBranchPointExclusion = 1e-6;

BranchedValue eval_complex(cplx z, BranchIndex n, const SheetAtlas& atlas,
                           const SolverConfig& cfg = {});

// Waypoints eval_complex follows from the anchor to z.
std::vector<cplx> route(cplx z, BranchIndex n, const SheetAtlas& atlas);

// Continues the value along the path starting from the start-sheet value at
// the first waypoint. One TracePoint per waypoint.
std::vector<TracePoint> trace_path(const ContinuationPath& path, BranchIndex start_sheet,
                                   const SheetAtlas& atlas);
// Same with a caller-supplied start value.
std::vector<TracePoint> trace_path(const ContinuationPath& path, BranchIndex start_sheet,
                                   cplx start_value, const SheetAtlas& atlas);

enum class Side { kUpper, kLower, kLeft, kRight };

// One-sided limit of sheet n at a point on one of its cuts. At a junction of a
// vertical and a real cut the approach direction is tilted into the quadrant
// bordering the real cut (Upper/Lower) or into the upper half-plane
// (Left/Right).
cplx boundary_value(cplx point, BranchIndex n, Side side, const SheetAtlas& atlas);

// Im W^(1)(u + i0) for Re x_1 <= u <= 0.
double discontinuity_delta0(double u, const SheetAtlas& atlas);
// [W^(1)(a + 0 + iv) - W^(1)(a - 0 + iv)] / 2 with a = Re x_1, 0 <= v <= Im x_1.
cplx discontinuity_delta1(double v, const SheetAtlas& atlas);

struct QuadratureConfig {
  int panels = 4;       // Gauss-Kronrod panels per cut
  double tol = 1e-7;    // absolute error target for each cut integral
};

// Principal sheet rebuilt from its cut discontinuities:
//   W(z) = pi/2 + (1/pi) int_a^0 D0(u) / (u - z) du
//          - (1/pi) int_0^b [D1(v) / (a + iv - z) + conj D1(v) / (a - iv - z)] dv.
// The discontinuities are tabulated once at construction.
class Dispersion {
 public:
  explicit Dispersion(const SheetAtlas& atlas, const QuadratureConfig& cfg = {});

  // Throws kQuadratureFailure when the Gauss and Kronrod sums differ by more
  // than the configured tolerance.
  cplx operator()(cplx z) const;
  // |Kronrod - Gauss| of the cut integrals at z.
  double error_estimate(cplx z) const;

  double vertical_sign() const { return kVerticalSign; }

 private:
  struct Node {
    double t;       // substitution variable
    double weight;  // Kronrod weight times panel half-width
    double gauss_weight;
    double jacobian;  // 2 t
  };
  static constexpr double kVerticalSign = -1.0;

  // Kronrod and Gauss estimates of W(z) - pi/2.
  std::pair<cplx, cplx> integrals(cplx z) const;

  double a_;
  double b_;
  QuadratureConfig cfg_;
  std::vector<Node> real_nodes_;
  std::vector<Node> vertical_nodes_;
  std::vector<double> delta0_;
  std::vector<cplx> delta1_;
};

cplx dispersion_eval(cplx z, const SheetAtlas& atlas, const QuadratureConfig& cfg = {});

}  // namespace wt::plane

#endif  // WT_COMPLEX_HPP_

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


#include "wt/complex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wt::plane {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr long kMaxSteps = 2000000;

// Far enough left to stand in for -infinity in ray geometry.
constexpr double kRayReach = 1e15;

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orientation(cplx p, cplx q, cplx r) {
  const double c = cross(q - p, r - p);
  const double scale = std::abs(q - p) * std::abs(r - p);
  if (std::abs(c) <= 1e-15 * scale) return 0;
  return c > 0 ? 1 : -1;
}

bool on_segment(cplx p, cplx q, cplx r) {
  return std::min(p.real(), q.real()) <= r.real() && r.real() <= std::max(p.real(), q.real()) &&
         std::min(p.imag(), q.imag()) <= r.imag() && r.imag() <= std::max(p.imag(), q.imag());
}

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double point_segment_distance(cplx z, cplx p, cplx q) {
  const cplx d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - p);
  const double t = std::clamp(((z - p) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (p + t * d));
}

// dW/dx without the branch-point guard; continuation needs it arbitrarily
// close to x_n.
std::optional<cplx> raw_slope(cplx x, cplx y) {
  const cplx den = y * y + x * x + x;
  if (den == cplx(0.0)) return std::nullopt;
  return y / den;
}

cplx raw_curvature(cplx x, cplx y) {
  const cplx den = y * y + x * x + x;
  const cplx den2 = den * den;
  return -2.0 * x * y / den2 - 2.0 * y * y * y / (den2 * den);
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Attainable accuracy of a root of x - y tan y: rounding in the residual
// divided by |f'(y)|, which vanishes at branch points.
double root_noise(cplx x, cplx y) {
  const cplx t = std::tan(y);
  const double slope = std::abs(t + y * (1.0 + t * t));
  const double residual_noise = 8.0 * kEps * (1.0 + std::abs(x));
  return 4.0 * kEps * (1.0 + std::abs(y)) +
         (slope > 0.0 ? residual_noise / slope : std::numeric_limits<double>::infinity());
}

// Halley refinement at fixed x; Newton on y sin y - x cos y near tan poles.
std::optional<cplx> correct(cplx x, cplx y) {
  double last = 0.0;
  double noise = 0.0;
  for (int it = 0; it < 12; ++it) {
    cplx next;
    try {
      next = halley_step(x, y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPoleProximity) return std::nullopt;
      const cplx s = std::sin(y);
      const cplx c = std::cos(y);
      const cplx slope = (1.0 + x) * s + y * c;
      if (slope == cplx(0.0)) return std::nullopt;
      next = y - (y * s - x * c) / slope;
    }
    if (!finite(next)) return std::nullopt;
    last = std::abs(next - y);
    y = next;
    noise = root_noise(x, y);
    if (last <= noise) return y;
  }
  if (last <= 100.0 * noise) return y;
  return std::nullopt;
}

class Walker {
 public:
  Walker(const SheetAtlas& atlas, const StepControl& control, cplx x, cplx y, BranchIndex sheet)
      : atlas_(atlas), control_(control), x_(x), y_(y), sheet_(sheet) {
    if (!(control.shrink > 0.0 && control.shrink < 1.0) || !(control.grow >= 1.0) ||
        !(control.min_step > 0.0) || !(control.max_step > 0.0) ||
        !(control.max_correction > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "invalid step control");
    }
    atlas_.require_sheet(sheet_);
    cuts_ = atlas_.cuts_for(sheet_);
    h_ = 0.05 * (1.0 + std::abs(x_));
  }

  cplx x() const { return x_; }
  cplx y() const { return y_; }
  BranchIndex sheet() const { return sheet_; }

  void advance_to(cplx target) {
    if (!finite(target)) throw Error(ErrorCode::kNonFiniteArgument, "non-finite waypoint");
    long steps = 0;
    while (x_ != target) {
      if (++steps > kMaxSteps) {
        throw Error(ErrorCode::kContinuationFailure, "step budget exhausted");
      }
      const double remaining = std::abs(target - x_);
      const double d_bp = atlas_.branch_point_distance(x_, sheet_);
      const double cap =
          std::min({control_.max_step, 0.25 * (1.0 + std::abs(x_)), 0.3 * d_bp});
      const double floor = control_.min_step * std::min(1.0, d_bp);
      const double h = std::min(h_, cap);
      if (h < floor) {
        throw Error(ErrorCode::kStepTooLarge,
                    "step below minimum near x = " + std::to_string(x_.real()) + "," +
                        std::to_string(x_.imag()));
      }
      const bool last = h >= remaining;
      const cplx xn = last ? target : x_ + (target - x_) * (h / remaining);
      if (!try_step(xn)) {
        h_ = h * control_.shrink;
        continue;
      }
      h_ = h * control_.grow;
    }
  }

 private:
  bool try_step(cplx xn) {
    const auto slope0 = raw_slope(x_, y_);
    if (!slope0) throw Error(ErrorCode::kContinuationFailure, "path runs through a branch point");
    const cplx dx = xn - x_;
    const cplx yp = y_ + *slope0 * dx + 0.5 * raw_curvature(x_, y_) * dx * dx;
    if (!finite(yp)) return false;
    const auto yc = correct(xn, yp);
    if (!yc) return false;
    const double correction = std::abs(*yc - yp);
    if (correction > control_.max_correction) return false;
    if (correction > 0.25 * std::abs(yp - y_) + 1e-12 * (1.0 + std::abs(y_))) return false;
    const auto slope1 = raw_slope(xn, *yc);
    if (!slope1 || std::abs(*slope1 - *slope0) > 0.5 * std::abs(*slope0)) return false;

    int crossings = 0;
    BranchIndex next = sheet_;
    for (const Cut& cut : cuts_) {
      if (cut.crossed(x_, xn)) {
        ++crossings;
        next = cut.other_side(sheet_);
      }
    }
    if (crossings > 1) return false;  // shrink until the cuts are crossed one at a time
    if (next != sheet_) {
      atlas_.require_sheet(next);
      sheet_ = next;
      cuts_ = atlas_.cuts_for(sheet_);
    }
    x_ = xn;
    y_ = *yc;
    return true;
  }

  const SheetAtlas& atlas_;
  StepControl control_;
  cplx x_;
  cplx y_;
  BranchIndex sheet_;
  std::vector<Cut> cuts_;
  double h_;
};

double anchor_for(cplx z, BranchIndex n, const SheetAtlas& atlas) {
  const double reach = std::abs(atlas.branch_point(n.magnitude()).x);
  return std::max(10.0 * (1.0 + std::abs(z)), 2.0 * reach + 10.0);
}

bool path_is_clear(const std::vector<cplx>& pts, const std::vector<Cut>& cuts) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (const Cut& c : cuts) {
      if (c.touches(pts[i], pts[i + 1])) return false;
    }
  }
  return true;
}

// Continuation from the anchor without the public guards.
cplx continue_to(cplx z, BranchIndex n, const SheetAtlas& atlas) {
  const std::vector<cplx> pts = route(z, n, atlas);
  Walker walker(atlas, StepControl{}, pts.front(), cplx(eval_real(pts.front().real(), n)), n);
  for (std::size_t i = 1; i < pts.size(); ++i) walker.advance_to(pts[i]);
  if (walker.sheet() != n) {
    throw Error(ErrorCode::kContinuationFailure, "route crossed a cut");
  }
  return walker.y();
}

cplx unit(cplx d) { return d / std::abs(d); }

// Limit of sheet n at `point` approached along `dir`: continuation to three
// offsets, polynomial extrapolation to zero offset, then a Halley polish at
// the point itself.
cplx one_sided_limit(cplx point, BranchIndex n, cplx dir, const SheetAtlas& atlas) {
  const double d = atlas.branch_point_distance(point, n);
  const double eps0 = std::min(1e-4, 0.1 * d);
  cplx estimate;
  cplx nearest;
  double eps_min;
  if (eps0 >= 1e-8) {
    const std::array<double, 3> eps = {eps0, 0.1 * eps0, 0.01 * eps0};
    std::array<cplx, 3> w;
    for (int j = 0; j < 3; ++j) w[j] = continue_to(point + eps[j] * dir, n, atlas);
    // Neville's scheme at zero offset.
    std::array<cplx, 3> p = w;
    for (int level = 1; level < 3; ++level) {
      for (int j = 0; j + level < 3; ++j) {
        p[j] = (eps[j + level] * p[j] - eps[j] * p[j + 1]) / (eps[j + level] - eps[j]);
      }
    }
    estimate = p[0];
    nearest = w[2];
    eps_min = eps[2];
  } else {
    eps_min = eps0;
    nearest = continue_to(point + eps0 * dir, n, atlas);
    estimate = nearest;
  }
  const auto polished = correct(point, estimate);
  if (polished) {
    const auto slope = raw_slope(point + eps_min * dir, nearest);
    const double reach = slope ? 10.0 * eps_min * std::abs(*slope) : 0.0;
    if (std::abs(*polished - nearest) <= reach + 1e-12 * (1.0 + std::abs(nearest))) {
      return *polished;
    }
  }
  return estimate;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cut

double Cut::distance(cplx z) const {
  if (kind == CutKind::kHorizontalRay) {
    if (z.real() <= from.real()) return std::abs(z.imag() - from.imag());
    return std::abs(z - from);
  }
  return point_segment_distance(z, from, to);
}

bool Cut::touches(cplx p, cplx q) const {
  const cplx end = kind == CutKind::kHorizontalRay ? cplx(-kRayReach, from.imag()) : to;
  return segments_intersect(p, q, from, end);
}

bool Cut::crossed(cplx p, cplx q) const {
  switch (kind) {
    case CutKind::kRealSegment: {
      const bool sp = p.imag() >= 0.0;
      const bool sq = q.imag() >= 0.0;
      if (sp == sq) return false;
      const double t = p.imag() / (p.imag() - q.imag());
      const double re = p.real() + t * (q.real() - p.real());
      return std::min(from.real(), to.real()) <= re && re <= std::max(from.real(), to.real());
    }
    case CutKind::kVerticalSegment: {
      const double a = from.real();
      const bool sp = p.real() >= a;
      const bool sq = q.real() >= a;
      if (sp == sq) return false;
      const double t = (p.real() - a) / (p.real() - q.real());
      const double im = p.imag() + t * (q.imag() - p.imag());
      return std::min(from.imag(), to.imag()) <= im && im <= std::max(from.imag(), to.imag());
    }
    case CutKind::kHorizontalRay: {
      const double h = from.imag();
      const bool sp = p.imag() >= h;
      const bool sq = q.imag() >= h;
      if (sp == sq) return false;
      const double t = (p.imag() - h) / (p.imag() - q.imag());
      return p.real() + t * (q.real() - p.real()) <= from.real();
    }
  }
  return false;
}

BranchIndex Cut::other_side(BranchIndex sheet) const {
  if (!connects) return sheet;
  if (connects->first == sheet) return connects->second;
  if (connects->second == sheet) return connects->first;
  return sheet;
}

// ---------------------------------------------------------------------------
// SheetAtlas

SheetAtlas::SheetAtlas(CutScheme scheme, int max_sheet) : scheme_(scheme), max_sheet_(max_sheet) {
  if (max_sheet < 1) throw Error(ErrorCode::kInvalidArgument, "atlas needs at least one sheet");
  points_ = branch::find_branch_points(max_sheet + 1);
}

SheetAtlas SheetAtlas::finite_cuts(int max_sheet) {
  return SheetAtlas(CutScheme::kFiniteCuts, max_sheet);
}

SheetAtlas SheetAtlas::cuts_to_minus_infinity(int max_sheet) {
  return SheetAtlas(CutScheme::kCutsToMinusInfinity, max_sheet);
}

const branch::BranchPoint& SheetAtlas::branch_point(int m) const {
  if (m < 1 || m > static_cast<int>(points_.size())) {
    throw Error(ErrorCode::kSheetOutOfRange, "no branch point x_" + std::to_string(m) +
                                                 " in this atlas");
  }
  return points_[m - 1];
}

void SheetAtlas::require_sheet(BranchIndex n) const {
  if (n.magnitude() > max_sheet_) {
    throw Error(ErrorCode::kSheetOutOfRange,
                "sheet " + std::to_string(n.value()) + " exceeds the atlas range +-" +
                    std::to_string(max_sheet_));
  }
}

std::pair<double, double> SheetAtlas::real_cut_span(BranchIndex n) const {
  require_sheet(n);
  const int m = n.magnitude();
  const double lo = branch_point(m).x.real();
  const double hi = m == 1 ? 0.0 : branch_point(m - 1).x.real();
  return {lo, hi};
}

std::vector<Cut> SheetAtlas::cuts_for(BranchIndex n) const {
  require_sheet(n);
  const int m = n.magnitude();
  const int s = n.sign();
  std::vector<Cut> cuts;
  if (scheme_ == CutScheme::kFiniteCuts) {
    auto vertical = [&](int k, int to_sheet) {
      const cplx x = branch_point(k).x;
      cuts.push_back(Cut{CutKind::kVerticalSegment, std::conj(x), x,
                         std::make_pair(n, BranchIndex(to_sheet))});
    };
    if (m >= 2) vertical(m - 1, s * (m - 1));
    vertical(m, s * (m + 1));
    const auto [lo, hi] = real_cut_span(n);
    cuts.push_back(Cut{CutKind::kRealSegment, cplx(lo), cplx(hi),
                       std::make_pair(n, n.negated())});
  } else if (scheme_ == CutScheme::kCutsToMinusInfinity) {
    auto rays = [&](int k) {
      const cplx x = branch_point(k).x;
      cuts.push_back(Cut{CutKind::kHorizontalRay, x, x, std::nullopt});
      cuts.push_back(Cut{CutKind::kHorizontalRay, std::conj(x), std::conj(x), std::nullopt});
    };
    if (m >= 2) rays(m - 1);
    rays(m);
    if (m == 1) cuts.push_back(Cut{CutKind::kHorizontalRay, cplx(0.0), cplx(0.0), std::nullopt});
  }
  return cuts;
}

SheetLimits SheetAtlas::limits(BranchIndex n) const {
  const double s = n.sign();
  const int m = n.magnitude();
  SheetLimits lim{value_at_infinity(n), s * (m - 1) * kPi, std::nullopt};
  switch (scheme_) {
    case CutScheme::kRealAxis:
      lim.at_minus_zero = n.value() * kPi;
      break;
    case CutScheme::kCutsToMinusInfinity:
    case CutScheme::kFiniteCuts:
      // Sheets +-1 carry a cut ending at 0; all others are analytic there.
      if (m >= 2) lim.at_minus_zero = lim.at_plus_zero;
      break;
  }
  return lim;
}

double SheetAtlas::branch_point_distance(cplx z, BranchIndex n) const {
  const int m = n.magnitude();
  double d = m == 1 ? std::abs(z) : std::numeric_limits<double>::infinity();
  for (int k : {m - 1, m}) {
    if (k < 1 || k > static_cast<int>(points_.size())) continue;
    const cplx x = points_[k - 1].x;
    d = std::min({d, std::abs(z - x), std::abs(z - std::conj(x))});
  }
  return d;
}

double SheetAtlas::branch_point_distance(cplx z) const {
  double d = std::abs(z);
  for (const auto& p : points_) {
    d = std::min({d, std::abs(z - p.x), std::abs(z - std::conj(p.x))});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Evaluation

std::vector<cplx> route(cplx z, BranchIndex n, const SheetAtlas& atlas) {
  const double r = anchor_for(z, n, atlas);
  const std::vector<Cut> cuts = atlas.cuts_for(n);
  std::vector<cplx> straight = {cplx(r), z};
  if (path_is_clear(straight, cuts)) return straight;
  const double s = (z.imag() >= 0.0 ? 1.0 : -1.0) *
                   (atlas.branch_point(n.magnitude()).x.imag() + 1.0);
  std::vector<cplx> detour = {cplx(r), cplx(r, s), cplx(z.real(), s), z};
  if (!path_is_clear(detour, cuts)) {
    throw Error(ErrorCode::kContinuationFailure, "no cut-free route to the target");
  }
  return detour;
}

BranchedValue eval_complex(cplx z, BranchIndex n, const SheetAtlas& atlas,
                           const SolverConfig& cfg) {
  cfg.validate();
  if (!finite(z)) throw Error(ErrorCode::kNonFiniteArgument, "eval_complex needs a finite argument");
  if (atlas.scheme() != CutScheme::kFiniteCuts) {
    throw Error(ErrorCode::kInvalidArgument, "continuation requires the finite-cuts atlas");
  }
  atlas.require_sheet(n);
  for (const auto& p : atlas.branch_points()) {
    const double radius = kBranchPointExclusion * (1.0 + std::abs(p.x));
    if (std::abs(z - p.x) < radius || std::abs(z - std::conj(p.x)) < radius) {
      throw Error(ErrorCode::kBranchPointProximity,
                  "argument is within " + std::to_string(radius) + " of branch point x_" +
                      std::to_string(p.n));
    }
  }
  for (const Cut& cut : atlas.cuts_for(n)) {
    if (cut.distance(z) <= kCutGuard) {
      throw Error(ErrorCode::kOnCut, "argument lies on a cut of sheet " +
                                         std::to_string(n.value()) + "; use boundary_value");
    }
  }
  const cplx y = continue_to(z, n, atlas);
  return BranchedValue{z, y, n, CutScheme::kFiniteCuts, defining_residual(z, y)};
}

std::vector<TracePoint> trace_path(const ContinuationPath& path, BranchIndex start_sheet,
                                   cplx start_value, const SheetAtlas& atlas) {
  if (path.waypoints.empty()) throw Error(ErrorCode::kInvalidArgument, "empty path");
  Walker walker(atlas, path.step_control, path.waypoints.front(), start_value, start_sheet);
  std::vector<TracePoint> out;
  out.reserve(path.waypoints.size());
  out.push_back({walker.x(), walker.y(), walker.sheet()});
  for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
    walker.advance_to(path.waypoints[i]);
    out.push_back({walker.x(), walker.y(), walker.sheet()});
  }
  return out;
}

std::vector<TracePoint> trace_path(const ContinuationPath& path, BranchIndex start_sheet,
                                   const SheetAtlas& atlas) {
  if (path.waypoints.empty()) throw Error(ErrorCode::kInvalidArgument, "empty path");
  const cplx start = eval_complex(path.waypoints.front(), start_sheet, atlas).y;
  return trace_path(path, start_sheet, start, atlas);
}

cplx boundary_value(cplx point, BranchIndex n, Side side, const SheetAtlas& atlas) {
  if (!finite(point)) throw Error(ErrorCode::kNonFiniteArgument, "non-finite point");
  if (atlas.scheme() != CutScheme::kFiniteCuts) {
    throw Error(ErrorCode::kInvalidArgument, "boundary values require the finite-cuts atlas");
  }
  const double tol = kCutGuard * (1.0 + std::abs(point));
  const Cut* real_cut = nullptr;
  const Cut* vertical_cut = nullptr;
  const std::vector<Cut> cuts = atlas.cuts_for(n);
  for (const Cut& c : cuts) {
    if (c.distance(point) > tol) continue;
    (c.kind == CutKind::kRealSegment ? real_cut : vertical_cut) = &c;
  }
  if (!real_cut && !vertical_cut) {
    throw Error(ErrorCode::kNotOnCut, "point is not on a cut of sheet " + std::to_string(n.value()));
  }

  // Branch-point endpoints: both sides meet at the branch value.
  if (std::abs(point) <= tol) return cplx(0.0);
  for (const auto& p : atlas.branch_points()) {
    if (std::abs(point - p.x) <= tol) return static_cast<double>(n.sign()) * p.y;
    if (std::abs(point - std::conj(p.x)) <= tol) return static_cast<double>(n.sign()) * std::conj(p.y);
  }

  const bool vertical_side = side == Side::kLeft || side == Side::kRight;
  cplx dir;
  if (real_cut && vertical_cut) {
    const double a = vertical_cut->from.real();
    const double span_mid = 0.5 * (real_cut->from.real() + real_cut->to.real());
    const double tilt = span_mid > a ? 1.0 : -1.0;
    switch (side) {
      case Side::kUpper: dir = unit(cplx(tilt, 1.0)); break;
      case Side::kLower: dir = unit(cplx(tilt, -1.0)); break;
      case Side::kLeft: dir = unit(cplx(-1.0, 1.0)); break;
      case Side::kRight: dir = unit(cplx(1.0, 1.0)); break;
    }
  } else if (real_cut) {
    if (vertical_side) throw Error(ErrorCode::kInvalidArgument, "real cut has Upper/Lower sides");
    dir = side == Side::kUpper ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  } else {
    if (!vertical_side) throw Error(ErrorCode::kInvalidArgument, "vertical cut has Left/Right sides");
    dir = side == Side::kRight ? cplx(1.0) : cplx(-1.0);
  }
  return one_sided_limit(point, n, dir, atlas);
}

double discontinuity_delta0(double u, const SheetAtlas& atlas) {
  const double a = atlas.branch_point(1).x.real();
  if (!(u >= a && u <= 0.0)) {
    throw Error(ErrorCode::kOutOfCutRange, "Delta0 is defined for Re x_1 <= u <= 0");
  }
  if (u == 0.0) return 0.0;
  return boundary_value(cplx(u), BranchIndex(1), Side::kUpper, atlas).imag();
}

cplx discontinuity_delta1(double v, const SheetAtlas& atlas) {
  const cplx x1 = atlas.branch_point(1).x;
  if (!(v >= 0.0 && v <= x1.imag())) {
    throw Error(ErrorCode::kOutOfCutRange, "Delta1 is defined for 0 <= v <= Im x_1");
  }
  if (v == x1.imag()) return cplx(0.0);
  const cplx point(x1.real(), v);
  const BranchIndex one(1);
  return 0.5 * (boundary_value(point, one, Side::kRight, atlas) -
                boundary_value(point, one, Side::kLeft, atlas));
}

// ---------------------------------------------------------------------------
// Dispersion relation

Dispersion::Dispersion(const SheetAtlas& atlas, const QuadratureConfig& cfg) : cfg_(cfg) {
  if (cfg.panels < 1 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid quadrature configuration");
  }
  const cplx x1 = atlas.branch_point(1).x;
  a_ = x1.real();
  b_ = x1.imag();

  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
  using Gauss = boost::math::quadrature::gauss<double, 30>;
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  // u = -t^2 and v = b - t^2 absorb the square-root endpoint behaviour.
  auto build = [&](double t_max) {
    std::vector<Node> nodes;
    const double h = 0.5 * t_max / cfg.panels;
    for (int p = 0; p < cfg.panels; ++p) {
      const double c = (2 * p + 1) * h;
      for (std::size_t i = 0; i < xk.size(); ++i) {
        // 30-point Gauss nodes sit at the odd Kronrod indices.
        const double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
        for (double sgn : {1.0, -1.0}) {
          if (i == 0 && sgn < 0) continue;
          const double t = c + sgn * h * xk[i];
          nodes.push_back(Node{t, h * wk[i], h * g, 2.0 * t});
        }
      }
    }
    return nodes;
  };
  real_nodes_ = build(std::sqrt(-a_));
  vertical_nodes_ = build(std::sqrt(b_));
  delta0_.reserve(real_nodes_.size());
  for (const Node& n : real_nodes_) delta0_.push_back(discontinuity_delta0(-n.t * n.t, atlas));
  delta1_.reserve(vertical_nodes_.size());
  for (const Node& n : vertical_nodes_) {
    delta1_.push_back(discontinuity_delta1(b_ - n.t * n.t, atlas));
  }
}

std::pair<cplx, cplx> Dispersion::integrals(cplx z) const {
  cplx kronrod(0.0);
  cplx gauss(0.0);
  for (std::size_t i = 0; i < real_nodes_.size(); ++i) {
    const Node& n = real_nodes_[i];
    const cplx f = n.jacobian * delta0_[i] / (-n.t * n.t - z);
    kronrod += n.weight * f;
    gauss += n.gauss_weight * f;
  }
  for (std::size_t i = 0; i < vertical_nodes_.size(); ++i) {
    const Node& n = vertical_nodes_[i];
    const double v = b_ - n.t * n.t;
    const cplx d = delta1_[i];
    const cplx f = kVerticalSign * n.jacobian *
                   (d / (cplx(a_, v) - z) + std::conj(d) / (cplx(a_, -v) - z));
    kronrod += n.weight * f;
    gauss += n.gauss_weight * f;
  }
  return {kronrod / kPi, gauss / kPi};
}

double Dispersion::error_estimate(cplx z) const {
  const auto [k, g] = integrals(z);
  return std::abs(k - g);
}

cplx Dispersion::operator()(cplx z) const {
  if (!finite(z)) throw Error(ErrorCode::kNonFiniteArgument, "non-finite argument");
  const auto [k, g] = integrals(z);
  if (std::abs(k - g) > cfg_.tol) {
    throw Error(ErrorCode::kQuadratureFailure,
                "cut integrals not resolved at this distance from the cuts (estimate " +
                    std::to_string(std::abs(k - g)) + ")");
  }
  return 0.5 * kPi + k;
}

cplx dispersion_eval(cplx z, const SheetAtlas& atlas, const QuadratureConfig& cfg) {
  return Dispersion(atlas, cfg)(z);
}

}  // namespace wt::plane

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

#include "wt/core.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Seeds on [0, 3.5] use the small-x expansion, larger x the large-x one.
constexpr double kSeedSplit = 3.5;

template <class T>
T halley_impl(T x, T y) {
  using std::abs;
  using std::cos;
  using std::tan;
  if (abs(cos(y)) < kPoleGuard) {
    throw Error(ErrorCode::kPoleProximity, "Halley step too close to a pole of tan");
  }
  const T t = tan(y);
  const T f = x - y * t;
  const T sec2 = T(1) + t * t;
  const T d = y * sec2 + t;
  if (d == T(0)) {
    throw Error(ErrorCode::kAtBranchPoint, "f'(y) vanishes in Halley step");
  }
  const T denom = d + (y * t + T(1)) * sec2 / d * f;
  if (denom == T(0)) {
    throw Error(ErrorCode::kAtBranchPoint, "degenerate Halley denominator");
  }
  return y + f / denom;
}

// g(y) = y sin y - x cos y has the same roots as y tan y - x away from the
// poles of tan and stays bounded across the window edges.
double bracket_function(double x, double y) {
  return y * std::sin(y) - x * std::cos(y);
}

double bracket_slope(double x, double y) {
  return (1.0 + x) * std::sin(y) + y * std::cos(y);
}

double seed_positive_branch(double x, int n, double lo, double hi) {
  double y;
  if (x > kSeedSplit) {
    const double t = 1.0 / x;
    if (n == 1) {
      constexpr double kPi2 = kPi * kPi;
      y = 0.5 * kPi *
          (1.0 + t * (-1.0 + t * (1.0 + t * (-(1.0 - kPi2 / 12.0) +
                                               t * -(kPi2 / 3.0 - 1.0)))));
    } else {
      y = (n - 0.5) * kPi * (1.0 - t);
    }
  } else if (x > 0.0 && n == 1) {
    y = std::sqrt(x) *
        (1.0 + x * (-1.0 / 6.0 +
                    x * (11.0 / 360.0 + x * (-17.0 / 5040.0 + x * -281.0 / 604800.0))));
  } else {
    y = 0.5 * (lo + hi);
  }
  if (!(y > lo && y < hi)) y = 0.5 * (lo + hi);
  return y;
}

// Solves on branch n >= 1 for x != 0.
double solve_positive_branch(double x, int n, const SolverConfig& cfg) {
  const auto [lo0, hi0] = branch_window(x, BranchIndex(n));
  double lo = lo0;
  double hi = hi0;
  const double g_lo_sign = std::copysign(1.0, bracket_function(x, lo));

  double y = seed_positive_branch(x, n, lo, hi);
  bool step_converged = false;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double g = bracket_function(x, y);
    if (g == 0.0) {
      step_converged = true;
      break;
    }
    if (std::copysign(1.0, g) == g_lo_sign) {
      lo = y;
    } else {
      hi = y;
    }

    double next = std::numeric_limits<double>::quiet_NaN();
    try {
      next = halley_step(x, y);
    } catch (const Error& e) {
      if (!cfg.bracket_fallback) throw;
    }
    const double scale = std::max(1.0, std::abs(y));
    // y is itself a bracket end, so a converged step may land on it.
    const bool settled = std::abs(next - y) <= 4.0 * kEps * scale && next >= lo && next <= hi;
    if (!settled && !(next > lo && next < hi)) {
      if (!cfg.bracket_fallback) {
        throw Error(ErrorCode::kNoConvergence,
                    "Halley iterate left the branch window at x = " + std::to_string(x));
      }
      const double slope = bracket_slope(x, y);
      next = slope != 0.0 ? y - g / slope : std::numeric_limits<double>::quiet_NaN();
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    }

    const bool tiny_step = std::abs(next - y) <= 4.0 * kEps * scale;
    y = next;
    if (tiny_step || hi - lo <= 4.0 * kEps * scale) {
      step_converged = true;
      break;
    }
  }

  const double residual = defining_residual(x, y);
  if (!step_converged && residual > cfg.tol * (1.0 + std::abs(x))) {
    throw Error(ErrorCode::kNoConvergence,
                "eval_real did not converge at x = " + std::to_string(x) +
                    " on branch " + std::to_string(n));
  }
  return y;
}

}  // namespace

BranchIndex::BranchIndex(int n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::kInvalidBranch, "branch index must be nonzero");
}

std::string_view to_string(CutScheme scheme) {
  switch (scheme) {
    case CutScheme::kRealAxis: return "real";
    case CutScheme::kCutsToMinusInfinity: return "cuts-to-minus-infinity";
    case CutScheme::kFiniteCuts: return "finite-cuts";
  }
  return "unknown";
}

std::optional<CutScheme> parse_cut_scheme(std::string_view name) {
  if (name == "real" || name == "real-axis") return CutScheme::kRealAxis;
  if (name == "cuts-to-minus-infinity" || name == "infinite-cuts") {
    return CutScheme::kCutsToMinusInfinity;
  }
  if (name == "finite-cuts" || name == "finite") return CutScheme::kFiniteCuts;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  if (max_iter < 1) throw Error(ErrorCode::kInvalidArgument, "max_iter must be >= 1");
}

double defining_residual(cplx x, cplx y) { return std::abs(y * std::tan(y) - x); }

double value_at_infinity(BranchIndex n) {
  return n.sign() * (n.magnitude() - 0.5) * kPi;
}

std::pair<double, double> branch_window(double x, BranchIndex n) {
  const int m = n.magnitude();
  double lo, hi;
  if (x > 0.0) {
    lo = (m - 1) * kPi;
    hi = (m - 0.5) * kPi;
  } else {
    lo = (m - 0.5) * kPi;
    hi = m * kPi;
  }
  if (n.sign() < 0) return {-hi, -lo};
  return {lo, hi};
}

double eval_real(double x, BranchIndex n, const SolverConfig& cfg, ZeroSide side) {
  cfg.validate();
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kNonFiniteArgument, "eval_real needs a finite argument");
  }
  if (n.sign() < 0) return -eval_real(x, n.negated(), cfg, side);

  if (x == 0.0) {
    switch (side) {
      case ZeroSide::kPlus: return (n.value() - 1) * kPi;
      case ZeroSide::kMinus: return n.value() * kPi;
      case ZeroSide::kUnspecified: break;
    }
    throw Error(ErrorCode::kSignedZeroRequired,
                "x = 0 is a branch point; choose the +0 or -0 limit");
  }
  return solve_positive_branch(x, n.value(), cfg);
}

BranchedValue evaluate_real(double x, BranchIndex n, const SolverConfig& cfg,
                            ZeroSide side) {
  const double y = eval_real(x, n, cfg, side);
  return BranchedValue{cplx(x), cplx(y), n, CutScheme::kRealAxis,
                       defining_residual(x, y)};
}

double halley_step(double x, double y) { return halley_impl(x, y); }

cplx halley_step(cplx x, cplx y) { return halley_impl(x, y); }

namespace {

cplx checked_denominator(cplx x, cplx y) {
  const cplx den = y * y + x * x + x;
  // Measures cancellation among the three terms, so the square-root onset at
  // x = 0+ (den ~ 2x) is not mistaken for a branch point.
  const double scale = std::abs(x) + std::norm(x) + std::norm(y);
  if (den == 0.0 || std::abs(den) < kBranchPointGuard * scale) {
    throw Error(ErrorCode::kAtBranchPoint, "y^2 + x^2 + x vanishes: branch point");
  }
  return den;
}

}  // namespace

cplx derivative(cplx x, cplx y) { return y / checked_denominator(x, y); }

cplx second_derivative(cplx x, cplx y) {
  const cplx den = checked_denominator(x, y);
  const cplx den2 = den * den;
  return -2.0 * x * y / den2 - 2.0 * y * y * y / (den2 * den);
}

double branch_identity_residual(double x, BranchIndex n, double y) {
  const double step = x < 0.0 ? 1.0 : 0.0;
  const double sgn_y = y > 0.0 ? 1.0 : (y < 0.0 ? -1.0 : 0.0);
  const double rhs = value_at_infinity(n) + step * sgn_y * kPi + std::atan2(-y, x);
  return std::abs(y - rhs);
}

}  // namespace wt

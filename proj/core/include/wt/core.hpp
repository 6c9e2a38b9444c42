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

// Real-axis evaluation of W_t, the multivalued solution y of
//
//     y * tan(y) = x,
//
// together with its derivatives and the Halley refinement kernel shared by the
// complex-plane code.
//
// Branches are labelled by a nonzero integer n fixed by the value at
// x = +infinity, sgn(n) * (|n| - 1/2) * pi. On the real axis branch n >= 1
// lives in ((n-1) pi, (n-1/2) pi) for x > 0 and in ((n-1/2) pi, n pi) for
// x < 0; negative branches are the mirror image, W^(-n)(x) = -W^(n)(x).
// The point x = 0 is a branch point: the one-sided limits are (n-1) pi from
// the right and n pi from the left.

#ifndef WT_CORE_HPP_
#define WT_CORE_HPP_

#include <compare>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>

#include "wt/error.hpp"

namespace wt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Nonzero branch label.
class BranchIndex {
 public:
  explicit BranchIndex(int n);

  int value() const noexcept { return n_; }
  int sign() const noexcept { return n_ > 0 ? 1 : -1; }
  int magnitude() const noexcept { return n_ > 0 ? n_ : -n_; }
  BranchIndex negated() const noexcept { return BranchIndex(-n_, Unchecked{}); }

  friend auto operator<=>(BranchIndex, BranchIndex) = default;

 private:
  struct Unchecked {};
  BranchIndex(int n, Unchecked) noexcept : n_(n) {}
  int n_;
};

enum class CutScheme {
  kRealAxis,             // real-axis conventions with the jump at x = 0
  kCutsToMinusInfinity,  // cuts run from each x_n to -infinity
  kFiniteCuts,           // cuts join x_n to conj(x_n) plus a real segment
};

std::string_view to_string(CutScheme scheme);
std::optional<CutScheme> parse_cut_scheme(std::string_view name);

struct SolverConfig {
  double tol = 1e-13;  // relative residual target
  int max_iter = 60;
  bool bracket_fallback = true;

  void validate() const;
};

// Selects the one-sided limit used at exactly x = 0.
enum class ZeroSide { kUnspecified, kPlus, kMinus };

struct BranchedValue {
  cplx x;
  cplx y;
  BranchIndex branch;
  CutScheme scheme;
  double residual;  // |y tan y - x|
};

// |y tan(y) - x|.
double defining_residual(cplx x, cplx y);

// Value of branch n at x = infinity, sgn(n) (|n| - 1/2) pi.
double value_at_infinity(BranchIndex n);

// Open interval containing W^(n)(x) for real x != 0.
std::pair<double, double> branch_window(double x, BranchIndex n);

// W^(n)(x) for real x under the real-axis convention. At exactly x = 0 the
// caller must pick a side; otherwise kSignedZeroRequired is thrown.
double eval_real(double x, BranchIndex n, const SolverConfig& cfg = {},
                 ZeroSide side = ZeroSide::kUnspecified);

// eval_real plus bookkeeping.
BranchedValue evaluate_real(double x, BranchIndex n,
                            const SolverConfig& cfg = {},
                            ZeroSide side = ZeroSide::kUnspecified);

// One Halley update for f(y) = x - y tan(y). Throws kPoleProximity when
// |cos y| < kPoleGuard and kAtBranchPoint when f'(y) vanishes.
inline constexpr double kPoleGuard = 1e-8;
double halley_step(double x, double y);
cplx halley_step(cplx x, cplx y);

// dW/dx = y / (x + x^2 + y^2), valid on any sheet given a consistent (x, y).
// Throws kAtBranchPoint when the denominator is below kBranchPointGuard
// relative to |x| + |x|^2 + |y|^2, or exactly zero.
inline constexpr double kBranchPointGuard = 1e-5;
cplx derivative(cplx x, cplx y);
cplx second_derivative(cplx x, cplx y);

// Deviation of y from the closed-form branch convention
//   sgn(n)(|n| - 1/2) pi + Theta(-x) sgn(y) pi + arg(x - i y),
// with Theta(0) = 0.
double branch_identity_residual(double x, BranchIndex n, double y);

}  // namespace wt

#endif  // WT_CORE_HPP_

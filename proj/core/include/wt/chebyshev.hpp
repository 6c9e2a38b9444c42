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


// Piecewise Chebyshev representation of the principal branch W^(1):
//
//   0 <= x <= a:   W = sqrt(x) * sum alpha_k T_k(2x/a - 1)
//   |x| > a:       W = pi/2    * sum beta_k  T_k(a/x)
//   -a <= x < 0:   W = pi      * sum gamma_k T_k(2x/a + 1)
//
// Coefficients are obtained by interpolation at Chebyshev-Gauss nodes.

#ifndef WT_CHEBYSHEV_HPP_
#define WT_CHEBYSHEV_HPP_

#include <span>
#include <vector>

#include "wt/core.hpp"

namespace wt::cheb {

enum class Region { kSmall, kLarge, kNegative };

struct ChebyshevModel {
  double split_a = 3.5;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;

  const std::vector<double>& coefficients(Region region) const;
  // |last retained coefficient| of the region.
  double truncation_estimate(Region region) const;
};

// Region that eval_cheb uses for x, and the mapped argument in [-1, 1].
Region region_of(double x, double split_a);
double region_argument(double x, double split_a);

// order is the number of coefficients per region (k = 0 .. order-1).
ChebyshevModel fit(double split_a = 3.5, int order = 15, const SolverConfig& cfg = {});

// sum c_k T_k(t) by Clenshaw recurrence.
double clenshaw(std::span<const double> c, double t);

double eval_cheb(double x, const ChebyshevModel& model);

}  // namespace wt::cheb

#endif  // WT_CHEBYSHEV_HPP_

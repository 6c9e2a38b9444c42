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


// Integral identities of the principal branch on x > 0, checked by adaptive
// Gauss-Kronrod quadrature:
//
//   int ln W dx     = x ln W + ln|cos W|
//   int ln sin W dx = x ln sin W - W^2 / 2
//   int_0^inf ln sin W dx = -pi^2 / 8
//   int_0^{pi/4} W dx     = pi^2/16 + (pi/8) ln 2 - G/2   (G: Catalan)

#ifndef WT_CALCULUS_HPP_
#define WT_CALCULUS_HPP_

#include <vector>

namespace wt::calculus {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 15;  // bisection depth of the adaptive scheme
  double tail_cutoff = 100.0;

  void validate() const;
};

// |int ln W dx - [x ln W + ln|cos W|]| over [x_lo, x_hi].
double check_indefinite_log(double x_lo, double x_hi, const QuadratureConfig& cfg = {});
// Same for ln sin W with antiderivative x ln sin W - W^2/2.
double check_indefinite_logsin(double x_lo, double x_hi, const QuadratureConfig& cfg = {});
// int W^2 dx against x W^2 - int 2 y^2 tan y dy in y = W(x).
double check_substitution_square(double x_lo, double x_hi, const QuadratureConfig& cfg = {});

// int_{x_lo}^{x_hi} ln sin W dx by quadrature.
double integrate_lnsin(double x_lo, double x_hi, const QuadratureConfig& cfg = {});
// int_X^inf ln sin W dx from the large-x expansion of ln sin W.
double lnsin_tail(double cutoff);
// Coefficients e_k of ln sin W = sum_{k>=2} e_k x^-k.
std::vector<double> lnsin_tail_coefficients(int order);

double definite_lnsin(const QuadratureConfig& cfg = {});

// int_0^a W dx with W on the principal branch, a >= 0.
double integral_w(double a, const QuadratureConfig& cfg = {});
double definite_catalan(const QuadratureConfig& cfg = {});
double catalan_closed_form();
// a pi/4 + (pi/8) ln 2 - G/2 <= int_0^a W dx, with equality at a = pi/4.
double young_lower_bound(double a);

}  // namespace wt::calculus

#endif  // WT_CALCULUS_HPP_

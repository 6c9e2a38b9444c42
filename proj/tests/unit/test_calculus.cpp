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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wt/calculus.hpp"
#include "wt/core.hpp"
#include "wt/error.hpp"

namespace wt::calculus {
namespace {

using testing::kPiRef;

double w1(double x) { return eval_real(x, BranchIndex(1)); }

TEST(Config, Validates) {
  EXPECT_THROW((QuadratureConfig{0.0}.validate()), Error);
  EXPECT_THROW((QuadratureConfig{1e-12, -1.0}.validate()), Error);
  EXPECT_THROW((QuadratureConfig{1e-12, 1e-12, 15, 0.0}.validate()), Error);
}

TEST(IndefiniteLog, Examples) {
  EXPECT_LT(check_indefinite_log(0.5, 2.0), 1e-9);
  EXPECT_EQ(check_indefinite_log(1.0, 1.0), 0.0);
  const double q = kPiRef / 4;
  EXPECT_LT(check_indefinite_log(q, q + 1e-6), 1e-15);
}

TEST(IndefiniteLog, SimpsonOracle) {
  // Independent quadrature against the closed form x ln W + ln|cos W|.
  auto f = [](double x) { return std::log(w1(x)); };
  auto F = [](double x) {
    const double y = w1(x);
    return x * std::log(y) + std::log(std::abs(std::cos(y)));
  };
  EXPECT_NEAR(testing::simpson(f, 0.5, 2.0, 400), F(2.0) - F(0.5), 1e-10);
}

TEST(IndefiniteLogSin, Examples) {
  EXPECT_LT(check_indefinite_logsin(0.5, 2.0), 1e-9);
  EXPECT_EQ(check_indefinite_logsin(3.0, 3.0), 0.0);
}

TEST(IndefiniteLogSin, ConsistentWithQuadrature) {
  auto F = [](double x) {
    const double y = w1(x);
    return x * std::log(std::sin(y)) - 0.5 * y * y;
  };
  EXPECT_NEAR(integrate_lnsin(1.0, 10.0), F(10.0) - F(1.0), 1e-11);
  EXPECT_LT(check_indefinite_logsin(1.0, 10.0), 1e-9);
  // Partial sums add up.
  EXPECT_NEAR(integrate_lnsin(0.0, 1.0) + integrate_lnsin(1.0, 10.0), integrate_lnsin(0.0, 10.0),
              1e-12);
}

TEST(DefiniteLnsin, MinusPiSquaredOverEight) {
  EXPECT_NEAR(definite_lnsin(), -kPiRef * kPiRef / 8, 1e-6);
  EXPECT_NEAR(definite_lnsin(), -1.233700, 1e-6);
}

TEST(DefiniteLnsin, IndependentOfCutoff) {
  for (double cutoff : {20.0, 50.0, 400.0}) {
    QuadratureConfig cfg;
    cfg.tail_cutoff = cutoff;
    EXPECT_NEAR(definite_lnsin(cfg), -kPiRef * kPiRef / 8, 1e-9) << cutoff;
  }
}

TEST(DefiniteLnsin, SquareRootEndpoint) {
  // ln sin W ~ (1/2) ln x near zero.
  const double x = 1e-10;
  EXPECT_NEAR(std::log(std::sin(w1(x))), 0.5 * std::log(x), 1e-9);
}

TEST(Tail, LeadingBehaviour) {
  const double t = lnsin_tail(100.0);
  // -pi^2/(8X) is the leading term; the next one shifts it by 1/X.
  EXPECT_NEAR(t, -kPiRef * kPiRef / 800, 2e-4);
  EXPECT_NEAR(-kPiRef * kPiRef / 800, -0.01234, 1e-5);
  EXPECT_NEAR(t, -kPiRef * kPiRef / 8 * (1.0 / 100 - 1.0 / (100.0 * 100)), 1e-5);
  EXPECT_THROW(lnsin_tail(5.0), Error);
}

TEST(Tail, CoefficientsMatchDirectExpansion) {
  const auto e = lnsin_tail_coefficients(4);
  ASSERT_GE(e.size(), 5u);
  EXPECT_EQ(e[0], 0.0);
  EXPECT_EQ(e[1], 0.0);
  // -pi^2/8 x^-2 (1 - 2/x + ...)
  EXPECT_NEAR(e[2], -kPiRef * kPiRef / 8, 1e-14);
  EXPECT_NEAR(e[3], kPiRef * kPiRef / 4, 1e-14);
}

TEST(Tail, MatchesSimpsonOnFiniteStretch) {
  // int_100^1e4 by Simpson in t = 1/x plus the series tail beyond 1e4.
  auto g = [](double t) { return std::log(std::sin(w1(1.0 / t))) / (t * t); };
  const double body = testing::simpson(g, 1e-4, 1e-2, 2000);
  EXPECT_NEAR(body + lnsin_tail(1e4), lnsin_tail(100.0), 1e-10);
}

TEST(Catalan, ClosedFormAndNumeric) {
  const double g = 0.915965594177219015;
  const double closed = kPiRef * kPiRef / 16 + kPiRef / 8 * std::log(2.0) - g / 2;
  EXPECT_NEAR(catalan_closed_form(), closed, 1e-15);
  EXPECT_NEAR(definite_catalan(), closed, 1e-6);
  EXPECT_NEAR(definite_catalan(), 0.431065, 1e-6);
}

TEST(Catalan, SimpsonOracle) {
  // Simpson in s = sqrt(x) removes the square-root endpoint.
  auto f = [](double s) { return s == 0.0 ? 0.0 : 2 * s * w1(s * s); };
  EXPECT_NEAR(testing::simpson(f, 0.0, std::sqrt(kPiRef / 4), 2000), definite_catalan(), 1e-10);
}

TEST(Young, BoundAndEquality) {
  EXPECT_NEAR(integral_w(kPiRef / 4), young_lower_bound(kPiRef / 4), 1e-8);
  EXPECT_GE(integral_w(0.5), young_lower_bound(0.5));
  EXPECT_NEAR(young_lower_bound(0.5),
              0.5 * kPiRef / 4 + kPiRef / 8 * std::log(2.0) - 0.915965594177219015 / 2, 1e-15);
}

// ---- properties ----

TEST(CalculusProperties, SubstitutionIdentity) {
  EXPECT_LT(check_substitution_square(0.5, 2.0), 1e-9);
  // Independent evaluation of both sides.
  const double y1 = w1(0.5);
  const double y2 = w1(2.0);
  const double lhs = testing::simpson([](double x) { return std::pow(w1(x), 2); }, 0.5, 2.0, 400);
  const double rhs = 2.0 * y2 * y2 - 0.5 * y1 * y1 -
                     testing::simpson([](double y) { return 2 * y * y * std::tan(y); }, y1, y2, 400);
  EXPECT_NEAR(lhs, rhs, 1e-9);
}

TEST(CalculusProperties, YoungGapPositiveBelowQuarterPi) {
  for (int i = 1; i < 20; ++i) {
    const double a = kPiRef / 4 * i / 20;
    EXPECT_GT(integral_w(a) - young_lower_bound(a), 0.0) << a;
  }
  EXPECT_LT(std::abs(integral_w(kPiRef / 4) - young_lower_bound(kPiRef / 4)), 1e-8);
}

TEST(CalculusProperties, ResidualsTrackRequestedTolerance) {
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    QuadratureConfig cfg{tol, tol};
    EXPECT_LT(check_indefinite_log(0.5, 2.0, cfg), tol);
    EXPECT_LT(check_indefinite_logsin(0.5, 2.0, cfg), tol);
    EXPECT_LT(check_substitution_square(0.5, 2.0, cfg), tol);
  }
}

}  // namespace
}  // namespace wt::calculus

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
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wt/chebyshev.hpp"
#include "wt/core.hpp"
#include "wt/error.hpp"

namespace wt::cheb {
namespace {

using testing::kPiRef;

// Published coefficients for a = 3.5, rounded to eight decimals.
const double kAlpha[15] = {0.80600536,  -0.16766125, 0.02302848,  -0.00298934, 0.00030980,
                           -0.00001275, -0.00000478, 0.00000178,  -0.00000038, 0.00000006,
                           -0.00000001, 0.0,         0.0,         0.0,         0.0};
const double kBeta[15] = {1.03465858,  -0.28291110, 0.03258714,  0.00177957,  -0.00206359,
                          0.00044900,  0.00002021,  -0.00004188, 0.00001127,  0.00000018,
                          -0.00000111, 0.00000035,  -0.00000001, -0.00000003, 0.00000001};
const double kGamma[15] = {0.82312766,  0.16771494,  0.01423939,  -0.00442520, -0.00095545,
                           0.00024196,  0.00007926,  -0.00001706, -0.00000743, 0.00000136,
                           0.00000075,  -0.00000012, -0.00000008, 0.00000001,  0.00000001};

const ChebyshevModel& model() {
  static const ChebyshevModel m = fit(3.5, 15);
  return m;
}

double w1(double x) { return eval_real(x, BranchIndex(1)); }

TEST(Fit, ReproducesPublishedTable) {
  ASSERT_EQ(model().alpha.size(), 15u);
  for (int k = 0; k < 15; ++k) {
    EXPECT_NEAR(model().alpha[k], kAlpha[k], 5e-8) << "alpha " << k;
    EXPECT_NEAR(model().beta[k], kBeta[k], 5e-8) << "beta " << k;
    EXPECT_NEAR(model().gamma[k], kGamma[k], 5e-8) << "gamma " << k;
  }
}

TEST(Fit, TrailingAlphaBelowPrintedResolution) {
  for (int k = 11; k <= 14; ++k) EXPECT_LT(std::abs(model().alpha[k]), 5e-9) << k;
}

TEST(Fit, LowOrderAgreesWithinTruncation) {
  const auto small = fit(3.5, 5);
  for (auto r : {Region::kSmall, Region::kLarge, Region::kNegative}) {
    const double est = std::abs(small.coefficients(r)[4]);
    EXPECT_EQ(small.truncation_estimate(r), est);
    for (int k = 0; k < 4; ++k) {
      EXPECT_LE(std::abs(small.coefficients(r)[k] - model().coefficients(r)[k]), 2 * est)
          << static_cast<int>(r) << " k=" << k;
    }
  }
}

TEST(Fit, ValidatesArguments) {
  EXPECT_THROW(fit(0.0, 15), Error);
  EXPECT_THROW(fit(3.5, 3), Error);
}

TEST(Regions, MapIntoUnitInterval) {
  const double a = 3.5;
  EXPECT_EQ(region_of(1.0, a), Region::kSmall);
  EXPECT_EQ(region_of(10.0, a), Region::kLarge);
  EXPECT_EQ(region_of(-10.0, a), Region::kLarge);
  EXPECT_EQ(region_of(-1.0, a), Region::kNegative);
  EXPECT_DOUBLE_EQ(region_argument(0.0, a), -1.0);
  EXPECT_DOUBLE_EQ(region_argument(a / 2, a), 0.0);
  EXPECT_DOUBLE_EQ(region_argument(7.0, a), 0.5);
  EXPECT_DOUBLE_EQ(region_argument(-7.0, a), -0.5);
  EXPECT_DOUBLE_EQ(region_argument(-a, a), -1.0);
}

TEST(Clenshaw, MatchesDirectSum) {
  const std::vector<double> c = {0.5, -0.25, 0.125, 0.3};
  for (double t : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    double direct = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) direct += c[k] * std::cos(k * std::acos(t));
    EXPECT_NEAR(clenshaw(c, t), direct, 1e-15);
  }
}

TEST(EvalCheb, Examples) {
  EXPECT_NEAR(eval_cheb(kPiRef / 4, model()), kPiRef / 4, 1e-7);
  EXPECT_NEAR(eval_cheb(-1.0, model()), testing::w_bisect(-1.0, 1), 1e-7);
  EXPECT_NEAR(eval_cheb(-1.0, model()), 2.79839, 1e-5);
}

TEST(EvalCheb, LargeArgument) {
  // W(1e6) lies 1.6e-6 below pi/2, so compare with its leading correction.
  const double x = 1e6;
  EXPECT_NEAR(eval_cheb(x, model()), kPiRef / 2 * (1 - 1 / x), 1e-7);
  EXPECT_LT(kPiRef / 2 - eval_cheb(x, model()), 2e-6);
}

TEST(EvalCheb, EdgeInputs) {
  EXPECT_TRUE(std::isnan(eval_cheb(std::numeric_limits<double>::quiet_NaN(), model())));
  EXPECT_EQ(eval_cheb(0.0, model()), 0.0);
  // -0 selects the negative region and its limit pi.
  EXPECT_NEAR(eval_cheb(-0.0, model()), kPiRef, 1e-7);
}

// ---- properties ----

TEST(ChebProperties, AccurateAcrossAllRegions) {
  testing::Rng rng(testing::kSeed);
  for (int i = 0; i < 3000; ++i) {
    double x;
    switch (i % 3) {
      case 0: x = testing::uniform(rng, 1e-9, 3.5); break;
      case 1: x = (i % 2 ? 1 : -1) * std::pow(10.0, testing::uniform(rng, std::log10(3.5), 8)); break;
      default: x = -testing::uniform(rng, 1e-9, 3.5); break;
    }
    ASSERT_LT(std::abs(eval_cheb(x, model()) - w1(x)), 1e-7) << x;
  }
}

TEST(ChebProperties, ContinuousAtSplit) {
  const double a = model().split_a;
  const double est = model().truncation_estimate(Region::kSmall) +
                     model().truncation_estimate(Region::kLarge);
  const double below = std::nextafter(a, 0.0);
  const double above = std::nextafter(a, 10.0);
  EXPECT_LT(std::abs(eval_cheb(below, model()) - eval_cheb(above, model())), 2 * est);
  const double nest = model().truncation_estimate(Region::kNegative) +
                      model().truncation_estimate(Region::kLarge);
  EXPECT_LT(std::abs(eval_cheb(-std::nextafter(a, 0.0), model()) -
                     eval_cheb(-std::nextafter(a, 10.0), model())),
            2 * nest);
}

double max_grid_error(Region r) {
  const double a = model().split_a;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double t = -1.0 + 2.0 * (i + 0.5) / 10000;
    double x;
    switch (r) {
      case Region::kSmall: x = 0.5 * a * (t + 1); break;
      case Region::kLarge: x = a / t; break;
      default: x = 0.5 * a * (t - 1); break;
    }
    if (x == 0.0) continue;
    worst = std::max(worst, std::abs(eval_cheb(x, model()) - w1(x)));
  }
  return worst;
}

TEST(ChebProperties, ErrorWithinTenTimesLastCoefficient) {
  for (auto r : {Region::kSmall, Region::kLarge, Region::kNegative}) {
    // Errors are measured on the prefactor-reduced function the coefficients
    // represent: W/sqrt(x), 2W/pi and W/pi.
    const double a = model().split_a;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double t = -1.0 + 2.0 * (i + 0.5) / 10000;
      double x, scale;
      switch (r) {
        case Region::kSmall: x = 0.5 * a * (t + 1); scale = std::sqrt(x); break;
        case Region::kLarge: x = a / t; scale = kPiRef / 2; break;
        default: x = 0.5 * a * (t - 1); scale = kPiRef; break;
      }
      worst = std::max(worst, std::abs(eval_cheb(x, model()) - w1(x)) / scale);
    }
    EXPECT_LE(worst, 10 * model().truncation_estimate(r)) << static_cast<int>(r);
    EXPECT_LE(max_grid_error(r), 10 * model().truncation_estimate(r)) << "absolute";
  }
}

TEST(ChebProperties, CoefficientEnvelopeDecays) {
  // Individual coefficients oscillate (beta_4 > beta_3 in magnitude), but the
  // running maximum over the tail shrinks block by block.
  for (auto r : {Region::kSmall, Region::kLarge, Region::kNegative}) {
    const auto& c = model().coefficients(r);
    auto tail_max = [&](int from) {
      double m = 0.0;
      for (std::size_t k = from; k < c.size(); ++k) m = std::max(m, std::abs(c[k]));
      return m;
    };
    for (int k = 3; k + 3 < static_cast<int>(c.size()); k += 3) {
      EXPECT_LT(tail_max(k + 3), tail_max(k)) << static_cast<int>(r) << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace wt::cheb

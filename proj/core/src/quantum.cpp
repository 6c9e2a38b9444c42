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


#include "wt/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wt::quantum {

void WellModel::validate() const {
  if (!(width_a > 0.0) || !std::isfinite(width_a)) {
    throw Error(ErrorCode::kInvalidArgument, "well width must be positive");
  }
  if (!std::isfinite(lambda)) throw Error(ErrorCode::kNonFiniteArgument, "lambda must be finite");
  if (!(hbar2_over_2m > 0.0) || !std::isfinite(hbar2_over_2m)) {
    throw Error(ErrorCode::kInvalidArgument, "hbar^2/2m must be positive");
  }
}

namespace {

// k a / 2 of the n-th even state.
double even_half_phase(const WellModel& model, int n) {
  if (model.lambda == 0.0) return (n - 0.5) * kPi;
  return eval_real(model.width_a / model.lambda, BranchIndex(n));
}

}  // namespace

double even_wavenumber(const WellModel& model, int n) {
  model.validate();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "even level index must be >= 1");
  return 2.0 * even_half_phase(model, n) / model.width_a;
}

std::vector<SpectrumEntry> spectrum(const WellModel& model, int count) {
  model.validate();
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  std::vector<SpectrumEntry> states;
  states.reserve(2 * count);
  for (int n = 1; n <= count; ++n) {
    SpectrumEntry e;
    e.parity = Parity::kEven;
    e.half_phase = even_half_phase(model, n);
    e.k = 2.0 * e.half_phase / model.width_a;
    e.branch = BranchIndex(n);
    states.push_back(e);
  }
  for (int m = 1; m <= count; ++m) {
    SpectrumEntry e;
    e.parity = Parity::kOdd;
    e.odd_index = m;
    e.half_phase = m * kPi;
    e.k = 2.0 * m * kPi / model.width_a;
    states.push_back(e);
  }
  // Ties (possible only in the lambda -> -infinity limit) keep even first.
  std::stable_sort(states.begin(), states.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.k < b.k; });
  states.resize(count);
  for (int i = 0; i < count; ++i) {
    states[i].level = i + 1;
    states[i].energy = model.hbar2_over_2m * states[i].k * states[i].k;
  }
  return states;
}

double Wavefunction::operator()(double xi) const {
  if (xi < 0.0 || xi > width_a) return 0.0;
  if (xi < 0.5 * width_a) return amplitude_1 * std::sin(k * xi);
  if (xi > 0.5 * width_a) return amplitude_2 * std::sin(k * (width_a - xi));
  return amplitude_1 * sin_half;
}

double generalized_norm(const WellModel& model, const Wavefunction& psi) {
  // Both halves carry the same |amplitude|.
  const double a = psi.width_a;
  const double k = psi.k;
  const double integral = 0.5 * a - 2.0 * psi.sin_half * psi.cos_half / (2.0 * k);
  return psi.amplitude_1 * psi.amplitude_1 *
         (integral + model.lambda * psi.sin_half * psi.sin_half);
}

Wavefunction wavefunction(const WellModel& model, const SpectrumEntry& entry) {
  model.validate();
  if (!(entry.k > 0.0)) throw Error(ErrorCode::kInvalidArgument, "entry has no positive wavenumber");
  Wavefunction psi;
  psi.k = entry.k;
  psi.width_a = model.width_a;
  if (entry.parity == Parity::kOdd) {
    psi.sin_half = 0.0;
    psi.cos_half = entry.odd_index % 2 == 0 ? 1.0 : -1.0;
  } else {
    psi.sin_half = std::sin(entry.half_phase);
    psi.cos_half = std::cos(entry.half_phase);
    // Near a multiple of pi, sin of the rounded phase keeps few digits of the
    // small offset. tan(ka/2) = (a/lambda) / (ka/2) carries it exactly.
    const double t = model.width_a / model.lambda / entry.half_phase;
    if (model.lambda != 0.0 && std::isfinite(t)) {
      psi.cos_half = std::copysign(1.0, psi.cos_half) / std::hypot(1.0, t);
      psi.sin_half = t * psi.cos_half;
    }
  }
  if (std::abs(psi.sin_half) < 1e-300 && std::abs(psi.cos_half) < 1e-300) {
    throw Error(ErrorCode::kDegenerateState, "sin(ka/2) and cos(ka/2) both vanish");
  }
  psi.amplitude_1 = 1.0;
  psi.amplitude_2 = entry.parity == Parity::kOdd ? -1.0 : 1.0;
  const double norm = generalized_norm(model, psi);
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::kNonPositiveNorm, "generalized norm is not positive");
  }
  const double scale = 1.0 / std::sqrt(norm);
  psi.amplitude_1 *= scale;
  psi.amplitude_2 *= scale;
  return psi;
}

double jump_residual(const WellModel& model, const Wavefunction& psi) {
  const double k = psi.k;
  return std::abs((psi.amplitude_2 + psi.amplitude_1) * k * psi.cos_half -
                  k * k * model.lambda * psi.amplitude_1 * psi.sin_half);
}

double continuity_residual(const Wavefunction& psi) {
  return std::abs((psi.amplitude_1 - psi.amplitude_2) * psi.sin_half);
}

double variational_bound_1(double x) {
  if (std::isnan(x)) throw Error(ErrorCode::kNonFiniteArgument, "x is NaN");
  if (std::isinf(x)) return 0.5 * kPi;
  if (x == 0.0) return 0.0;
  if (x < 0.0 && x >= -2.0) {
    throw Error(ErrorCode::kDomainViolation, "bound requires 1/x > -1/2");
  }
  return 0.5 * kPi * std::sqrt(x / (x + 2.0));
}

double variational_bound_2(double x) {
  if (std::isnan(x)) throw Error(ErrorCode::kNonFiniteArgument, "x is NaN");
  if (std::isinf(x)) return 0.5 * kPi;
  if (x == 0.0 && !std::signbit(x)) return 0.0;
  const double root = std::sqrt(25.0 + x * (16.0 + 4.0 * x));
  double ratio;
  if (x > 0.0) {
    ratio = x / (5.0 * x + 10.0 + 2.0 * root);
  } else {
    // Rationalized to avoid the cancellation in 5x + 10 - 2 sqrt(...).
    ratio = (5.0 * x + 10.0 + 2.0 * root) / (9.0 * (x + 4.0));
  }
  return 1.5 * kPi * std::sqrt(ratio);
}

double rayleigh_quotient(double x, double b) {
  if (!std::isfinite(x) || !std::isfinite(b)) {
    throw Error(ErrorCode::kNonFiniteArgument, "arguments must be finite");
  }
  if (x == 0.0) throw Error(ErrorCode::kDomainViolation, "x = 0 has no finite coupling");
  const double norm = (1.0 + b * b) + (2.0 / x) * (1.0 - b) * (1.0 - b);
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::kNonPositiveNorm, "generalized norm of the trial function is not positive");
  }
  return 0.25 * kPi * kPi * (1.0 + 9.0 * b * b) / norm;
}

}  // namespace wt::quantum

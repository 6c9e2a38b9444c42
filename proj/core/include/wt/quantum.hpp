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


// Infinite square well of width a with an energy-dependent delta interaction
// -lambda E delta(xi - a/2). Even states obey (ka/2) tan(ka/2) = a/lambda, so
// their wavenumbers are k_n = (2/a) W^(n)(a/lambda); odd states vanish at the
// delta and keep k = 2 m pi / a.
//
// The variational bounds come from the generalized eigenproblem
// H0 psi = E N psi with N = 1 + lambda delta, using the trial functions
// sin(xi) and sin(xi) + b sin(3 xi) on a well of width pi.

#ifndef WT_QUANTUM_HPP_
#define WT_QUANTUM_HPP_

#include <optional>
#include <vector>

#include "wt/core.hpp"

namespace wt::quantum {

struct WellModel {
  double width_a = 1.0;
  double lambda = 0.0;
  double hbar2_over_2m = 1.0;

  void validate() const;
};

enum class Parity { kEven, kOdd };

struct SpectrumEntry {
  int level = 0;  // 1-based position in the energy ordering
  Parity parity = Parity::kEven;
  double k = 0.0;
  double energy = 0.0;
  std::optional<BranchIndex> branch;  // even states only
  int odd_index = 0;                  // m for odd states
  double half_phase = 0.0;            // k a / 2
};

// Lowest `count` states sorted by energy. lambda = 0 gives the unperturbed
// well, k = n pi / a.
std::vector<SpectrumEntry> spectrum(const WellModel& model, int count);

// Wavenumber of the n-th even state.
double even_wavenumber(const WellModel& model, int n);

struct Wavefunction {
  double amplitude_1 = 0.0;  // A_I on [0, a/2)
  double amplitude_2 = 0.0;  // A_II on (a/2, a]
  double k = 0.0;
  double width_a = 1.0;
  // sin and cos of k a / 2, exact for odd states.
  double sin_half = 0.0;
  double cos_half = 1.0;

  double operator()(double xi) const;
};

// Amplitudes normalized with the generalized norm <psi|1 + lambda delta|psi>.
Wavefunction wavefunction(const WellModel& model, const SpectrumEntry& entry);

// |(A_II + A_I) k cos(ka/2) - k^2 lambda A_I sin(ka/2)|: derivative jump at
// the delta.
double jump_residual(const WellModel& model, const Wavefunction& psi);
// |A_I sin(ka/2) - A_II sin(ka/2)|: continuity at the delta.
double continuity_residual(const Wavefunction& psi);
// A^2 [a/2 - sin(ka)/(2k) + lambda sin^2(ka/2)] for the stored amplitudes.
double generalized_norm(const WellModel& model, const Wavefunction& psi);

// (pi/2) sqrt(x / (x + 2)); valid for 1/x > -1/2.
double variational_bound_1(double x);
// (3 pi/2) sqrt(x / (5x + 10 + 2 sgn(x) sqrt(25 + 16x + 4x^2))).
double variational_bound_2(double x);
// (pi^2/4) (1 + 9b^2) / [(1 + b^2) + (2/x)(1 - b)^2]; an upper bound on W^2.
double rayleigh_quotient(double x, double b);

}  // namespace wt::quantum

#endif  // WT_QUANTUM_HPP_

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

#ifndef WT_ERROR_HPP_
#define WT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wt {

enum class ErrorCode {
  // Argument / domain problems. The CLI maps these to exit code 2.
  kNonFiniteArgument,
  kInvalidBranch,
  kInvalidArgument,
  kSignedZeroRequired,
  kAtBranchPoint,
  kBranchPointProximity,
  kOnCut,
  kNotOnCut,
  kOutOfCutRange,
  kOutsideConvergence,
  kTruncationTooSmall,
  kDomainViolation,
  kNonPositiveNorm,
  kSheetOutOfRange,
  // Numerical failures. Exit code 1.
  kNoConvergence,
  kPoleProximity,
  kStepTooLarge,
  kContinuationFailure,
  kQuadratureFailure,
  kPrecisionExhausted,
  kFitDiverged,
  kSamplingFailure,
  kBracketFailure,
  kDegenerateState,
};

std::string_view to_string(ErrorCode code);

// True for errors caused by the caller's input rather than a numerical
// breakdown inside the library.
bool is_domain_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wt

#endif  // WT_ERROR_HPP_

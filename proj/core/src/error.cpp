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

#include "wt/error.hpp"

namespace wt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFiniteArgument: return "NonFiniteArgument";
    case ErrorCode::kInvalidBranch: return "InvalidBranch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSignedZeroRequired: return "SignedZeroRequired";
    case ErrorCode::kAtBranchPoint: return "AtBranchPoint";
    case ErrorCode::kBranchPointProximity: return "BranchPointProximity";
    case ErrorCode::kOnCut: return "OnCut";
    case ErrorCode::kNotOnCut: return "NotOnCut";
    case ErrorCode::kOutOfCutRange: return "OutOfCutRange";
    case ErrorCode::kOutsideConvergence: return "OutsideConvergence";
    case ErrorCode::kTruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::kDomainViolation: return "DomainViolation";
    case ErrorCode::kNonPositiveNorm: return "NonPositiveNorm";
    case ErrorCode::kSheetOutOfRange: return "SheetOutOfRange";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kPoleProximity: return "PoleProximity";
    case ErrorCode::kStepTooLarge: return "StepTooLarge";
    case ErrorCode::kContinuationFailure: return "ContinuationFailure";
    case ErrorCode::kQuadratureFailure: return "QuadratureFailure";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kFitDiverged: return "FitDiverged";
    case ErrorCode::kSamplingFailure: return "SamplingFailure";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kDegenerateState: return "DegenerateState";
  }
  return "Unknown";
}

bool is_domain_error(ErrorCode code) {
  return code < ErrorCode::kNoConvergence;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace wt

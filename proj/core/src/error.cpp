// Copyright 2026 The Skipless Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skipless/error.hpp"

namespace skipless {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameterOutOfRange: return "parameter_out_of_range";
    case ErrorCode::kReduciblePolynomial: return "reducible_polynomial";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kCoefficientSearchExhausted: return "coefficient_search_exhausted";
    case ErrorCode::kUnsupportedFailure: return "unsupported_failure";
    case ErrorCode::kEliminationFailed: return "elimination_failed";
    case ErrorCode::kTooManySubsets: return "too_many_subsets";
    case ErrorCode::kNotAnSqs: return "not_an_sqs";
    case ErrorCode::kDuplicateBlock: return "duplicate_block";
    case ErrorCode::kUnsupportedOrder: return "unsupported_order";
    case ErrorCode::kTooManyTriples: return "too_many_triples";
    case ErrorCode::kInfinityInBlock: return "infinity_in_block";
    case ErrorCode::kNoZeroSkipPlan: return "no_zero_skip_plan";
    case ErrorCode::kBlockSizeMismatch: return "block_size_mismatch";
    case ErrorCode::kEmptyRead: return "empty_read";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kNotIncreasing: return "not_increasing";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kDataUnavailable: return "data_unavailable";
  }
  return "unknown";
}

}  // namespace skipless

// Copyright 2026 The entangle Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entangle {

enum class ErrorCode {
  not_normalized,
  non_finite,
  bad_shape,
  bad_partition,
  incompatible_params,
  alpha_out_of_range,
  wrong_party_count,
  internal_numerical_error,
  eigen_failure,
  closed_form_mismatch,
  dim_mismatch,
  degenerate_alpha,
  degenerate_roots,
  shape_mismatch,
  invalid_argument,
  io_error,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::non_finite: return "NonFinite";
    case ErrorCode::bad_shape: return "BadShape";
    case ErrorCode::bad_partition: return "BadPartition";
    case ErrorCode::incompatible_params: return "IncompatibleParams";
    case ErrorCode::alpha_out_of_range: return "AlphaOutOfRange";
    case ErrorCode::wrong_party_count: return "WrongPartyCount";
    case ErrorCode::internal_numerical_error: return "InternalNumericalError";
    case ErrorCode::eigen_failure: return "EigenFailure";
    case ErrorCode::closed_form_mismatch: return "ClosedFormMismatch";
    case ErrorCode::dim_mismatch: return "DimMismatch";
    case ErrorCode::degenerate_alpha: return "DegenerateAlpha";
    case ErrorCode::degenerate_roots: return "DegenerateRoots";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace entangle

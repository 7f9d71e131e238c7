// Copyright 2026 The cvforge Authors
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

#include "common/error.hpp"

namespace cvforge {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::truncation_risk: return "truncation-risk";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::zero_probability: return "zero-probability-outcome";
    case ErrorCode::lifecycle: return "lifecycle";
    case ErrorCode::config: return "config";
    case ErrorCode::compatibility: return "compatibility";
    case ErrorCode::io: return "io";
    case ErrorCode::numeric: return "numeric";
  }
  return "unknown";
}

}  // namespace cvforge

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

#ifndef CVFORGE_COMMON_ERROR_HPP_
#define CVFORGE_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cvforge {

enum class ErrorCode {
  invalid_dimension,
  invalid_parameter,
  truncation_risk,
  dimension_mismatch,
  zero_probability,
  lifecycle,
  config,
  compatibility,
  io,
  numeric,
};

const char *error_code_name(ErrorCode code);

// All library failures surface as this type; the C API maps `code` onto
// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string &message) {
  if (!cond) fail(code, message);
}

}  // namespace cvforge

#endif  // CVFORGE_COMMON_ERROR_HPP_

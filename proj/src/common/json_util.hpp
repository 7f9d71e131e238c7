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

#ifndef CVFORGE_COMMON_JSON_UTIL_HPP_
#define CVFORGE_COMMON_JSON_UTIL_HPP_

#include <string>

#include "json.hpp"

#include "common/error.hpp"

namespace cvforge {

// Parses JSON, reporting syntax errors as ErrorCode::io with 1-based
// line and column.
nlohmann::json parse_json_or_throw(const std::string &text, const std::string &what);

}  // namespace cvforge

#endif  // CVFORGE_COMMON_JSON_UTIL_HPP_

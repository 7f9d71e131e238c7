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

#ifndef CVFORGE_COMMON_FILES_HPP_
#define CVFORGE_COMMON_FILES_HPP_

#include <filesystem>
#include <string>

namespace cvforge {

std::string read_text_file(const std::filesystem::path &path);
// Writes via a temporary sibling and renames, so readers never see partial files.
void write_text_file(const std::filesystem::path &path, const std::string &content);

}  // namespace cvforge

#endif  // CVFORGE_COMMON_FILES_HPP_

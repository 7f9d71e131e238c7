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

#ifndef CVFORGE_APP_PNG_HPP_
#define CVFORGE_APP_PNG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fock/wigner.hpp"

namespace cvforge::app {

// 8-bit RGB, rows top to bottom.
std::string encode_png(int width, int height, const std::vector<std::uint8_t> &rgb);

// Diverging map centered on W = 0: blue negative, white zero, red positive.
// q runs left to right and p bottom to top; each grid point becomes a
// scale x scale block.
std::string render_wigner_png(const fock::WignerGrid &grid, int scale = 4);

}  // namespace cvforge::app

#endif  // CVFORGE_APP_PNG_HPP_

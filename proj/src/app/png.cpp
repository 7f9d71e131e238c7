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

#include "app/png.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace cvforge::app {
namespace {

void put_u32(std::string &out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out += static_cast<char>((v >> shift) & 0xff);
}

void put_chunk(std::string &out, const char *type, const std::string &data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::string body = std::string(type, 4) + data;
  out += body;
  put_u32(out, static_cast<std::uint32_t>(
                   crc32(0L, reinterpret_cast<const Bytef *>(body.data()), static_cast<uInt>(body.size()))));
}

}  // namespace

std::string encode_png(int width, int height, const std::vector<std::uint8_t> &rgb) {
  require(width > 0 && height > 0, ErrorCode::invalid_parameter, "image must be non-empty");
  require(rgb.size() == static_cast<std::size_t>(width) * height * 3, ErrorCode::invalid_parameter,
          "pixel buffer does not match image size");
  std::string raw;
  raw.reserve(static_cast<std::size_t>(height) * (1 + 3 * width));
  for (int y = 0; y < height; ++y) {
    raw += '\0';  // filter: none
    raw.append(reinterpret_cast<const char *>(rgb.data()) + static_cast<std::size_t>(y) * width * 3,
               static_cast<std::size_t>(width) * 3);
  }
  uLongf packed_size = compressBound(static_cast<uLong>(raw.size()));
  std::string packed(packed_size, '\0');
  const int rc = compress2(reinterpret_cast<Bytef *>(packed.data()), &packed_size,
                           reinterpret_cast<const Bytef *>(raw.data()),
                           static_cast<uLong>(raw.size()), Z_BEST_COMPRESSION);
  require(rc == Z_OK, ErrorCode::io, "zlib compression failed");
  packed.resize(packed_size);

  std::string ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(width));
  put_u32(ihdr, static_cast<std::uint32_t>(height));
  ihdr += std::string("\x08\x02\x00\x00\x00", 5);  // depth 8, truecolor

  std::string out("\x89PNG\r\n\x1a\n", 8);
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", packed);
  put_chunk(out, "IEND", {});
  return out;
}

std::string render_wigner_png(const fock::WignerGrid &grid, int scale) {
  require(scale >= 1, ErrorCode::invalid_parameter, "scale must be positive");
  const int nq = static_cast<int>(grid.q_axis.size());
  const int np = static_cast<int>(grid.p_axis.size());
  const double peak = std::max(grid.values.cwiseAbs().maxCoeff(), 1e-300);
  const int w = nq * scale, h = np * scale;
  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y) {
    const int ip = np - 1 - y / scale;
    for (int x = 0; x < w; ++x) {
      const double t = std::clamp(grid.values(x / scale, ip) / peak, -1.0, 1.0);
      const auto fade = static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - std::abs(t))));
      std::uint8_t *px = &rgb[(static_cast<std::size_t>(y) * w + x) * 3];
      px[0] = t < 0 ? fade : 255;
      px[1] = fade;
      px[2] = t > 0 ? fade : 255;
    }
  }
  return encode_png(w, h, rgb);
}

}  // namespace cvforge::app

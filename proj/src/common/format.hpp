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

#ifndef CVFORGE_COMMON_FORMAT_HPP_
#define CVFORGE_COMMON_FORMAT_HPP_

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cvforge {

// Shortest round-trip decimal form; identical bits give identical text.
inline std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Minimal RFC-4180 writer: fields containing separators or quotes are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    row(header);
  }

  void row(const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      append_field(fields[i]);
    }
    out_ += "\r\n";
  }

  // One formatted record, for streaming writers.
  static std::string line(const std::vector<std::string> &fields) {
    CsvWriter w;
    w.row(fields);
    return w.out_;
  }

  std::size_t columns() const { return columns_; }
  const std::string &str() const { return out_; }

 private:
  void append_field(std::string_view f) {
    if (f.find_first_of(",\"\r\n") == std::string_view::npos) {
      out_ += f;
      return;
    }
    out_ += '"';
    for (char c : f) {
      if (c == '"') out_ += '"';
      out_ += c;
    }
    out_ += '"';
  }

  CsvWriter() = default;

  std::size_t columns_ = 0;
  std::string out_;
};

// 64-bit FNV-1a, used for config fingerprints.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace cvforge

#endif  // CVFORGE_COMMON_FORMAT_HPP_

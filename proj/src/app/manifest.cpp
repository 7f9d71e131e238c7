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

#include "app/manifest.hpp"

#include <ctime>

#include "common/error.hpp"
#include "common/files.hpp"
#include "common/json_util.hpp"

#ifndef CVFORGE_VERSION
#define CVFORGE_VERSION "0.0.0"
#endif

namespace cvforge::app {

nlohmann::json RunManifest::to_json() const {
  return {{"command", command},     {"config", config},
          {"seeds", seeds},         {"config_hash", config_hash},
          {"code_version", code_version}, {"started_at", started_at},
          {"finished_at", finished_at},   {"artifacts", artifacts},
          {"extra", extra}};
}

RunManifest RunManifest::from_json(const nlohmann::json &j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.config = j.at("config");
    m.seeds = j.at("seeds");
    m.config_hash = j.at("config_hash").get<std::string>();
    m.code_version = j.at("code_version").get<std::string>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    m.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    m.extra = j.value("extra", nlohmann::json::object());
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::io, std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string code_version() { return CVFORGE_VERSION; }

void write_manifest(const std::filesystem::path &dir, const RunManifest &m) {
  write_text_file(dir / kManifestName, m.to_json().dump(2) + "\n");
}

RunManifest read_manifest(const std::filesystem::path &dir) {
  return RunManifest::from_json(parse_json_or_throw(read_text_file(dir / kManifestName), "manifest"));
}

}  // namespace cvforge::app

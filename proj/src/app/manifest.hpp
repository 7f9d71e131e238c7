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

#ifndef CVFORGE_APP_MANIFEST_HPP_
#define CVFORGE_APP_MANIFEST_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace cvforge::app {

// One per run directory. Everything but the timestamps is a function of the
// inputs, so two manifests with equal config and seeds describe equal outputs.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  nlohmann::json seeds = nlohmann::json::object();
  std::string config_hash;
  std::string code_version;
  std::string started_at;
  std::string finished_at;
  std::vector<std::string> artifacts;  // relative to the run directory
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json &j);
};

inline constexpr const char *kManifestName = "manifest.json";

std::string utc_timestamp();
std::string code_version();

void write_manifest(const std::filesystem::path &dir, const RunManifest &m);
RunManifest read_manifest(const std::filesystem::path &dir);

}  // namespace cvforge::app

#endif  // CVFORGE_APP_MANIFEST_HPP_

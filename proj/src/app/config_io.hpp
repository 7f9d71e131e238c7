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

#ifndef CVFORGE_APP_CONFIG_IO_HPP_
#define CVFORGE_APP_CONFIG_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "ppo/training.hpp"
#include "quartic/quartic_lab.hpp"

namespace cvforge::app {

using nlohmann::json;

// Training and evaluation share one file: every field is required and
// unknown keys are rejected, so a config fully pins a run.
struct RunConfig {
  ppo::TrainConfig train;
  ppo::EvalConfig eval;
};

struct QuarticRun {
  quartic::QuarticConfig scan;
  std::vector<double> phi2_sweep{-0.1, -0.2, -0.3};
};

RunConfig run_config_from_json(const json &j);
json to_json(const RunConfig &cfg);
RunConfig load_run_config(const std::filesystem::path &path);

QuarticRun quartic_run_from_json(const json &j);
json to_json(const QuarticRun &cfg);
QuarticRun load_quartic_run(const std::filesystem::path &path);

// Hash over everything that shapes a training trajectory. The horizon and
// checkpoint period are left out so a run can be extended on resume.
std::string training_hash(const RunConfig &cfg);

}  // namespace cvforge::app

#endif  // CVFORGE_APP_CONFIG_IO_HPP_

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

#ifndef CVFORGE_APP_COMMANDS_HPP_
#define CVFORGE_APP_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "common/error.hpp"

namespace cvforge::app {

namespace fs = std::filesystem;

// Process exit status for an error category: 2 config, 3 compatibility,
// 4 I/O, 1 anything else.
int exit_code(ErrorCode code);

using ProgressSink = std::function<void(const std::string &)>;

struct TrainArgs {
  fs::path config;
  fs::path out;
  std::optional<std::uint64_t> seed;
  std::optional<fs::path> resume;  // checkpoint file
  std::optional<int> dim;
  std::optional<double> eta;
  ProgressSink progress;
};

struct TrainSummary {
  long updates = 0;
  long num_timesteps = 0;
  long episodes = 0;
  fs::path last_checkpoint;
};

// Writes training_log.csv, episodes.csv, checkpoints/ and manifest.json
// under args.out. On resume the logs are appended to and the manifest is
// rewritten with the resume source recorded.
TrainSummary cmd_train(const TrainArgs &args);

struct EvaluateArgs {
  fs::path checkpoint;
  fs::path config;
  fs::path out;
  std::optional<std::uint64_t> seed;
  std::optional<int> episodes;  // per set
  std::optional<int> dim;
  std::optional<double> eta;
  ProgressSink progress;
};

struct EvaluateSummary {
  long episodes = 0;
  double success_rate = 0.0;
};

EvaluateSummary cmd_evaluate(const EvaluateArgs &args);

struct QuarticArgs {
  fs::path config;
  fs::path out;
  std::optional<int> dim;
  std::optional<double> eta;
  std::optional<double> phi2;
  bool render = false;
  ProgressSink progress;
};

struct QuarticSummary {
  long records = 0;
  long analyzed = 0;
  long quartic_wins = 0;  // analyzed records with fid_quartic > fid_dsq
};

QuarticSummary cmd_quartic(const QuarticArgs &args);

struct WignerArgs {
  fs::path state;
  fs::path out;  // CSV path
  double window = 5.0;
  int points = 101;
  bool render = false;  // also write out with a .png extension
};

struct WignerSummary {
  double min_value = 0.0;
  double integral = 0.0;
};

WignerSummary cmd_wigner(const WignerArgs &args);

}  // namespace cvforge::app

#endif  // CVFORGE_APP_COMMANDS_HPP_

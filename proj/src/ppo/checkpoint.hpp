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

#ifndef CVFORGE_PPO_CHECKPOINT_HPP_
#define CVFORGE_PPO_CHECKPOINT_HPP_

#include <string>

#include "ppo/training.hpp"

namespace cvforge::ppo {

inline constexpr char kCheckpointMagic[8] = {'C', 'V', 'F', 'C', 'K', 'P', 'T', '\0'};
inline constexpr int kCheckpointVersion = 1;

// Layout: 8-byte magic, u32 version, u64 header length, JSON header, then the
// parameter vector and the two Adam moment vectors as little-endian f64.
std::string encode_checkpoint(const TrainState &state);
TrainState decode_checkpoint(const std::string &bytes);

void save_checkpoint(const std::string &path, const TrainState &state);
TrainState load_checkpoint(const std::string &path);

}  // namespace cvforge::ppo

#endif  // CVFORGE_PPO_CHECKPOINT_HPP_

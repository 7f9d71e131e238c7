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

#include "ppo/checkpoint.hpp"

#include <bit>
#include <cstring>

#include "common/files.hpp"
#include "common/json_util.hpp"
#include "json.hpp"

namespace cvforge::ppo {
namespace {

template <typename T>
void put_le(std::string &out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const std::string &in, std::size_t &pos) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  require(pos + sizeof(U) <= in.size(), ErrorCode::io, "checkpoint is truncated");
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i)
    bits |= static_cast<U>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += sizeof(U);
  return std::bit_cast<T>(bits);
}

void put_array(std::string &out, const RVector &v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) put_le(out, v(i));
}

RVector get_array(const std::string &in, std::size_t &pos, Eigen::Index n) {
  RVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = get_le<double>(in, pos);
  return v;
}

}  // namespace

std::string encode_checkpoint(const TrainState &state) {
  const PolicyShape &shape = state.policy.shape();
  nlohmann::ordered_json h;
  h["version"] = kCheckpointVersion;
  h["obs_dim"] = shape.obs_dim;
  h["hidden"] = shape.hidden;
  h["act_dim"] = shape.act_dim;
  h["n_params"] = state.policy.params().size();
  h["arrays"] = {"params", "adam_m", "adam_v"};
  h["config_hash"] = state.config_hash;
  h["seed"] = state.seed;
  h["num_timesteps"] = state.num_timesteps;
  h["updates"] = state.updates;
  h["episodes"] = state.episodes;
  h["adam_t"] = state.adam.t;
  h["act_counter"] = state.act_counter;
  h["shuffle_counter"] = state.shuffle_counter;
  const std::string header = h.dump();

  std::string out(kCheckpointMagic, sizeof(kCheckpointMagic));
  put_le<std::uint32_t>(out, kCheckpointVersion);
  put_le<std::uint64_t>(out, header.size());
  out += header;
  const Eigen::Index n = state.policy.params().size();
  const RVector zeros = RVector::Zero(n);
  put_array(out, state.policy.params());
  put_array(out, state.adam.m.size() == n ? state.adam.m : zeros);
  put_array(out, state.adam.v.size() == n ? state.adam.v : zeros);
  return out;
}

TrainState decode_checkpoint(const std::string &bytes) {
  require(bytes.size() >= sizeof(kCheckpointMagic) &&
              std::memcmp(bytes.data(), kCheckpointMagic, sizeof(kCheckpointMagic)) == 0,
          ErrorCode::io, "not a checkpoint file");
  std::size_t pos = sizeof(kCheckpointMagic);
  const auto version = get_le<std::uint32_t>(bytes, pos);
  require(version == kCheckpointVersion, ErrorCode::compatibility,
          "unsupported checkpoint version " + std::to_string(version));
  const auto header_len = get_le<std::uint64_t>(bytes, pos);
  require(pos + header_len <= bytes.size(), ErrorCode::io, "checkpoint header is truncated");
  const nlohmann::json h = parse_json_or_throw(bytes.substr(pos, header_len), "checkpoint header");
  pos += header_len;

  TrainState st;
  try {
    PolicyShape shape;
    shape.obs_dim = h.at("obs_dim").get<int>();
    shape.hidden = h.at("hidden").get<std::vector<int>>();
    shape.act_dim = h.at("act_dim").get<int>();
    st.policy = Policy(shape);
    const auto n = h.at("n_params").get<Eigen::Index>();
    require(n == st.policy.params().size(), ErrorCode::compatibility,
            "checkpoint parameter count does not match its shapes");
    st.policy.params() = get_array(bytes, pos, n);
    st.adam.m = get_array(bytes, pos, n);
    st.adam.v = get_array(bytes, pos, n);
    st.adam.t = h.at("adam_t").get<long>();
    st.config_hash = h.at("config_hash").get<std::string>();
    st.seed = h.at("seed").get<std::uint64_t>();
    st.num_timesteps = h.at("num_timesteps").get<long>();
    st.updates = h.at("updates").get<long>();
    st.episodes = h.at("episodes").get<long>();
    st.act_counter = h.at("act_counter").get<std::uint64_t>();
    st.shuffle_counter = h.at("shuffle_counter").get<std::uint64_t>();
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::io, std::string("checkpoint header: ") + e.what());
  }
  require(pos == bytes.size(), ErrorCode::io, "checkpoint has trailing bytes");
  return st;
}

void save_checkpoint(const std::string &path, const TrainState &state) {
  write_text_file(path, encode_checkpoint(state));
}

TrainState load_checkpoint(const std::string &path) {
  return decode_checkpoint(read_text_file(path));
}

}  // namespace cvforge::ppo

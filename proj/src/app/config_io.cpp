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

#include "app/config_io.hpp"

#include <cstdio>
#include <set>

#include "common/files.hpp"
#include "common/format.hpp"
#include "common/json_util.hpp"

namespace cvforge::app {
namespace {

using fock::Complex;

// Reads fields off one JSON object, tracking which keys were consumed.
class Fields {
 public:
  Fields(const json &j, std::string path) : j_(j), path_(std::move(path)) {
    require(j_.is_object(), ErrorCode::config, where() + " must be an object");
  }

  template <typename T>
  T get(const std::string &key) {
    const json &v = at(key);
    try {
      return v.get<T>();
    } catch (const json::exception &) {
      fail(ErrorCode::config, "field '" + name(key) + "' has the wrong type");
    }
  }

  double number(const std::string &key) {
    const json &v = at(key);
    require(v.is_number(), ErrorCode::config, "field '" + name(key) + "' must be a number");
    return v.get<double>();
  }

  long integer(const std::string &key) {
    const json &v = at(key);
    require(v.is_number_integer(), ErrorCode::config,
            "field '" + name(key) + "' must be an integer");
    return v.get<long>();
  }

  std::uint64_t seed(const std::string &key) {
    const json &v = at(key);
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
            ErrorCode::config, "field '" + name(key) + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const std::string &key) {
    const json &v = at(key);
    require(v.is_boolean(), ErrorCode::config, "field '" + name(key) + "' must be true or false");
    return v.get<bool>();
  }

  Complex complex(const std::string &key) {
    const json &v = at(key);
    require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(),
            ErrorCode::config, "field '" + name(key) + "' must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
  }

  std::vector<int> int_list(const std::string &key) {
    const json &v = at(key);
    require(v.is_array(), ErrorCode::config, "field '" + name(key) + "' must be an array");
    std::vector<int> out;
    for (const json &x : v) {
      require(x.is_number_integer(), ErrorCode::config,
              "field '" + name(key) + "' must hold integers");
      out.push_back(x.get<int>());
    }
    return out;
  }

  std::vector<double> number_list(const std::string &key) {
    const json &v = at(key);
    require(v.is_array(), ErrorCode::config, "field '" + name(key) + "' must be an array");
    std::vector<double> out;
    for (const json &x : v) {
      require(x.is_number(), ErrorCode::config, "field '" + name(key) + "' must hold numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  Fields object(const std::string &key) { return Fields(at(key), name(key)); }

  // Rejects keys that were never read.
  void finish() const {
    for (const auto &[key, _] : j_.items())
      require(seen_.count(key) > 0, ErrorCode::config, "unknown field '" + name(key) + "'");
  }

 private:
  const json &at(const std::string &key) {
    const auto it = j_.find(key);
    require(it != j_.end(), ErrorCode::config, "missing field '" + name(key) + "'");
    seen_.insert(key);
    return *it;
  }

  std::string name(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }
  std::string where() const { return path_.empty() ? "config" : "field '" + path_ + "'"; }

  const json &j_;
  std::string path_;
  std::set<std::string> seen_;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

loop::LoopConfig read_loop(Fields f) {
  loop::LoopConfig c;
  c.dim = static_cast<int>(f.integer("dim"));
  c.pad = static_cast<int>(f.integer("pad"));
  c.beta = f.complex("beta");
  c.eta = f.number("eta");
  c.r0 = f.number("r0");
  const auto axis = f.get<std::string>("displacement_axis");
  require(axis == "imaginary" || axis == "real", ErrorCode::config,
          "field 'episode.loop.displacement_axis' must be \"imaginary\" or \"real\"");
  c.displacement_axis =
      axis == "real" ? loop::DisplacementAxis::real : loop::DisplacementAxis::imaginary;
  c.r_max = f.number("r_max");
  c.alpha_max = f.number("alpha_max");
  f.finish();
  return c;
}

json loop_json(const loop::LoopConfig &c) {
  return {{"dim", c.dim},
          {"pad", c.pad},
          {"beta", complex_json(c.beta)},
          {"eta", c.eta},
          {"r0", c.r0},
          {"displacement_axis",
           c.displacement_axis == loop::DisplacementAxis::real ? "real" : "imaginary"},
          {"r_max", c.r_max},
          {"alpha_max", c.alpha_max}};
}

env::EpisodeConfig read_episode(Fields f) {
  env::EpisodeConfig c;
  c.m = static_cast<int>(f.integer("m"));
  c.loop = read_loop(f.object("loop"));
  {
    Fields t = f.object("target");
    c.target.gamma = t.number("gamma");
    c.target.r = t.number("r");
    c.target.alpha = t.complex("alpha");
    t.finish();
  }
  {
    Fields r = f.object("reward");
    c.reward.lambda = r.number("lambda");
    const auto mode = r.get<std::string>("fidelity");
    require(mode == "unnormalized" || mode == "normalized", ErrorCode::config,
            "field 'episode.reward.fidelity' must be \"unnormalized\" or \"normalized\"");
    c.reward.mode =
        mode == "normalized" ? env::FidelityMode::normalized : env::FidelityMode::unnormalized;
    r.finish();
  }
  c.terminal_reward_only = f.boolean("terminal_reward_only");
  f.finish();
  return c;
}

json episode_json(const env::EpisodeConfig &c) {
  return {{"m", c.m},
          {"loop", loop_json(c.loop)},
          {"target",
           {{"gamma", c.target.gamma}, {"r", c.target.r}, {"alpha", complex_json(c.target.alpha)}}},
          {"reward",
           {{"lambda", c.reward.lambda},
            {"fidelity",
             c.reward.mode == env::FidelityMode::normalized ? "normalized" : "unnormalized"}}},
          {"terminal_reward_only", c.terminal_reward_only}};
}

ppo::PpoConfig read_ppo(Fields f) {
  ppo::PpoConfig c;
  c.gamma = f.number("gamma");
  c.n_steps = f.integer("n_steps");
  c.n_steps_per_env = f.boolean("n_steps_per_env");
  c.batch_size = f.integer("batch_size");
  c.n_epochs = static_cast<int>(f.integer("n_epochs"));
  c.clip_range = f.number("clip_range");
  c.learning_rate = f.number("learning_rate");
  c.max_grad_norm = f.number("max_grad_norm");
  c.vf_coef = f.number("vf_coef");
  c.ent_coef = f.number("ent_coef");
  c.gae_lambda = f.number("gae_lambda");
  c.normalize_advantage = f.boolean("normalize_advantage");
  c.n_envs = static_cast<int>(f.integer("n_envs"));
  c.total_timesteps = f.integer("total_timesteps");
  f.finish();
  return c;
}

json ppo_json(const ppo::PpoConfig &c) {
  return {{"gamma", c.gamma},
          {"n_steps", c.n_steps},
          {"n_steps_per_env", c.n_steps_per_env},
          {"batch_size", c.batch_size},
          {"n_epochs", c.n_epochs},
          {"clip_range", c.clip_range},
          {"learning_rate", c.learning_rate},
          {"max_grad_norm", c.max_grad_norm},
          {"vf_coef", c.vf_coef},
          {"ent_coef", c.ent_coef},
          {"gae_lambda", c.gae_lambda},
          {"normalize_advantage", c.normalize_advantage},
          {"n_envs", c.n_envs},
          {"total_timesteps", c.total_timesteps}};
}

ppo::EvalConfig read_eval(Fields f) {
  ppo::EvalConfig c;
  c.n_sets = static_cast<int>(f.integer("n_sets"));
  c.episodes_per_set = static_cast<int>(f.integer("episodes_per_set"));
  c.seed = f.seed("seed");
  c.tau_tol = f.number("tau_tol");
  Fields t = f.object("success");
  c.thresholds.min_fidelity = t.number("min_fidelity");
  c.thresholds.min_trace = t.number("min_trace");
  c.thresholds.max_wigner_min = t.number("max_wigner_min");
  c.thresholds.window = t.number("wigner_window");
  c.thresholds.points = static_cast<int>(t.integer("wigner_points"));
  t.finish();
  f.finish();
  return c;
}

json eval_json(const ppo::EvalConfig &c) {
  return {{"n_sets", c.n_sets},
          {"episodes_per_set", c.episodes_per_set},
          {"seed", c.seed},
          {"tau_tol", c.tau_tol},
          {"success",
           {{"min_fidelity", c.thresholds.min_fidelity},
            {"min_trace", c.thresholds.min_trace},
            {"max_wigner_min", c.thresholds.max_wigner_min},
            {"wigner_window", c.thresholds.window},
            {"wigner_points", c.thresholds.points}}}};
}

// Library errors during validation become config errors.
template <typename F>
void validate_as_config(F &&check) {
  try {
    check();
  } catch (const Error &e) {
    if (e.code() == ErrorCode::config) throw;
    fail(ErrorCode::config, std::string("invalid config: ") + e.what());
  }
}

}  // namespace

RunConfig run_config_from_json(const json &j) {
  Fields f(j, "");
  RunConfig c;
  c.train.seed = f.seed("seed");
  c.train.hidden = f.int_list("hidden");
  c.train.checkpoint_every = static_cast<int>(f.integer("checkpoint_every"));
  c.train.ppo = read_ppo(f.object("ppo"));
  c.train.episode = read_episode(f.object("episode"));
  c.eval = read_eval(f.object("evaluation"));
  f.finish();
  validate_as_config([&] { c.train.validate(); });
  require(c.eval.n_sets >= 1 && c.eval.episodes_per_set >= 1, ErrorCode::config,
          "evaluation needs at least one set and one episode");
  return c;
}

json to_json(const RunConfig &c) {
  return {{"seed", c.train.seed},
          {"hidden", c.train.hidden},
          {"checkpoint_every", c.train.checkpoint_every},
          {"ppo", ppo_json(c.train.ppo)},
          {"episode", episode_json(c.train.episode)},
          {"evaluation", eval_json(c.eval)}};
}

RunConfig load_run_config(const std::filesystem::path &path) {
  return run_config_from_json(parse_json_or_throw(read_text_file(path), "config"));
}

QuarticRun quartic_run_from_json(const json &j) {
  Fields f(j, "");
  QuarticRun c;
  quartic::QuarticConfig &s = c.scan;
  s.dim = static_cast<int>(f.integer("dim"));
  s.r = f.number("r");
  s.alpha_mag = f.number("alpha_mag");
  s.phi1 = f.number("phi1");
  s.phi2 = f.number("phi2");
  s.eta = f.number("eta");
  s.pad = static_cast<int>(f.integer("pad"));
  s.p_squeezed = f.boolean("p_squeezed");
  s.n_max = static_cast<int>(f.integer("n_max"));
  s.postselect_equal = f.boolean("postselect_equal");
  s.top_k = static_cast<int>(f.integer("top_k"));
  s.min_prob = f.number("min_prob");
  s.wigner_window = f.number("wigner_window");
  s.wigner_points = static_cast<int>(f.integer("wigner_points"));
  c.phi2_sweep = f.number_list("phi2_sweep");
  f.finish();
  validate_as_config([&] { s.validate(); });
  return c;
}

json to_json(const QuarticRun &c) {
  const quartic::QuarticConfig &s = c.scan;
  return {{"dim", s.dim},
          {"r", s.r},
          {"alpha_mag", s.alpha_mag},
          {"phi1", s.phi1},
          {"phi2", s.phi2},
          {"eta", s.eta},
          {"pad", s.pad},
          {"p_squeezed", s.p_squeezed},
          {"n_max", s.n_max},
          {"postselect_equal", s.postselect_equal},
          {"top_k", s.top_k},
          {"min_prob", s.min_prob},
          {"wigner_window", s.wigner_window},
          {"wigner_points", s.wigner_points},
          {"phi2_sweep", c.phi2_sweep}};
}

QuarticRun load_quartic_run(const std::filesystem::path &path) {
  return quartic_run_from_json(parse_json_or_throw(read_text_file(path), "config"));
}

std::string training_hash(const RunConfig &cfg) {
  json j = to_json(cfg);
  j.erase("evaluation");
  j.erase("checkpoint_every");
  j["ppo"].erase("total_timesteps");
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace cvforge::app

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

// Exercises the shared library strictly through its C header.

#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "cvforge/cvforge.h"
#include "doctest.h"
#include "support/test_files.hpp"

using cvforge::testing::ScratchDir;
using cvforge::testing::slurp;
using cvforge::testing::spit;

namespace {

std::string tiny_config() {
  std::string text = slurp(std::string(CVFORGE_SOURCE_DIR) + "/configs/smoke.json");
  auto set = [&](const std::string &from, const std::string &to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
  };
  set("\"dim\": 31", "\"dim\": 6");
  set("\"m\": 20", "\"m\": 3");
  set("\"n_envs\": 8", "\"n_envs\": 2");
  set("\"n_steps\": 35000", "\"n_steps\": 12");
  set("\"batch_size\": 5000", "\"batch_size\": 6");
  set("\"n_epochs\": 15", "\"n_epochs\": 2");
  set("\"total_timesteps\": 150000", "\"total_timesteps\": 24");
  set("\"episodes_per_set\": 200", "\"episodes_per_set\": 2");
  set("\"wigner_points\": 61", "\"wigner_points\": 11");
  return text;
}

}  // namespace

TEST_CASE("status reporting") {
  CHECK(std::string(cvf_version()) == "0.1.0");
  CHECK(cvf_exit_code(CVF_OK) == 0);
  CHECK(cvf_exit_code(CVF_ERR_CONFIG) == 2);
  CHECK(cvf_exit_code(CVF_ERR_COMPATIBILITY) == 3);
  CHECK(cvf_exit_code(CVF_ERR_DIMENSION_MISMATCH) == 3);
  CHECK(cvf_exit_code(CVF_ERR_IO) == 4);
  CHECK(cvf_exit_code(CVF_ERR_NUMERIC) == 1);
  CHECK(std::string(cvf_status_name(CVF_ERR_LIFECYCLE)) == "lifecycle");

  CHECK(cvf_state_squeezed_vacuum(0.5, 10, 20, nullptr) == CVF_ERR_NULL_ARGUMENT);
  CHECK(std::string(cvf_last_error()).find("out") != std::string::npos);

  cvf_state *s = nullptr;
  CHECK(cvf_state_squeezed_vacuum(0.5, 1, 20, &s) == CVF_ERR_INVALID_DIMENSION);
  CHECK(s == nullptr);
  const std::string here = cvf_last_error();
  std::string there;
  std::thread([&] { there = cvf_last_error(); }).join();
  CHECK(!here.empty());
  CHECK(there.empty());
}

TEST_CASE("state handles") {
  cvf_state *s = nullptr;
  REQUIRE(cvf_state_squeezed_vacuum(0.4, 40, 20, &s) == CVF_OK);
  CHECK(cvf_state_dim(s) == 40);
  CHECK(cvf_state_trace(s) == doctest::Approx(1.0).epsilon(1e-12));

  size_t len = 0;
  REQUIRE(cvf_state_to_json(s, nullptr, 0, &len) == CVF_OK);
  std::vector<char> small(len);
  CHECK(cvf_state_to_json(s, small.data(), small.size(), &len) == CVF_ERR_BUFFER_TOO_SMALL);
  std::vector<char> buf(len + 1);
  REQUIRE(cvf_state_to_json(s, buf.data(), buf.size(), &len) == CVF_OK);
  cvf_state *back = nullptr;
  REQUIRE(cvf_state_from_json(buf.data(), &back) == CVF_OK);
  CHECK(cvf_state_trace(back) == cvf_state_trace(s));
  double f = 0.0;
  REQUIRE(cvf_state_fidelity(back, s, &f) == CVF_OK);
  CHECK(f == doctest::Approx(cvf_state_trace(s) * cvf_state_trace(s)).epsilon(1e-9));

  cvf_state *vac = nullptr;
  REQUIRE(cvf_state_squeezed_vacuum(0.0, 6, 0, &vac) == CVF_OK);
  std::vector<double> w(9);
  REQUIRE(cvf_state_wigner(vac, 1.0, 3, w.data()) == CVF_OK);
  CHECK(w[4] == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-9));
  CHECK(w[0] == doctest::Approx(std::exp(-2.0) / std::numbers::pi).epsilon(1e-9));

  cvf_state *target = nullptr;
  REQUIRE(cvf_state_cubic_target(-0.2, -0.7, 0.0, 1.25, 31, 20, &target) == CVF_OK);
  CHECK(cvf_state_trace(target) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cvf_state_fidelity(vac, target, &f) == CVF_ERR_DIMENSION_MISMATCH);

  CHECK(cvf_state_from_json("{\"version\": 2}", &back) == CVF_ERR_CONFIG);
  CHECK(cvf_state_load("/definitely/not/here.json", &back) == CVF_ERR_IO);

  cvf_state_free(s);
  cvf_state_free(back);
  cvf_state_free(vac);
  cvf_state_free(target);
  cvf_state_free(nullptr);
}

TEST_CASE("environment handles") {
  const std::string cfg = slurp(std::string(CVFORGE_SOURCE_DIR) + "/configs/smoke.json");
  cvf_env *e = nullptr;
  REQUIRE(cvf_env_create(cfg.c_str(), 3, &e) == CVF_OK);
  const size_t n = cvf_env_observation_size(e);
  CHECK(n == 961);

  std::vector<double> obs(n), next(n);
  const double freeze[3] = {-1.0, 0.3, -1.0};  // tau = 0, alpha = -alpha_max
  CHECK(cvf_env_step(e, freeze, next.data(), n, nullptr) == CVF_ERR_LIFECYCLE);
  REQUIRE(cvf_env_reset(e, 3, obs.data(), n) == CVF_OK);
  CHECK(cvf_env_reset(e, 3, obs.data(), n - 1) == CVF_ERR_BUFFER_TOO_SMALL);
  REQUIRE(cvf_env_reset(e, 3, obs.data(), n) == CVF_OK);

  // A freeze step without displacement keeps the loop state.
  const double hold[3] = {-1.0, 0.3, 0.0};
  cvf_step_info info{};
  REQUIRE(cvf_env_step(e, hold, next.data(), n, &info) == CVF_OK);
  CHECK(info.tau == 0.0);
  double diff = 0.0;
  for (size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(obs[i] - next[i]));
  CHECK(diff <= 1e-9);
  for (int j = 1; j < 20; ++j) REQUIRE(cvf_env_step(e, hold, nullptr, 0, &info) == CVF_OK);
  CHECK(info.done == 1);
  CHECK(cvf_env_step(e, hold, nullptr, 0, &info) == CVF_ERR_LIFECYCLE);

  size_t len = 0;
  REQUIRE(cvf_env_episode_csv(e, nullptr, 0, &len) == CVF_OK);
  std::string csv(len + 1, '\0');
  REQUIRE(cvf_env_episode_csv(e, csv.data(), csv.size(), &len) == CVF_OK);
  csv.resize(len);
  CHECK(csv.rfind("step,tau,r,alpha,n,prob,trace,fidelity,reward", 0) == 0);
  CHECK(static_cast<int>(std::count(csv.begin(), csv.end(), '\n')) == 21);

  cvf_state *s = nullptr;
  REQUIRE(cvf_env_state(e, &s) == CVF_OK);
  CHECK(cvf_state_dim(s) == 31);
  cvf_state_free(s);

  // Same seed, same actions, same observations.
  cvf_env *a = nullptr, *b = nullptr;
  REQUIRE(cvf_env_create(cfg.c_str(), 11, &a) == CVF_OK);
  REQUIRE(cvf_env_create(cfg.c_str(), 11, &b) == CVF_OK);
  std::vector<double> oa(n), ob(n);
  cvf_env_reset(a, 11, oa.data(), n);
  cvf_env_reset(b, 11, ob.data(), n);
  for (int j = 0; j < 5; ++j) {
    const double act[3] = {0.3 * j - 0.5, 0.2, 0.1 * j};
    cvf_step_info ia{}, ib{};
    REQUIRE(cvf_env_step(a, act, oa.data(), n, &ia) == CVF_OK);
    REQUIRE(cvf_env_step(b, act, ob.data(), n, &ib) == CVF_OK);
    CHECK(ia.n == ib.n);
    CHECK(oa == ob);
  }
  cvf_env_free(a);
  cvf_env_free(b);
  cvf_env_free(e);

  CHECK(cvf_env_create("{\"seed\": 1}", 1, &e) == CVF_ERR_CONFIG);
  CHECK(std::string(cvf_last_error()).find("missing field") != std::string::npos);
}

TEST_CASE("batch commands and policies") {
  ScratchDir dir("capi");
  spit(dir / "run.json", tiny_config());
  const std::string config = (dir / "run.json").string();
  const std::string out = (dir / "train").string();

  std::vector<std::string> messages;
  cvf_train_options t;
  cvf_train_options_init(&t);
  t.config = config.c_str();
  t.out = out.c_str();
  t.progress = [](const char *msg, void *user) {
    static_cast<std::vector<std::string> *>(user)->push_back(msg);
  };
  t.user = &messages;
  REQUIRE(cvf_train(&t) == CVF_OK);
  CHECK(messages.size() == 2);

  const std::string ckpt = out + "/checkpoints/final.bin";
  cvf_policy *p = nullptr;
  REQUIRE(cvf_policy_load(ckpt.c_str(), &p) == CVF_OK);
  CHECK(cvf_policy_observation_size(p) == 36);
  std::vector<double> obs(36, 0.01);
  double act[3];
  CHECK(cvf_policy_act(p, obs.data(), 36, act) == CVF_OK);
  CHECK(std::isfinite(act[0]));
  CHECK(cvf_policy_act(p, obs.data(), 35, act) == CVF_ERR_DIMENSION_MISMATCH);
  cvf_policy_free(p);

  cvf_evaluate_options ev;
  cvf_evaluate_options_init(&ev);
  const std::string eval_out = (dir / "eval").string();
  ev.checkpoint = ckpt.c_str();
  ev.config = config.c_str();
  ev.out = eval_out.c_str();
  double rate = -1.0;
  REQUIRE(cvf_evaluate(&ev, &rate) == CVF_OK);
  CHECK(rate >= 0.0);
  CHECK(rate <= 1.0);
  ev.has_dim = 1;
  ev.dim = 7;
  CHECK(cvf_evaluate(&ev, &rate) == CVF_ERR_COMPATIBILITY);

  cvf_train_options missing;
  cvf_train_options_init(&missing);
  missing.out = out.c_str();
  CHECK(cvf_train(&missing) == CVF_ERR_NULL_ARGUMENT);

  cvf_wigner_options w;
  cvf_wigner_options_init(&w);
  CHECK(w.points == 101);
  CHECK(w.window == 5.0);
}

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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvforge/cvforge.h"

namespace {

void print_progress(const char *message, void *) {
  std::fprintf(stderr, "%s\n", message);
  std::fflush(stderr);
}

int finish(cvf_status status) {
  if (status != CVF_OK)
    std::fprintf(stderr, "error (%s): %s\n", cvf_status_name(status), cvf_last_error());
  return cvf_exit_code(status);
}

template <typename T>
void set_optional(const std::optional<T> &value, int &has, T &field) {
  if (!value) return;
  has = 1;
  field = *value;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"cvforge: loop-based non-Gaussian state engineering"};
  app.set_version_flag("--version", std::string(cvf_version()));
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress progress messages");

  // train
  std::string train_config, train_out, train_resume;
  std::optional<std::uint64_t> train_seed;
  std::optional<int> train_dim;
  std::optional<double> train_eta;
  CLI::App *train = app.add_subcommand("train", "Train a policy on the loop environment");
  train->add_option("--config", train_config, "Run config (JSON)")->required();
  train->add_option("--out", train_out, "Run directory")->required();
  train->add_option("--seed", train_seed, "Override the training seed");
  train->add_option("--resume", train_resume, "Checkpoint to continue from");
  train->add_option("--dim", train_dim, "Override the Fock truncation");
  train->add_option("--eta", train_eta, "Override the detector efficiency");

  // evaluate
  std::string eval_checkpoint, eval_config, eval_out;
  std::optional<std::uint64_t> eval_seed;
  std::optional<int> eval_episodes, eval_dim;
  std::optional<double> eval_eta;
  CLI::App *evaluate = app.add_subcommand("evaluate", "Evaluate a checkpoint deterministically");
  evaluate->add_option("--checkpoint", eval_checkpoint, "Checkpoint file")->required();
  evaluate->add_option("--config", eval_config, "Run config (JSON)")->required();
  evaluate->add_option("--out", eval_out, "Output directory")->required();
  evaluate->add_option("--seed", eval_seed, "Override the evaluation seed");
  evaluate->add_option("--episodes", eval_episodes, "Episodes per evaluation set");
  evaluate->add_option("--dim", eval_dim, "Override the Fock truncation");
  evaluate->add_option("--eta", eval_eta, "Override the detector efficiency");

  // quartic
  std::string q_config, q_out;
  std::optional<int> q_dim;
  std::optional<double> q_eta, q_phi2;
  bool q_render = false;
  CLI::App *quartic = app.add_subcommand("quartic", "Scan cluster-state outcomes and fit quartic states");
  quartic->add_option("--config", q_config, "Quartic config (JSON)")->required();
  quartic->add_option("--out", q_out, "Output directory")->required();
  quartic->add_option("--dim", q_dim, "Override the Fock truncation");
  quartic->add_option("--eta", q_eta, "Override the detector efficiency");
  quartic->add_option("--phi2", q_phi2, "Override the second displacement phase");
  quartic->add_flag("--render", q_render, "Also write PNG heatmaps");

  // wigner
  std::string w_state, w_out;
  double w_window = 5.0;
  int w_points = 101;
  bool w_render = false;
  CLI::App *wigner = app.add_subcommand("wigner", "Evaluate the Wigner function of a state file");
  wigner->add_option("--state", w_state, "State document (JSON)")->required();
  wigner->add_option("--out", w_out, "CSV output path")->required();
  wigner->add_option("--window", w_window, "Half-width of the square grid")->capture_default_str();
  wigner->add_option("--points", w_points, "Grid points per axis")->capture_default_str();
  wigner->add_flag("--render", w_render, "Also write a PNG heatmap next to the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  const cvf_progress_fn progress = quiet ? nullptr : print_progress;

  if (*train) {
    cvf_train_options o;
    cvf_train_options_init(&o);
    o.config = train_config.c_str();
    o.out = train_out.c_str();
    o.resume = train_resume.empty() ? nullptr : train_resume.c_str();
    set_optional(train_seed, o.has_seed, o.seed);
    set_optional(train_dim, o.has_dim, o.dim);
    set_optional(train_eta, o.has_eta, o.eta);
    o.progress = progress;
    return finish(cvf_train(&o));
  }
  if (*evaluate) {
    cvf_evaluate_options o;
    cvf_evaluate_options_init(&o);
    o.checkpoint = eval_checkpoint.c_str();
    o.config = eval_config.c_str();
    o.out = eval_out.c_str();
    set_optional(eval_seed, o.has_seed, o.seed);
    set_optional(eval_episodes, o.has_episodes, o.episodes);
    set_optional(eval_dim, o.has_dim, o.dim);
    set_optional(eval_eta, o.has_eta, o.eta);
    o.progress = progress;
    double rate = 0.0;
    const cvf_status st = cvf_evaluate(&o, &rate);
    if (st == CVF_OK) std::printf("success_rate %.6f\n", rate);
    return finish(st);
  }
  if (*quartic) {
    cvf_quartic_options o;
    cvf_quartic_options_init(&o);
    o.config = q_config.c_str();
    o.out = q_out.c_str();
    set_optional(q_dim, o.has_dim, o.dim);
    set_optional(q_eta, o.has_eta, o.eta);
    set_optional(q_phi2, o.has_phi2, o.phi2);
    o.render = q_render ? 1 : 0;
    o.progress = progress;
    long records = 0, wins = 0;
    const cvf_status st = cvf_quartic(&o, &records, &wins);
    if (st == CVF_OK) std::printf("records %ld quartic_wins %ld\n", records, wins);
    return finish(st);
  }
  cvf_wigner_options o;
  cvf_wigner_options_init(&o);
  o.state = w_state.c_str();
  o.out = w_out.c_str();
  o.window = w_window;
  o.points = w_points;
  o.render = w_render ? 1 : 0;
  double wmin = 0.0;
  const cvf_status st = cvf_wigner(&o, &wmin);
  if (st == CVF_OK) std::printf("wigner_min %.9g\n", wmin);
  return finish(st);
}

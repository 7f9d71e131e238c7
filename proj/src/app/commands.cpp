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

#include "app/commands.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "app/config_io.hpp"
#include "app/manifest.hpp"
#include "app/png.hpp"
#include "common/files.hpp"
#include "common/format.hpp"
#include "common/json_util.hpp"
#include "fock/state_io.hpp"
#include "fock/wigner.hpp"
#include "ppo/checkpoint.hpp"

namespace cvforge::app {
namespace {

void report(const ProgressSink &sink, const std::string &msg) {
  if (sink) sink(msg);
}

void make_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorCode::io, "cannot create directory " + dir.string());
}

// Appending (or truncating) CSV stream, flushed after every batch of rows.
class CsvLog {
 public:
  CsvLog(const fs::path &path, const std::string &header, bool append) {
    const bool fresh = !append || !fs::exists(path) || fs::file_size(path) == 0;
    out_.open(path, std::ios::binary | (fresh ? std::ios::trunc : std::ios::app));
    require(static_cast<bool>(out_), ErrorCode::io, "cannot open " + path.string());
    if (fresh) out_ << header << "\r\n";
  }

  void write(const std::vector<std::string> &fields) { out_ << CsvWriter::line(fields); }

  void flush() {
    out_.flush();
    require(static_cast<bool>(out_), ErrorCode::io, "write to log failed");
  }

 private:
  std::ofstream out_;
};

std::string checkpoint_name(long update) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "checkpoints/update_%06ld.bin", update);
  return buf;
}

void apply_loop_overrides(loop::LoopConfig &loop, std::optional<int> dim, std::optional<double> eta) {
  if (dim) loop.dim = *dim;
  if (eta) loop.eta = *eta;
}

void revalidate(const RunConfig &cfg) {
  try {
    cfg.train.validate();
  } catch (const Error &e) {
    if (e.code() == ErrorCode::config) throw;
    fail(ErrorCode::config, std::string("invalid config after overrides: ") + e.what());
  }
}

std::string fmt_or_empty(bool present, double x) { return present ? format_double(x) : ""; }

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::config:
      return 2;
    case ErrorCode::compatibility:
    case ErrorCode::dimension_mismatch:
      return 3;
    case ErrorCode::io:
      return 4;
    default:
      return 1;
  }
}

TrainSummary cmd_train(const TrainArgs &args) {
  RunConfig cfg = load_run_config(args.config);
  if (args.seed) cfg.train.seed = *args.seed;
  apply_loop_overrides(cfg.train.episode.loop, args.dim, args.eta);
  revalidate(cfg);
  const std::string hash = training_hash(cfg);

  RunManifest manifest;
  manifest.command = "train";
  manifest.config = to_json(cfg);
  manifest.seeds = {{"train", cfg.train.seed}, {"evaluation", cfg.eval.seed}};
  manifest.config_hash = hash;
  manifest.code_version = code_version();
  manifest.started_at = utc_timestamp();

  ppo::TrainState state;
  if (args.resume) {
    state = ppo::load_checkpoint(*args.resume);
    require(state.config_hash == hash, ErrorCode::compatibility,
            "checkpoint config hash " + state.config_hash + " does not match config hash " + hash);
    manifest.extra["resumed_from"] = args.resume->string();
    manifest.extra["resumed_at_steps"] = state.num_timesteps;
    if (fs::exists(args.out / kManifestName))
      manifest.artifacts = read_manifest(args.out).artifacts;
  } else {
    state = ppo::make_train_state(cfg.train, hash);
  }

  make_dir(args.out / "checkpoints");
  const bool append = args.resume.has_value();
  CsvLog log(args.out / "training_log.csv", ppo::training_log_header(), append);
  CsvLog episodes(args.out / "episodes.csv", ppo::episode_log_header(), append);
  std::set<std::string> artifacts(manifest.artifacts.begin(), manifest.artifacts.end());
  artifacts.insert("training_log.csv");
  artifacts.insert("episodes.csv");

  ppo::TrainCallbacks cb;
  cb.on_update = [&](const ppo::UpdateLogRow &row, const std::vector<ppo::EpisodeLogRow> &eps) {
    log.write(ppo::training_log_fields(row));
    for (const auto &e : eps) episodes.write(ppo::episode_log_fields(e));
    log.flush();
    episodes.flush();
    report(args.progress, "update " + std::to_string(row.update) + " steps " +
                              std::to_string(row.steps) + " mean_terminal_fidelity " +
                              format_double(row.mean_terminal_fidelity));
  };
  cb.on_checkpoint = [&](const ppo::TrainState &st) {
    const std::string name = checkpoint_name(st.updates);
    ppo::save_checkpoint(args.out / name, st);
    artifacts.insert(name);
  };
  ppo::train(state, cfg.train, cb);

  ppo::save_checkpoint(args.out / "checkpoints/final.bin", state);
  artifacts.insert("checkpoints/final.bin");
  manifest.artifacts.assign(artifacts.begin(), artifacts.end());
  manifest.finished_at = utc_timestamp();
  write_manifest(args.out, manifest);

  return TrainSummary{state.updates, state.num_timesteps, state.episodes,
                      args.out / "checkpoints/final.bin"};
}

EvaluateSummary cmd_evaluate(const EvaluateArgs &args) {
  RunConfig cfg = load_run_config(args.config);
  if (args.seed) cfg.eval.seed = *args.seed;
  if (args.episodes) {
    require(*args.episodes >= 1, ErrorCode::config, "--episodes must be positive");
    cfg.eval.episodes_per_set = *args.episodes;
  }
  apply_loop_overrides(cfg.train.episode.loop, args.dim, args.eta);
  revalidate(cfg);

  const ppo::TrainState state = ppo::load_checkpoint(args.checkpoint);
  const ppo::PolicyShape want = cfg.train.shape();
  require(state.policy.shape().obs_dim == want.obs_dim, ErrorCode::compatibility,
          "checkpoint observation size " + std::to_string(state.policy.shape().obs_dim) +
              " does not match loop dimension " + std::to_string(cfg.train.episode.loop.dim));
  report(args.progress, "evaluating " + std::to_string(cfg.eval.n_sets) + " x " +
                            std::to_string(cfg.eval.episodes_per_set) + " episodes");
  const ppo::EvalReport rep = ppo::evaluate(state.policy, cfg.train.episode, cfg.eval);

  make_dir(args.out);
  struct Column {
    const char *file;
    const char *name;
    std::string (*value)(const ppo::EpisodeEval &);
  };
  const Column columns[] = {
      {"hist_terminal_fidelity.csv", "terminal_fidelity",
       [](const ppo::EpisodeEval &e) { return format_double(e.terminal_fidelity); }},
      {"hist_photons_before_tau0.csv", "photons_before_tau0",
       [](const ppo::EpisodeEval &e) { return std::to_string(e.photons_before_tau0); }},
      {"hist_steps_before_tau0.csv", "steps_before_tau0",
       [](const ppo::EpisodeEval &e) { return std::to_string(e.steps_before_tau0); }},
      {"hist_steps_between_resets.csv", "steps_between_resets",
       [](const ppo::EpisodeEval &e) { return std::to_string(e.steps_between_resets); }},
  };
  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.config = to_json(cfg);
  manifest.seeds = {{"evaluation", cfg.eval.seed}};
  manifest.config_hash = state.config_hash;
  manifest.code_version = code_version();
  manifest.started_at = utc_timestamp();
  manifest.extra["checkpoint"] = args.checkpoint.string();

  for (const Column &c : columns) {
    CsvWriter csv({"set", "episode", c.name});
    for (const ppo::EpisodeEval &e : rep.episodes)
      csv.row({std::to_string(e.set), std::to_string(e.episode), c.value(e)});
    write_text_file(args.out / c.file, csv.str());
    manifest.artifacts.emplace_back(c.file);
  }

  double mean_f = 0.0;
  for (const auto &e : rep.episodes) mean_f += e.terminal_fidelity;
  mean_f /= double(rep.episodes.size());
  const json summary = {{"episodes", rep.episodes.size()},
                        {"n_sets", cfg.eval.n_sets},
                        {"episodes_per_set", cfg.eval.episodes_per_set},
                        {"success_rate", rep.success_rate},
                        {"set_success_rates", rep.set_success_rates},
                        {"mean_terminal_fidelity", mean_f}};
  write_text_file(args.out / "summary.json", summary.dump(2) + "\n");
  manifest.artifacts.emplace_back("summary.json");
  manifest.finished_at = utc_timestamp();
  write_manifest(args.out, manifest);
  return EvaluateSummary{static_cast<long>(rep.episodes.size()), rep.success_rate};
}

namespace {

json record_json(const quartic::OutcomeRecord &r) {
  json j = {{"n1", r.n1}, {"n2", r.n2}, {"joint_prob", r.joint_prob}};
  if (r.fitted) {
    j["delta"] = r.quartic.params[0];
    j["s"] = r.quartic.params[1];
    j["fid_quartic"] = r.quartic.fidelity;
    j["fid_dsq"] = r.baseline.fidelity;
    j["wigner_min"] = r.wigner_min;
  }
  return j;
}

std::string record_stem(const quartic::OutcomeRecord &r) {
  return "n1_" + std::to_string(r.n1) + "_n2_" + std::to_string(r.n2);
}

}  // namespace

QuarticSummary cmd_quartic(const QuarticArgs &args) {
  QuarticRun run = load_quartic_run(args.config);
  quartic::QuarticConfig &cfg = run.scan;
  if (args.dim) cfg.dim = *args.dim;
  if (args.eta) cfg.eta = *args.eta;
  if (args.phi2) cfg.phi2 = *args.phi2;
  try {
    cfg.validate();
  } catch (const Error &e) {
    fail(ErrorCode::config, std::string("invalid config after overrides: ") + e.what());
  }

  RunManifest manifest;
  manifest.command = "quartic";
  manifest.config = to_json(run);
  manifest.config_hash = [&] {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(manifest.config.dump())));
    return std::string(buf);
  }();
  manifest.code_version = code_version();
  manifest.started_at = utc_timestamp();
  make_dir(args.out / "wigner");

  report(args.progress, "scanning outcomes at phi2 = " + format_double(cfg.phi2));
  const std::vector<quartic::OutcomeRecord> records = quartic::scan_outcomes(cfg);

  QuarticSummary summary;
  CsvWriter csv({"n1", "n2", "joint_prob", "delta", "s", "fid_quartic", "fid_dsq", "wigner_min"});
  const auto axis = fock::linspace(-cfg.wigner_window, cfg.wigner_window, cfg.wigner_points);
  for (const quartic::OutcomeRecord &r : records) {
    ++summary.records;
    csv.row({std::to_string(r.n1), std::to_string(r.n2), format_double(r.joint_prob),
             fmt_or_empty(r.fitted, r.fitted ? r.quartic.params[0] : 0.0),
             fmt_or_empty(r.fitted, r.fitted ? r.quartic.params[1] : 0.0),
             fmt_or_empty(r.fitted, r.quartic.fidelity), fmt_or_empty(r.fitted, r.baseline.fidelity),
             fmt_or_empty(r.fitted, r.wigner_min)});
    if (!r.fitted) continue;
    ++summary.analyzed;
    if (r.quartic.fidelity > r.baseline.fidelity) ++summary.quartic_wins;
    const fock::WignerGrid grid = fock::wigner(r.state, axis, axis);
    const std::string stem = "wigner/" + record_stem(r);
    write_text_file(args.out / (stem + ".csv"), fock::wigner_to_csv(grid));
    manifest.artifacts.push_back(stem + ".csv");
    if (args.render) {
      write_text_file(args.out / (stem + ".png"), render_wigner_png(grid));
      manifest.artifacts.push_back(stem + ".png");
    }
  }
  write_text_file(args.out / "report.csv", csv.str());
  manifest.artifacts.insert(manifest.artifacts.begin(), "report.csv");

  // Best analyzed record per phase of the second displacement.
  json sweep = json::array();
  for (double phi2 : run.phi2_sweep) {
    std::vector<quartic::OutcomeRecord> local;
    const std::vector<quartic::OutcomeRecord> *src = &records;
    if (phi2 != cfg.phi2) {
      quartic::QuarticConfig c = cfg;
      c.phi2 = phi2;
      report(args.progress, "scanning outcomes at phi2 = " + format_double(phi2));
      local = quartic::scan_outcomes(c);
      src = &local;
    }
    json analyzed = json::array();
    const quartic::OutcomeRecord *best = nullptr;
    long wins = 0;
    for (const auto &r : *src) {
      if (!r.fitted) continue;
      analyzed.push_back(record_json(r));
      if (r.quartic.fidelity > r.baseline.fidelity) ++wins;
      if (!best || r.quartic.fidelity > best->quartic.fidelity) best = &r;
    }
    sweep.push_back({{"phi2", phi2},
                     {"analyzed", analyzed},
                     {"quartic_wins", wins},
                     {"best", best ? record_json(*best) : json(nullptr)}});
  }
  const json doc = {{"phi2", cfg.phi2},
                    {"records", summary.records},
                    {"analyzed", summary.analyzed},
                    {"quartic_wins", summary.quartic_wins},
                    {"sweep", sweep}};
  write_text_file(args.out / "summary.json", doc.dump(2) + "\n");
  manifest.artifacts.insert(manifest.artifacts.begin() + 1, "summary.json");
  manifest.finished_at = utc_timestamp();
  write_manifest(args.out, manifest);
  return summary;
}

WignerSummary cmd_wigner(const WignerArgs &args) {
  require(args.points >= 2, ErrorCode::config, "grid needs at least two points per axis");
  require(args.window > 0.0, ErrorCode::config, "grid window must be positive");
  fock::DensityOp rho;
  try {
    rho = fock::as_density(fock::state_from_json(read_text_file(args.state)));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::io) throw;
    fail(ErrorCode::io, "unreadable state file " + args.state.string() + ": " + e.what());
  }
  const auto axis = fock::linspace(-args.window, args.window, args.points);
  const fock::WignerGrid grid = fock::wigner(rho, axis, axis);
  write_text_file(args.out, fock::wigner_to_csv(grid));
  if (args.render) {
    fs::path png = args.out;
    png.replace_extension(".png");
    write_text_file(png, render_wigner_png(grid));
  }
  return WignerSummary{grid.values.minCoeff(), grid.integral()};
}

}  // namespace cvforge::app

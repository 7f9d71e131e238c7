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

#include <cmath>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "ppo/checkpoint.hpp"
#include "ppo/mlp.hpp"
#include "ppo/policy.hpp"
#include "ppo/ppo.hpp"
#include "ppo/training.hpp"

using namespace cvforge;
using namespace cvforge::ppo;

namespace {

const double kLog2Pi = std::log(2.0 * std::numbers::pi);

RMatrix random_matrix(int rows, int cols, CounterStream &rng) {
  RMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
  return m;
}

RVector random_vector(int n, CounterStream &rng) { return random_matrix(n, 1, rng).col(0); }

// Largest componentwise relative error with an absolute floor.
double rel_error(const RVector &a, const RVector &b, double floor = 1e-6) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a(i) - b(i)) / std::max({std::abs(a(i)), std::abs(b(i)), floor}));
  return worst;
}

template <typename F>
RVector central_difference(F f, RVector x, double h = 1e-5) {
  RVector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double keep = x(i);
    x(i) = keep + h;
    const double up = f(x);
    x(i) = keep - h;
    const double down = f(x);
    x(i) = keep;
    g(i) = (up - down) / (2 * h);
  }
  return g;
}

Policy small_policy(std::uint64_t seed, int obs_dim = 6) {
  Policy p(PolicyShape{obs_dim, {8, 5}, 3});
  p.initialize(seed);
  // Move away from the tiny actor head so every path carries signal.
  CounterStream rng(seed + 100);
  p.params() += 0.3 * random_vector(static_cast<int>(p.params().size()), rng);
  return p;
}

// Minibatch whose ratios sit well inside or well outside the clip band.
Minibatch random_minibatch(const Policy &p, int batch, CounterStream &rng) {
  Minibatch mb;
  mb.obs = random_matrix(p.shape().obs_dim, batch, rng);
  mb.actions = random_matrix(3, batch, rng);
  const RVector logp = p.log_prob(p.mean(mb.obs), mb.actions);
  mb.old_log_prob.resize(batch);
  for (int b = 0; b < batch; ++b) {
    const double shift = (b % 3 == 0) ? 0.05 : (b % 3 == 1 ? 0.6 : -0.6);
    mb.old_log_prob(b) = logp(b) - shift;
  }
  mb.advantages = random_vector(batch, rng);
  mb.returns = random_vector(batch, rng);
  return mb;
}

}  // namespace

TEST_CASE("mlp basics") {
  Mlp net({4, 6, 2});
  RVector theta = RVector::Zero(net.param_count());
  CHECK(net.param_count() == 6 * 5 + 2 * 7);
  CounterStream rng(1);
  const RMatrix x = random_matrix(4, 3, rng);
  CHECK(net.forward(theta.data(), x).cwiseAbs().maxCoeff() == 0.0);

  // One linear layer: d(|Wx|^2/2)/dW = (Wx) x^T.
  Mlp lin({3, 2});
  RVector w = random_vector(static_cast<int>(lin.param_count()), rng);
  const RMatrix xi = random_matrix(3, 1, rng);
  Mlp::Cache cache;
  const RMatrix y = lin.forward(w.data(), xi, &cache);
  RVector g = RVector::Zero(w.size());
  lin.backward(w.data(), cache, y, g.data());
  const RMatrix expected = y * xi.transpose();
  CHECK((lin.weight(g.data(), 0) - expected).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((lin.bias(g.data(), 0) - y.col(0)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mlp gradients match finite differences") {
  CounterStream rng(2);
  Mlp net({5, 7, 6, 3});
  RVector theta = 0.7 * random_vector(static_cast<int>(net.param_count()), rng);
  const RMatrix x = random_matrix(5, 4, rng);
  const RMatrix target = random_matrix(3, 4, rng);
  auto loss = [&](const RVector &t) {
    return 0.5 * (net.forward(t.data(), x) - target).squaredNorm();
  };
  Mlp::Cache cache;
  const RMatrix y = net.forward(theta.data(), x, &cache);
  RVector g = RVector::Zero(theta.size());
  RMatrix dx;
  net.backward(theta.data(), cache, y - target, g.data(), &dx);
  CHECK(rel_error(g, central_difference(loss, theta)) <= 1e-4);

  auto loss_x = [&](const RVector &flat) {
    const RMatrix xx = Eigen::Map<const RMatrix>(flat.data(), 5, 4);
    return 0.5 * (net.forward(theta.data(), xx) - target).squaredNorm();
  };
  const RVector xflat = Eigen::Map<const RVector>(x.data(), x.size());
  CHECK(rel_error(Eigen::Map<const RVector>(dx.data(), dx.size()), central_difference(loss_x, xflat)) <= 1e-4);
}

TEST_CASE("orthogonal initialization") {
  CounterStream rng(3);
  for (auto [r, c] : {std::pair{8, 3}, std::pair{3, 8}, std::pair{5, 5}}) {
    const RMatrix q = orthogonal_matrix(r, c, rng);
    const RMatrix gram = r >= c ? RMatrix(q.transpose() * q) : RMatrix(q * q.transpose());
    CHECK((gram - RMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() < 1e-12);
  }
  Policy p(PolicyShape{10, {16, 8}, 3});
  p.initialize(4);
  CHECK(p.log_std().cwiseAbs().maxCoeff() == 0.0);
  const auto w_out = p.actor().weight(p.params().data(), 2);
  const RMatrix gram = w_out * w_out.transpose();
  CHECK((gram - 1e-4 * RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gaussian policy formulas") {
  Policy p = small_policy(5);
  p.log_std() << -0.3, 0.2, 0.5;
  CounterStream rng(6);
  const RMatrix obs = random_matrix(6, 4, rng);
  const RMatrix mu = p.mean(obs);
  const RVector lp = p.log_prob(mu, mu);
  for (Eigen::Index b = 0; b < lp.size(); ++b)
    CHECK(lp(b) == doctest::Approx(-p.log_std().sum() - 1.5 * kLog2Pi).epsilon(1e-14));
  CHECK(p.entropy() == doctest::Approx(p.log_std().sum() + 1.5 * (1 + kLog2Pi)).epsilon(1e-14));

  const Policy::Act det = p.act(obs, nullptr, true);
  CHECK(det.actions == mu);
  p.log_std().setConstant(-40.0);
  const Policy::Act sampled = p.act(obs, &rng);
  CHECK((sampled.actions - mu).cwiseAbs().maxCoeff() < 1e-15);

  const Policy::Eval ev = p.evaluate(obs, sampled.actions);
  CHECK((ev.log_prob - sampled.log_prob).cwiseAbs().maxCoeff() == 0.0);
  CHECK((ev.value - sampled.value).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ppo loss gradients match finite differences") {
  CounterStream rng(7);
  PpoConfig cfg;
  cfg.ent_coef = 0.01;
  for (std::uint64_t seed : {11u, 12u}) {
    Policy p = small_policy(seed);
    const Minibatch mb = random_minibatch(p, 9, rng);
    RVector g;
    ppo_loss(p, mb, cfg, &g);
    auto total = [&](const RVector &t) {
      Policy q = p;
      q.params() = t;
      return ppo_loss(q, mb, cfg, nullptr).total;
    };
    const RVector fd = central_difference(total, p.params());
    CHECK(rel_error(g, fd) <= 1e-4);

    // Actor-only and critic-only graphs.
    PpoConfig actor_only = cfg;
    actor_only.vf_coef = 0.0;
    ppo_loss(p, mb, actor_only, &g);
    auto actor_loss = [&](const RVector &t) {
      Policy q = p;
      q.params() = t;
      return ppo_loss(q, mb, actor_only, nullptr).total;
    };
    CHECK(rel_error(g, central_difference(actor_loss, p.params())) <= 1e-4);
    CHECK(g.segment(p.critic_offset(), p.critic().param_count()).cwiseAbs().maxCoeff() == 0.0);

    Minibatch flat = mb;
    flat.advantages.setZero();
    PpoConfig critic_only = cfg;
    critic_only.ent_coef = 0.0;
    ppo_loss(p, flat, critic_only, &g);
    CHECK(g.segment(0, p.critic_offset()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(g.segment(p.log_std_offset(), 3).cwiseAbs().maxCoeff() == 0.0);
    auto critic_loss = [&](const RVector &t) {
      Policy q = p;
      q.params() = t;
      return ppo_loss(q, flat, critic_only, nullptr).total;
    };
    CHECK(rel_error(g, central_difference(critic_loss, p.params())) <= 1e-4);
  }
}

TEST_CASE("clipped side carries no gradient") {
  CounterStream rng(8);
  Policy p = small_policy(13);
  PpoConfig cfg;
  cfg.vf_coef = 0.0;
  Minibatch mb = random_minibatch(p, 6, rng);
  const RVector logp = p.log_prob(p.mean(mb.obs), mb.actions);
  for (int b = 0; b < 6; ++b) {
    const bool up = b % 2 == 0;
    mb.advantages(b) = up ? 1.0 + b : -1.0 - b;
    const double ratio = up ? 1.0 + 2 * cfg.clip_range : 1.0 - 2 * cfg.clip_range;
    mb.old_log_prob(b) = logp(b) - std::log(ratio);
  }
  RVector g;
  const LossTerms t = ppo_loss(p, mb, cfg, &g);
  CHECK(t.clip_fraction == 1.0);
  CHECK(g.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("replaying the rollout policy") {
  CounterStream rng(9);
  Policy p = small_policy(14);
  Minibatch mb = random_minibatch(p, 10, rng);
  mb.old_log_prob = p.log_prob(p.mean(mb.obs), mb.actions);
  PpoConfig cfg;
  RVector g;
  const LossTerms t = ppo_loss(p, mb, cfg, &g);
  CHECK(t.mean_ratio == 1.0);
  CHECK(t.clip_fraction == 0.0);
  CHECK(t.policy_loss == doctest::Approx(-mb.advantages.mean()).epsilon(1e-14));
}

TEST_CASE("adam") {
  RVector x(3);
  x << 1.0, -2.0, 0.5;
  AdamState st(3);
  RVector g(3);
  g << 0.3, -4.0, 1e-3;
  RVector before = x;
  adam_step(x, st, g, 0.01);
  for (int i = 0; i < 3; ++i)
    CHECK(x(i) - before(i) == doctest::Approx(-0.01 * g(i) / (std::abs(g(i)) + kAdamEps)).epsilon(1e-9));

  before = x;
  const RVector m = st.m, v = st.v;
  adam_step(x, st, RVector::Zero(3), 0.01);
  CHECK((st.m - kAdamBeta1 * m).norm() < 1e-15);
  CHECK((st.v - kAdamBeta2 * v).norm() < 1e-15);
  // Zero gradients still move along the decaying first moment.
  AdamState fresh(3);
  RVector y = before;
  adam_step(y, fresh, RVector::Zero(3), 0.01);
  CHECK(y == before);

  RVector z(4);
  z << 1.0, -0.7, 0.4, 0.9;
  AdamState bowl(4);
  int steps = 0;
  for (; steps < 5000 && z.norm() >= 1e-3; ++steps) adam_step(z, bowl, 2.0 * z, 1e-3);
  CHECK(z.norm() < 1e-3);
  MESSAGE("quadratic bowl steps: " << steps);
}

TEST_CASE("generalized advantage estimation") {
  CounterStream rng(10);
  const int T = 10, E = 3;
  RMatrix rewards = random_matrix(T, E, rng);
  RMatrix zeros = RMatrix::Zero(T, E);
  RVector last = RVector::Zero(E);

  GaeResult g = compute_gae(rewards, zeros, zeros, last, 0.99, 0.0);
  CHECK((g.advantages - rewards).cwiseAbs().maxCoeff() == 0.0);

  RMatrix single = zeros;
  single(T - 1, 0) = single(T - 1, 1) = single(T - 1, 2) = 1.0;
  g = compute_gae(rewards, zeros, single, last, 1.0, 1.0);
  for (int e = 0; e < E; ++e)
    for (int t = 0; t < T; ++t)
      CHECK(g.advantages(t, e) == doctest::Approx(rewards.col(e).tail(T - t).sum()).epsilon(1e-12));

  // Brute force: explicit discounted sum of TD errors up to the episode end.
  const RMatrix values = random_matrix(T, E, rng);
  RMatrix dones = zeros;
  dones(3, 0) = dones(7, 1) = dones(0, 2) = dones(9, 2) = 1.0;
  last = random_vector(E, rng);
  const double gamma = 0.97, lam = 0.9;
  g = compute_gae(rewards, values, dones, last, gamma, lam);
  for (int e = 0; e < E; ++e)
    for (int t = 0; t < T; ++t) {
      double a = 0.0, w = 1.0;
      for (int k = t; k < T; ++k) {
        const double next = k + 1 < T ? values(k + 1, e) : last(e);
        const double delta = rewards(k, e) + gamma * next * (1 - dones(k, e)) - values(k, e);
        a += w * delta;
        if (dones(k, e) != 0.0) break;
        w *= gamma * lam;
      }
      CHECK(std::abs(g.advantages(t, e) - a) <= 1e-12);
      CHECK(std::abs(g.returns(t, e) - (a + values(t, e))) <= 1e-12);
    }
}

namespace {

RolloutBuffer filled_buffer(const Policy &p, CounterStream &rng, long steps, int envs,
                            double reward_value) {
  RolloutBuffer buf(steps, envs, p.shape().obs_dim);
  for (long t = 0; t < steps; ++t) {
    const RMatrix obs = random_matrix(p.shape().obs_dim, envs, rng);
    const Policy::Act a = p.act(obs, &rng);
    buf.add(obs, a.actions, a.log_prob, a.value, RVector::Constant(envs, reward_value),
            std::vector<bool>(envs, t % 4 == 3));
  }
  buf.compute_returns_and_advantage(RVector::Zero(envs), 0.99, 0.95);
  return buf;
}

}  // namespace

TEST_CASE("ppo update properties") {
  CounterStream rng(11);
  Policy p = small_policy(15);
  const RolloutBuffer buf = filled_buffer(p, rng, 8, 4, 0.5);
  PpoConfig cfg;
  cfg.n_envs = 4;
  cfg.n_steps = 32;
  cfg.batch_size = 8;

  PpoConfig none = cfg;
  none.n_epochs = 0;
  Policy q = p;
  AdamState adam;
  CounterStream shuffle(1);
  ppo_update(q, adam, buf, none, shuffle);
  CHECK(q.params() == p.params());

  // Constant reward: the critic moves toward the returns.
  const double before = (buf.returns() - p.value(buf.observations())).squaredNorm();
  ppo_update(q, adam, buf, cfg, shuffle);
  const double after = (buf.returns() - q.value(buf.observations())).squaredNorm();
  CHECK(after < before);

  // Advantage normalization makes the update invariant to affine rescaling.
  RolloutBuffer scaled = buf;
  scaled.set_targets((3.0 * buf.advantages().array() + 2.0).matrix(), buf.returns());
  Policy a1 = p, a2 = p;
  AdamState s1, s2;
  CounterStream r1(5), r2(5);
  PpoConfig actor_only = cfg;
  actor_only.vf_coef = 0.0;
  ppo_update(a1, s1, buf, actor_only, r1);
  ppo_update(a2, s2, scaled, actor_only, r2);
  CHECK((a1.params() - a2.params()).cwiseAbs().maxCoeff() < 1e-9);

  RolloutBuffer broken = buf;
  RVector adv = buf.advantages();
  adv(0) = std::numeric_limits<double>::quiet_NaN();
  broken.set_targets(adv, buf.returns());
  Policy b = p;
  AdamState sb;
  CHECK_THROWS_AS(ppo_update(b, sb, broken, cfg, shuffle), Error);
}

TEST_CASE("gaussian bandit") {
  // One constant observation, one-step episodes, reward -(a0 - c)^2.
  const double c = 0.4;
  Policy p(PolicyShape{1, {8}, 3});
  p.initialize(21);
  PpoConfig cfg;
  cfg.n_envs = 64;
  cfg.n_steps = 256;
  cfg.batch_size = 64;
  cfg.n_epochs = 5;
  cfg.learning_rate = 3e-3;
  AdamState adam;
  CounterStream act(1), shuffle(2);
  const RMatrix obs = RMatrix::Ones(1, 64);
  int updates = 0;
  double mean = 0.0;
  for (; updates < 200; ++updates) {
    RolloutBuffer buf(4, 64, 1);
    for (int t = 0; t < 4; ++t) {
      const Policy::Act a = p.act(obs, &act);
      RVector r(64);
      for (int e = 0; e < 64; ++e) r(e) = -std::pow(a.actions(0, e) - c, 2);
      buf.add(obs, a.actions, a.log_prob, a.value, r, std::vector<bool>(64, true));
    }
    buf.compute_returns_and_advantage(RVector::Zero(64), cfg.gamma, cfg.gae_lambda);
    ppo_update(p, adam, buf, cfg, shuffle);
    mean = p.mean(obs.col(0))(0, 0);
    if (updates > 20 && std::abs(mean - c) < 0.01) break;
  }
  MESSAGE("bandit updates: " << updates << ", mean " << mean);
  CHECK(std::abs(mean - c) < 0.05);
}

TEST_CASE("checkpoint round trip") {
  TrainState st;
  st.policy = small_policy(16);
  st.adam = AdamState(st.policy.params().size());
  CounterStream rng(12);
  st.adam.m = random_vector(static_cast<int>(st.adam.m.size()), rng);
  st.adam.v = random_vector(static_cast<int>(st.adam.v.size()), rng).cwiseAbs();
  st.adam.t = 17;
  st.num_timesteps = 123456;
  st.updates = 3;
  st.episodes = 99;
  st.act_counter = 1ULL << 40;
  st.shuffle_counter = 77;
  st.seed = 5;
  st.config_hash = "00ff";
  const std::string bytes = encode_checkpoint(st);
  const TrainState back = decode_checkpoint(bytes);
  CHECK(back.policy.params() == st.policy.params());
  CHECK(back.adam.m == st.adam.m);
  CHECK(back.adam.v == st.adam.v);
  CHECK(back.adam.t == 17);
  CHECK(back.num_timesteps == 123456);
  CHECK(back.act_counter == st.act_counter);
  CHECK(back.config_hash == "00ff");
  CHECK(back.policy.shape().hidden == st.policy.shape().hidden);
  CHECK(encode_checkpoint(back) == bytes);

  // Little-endian f64 payload after the header.
  const std::size_t payload = bytes.size() - 3 * 8 * st.policy.params().size();
  double first = 0.0;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(static_cast<unsigned char>(bytes[payload + i])) << (8 * i);
  std::memcpy(&first, &bits, 8);
  CHECK(first == st.policy.params()(0));

  CHECK_THROWS_AS(decode_checkpoint("garbage"), Error);
  CHECK_THROWS_AS(decode_checkpoint(bytes.substr(0, bytes.size() - 5)), Error);
}

namespace {

TrainConfig tiny_training() {
  TrainConfig cfg;
  cfg.episode.m = 3;
  cfg.episode.loop.dim = 6;
  cfg.hidden = {8, 4};
  cfg.ppo.n_envs = 2;
  cfg.ppo.n_steps = 12;
  cfg.ppo.batch_size = 6;
  cfg.ppo.n_epochs = 2;
  cfg.ppo.total_timesteps = 24;
  cfg.seed = 3;
  return cfg;
}

}  // namespace

TEST_CASE("training is deterministic and resumable") {
  const TrainConfig cfg = tiny_training();
  auto run = [&](TrainState &st) {
    std::vector<std::vector<std::string>> rows;
    TrainCallbacks cb;
    cb.on_update = [&](const UpdateLogRow &r, const std::vector<EpisodeLogRow> &eps) {
      rows.push_back(training_log_fields(r));
      for (const auto &e : eps) rows.push_back(episode_log_fields(e));
    };
    train(st, cfg, cb);
    return rows;
  };
  TrainState a = make_train_state(cfg), b = make_train_state(cfg);
  const auto la = run(a), lb = run(b);
  CHECK(la == lb);
  CHECK(a.policy.params() == b.policy.params());
  CHECK(a.num_timesteps == 24);
  CHECK(a.updates == 2);
  CHECK(a.episodes == 8);

  // Resume: the step counter continues from the checkpoint.
  TrainState resumed = decode_checkpoint(encode_checkpoint(a));
  TrainConfig more = cfg;
  more.ppo.total_timesteps = 36;
  std::vector<long> seen;
  TrainCallbacks cb;
  cb.on_update = [&](const UpdateLogRow &r, const std::vector<EpisodeLogRow> &) { seen.push_back(r.update); };
  int checkpoints = 0;
  cb.on_checkpoint = [&](const TrainState &) { ++checkpoints; };
  train(resumed, more, cb);
  CHECK(seen == std::vector<long>{3});
  CHECK(resumed.num_timesteps == 36);
  CHECK(checkpoints == 1);
  CHECK(resumed.adam.t == a.adam.t + 4);

  TrainConfig other = cfg;
  other.episode.loop.dim = 7;
  TrainState wrong = make_train_state(cfg);
  CHECK_THROWS_AS(train(wrong, other), Error);
}

TEST_CASE("episode summaries") {
  std::vector<env::StepOutput> h(7);
  const double taus[] = {0.4, 1.0, 0.3, 0.6, 0.0, 0.2, 0.0};
  const int ns[] = {1, 2, 3, 4, 5, 6, 7};
  for (int j = 0; j < 7; ++j) {
    h[j].info.action.tau = taus[j];
    h[j].info.n = ns[j];
  }
  h.back().info.fidelity = 0.25;
  EpisodeEval ev = summarize_episode(h, 1e-3);
  CHECK(ev.steps_before_tau0 == 6);
  CHECK(ev.photons_before_tau0 == 1 + 2 + 3 + 4 + 5 + 6);
  CHECK(ev.steps_between_resets == 4);
  CHECK(ev.terminal_fidelity == 0.25);

  h[5].info.action.tau = 0.0;
  ev = summarize_episode(h, 1e-3);
  CHECK(ev.steps_before_tau0 == 4);
  CHECK(ev.steps_between_resets == 2);

  h[6].info.action.tau = 0.5;
  ev = summarize_episode(h, 1e-3);
  CHECK(ev.steps_before_tau0 == 7);
}

TEST_CASE("evaluation with the null policy") {
  env::EpisodeConfig ep;
  ep.m = 4;
  const Policy null = make_null_policy(PolicyShape{31 * 31, {8}, 3});
  EvalConfig cfg;
  cfg.n_sets = 2;
  cfg.episodes_per_set = 3;
  const EvalReport rep = evaluate(null, ep, cfg);
  REQUIRE(rep.episodes.size() == 6);
  env::CubicEnv fresh(ep, 1);
  fresh.reset();
  for (const EpisodeEval &e : rep.episodes) {
    CHECK_FALSE(e.success);
    CHECK(e.terminal_fidelity == doctest::Approx(fresh.initial_info().fidelity).epsilon(1e-9));
    CHECK(e.steps_before_tau0 == 0);
    CHECK(e.photons_before_tau0 == 0);
  }
  CHECK(rep.success_rate == 0.0);
  const EvalReport again = evaluate(null, ep, cfg);
  for (std::size_t i = 0; i < rep.episodes.size(); ++i)
    CHECK(again.episodes[i].terminal_fidelity == rep.episodes[i].terminal_fidelity);

  CHECK_THROWS_AS(evaluate(make_null_policy(PolicyShape{25, {8}, 3}), ep, cfg), Error);
}

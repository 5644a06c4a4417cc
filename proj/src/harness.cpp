#include "ratt/harness.hpp"

#include <chrono>
#include <cmath>

#include "ratt/adversary.hpp"
#include "ratt/caa.hpp"
#include "ratt/errors.hpp"
#include "ratt/planner.hpp"

namespace ratt {

Scenario generate_scenario(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.n_robots < 1 || spec.n_targets < 1) {
    throw ConfigInvalid("generate_scenario: robot and target counts must be positive");
  }
  if (spec.input_nu.empty() || spec.input_omega.empty()) {
    throw ConfigInvalid("generate_scenario: empty control-input grid");
  }

  Rng rng(seed);
  Scenario scenario;
  scenario.tau = spec.tau;
  scenario.arena_w = spec.arena_w;
  scenario.arena_h = spec.arena_h;
  scenario.sensor = spec.sensor;
  scenario.seed = seed;

  std::vector<ControlInput> inputs;
  for (double nu : spec.input_nu) {
    for (double omega : spec.input_omega) inputs.push_back({nu, omega});
  }

  scenario.robots.reserve(spec.n_robots);
  for (int i = 0; i < spec.n_robots; ++i) {
    RobotSpec robot;
    robot.state.x = rng.uniform(0.0, spec.arena_w);
    robot.state.y = rng.uniform(0.0, spec.arena_h);
    robot.state.theta = 0.0;
    robot.inputs = inputs;
    scenario.robots.push_back(std::move(robot));
  }

  scenario.targets.reserve(spec.n_targets);
  for (int j = 0; j < spec.n_targets; ++j) {
    TargetSpec target;
    target.state.y1 = rng.uniform(0.0, spec.arena_w);
    target.state.y2 = rng.uniform(0.0, spec.arena_h);
    const double speed = spec.target_speed[rng.uniform_int(
        static_cast<int>(spec.target_speed.size()))];
    const double sign = rng.uniform_int(2) == 0 ? 1.0 : -1.0;
    target.state.nu = sign * speed;
    target.state.omega = spec.target_omega[rng.uniform_int(
        static_cast<int>(spec.target_omega.size()))];
    target.state.sigma_q = spec.sigma_q;

    const auto [n1, n2] = rng.normal2();
    target.belief.mean = Vec2(target.state.y1 + spec.initial_mean_std * n1,
                              target.state.y2 + spec.initial_mean_std * n2);
    target.belief.cov = spec.initial_cov * Mat2::Identity();
    scenario.targets.push_back(std::move(target));
  }
  return scenario;
}

const char* to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::Opt: return "opt";
    case PlannerKind::Ratt: return "ratt";
    case PlannerKind::NrOpt: return "nropt";
    case PlannerKind::Greedy: return "greedy";
    case PlannerKind::Random: return "random";
  }
  return "?";
}

const char* to_string(AttackMode mode) {
  switch (mode) {
    case AttackMode::None: return "none";
    case AttackMode::WorstCase: return "worst-case";
    case AttackMode::BoundedRational: return "bounded-rational";
  }
  return "?";
}

PlannerKind planner_from_string(const std::string& name) {
  if (name == "opt") return PlannerKind::Opt;
  if (name == "ratt") return PlannerKind::Ratt;
  if (name == "nropt") return PlannerKind::NrOpt;
  if (name == "greedy") return PlannerKind::Greedy;
  if (name == "random") return PlannerKind::Random;
  throw ConfigInvalid("unknown planner '" + name + "'");
}

AttackMode attack_mode_from_string(const std::string& name) {
  if (name == "none") return AttackMode::None;
  if (name == "worst-case") return AttackMode::WorstCase;
  if (name == "bounded-rational") return AttackMode::BoundedRational;
  throw ConfigInvalid("unknown attack mode '" + name + "'");
}

namespace {

// Stream salts: every draw category gets its own stream off the trial seed so
// planner choice cannot shift another category's sequence.
constexpr std::uint64_t kProcessStream = 0x70726f63;
constexpr std::uint64_t kMeasureStream = 0x6d656173;
constexpr std::uint64_t kPlannerStream = 0x706c616e;

Assignment plan_for(const Objective& objective, PlannerKind planner, int alpha_s,
                    long long alpha_c, std::uint64_t trial_seed,
                    const TrialOptions& options) {
  switch (planner) {
    case PlannerKind::Opt:
      return plan_opt(objective, alpha_s, alpha_c, {options.eval_cap, false}).assignment;
    case PlannerKind::Ratt:
      return plan_ratt(objective, alpha_s, alpha_c).assignment;
    case PlannerKind::NrOpt:
      return plan_nropt(objective, {options.eval_cap, false}).assignment;
    case PlannerKind::Greedy:
      return plan_greedy(objective).assignment;
    case PlannerKind::Random: {
      Rng rng(derive_seed(trial_seed, kPlannerStream));
      return plan_random(objective.scenario(), rng);
    }
  }
  throw ConfigInvalid("unknown planner kind");
}

}  // namespace

TrialRecord run_trial(const Scenario& scenario, PlannerKind planner, AttackMode mode,
                      int alpha_s, long long alpha_c, std::uint64_t trial_seed,
                      const TrialOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = scenario.robot_count();
  const int m = scenario.target_count();

  const Objective objective(scenario);

  const std::uint64_t evals_before = objective.evals();
  const Assignment assignment =
      plan_for(objective, planner, alpha_s, alpha_c, trial_seed, options);
  const std::uint64_t plan_evals = objective.evals() - evals_before;

  AttackRealization attack;  // empty for AttackMode::None
  if (mode == AttackMode::WorstCase) {
    attack = worst_case_attack(objective, assignment, alpha_s, alpha_c,
                               {options.eval_cap, false})
                 .attack;
  } else if (mode == AttackMode::BoundedRational) {
    attack = bounded_rational_attack(objective, assignment, alpha_s, alpha_c).attack;
  }

  std::vector<int> winning;
  objective.team(assignment, attack, &winning);
  std::vector<bool> sensing_hit(n, false);
  for (int i : attack.sensing) sensing_hit[i] = true;
  std::vector<bool> fused(n, false);
  for (int i : winning) fused[i] = !sensing_hit[i];

  // True target step, shared across planners via the trial-seeded stream.
  Rng process_rng(derive_seed(trial_seed, kProcessStream));
  std::vector<TargetState> truth(m);
  for (int j = 0; j < m; ++j) {
    const auto [n1, n2] = process_rng.normal2();
    const double sq = scenario.targets[j].state.sigma_q;
    truth[j] = step_target(scenario.targets[j].state, scenario.tau, Vec2(sq * n1, sq * n2));
  }

  // Standard-normal measurement draws for every (robot, target) pair in fixed
  // order; survivors scale theirs by their own noise covariance.
  Rng measure_rng(derive_seed(trial_seed, kMeasureStream));
  std::vector<std::vector<Vec2>> std_draws(n, std::vector<Vec2>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto [n1, n2] = measure_rng.normal2();
      std_draws[i][j] = Vec2(n1, n2);
    }
  }

  double trace_sum = 0.0;
  double mse_sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const TargetBelief& prior = objective.predicted_beliefs()[j];
    const Vec2 true_pos(truth[j].y1, truth[j].y2);

    FusedUpdateInput fusion{prior, {}};
    std::vector<std::pair<Measurement, RobotState>> sampled;
    for (int i = 0; i < n; ++i) {
      if (!fused[i]) continue;
      const RobotState& next = objective.next_state(i, assignment.input_index[i]);
      fusion.contributions.push_back(
          {measurement_jacobian(next, prior.mean),
           measure(next, prior.mean, scenario.sensor).second});

      const auto [z_true, r_true] = measure(next, true_pos, scenario.sensor);
      Measurement z = z_true;
      z.range += std::sqrt(r_true(0, 0)) * std_draws[i][j].x();
      z.bearing = wrap_angle(z.bearing + std::sqrt(r_true(1, 1)) * std_draws[i][j].y());
      z.range = std::max(z.range, 0.0);
      sampled.emplace_back(z, next);
    }

    trace_sum += fused_update_cov(fusion).trace();
    const Vec2 estimate = posterior_mean(prior, sampled, scenario.sensor);
    mse_sum += (estimate - true_pos).squaredNorm();
  }

  TrialRecord record;
  record.planner = to_string(planner);
  record.attack_mode = to_string(mode);
  record.alpha_s = alpha_s;
  record.alpha_c = alpha_c;
  record.alpha_cs = caa(n, alpha_c).alpha_cs;
  record.avg_trace = trace_sum / m;
  record.mse = mse_sum / m;
  record.evals = plan_evals;
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return record;
}

}  // namespace ratt

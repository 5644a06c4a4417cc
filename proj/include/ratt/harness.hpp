#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ratt/objective.hpp"
#include "ratt/rng.hpp"
#include "ratt/scenario.hpp"

namespace ratt {

// Random-instance recipe. Input/velocity grids default to the desk-scale
// setup: 12 robot inputs, six signed target speeds by three turn rates.
struct GeneratorSpec {
  int n_robots{4};
  int n_targets{4};
  double arena_w{100.0};
  double arena_h{100.0};
  double tau{1.0};
  std::vector<double> input_nu{-3.0, -1.0, 1.0, 3.0};
  std::vector<double> input_omega{0.0, 1.0, 3.0};
  std::vector<double> target_speed{5.0 / 3.0, 5.0 / 2.0, 5.0};  // sign drawn separately
  std::vector<double> target_omega{1.0 / 10.0, 1.0 / 20.0, 1.0 / 30.0};
  double sigma_q{1.0};
  double initial_cov{4.0};       // Sigma_0 = initial_cov * I
  double initial_mean_std{2.0};  // belief mean = true position + N(0, std^2 I)
  SensorNoiseParams sensor;
};

// Uniform positions inside the arena, zero robot headings, deterministic
// under the seed.
Scenario generate_scenario(const GeneratorSpec& spec, std::uint64_t seed);

enum class PlannerKind { Opt, Ratt, NrOpt, Greedy, Random };
enum class AttackMode { None, WorstCase, BoundedRational };

const char* to_string(PlannerKind kind);
const char* to_string(AttackMode mode);
PlannerKind planner_from_string(const std::string& name);
AttackMode attack_mode_from_string(const std::string& name);

struct TrialOptions {
  double eval_cap{1e8};
};

struct TrialRecord {
  std::string planner;
  std::string attack_mode;
  int alpha_s{0};
  long long alpha_c{0};
  int alpha_cs{0};
  double avg_trace{0.0};  // posterior covariance trace, averaged over targets [m^2]
  double mse{0.0};        // squared position error, averaged over targets [m^2]
  std::uint64_t evals{0};
  double wall_time_s{0.0};
};

// One planning-plus-simulation step: plan, realize the attack, advance the
// true targets with process noise, sample measurements from surviving robots
// inside the winning subgroup, run the EKF, and score. All noise draws derive
// from trial_seed alone, so every planner sees identical realizations.
TrialRecord run_trial(const Scenario& scenario, PlannerKind planner, AttackMode mode,
                      int alpha_s, long long alpha_c, std::uint64_t trial_seed,
                      const TrialOptions& options = {});

}  // namespace ratt

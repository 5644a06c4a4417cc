#pragma once

// Shared helpers for the unit suites: small deterministic scenario builders
// and independent oracle implementations that must not reuse library code
// paths they are checking.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ratt/harness.hpp"
#include "ratt/objective.hpp"
#include "ratt/rng.hpp"
#include "ratt/scenario.hpp"

namespace ratt::testing {

inline Scenario random_scenario(int n_robots, int n_targets, std::uint64_t seed,
                                int inputs_per_nu = 2) {
  GeneratorSpec spec;
  spec.n_robots = n_robots;
  spec.n_targets = n_targets;
  if (inputs_per_nu == 1) {
    spec.input_nu = {1.0};
    spec.input_omega = {0.0, 1.0};
  }
  return generate_scenario(spec, seed);
}

// Four-input grid used by the certification experiments.
inline GeneratorSpec small_input_spec(int n_robots, int n_targets) {
  GeneratorSpec spec;
  spec.n_robots = n_robots;
  spec.n_targets = n_targets;
  spec.input_nu = {-1.0, 1.0};
  spec.input_omega = {0.0, 1.0};
  return spec;
}

// Independent standard-form sequential Kalman covariance update:
// K = S H^T (H S H^T + R)^-1, S' = (I - K H) S. Plain arithmetic, no library
// calls, used as the oracle for the information-form fusion.
inline Mat2 sequential_kf_cov(Mat2 cov, const std::vector<InfoContribution>& contributions) {
  for (const auto& c : contributions) {
    const Mat2 s = c.H * cov * c.H.transpose() + c.R;
    const double det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
    Mat2 s_inv;
    s_inv << s(1, 1) / det, -s(0, 1) / det, -s(1, 0) / det, s(0, 0) / det;
    const Mat2 gain = cov * c.H.transpose() * s_inv;
    cov = (Mat2::Identity() - gain * c.H) * cov;
  }
  return cov;
}

inline std::vector<std::vector<int>> bfs_components(int n, const std::vector<Edge>& blocked) {
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, true));
  for (int i = 0; i < n; ++i) ok[i][i] = false;
  for (const Edge& e : blocked) ok[e.first][e.second] = ok[e.second][e.first] = false;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s}, members;
    seen[s] = true;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      members.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (ok[v][w] && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

// Straightforward re-evaluation of the team objective: BFS components over
// the complete graph minus blocked edges, per-component phi, max. Kept
// deliberately naive and separate from Objective::team.
inline double brute_force_team_phi(const Objective& objective, const Assignment& assignment,
                                   const AttackRealization& attack) {
  const int n = objective.scenario().robot_count();
  double best = 0.0;
  for (const auto& component : bfs_components(n, attack.edges)) {
    std::vector<int> contributors;
    for (int v : component) {
      bool attacked = false;
      for (int a : attack.sensing) attacked |= (a == v);
      if (!attacked) contributors.push_back(v);
    }
    best = std::max(best, objective.phi(assignment, contributors));
  }
  return best;
}

}  // namespace ratt::testing

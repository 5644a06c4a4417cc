#include "ratt/objective.hpp"

#include <algorithm>
#include <numeric>

#include "ratt/errors.hpp"

namespace ratt {

std::vector<std::vector<int>> connected_components(int n, std::span<const Edge> blocked) {
  std::vector<std::vector<bool>> cut(n, std::vector<bool>(n, false));
  for (const Edge& e : blocked) {
    cut[e.first][e.second] = cut[e.second][e.first] = true;
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!cut[i][j]) parent[find(i)] = find(j);
    }
  }

  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);

  std::vector<std::vector<int>> components;
  for (int v = 0; v < n; ++v) {
    if (!by_root[v].empty()) components.push_back(std::move(by_root[v]));
  }
  // Roots are not necessarily the smallest members; order by smallest member.
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Objective::Objective(const Scenario& scenario) : scenario_(&scenario) {
  const int n = scenario.robot_count();
  const int m = scenario.target_count();

  priors_.reserve(m);
  prior_info_.reserve(m);
  prior_trace_.reserve(m);
  for (const TargetSpec& t : scenario.targets) {
    TargetBelief prior = predict(t.belief, t.state, scenario.tau);
    Mat2 info = invert2(prior.cov, 1e-12);
    // Round-trip the prior trace through the same inversion used for
    // posteriors so phi(empty set) cancels bit-exactly.
    prior_trace_.push_back(invert2(info).trace());
    prior_info_.push_back(info);
    priors_.push_back(prior);
  }

  next_states_.resize(n);
  info_.resize(n);
  for (int i = 0; i < n; ++i) {
    const RobotSpec& robot = scenario.robots[i];
    const int n_inputs = static_cast<int>(robot.inputs.size());
    next_states_[i].resize(n_inputs);
    info_[i].resize(n_inputs);
    for (int u = 0; u < n_inputs; ++u) {
      const RobotState next = step_robot(robot.state, robot.inputs[u], scenario.tau);
      next_states_[i][u] = next;
      info_[i][u].reserve(m);
      for (int j = 0; j < m; ++j) {
        const Vec2& at = priors_[j].mean;
        const auto [z, r] = measure(next, at, scenario.sensor);
        (void)z;
        const Mat2 h = measurement_jacobian(next, at);
        info_[i][u].push_back(h.transpose() * invert2(r) * h);
      }
    }
  }
}

double Objective::phi(const Assignment& a, std::span<const int> contributing) const {
  counter_.bump();
  double total = 0.0;
  const int m = static_cast<int>(priors_.size());
  for (int j = 0; j < m; ++j) {
    Mat2 info = prior_info_[j];
    for (int i : contributing) {
      info += info_[i][a.input_index[i]][j];
    }
    total += prior_trace_[j] - invert2(info).trace();
  }
  return total;
}

double Objective::team(const Assignment& a, const AttackRealization& attack,
                       std::vector<int>* winning_component) const {
  const auto components = connected_components(scenario_->robot_count(), attack.edges);

  std::vector<bool> sensing_hit(scenario_->robot_count(), false);
  for (int i : attack.sensing) sensing_hit[i] = true;

  double best = -1.0;
  const std::vector<int>* winner = nullptr;
  std::vector<int> contributors;
  for (const auto& component : components) {
    contributors.clear();
    for (int i : component) {
      if (!sensing_hit[i]) contributors.push_back(i);
    }
    const double value = phi(a, contributors);
    if (value > best) {
      best = value;
      winner = &component;
    }
  }
  if (winning_component && winner) *winning_component = *winner;
  return best;
}

}  // namespace ratt

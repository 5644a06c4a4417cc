#include "ratt/adversary.hpp"

#include <algorithm>
#include <numeric>

#include "ratt/caa.hpp"
#include "ratt/combinatorics.hpp"
#include "ratt/errors.hpp"

namespace ratt {

AttackResult worst_case_attack(const Objective& objective, const Assignment& assignment,
                               int alpha_s, long long alpha_c,
                               const AdversaryOptions& options) {
  const int n = objective.scenario().robot_count();
  if (attack_runtime_budget(n, alpha_s, alpha_c) > options.eval_cap) {
    throw ScaleExceeded("worst_case_attack: attack enumeration above cap");
  }

  const std::uint64_t evals_before = objective.evals();
  AttackResult result;
  bool have_best = false;
  // Lexicographic enumeration + strict improvement keeps the first minimizer,
  // i.e. the lexicographically smallest (sensing, edges) pair.
  for_each_attack(n, alpha_s, alpha_c, !options.sweep_all_attack_sizes,
                  [&](const AttackRealization& attack) {
    const double value = objective.team(assignment, attack);
    if (!have_best || value < result.value) {
      result.attack = attack;
      result.value = value;
      have_best = true;
    }
  });
  result.evals = objective.evals() - evals_before;
  return result;
}

BoundedRationalResult bounded_rational_attack(const Objective& objective,
                                              const Assignment& assignment, int alpha_s,
                                              long long alpha_c,
                                              const BoundedRationalOptions& options) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();

  std::vector<double> quality(n, 0.0);
  Assignment scratch = assignment;
  for (int i = 0; i < n; ++i) {
    const int single[1] = {i};
    if (options.rank_by_solo_argmax) {
      const int n_inputs = static_cast<int>(scenario.robots[i].inputs.size());
      for (int u = 0; u < n_inputs; ++u) {
        scratch.input_index[i] = u;
        quality[i] = std::max(quality[i], objective.phi(scratch, single));
      }
      scratch.input_index[i] = assignment.input_index[i];
    } else {
      quality[i] = objective.phi(assignment, single);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&quality](int a, int b) {
    if (quality[a] != quality[b]) return quality[a] > quality[b];
    return a < b;
  });

  const int alpha_cs = caa(n, alpha_c).alpha_cs;
  const int n_sensing = std::min(alpha_s, n);
  const int n_isolated = std::min(alpha_cs, n - n_sensing);  // clamp when over-budget

  BoundedRationalResult result;
  result.attack.sensing.assign(order.begin(), order.begin() + n_sensing);
  std::sort(result.attack.sensing.begin(), result.attack.sensing.end());
  result.isolated.assign(order.begin() + n_sensing, order.begin() + n_sensing + n_isolated);
  std::sort(result.isolated.begin(), result.isolated.end());

  std::vector<bool> cut(n, false);
  for (int i : result.isolated) cut[i] = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cut[i] || cut[j]) result.attack.edges.emplace_back(i, j);
    }
  }
  result.blocked_edge_count = static_cast<long long>(result.attack.edges.size());
  return result;
}

double attack_runtime_budget(int n_robots, int alpha_s, long long alpha_c) {
  return binomial(n_robots, alpha_s) *
         binomial(n_robots * (n_robots - 1) / 2, static_cast<int>(alpha_c));
}

}  // namespace ratt

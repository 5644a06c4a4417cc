#include "ratt/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ratt/caa.hpp"
#include "ratt/combinatorics.hpp"
#include "ratt/errors.hpp"

namespace ratt {

namespace {

// Individually-best input per robot: argmax over U_i of phi({i}).
// Ties resolve to the smallest input index.
struct SoloBest {
  int input{0};
  double value{0.0};
};

std::vector<SoloBest> solo_bests(const Objective& objective) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();
  std::vector<SoloBest> best(n);
  Assignment scratch = Assignment::zeros(n);
  for (int i = 0; i < n; ++i) {
    const int single[1] = {i};
    double top = -1.0;
    int top_input = 0;
    const int n_inputs = static_cast<int>(scenario.robots[i].inputs.size());
    for (int u = 0; u < n_inputs; ++u) {
      scratch.input_index[i] = u;
      const double value = objective.phi(scratch, single);
      if (value > top) {
        top = value;
        top_input = u;
      }
    }
    best[i] = {top_input, top};
  }
  return best;
}

std::vector<int> input_counts(const Scenario& scenario) {
  std::vector<int> counts;
  counts.reserve(scenario.robots.size());
  for (const RobotSpec& r : scenario.robots) {
    counts.push_back(static_cast<int>(r.inputs.size()));
  }
  return counts;
}

}  // namespace

std::vector<GreedyPick> greedy_assign(
    std::span<const int> candidates, std::span<const int> input_counts,
    const std::function<double(const Assignment&, std::span<const int>)>& eval,
    std::vector<int> base, double base_value, Assignment& assignment) {
  std::vector<GreedyPick> picks;
  std::vector<int> remaining(candidates.begin(), candidates.end());
  std::sort(remaining.begin(), remaining.end());

  std::vector<int> trial_set;
  while (!remaining.empty()) {
    GreedyPick best{-1, 0, 0.0};
    double best_value = 0.0;
    bool have_best = false;
    for (int v : remaining) {
      trial_set = base;
      trial_set.insert(std::upper_bound(trial_set.begin(), trial_set.end(), v), v);
      const int saved = assignment.input_index[v];
      for (int u = 0; u < input_counts[v]; ++u) {
        assignment.input_index[v] = u;
        const double value = eval(assignment, trial_set);
        if (!have_best || value - base_value > best.gain) {
          best = {v, u, value - base_value};
          best_value = value;
          have_best = true;
        }
      }
      assignment.input_index[v] = saved;
    }

    assignment.input_index[best.robot] = best.input;
    base.insert(std::upper_bound(base.begin(), base.end(), best.robot), best.robot);
    base_value = best_value;  // equals eval(base) by purity; saves one oracle call
    picks.push_back(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best.robot));
  }
  return picks;
}

PlanResult plan_ratt(const Objective& objective, int alpha_s, long long alpha_c,
                     const RattOptions& options) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();
  const std::uint64_t evals_before = objective.evals();

  PlanResult result;
  result.assignment = Assignment::zeros(n);
  result.alpha = alpha_s + caa(n, alpha_c).alpha_cs;

  const std::vector<SoloBest> solo = solo_bests(objective);

  if (result.alpha >= n) {
    for (int i = 0; i < n; ++i) {
      result.assignment.input_index[i] = solo[i].input;
      result.baits.push_back(i);
    }
    result.evals = objective.evals() - evals_before;
    return result;
  }

  // Bait selection: the alpha robots with the largest individual qualities,
  // ties to the smaller id.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&solo](int a, int b) {
    if (solo[a].value != solo[b].value) return solo[a].value > solo[b].value;
    return a < b;
  });
  result.baits.assign(order.begin(), order.begin() + result.alpha);
  std::sort(result.baits.begin(), result.baits.end());
  for (int i : result.baits) {
    result.assignment.input_index[i] = solo[i].input;
  }

  std::vector<int> rest(order.begin() + result.alpha, order.end());
  std::sort(rest.begin(), rest.end());

  std::vector<int> base;
  double base_value = 0.0;
  if (options.condition_on_baits && !result.baits.empty()) {
    base = result.baits;
    base_value = objective.phi(result.assignment, base);
  }
  const auto eval = [&objective](const Assignment& a, std::span<const int> s) {
    return objective.phi(a, s);
  };
  const std::vector<GreedyPick> picks = greedy_assign(
      rest, input_counts(scenario), eval, std::move(base), base_value, result.assignment);
  for (const GreedyPick& p : picks) result.greedy_order.push_back(p.robot);

  result.evals = objective.evals() - evals_before;
  return result;
}

namespace {

// Odometer over the full input product in lexicographic input-index order.
// Returns false when the caller stops early.
bool for_each_assignment(std::span<const int> counts,
                         const std::function<bool(const Assignment&)>& visit) {
  Assignment a = Assignment::zeros(static_cast<int>(counts.size()));
  while (true) {
    if (!visit(a)) return false;
    int p = static_cast<int>(counts.size()) - 1;
    while (p >= 0 && a.input_index[p] == counts[p] - 1) {
      a.input_index[p] = 0;
      --p;
    }
    if (p < 0) return true;
    ++a.input_index[p];
  }
}

double input_product(std::span<const int> counts) {
  double product = 1.0;
  for (int c : counts) product *= static_cast<double>(c);
  return product;
}

}  // namespace

OptPlanResult plan_opt(const Objective& objective, int alpha_s, long long alpha_c,
                       const OptOptions& options) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();
  const std::vector<int> counts = input_counts(scenario);

  const double attack_count = binomial(n, alpha_s) *
                              binomial(n * (n - 1) / 2, static_cast<int>(alpha_c));
  if (input_product(counts) * attack_count > options.eval_cap) {
    throw ScaleExceeded("plan_opt: input product times attack count above cap");
  }

  // The attack set is assignment-independent: precompute each realization's
  // per-component contributor lists once instead of re-partitioning inside
  // the product loop.
  std::vector<std::vector<std::vector<int>>> attack_cases;
  for_each_attack(n, alpha_s, alpha_c, !options.sweep_all_attack_sizes,
                  [&](const AttackRealization& attack) {
    std::vector<bool> sensing_hit(n, false);
    for (int i : attack.sensing) sensing_hit[i] = true;
    std::vector<std::vector<int>> contributor_sets;
    for (const auto& component : connected_components(n, attack.edges)) {
      std::vector<int> contributors;
      for (int i : component) {
        if (!sensing_hit[i]) contributors.push_back(i);
      }
      contributor_sets.push_back(std::move(contributors));
    }
    attack_cases.push_back(std::move(contributor_sets));
  });

  const std::uint64_t evals_before = objective.evals();
  OptPlanResult result;
  bool have_best = false;

  for_each_assignment(counts, [&](const Assignment& a) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& contributor_sets : attack_cases) {
      double team = 0.0;
      for (const auto& contributors : contributor_sets) {
        team = std::max(team, objective.phi(a, contributors));
      }
      worst = std::min(worst, team);
      // a dominated assignment cannot strictly beat the incumbent
      if (have_best && worst <= result.worst_value) break;
    }
    if (!have_best || worst > result.worst_value) {
      result.assignment = a;
      result.worst_value = worst;
      have_best = true;
    }
    return true;
  });

  result.evals = objective.evals() - evals_before;
  return result;
}

ValuePlanResult plan_nropt(const Objective& objective, const OptOptions& options) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();
  const std::vector<int> counts = input_counts(scenario);
  if (input_product(counts) > options.eval_cap) {
    throw ScaleExceeded("plan_nropt: input product above cap");
  }

  const std::uint64_t evals_before = objective.evals();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  ValuePlanResult result;
  bool have_best = false;
  for_each_assignment(counts, [&](const Assignment& a) {
    const double value = objective.phi(a, all);
    if (!have_best || value > result.value) {
      result.assignment = a;
      result.value = value;
      have_best = true;
    }
    return true;
  });
  result.evals = objective.evals() - evals_before;
  return result;
}

ValuePlanResult plan_greedy(const Objective& objective) {
  const Scenario& scenario = objective.scenario();
  const int n = scenario.robot_count();
  const std::uint64_t evals_before = objective.evals();

  ValuePlanResult result;
  result.assignment = Assignment::zeros(n);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const auto eval = [&objective](const Assignment& a, std::span<const int> s) {
    return objective.phi(a, s);
  };
  const std::vector<GreedyPick> picks =
      greedy_assign(all, input_counts(scenario), eval, {}, 0.0, result.assignment);
  for (const GreedyPick& p : picks) result.value += p.gain;
  result.evals = objective.evals() - evals_before;
  return result;
}

Assignment plan_random(const Scenario& scenario, Rng& rng) {
  Assignment a = Assignment::zeros(scenario.robot_count());
  for (int i = 0; i < scenario.robot_count(); ++i) {
    a.input_index[i] = rng.uniform_int(static_cast<int>(scenario.robots[i].inputs.size()));
  }
  return a;
}

}  // namespace ratt

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ratt/objective.hpp"
#include "ratt/rng.hpp"

namespace ratt {

struct PlanResult {
  Assignment assignment;
  std::vector<int> baits;         // robots given their individually-best input
  std::vector<int> greedy_order;  // remaining robots, in selection order
  int alpha{0};                   // conjectured total sensing attacks
  std::uint64_t evals{0};         // phi-oracle calls spent by this plan
};

struct RattOptions {
  // The printed pseudo-code conditions greedy marginals on the greedy set
  // only; this flag conditions on baits as well (ablation).
  bool condition_on_baits{false};
};

// Robust planner: approximate communication attacks via CAA, protect
// alpha = alpha_s + alpha_cs robots with bait inputs, fill the rest greedily.
// When alpha >= N every robot takes its individual best input.
PlanResult plan_ratt(const Objective& objective, int alpha_s, long long alpha_c,
                     const RattOptions& options = {});

struct OptOptions {
  double eval_cap{1e8};
  // Enumerate attacks at exact budget sizes (default) or sweep all smaller
  // sizes too; antitonicity makes both minima equal.
  bool sweep_all_attack_sizes{false};
};

struct OptPlanResult {
  Assignment assignment;
  double worst_value{0.0};  // max-min objective value attained
  std::uint64_t evals{0};
};

// Exhaustive max-min search over the full input product and all attacks
// within budget. Throws ScaleExceeded above the evaluation cap. Ties broken
// by lexicographic input-index order.
OptPlanResult plan_opt(const Objective& objective, int alpha_s, long long alpha_c,
                       const OptOptions& options = {});

struct ValuePlanResult {
  Assignment assignment;
  double value{0.0};
  std::uint64_t evals{0};
};

// Exhaustive search ignoring attacks (maximizes phi over the full team).
ValuePlanResult plan_nropt(const Objective& objective, const OptOptions& options = {});

// Standard greedy over all robots, no baits.
ValuePlanResult plan_greedy(const Objective& objective);

// Independent uniform draw from each robot's input set.
Assignment plan_random(const Scenario& scenario, Rng& rng);

// --- building block, exposed for property tests on synthetic oracles ---

struct GreedyPick {
  int robot{0};
  int input{0};
  double gain{0.0};
};

// Sequential marginal-gain maximization over (robot, input) pairs. candidates
// are assigned one per round; base holds any robots whose inputs in
// `assignment` are already fixed and should condition the marginals
// (base_value must equal eval(assignment, base)). eval must be normalized so
// an empty base starts from 0. Ties: highest gain, then smallest robot id,
// then smallest input index.
std::vector<GreedyPick> greedy_assign(
    std::span<const int> candidates, std::span<const int> input_counts,
    const std::function<double(const Assignment&, std::span<const int>)>& eval,
    std::vector<int> base, double base_value, Assignment& assignment);

}  // namespace ratt

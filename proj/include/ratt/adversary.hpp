#pragma once

#include <cstdint>
#include <vector>

#include "ratt/objective.hpp"

namespace ratt {

struct AdversaryOptions {
  double eval_cap{1e8};
  bool sweep_all_attack_sizes{false};
};

struct AttackResult {
  AttackRealization attack;
  double value{0.0};
  std::uint64_t evals{0};
};

// Problem 1's inner minimization by exhaustive search: the exact worst joint
// sensing/communication attack against the given assignment. Ties resolve to
// the lexicographically smallest (sensing set, edge set).
AttackResult worst_case_attack(const Objective& objective, const Assignment& assignment,
                               int alpha_s, long long alpha_c,
                               const AdversaryOptions& options = {});

struct BoundedRationalOptions {
  // Default ranking evaluates each robot at its planner-chosen input (the
  // attacker observes the realized next states); the alternative ranks by the
  // robot's solo argmax over its whole input set.
  bool rank_by_solo_argmax{false};
};

struct BoundedRationalResult {
  AttackRealization attack;
  std::vector<int> isolated;       // robots cut off entirely
  long long blocked_edge_count{0};  // may exceed alpha_c; reported, not capped
};

// Heuristic attacker of the large-scale evaluations: removes sensing from the
// top alpha_s robots by individual quality, then isolates the next
// caa(N, alpha_c).alpha_cs robots by blocking all their incident edges.
BoundedRationalResult bounded_rational_attack(const Objective& objective,
                                              const Assignment& assignment, int alpha_s,
                                              long long alpha_c,
                                              const BoundedRationalOptions& options = {});

// Attack-enumeration count C(N, alpha_s) * C(N(N-1)/2, alpha_c), used for
// scale-cap decisions (excludes the input product).
double attack_runtime_budget(int n_robots, int alpha_s, long long alpha_c);

}  // namespace ratt

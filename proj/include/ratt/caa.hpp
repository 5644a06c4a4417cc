#pragma once

#include <vector>

namespace ratt {

// Communication-attack approximation output. ebar[n-1] is the maximal number
// of edges the team can keep when its largest subgroup has n robots, for
// n = 1..N; e_r is the edge count surviving alpha_c attacks.
struct CaaResult {
  int n_max{0};
  int alpha_cs{0};
  long long e_r{0};
  std::vector<long long> ebar;
};

// Maximal surviving edge count when the team splits into q = floor(N/n)
// subgroups of size n plus one of size r = N - n*q (the even split a
// worst-case attacker aims for). Integer arithmetic throughout.
long long ebar(int n_robots, int n);

// Converts a communication-attack budget into an equivalent sensing-attack
// count: the smallest feasible largest-subgroup size n_max given the
// surviving edges, with alpha_cs = N - n_max. Throws BudgetExceeded when
// alpha_c exceeds the N(N-1)/2 edges of the complete graph.
CaaResult caa(int n_robots, long long alpha_c);

}  // namespace ratt

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ratt/objective.hpp"

namespace ratt {

// C(n, k) in double precision; used only for scale estimates, never for
// exact enumeration bookkeeping.
double binomial(int n, int k);

// All edges of the complete graph on n vertices, lexicographically ordered.
std::vector<Edge> complete_graph_edges(int n);

// Visits every size-k subset of {0..n-1} in lexicographic order. The span
// passed to the visitor is ascending. Returning false stops early.
void for_each_subset_of_size(int n, int k,
                             const std::function<bool(std::span<const int>)>& visit);

// Visits attack realizations within the given budgets in lexicographic
// (sensing-set, edge-set) order. exact_sizes follows the planner's default of
// enumerating |A_s| = alpha_s, |A_c| = alpha_c only; the sweep covers all
// smaller sizes too (validation mode).
void for_each_attack(int n_robots, int alpha_s, long long alpha_c, bool exact_sizes,
                     const std::function<void(const AttackRealization&)>& visit);

}  // namespace ratt

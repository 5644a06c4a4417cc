#include "ratt/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "ratt/errors.hpp"

namespace ratt {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return result;
}

std::vector<Edge> complete_graph_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

void for_each_subset_of_size(int n, int k,
                             const std::function<bool(std::span<const int>)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) return;
    // advance to the next lexicographic combination
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

void for_each_attack(int n_robots, int alpha_s, long long alpha_c, bool exact_sizes,
                     const std::function<void(const AttackRealization&)>& visit) {
  const std::vector<Edge> edges = complete_graph_edges(n_robots);
  const int n_edges = static_cast<int>(edges.size());
  if (alpha_s < 0 || alpha_s > n_robots || alpha_c < 0 || alpha_c > n_edges) {
    throw BudgetExceeded("for_each_attack: budgets outside Problem-1 constraints");
  }

  const int s_lo = exact_sizes ? alpha_s : 0;
  for (int s = s_lo; s <= alpha_s; ++s) {
    for_each_subset_of_size(n_robots, s, [&](std::span<const int> sensing) {
      const long long c_lo = exact_sizes ? alpha_c : 0;
      for (long long c = c_lo; c <= alpha_c; ++c) {
        for_each_subset_of_size(n_edges, static_cast<int>(c),
                                [&](std::span<const int> edge_idx) {
          AttackRealization attack;
          attack.sensing.assign(sensing.begin(), sensing.end());
          attack.edges.reserve(edge_idx.size());
          for (int e : edge_idx) attack.edges.push_back(edges[e]);
          visit(attack);
          return true;
        });
      }
      return true;
    });
  }
}

}  // namespace ratt

#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ratt/scenario.hpp"

namespace ratt {

// Undirected communication edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// One candidate control input per robot, as an index into that robot's U_i.
struct Assignment {
  std::vector<int> input_index;

  static Assignment zeros(int n) { return Assignment{std::vector<int>(n, 0)}; }
};

struct AttackRealization {
  std::vector<int> sensing;  // robots whose measurements are removed
  std::vector<Edge> edges;   // blocked communication links
};

// Counts objective-oracle calls; tolerates concurrent increments.
class EvalCounter {
 public:
  void bump() const { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t value() const { return count_.load(std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::uint64_t> count_{0};
};

// Maximal connected components of the complete graph on n vertices minus the
// blocked edges. Components are sorted by smallest member, members ascending.
std::vector<std::vector<int>> connected_components(int n, std::span<const Edge> blocked);

// The tracking-quality set function over robot subsets at fixed candidate
// inputs. Construction predicts every target belief one step and caches the
// information matrix each (robot, input, target) triple would contribute, so
// subset evaluations reduce to 2x2 accumulation and inversion.
class Objective {
 public:
  explicit Objective(const Scenario& scenario);

  // Sum over targets of trace(prior) - trace(posterior) when exactly the
  // given robots contribute measurements. Empty set gives 0 exactly.
  // Counts one oracle call.
  double phi(const Assignment& a, std::span<const int> contributing) const;

  // Team quality under an attack: partition by blocked edges, drop
  // sensing-attacked robots' contributions within each component (they still
  // relay), and take the best component. Optionally reports the winning
  // component (deterministic smallest-member tie rule).
  double team(const Assignment& a, const AttackRealization& attack,
              std::vector<int>* winning_component = nullptr) const;

  const Scenario& scenario() const { return *scenario_; }
  const std::vector<TargetBelief>& predicted_beliefs() const { return priors_; }
  const RobotState& next_state(int robot, int input) const {
    return next_states_[robot][input];
  }

  std::uint64_t evals() const { return counter_.value(); }

 private:
  const Scenario* scenario_;
  std::vector<TargetBelief> priors_;
  std::vector<Mat2> prior_info_;    // inverted predicted covariances
  std::vector<double> prior_trace_;  // trace(invert(prior_info)), so phi(empty) == 0 bit-exactly
  std::vector<std::vector<RobotState>> next_states_;       // [robot][input]
  std::vector<std::vector<std::vector<Mat2>>> info_;       // [robot][input][target]
  EvalCounter counter_;
};

}  // namespace ratt

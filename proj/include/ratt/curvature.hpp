#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ratt/scenario.hpp"

namespace ratt {

// A normalized set function given by an oracle over subsets of `ground`.
// eval receives an ascending id list and must be pure.
struct SetFunctionOracle {
  std::vector<int> ground;
  std::function<double(std::span<const int>)> eval;
};

struct CurvatureOptions {
  int max_ground{8};     // 2^max_ground oracle calls for tabulation
  double tol{1e-12};     // slack for monotonicity / submodularity validation
};

// Total curvature (brute force): 1 minus the smallest ratio of any two
// marginals of the same element. Requires a non-decreasing oracle (validated
// on all marginals first, throws NotMonotone otherwise). Elements whose
// marginals all vanish contribute ratio 1, matching the modular limit.
double total_curvature(const SetFunctionOracle& f, const CurvatureOptions& options = {});

// Curvature of a non-decreasing submodular oracle (both validated
// exhaustively; throws NotSubmodular / NotMonotone / ZeroSingleton):
// 1 - min_x [f(X) - f(X\{x})] / f({x}).
double curvature(const SetFunctionOracle& f, const CurvatureOptions& options = {});

struct BoundCertificate {
  double ratio{0.0};  // RATT worst-case value over OPT worst-case value
  double bound{0.0};  // Theorem-1 bound from the total curvature
  std::optional<double> c_phi;
  std::optional<double> k_phi;  // present only when submodularity validates
  bool satisfied{false};
};

struct CertifyOptions {
  double eval_cap{1e8};
  CurvatureOptions curvature;
};

// End-to-end certification on one instance: plans with RATT and OPT,
// evaluates both under their exact worst-case attacks, measures the total
// curvature of the robot-subset oracle at RATT's fixed assignment, and checks
// ratio >= min[(1-c)^3, (1-c)^2 / alpha_cs] (the first term alone when
// alpha_cs = 0). A zero optimal value certifies trivially with ratio 1.
BoundCertificate certify_theorem1(const Scenario& scenario, int alpha_s, long long alpha_c,
                                  const CertifyOptions& options = {});

}  // namespace ratt

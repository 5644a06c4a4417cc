#include "ratt/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ratt/adversary.hpp"
#include "ratt/caa.hpp"
#include "ratt/errors.hpp"
#include "ratt/objective.hpp"
#include "ratt/planner.hpp"

namespace ratt {

namespace {

// f tabulated over all subsets of the ground set, indexed by bitmask.
std::vector<double> tabulate(const SetFunctionOracle& f, const CurvatureOptions& options) {
  const int n = static_cast<int>(f.ground.size());
  if (n > options.max_ground) {
    throw ScaleExceeded("curvature: ground set above tabulation cap");
  }
  std::vector<double> values(std::size_t{1} << n);
  std::vector<int> subset;
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    subset.clear();
    for (int b = 0; b < n; ++b) {
      if (mask & (std::size_t{1} << b)) subset.push_back(f.ground[b]);
    }
    values[mask] = f.eval(subset);
  }
  if (std::abs(values[0]) > options.tol) {
    throw std::invalid_argument("curvature: oracle is not normalized (f(empty) != 0)");
  }
  return values;
}

void validate_monotone(const std::vector<double>& values, int n, double tol) {
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & bit) continue;
      if (values[mask | bit] - values[mask] < -tol) {
        throw NotMonotone("curvature: negative marginal found");
      }
    }
  }
}

}  // namespace

double total_curvature(const SetFunctionOracle& f, const CurvatureOptions& options) {
  const int n = static_cast<int>(f.ground.size());
  const std::vector<double> values = tabulate(f, options);
  validate_monotone(values, n, options.tol);
  if (n == 0) return 0.0;

  double min_ratio = 1.0;
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    double min_marginal = std::numeric_limits<double>::infinity();
    double max_marginal = -std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & bit) continue;
      const double marginal = values[mask | bit] - values[mask];
      min_marginal = std::min(min_marginal, marginal);
      max_marginal = std::max(max_marginal, marginal);
    }
    // min over pairs of num/den = smallest marginal over largest; pairs with
    // a vanishing denominator are skipped, and an element with no usable
    // denominator contributes ratio 1.
    const double ratio =
        max_marginal > options.tol ? std::max(0.0, min_marginal) / max_marginal : 1.0;
    min_ratio = std::min(min_ratio, ratio);
  }
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

double curvature(const SetFunctionOracle& f, const CurvatureOptions& options) {
  const int n = static_cast<int>(f.ground.size());
  const std::vector<double> values = tabulate(f, options);
  validate_monotone(values, n, options.tol);
  if (n == 0) return 0.0;

  // Local exchange check: x's marginal may not grow when the context grows.
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & bit) continue;
      for (int y = 0; y < n; ++y) {
        const std::size_t ybit = std::size_t{1} << y;
        if (y == b || !(mask & ybit)) continue;
        const double small = values[(mask ^ ybit) | bit] - values[mask ^ ybit];
        const double large = values[mask | bit] - values[mask];
        if (small < large - options.tol) {
          throw NotSubmodular("curvature: marginal grew with the context");
        }
      }
    }
  }

  const std::size_t full = (std::size_t{1} << n) - 1;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    const double singleton = values[bit];
    if (singleton <= 0.0) {
      throw ZeroSingleton("curvature: f({x}) must be positive");
    }
    min_ratio = std::min(min_ratio, (values[full] - values[full ^ bit]) / singleton);
  }
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

BoundCertificate certify_theorem1(const Scenario& scenario, int alpha_s, long long alpha_c,
                                  const CertifyOptions& options) {
  const Objective objective(scenario);
  const int n = scenario.robot_count();

  const PlanResult ratt = plan_ratt(objective, alpha_s, alpha_c);
  const AttackResult ratt_worst = worst_case_attack(objective, ratt.assignment, alpha_s,
                                                    alpha_c, {options.eval_cap, false});
  const OptPlanResult opt = plan_opt(objective, alpha_s, alpha_c, {options.eval_cap, false});

  BoundCertificate cert;
  cert.ratio = opt.worst_value <= 1e-15 ? 1.0 : ratt_worst.value / opt.worst_value;

  // Robot-subset oracle at RATT's fixed assignment.
  SetFunctionOracle oracle;
  oracle.ground.resize(n);
  for (int i = 0; i < n; ++i) oracle.ground[i] = i;
  oracle.eval = [&objective, &ratt](std::span<const int> subset) {
    return objective.phi(ratt.assignment, subset);
  };

  cert.c_phi = total_curvature(oracle, options.curvature);
  const int alpha_cs = caa(n, alpha_c).alpha_cs;
  const double survive = 1.0 - *cert.c_phi;
  cert.bound = survive * survive * survive;
  if (alpha_cs > 0) {
    cert.bound = std::min(cert.bound, survive * survive / alpha_cs);
  }

  try {
    cert.k_phi = curvature(oracle, options.curvature);
  } catch (const NotSubmodular&) {
    // Expected for this objective; the c_phi bound is the operative one.
  }

  cert.satisfied = cert.ratio >= cert.bound - 1e-9;
  return cert;
}

}  // namespace ratt

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ratt/models.hpp"

namespace ratt {

struct TargetBelief {
  Vec2 mean{0.0, 0.0};
  Mat2 cov{Mat2::Identity()};
};

// One robot's linearized measurement of a target: H at the linearization
// point and the (SPD) measurement-noise covariance there.
struct InfoContribution {
  Mat2 H;
  Mat2 R;
};

struct FusedUpdateInput {
  TargetBelief prior;  // belief after predict
  std::vector<InfoContribution> contributions;
};

// Closed-form 2x2 inverse; throws SingularPrior when |det| <= min_det.
Mat2 invert2(const Mat2& m, double min_det = 1e-15);

// Prediction under the circular-motion model; A = I because the positional
// increment is state-independent, so cov' = cov + sigma_q^2 I.
TargetBelief predict(const TargetBelief& b, const TargetState& t, double tau);

// Information-form fusion of any number of robot contributions:
//   post = (prior^-1 + sum_k H_k^T R_k^-1 H_k)^-1.
// Contribution order cannot affect the result beyond summation rounding;
// callers pass contributions in robot-id order for bit reproducibility.
Mat2 fused_update_cov(const FusedUpdateInput& in);

// Sequential EKF mean update, relinearizing H and R at the current mean for
// each measurement. Innovation bearings are wrapped into (-pi, pi]. Returns
// the posterior position estimate; the covariance used by the tracking
// objective comes from fused_update_cov instead.
Vec2 posterior_mean(const TargetBelief& prior,
                    std::span<const std::pair<Measurement, RobotState>> measurements,
                    const SensorNoiseParams& noise);

}  // namespace ratt

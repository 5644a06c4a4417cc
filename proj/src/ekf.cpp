#include "ratt/ekf.hpp"

#include <cmath>

#include "ratt/errors.hpp"

namespace ratt {

Mat2 invert2(const Mat2& m, double min_det) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) <= min_det) {
    throw SingularPrior("invert2: determinant below guard");
  }
  Mat2 inv;
  inv(0, 0) = m(1, 1) / det;
  inv(0, 1) = -m(0, 1) / det;
  inv(1, 0) = -m(1, 0) / det;
  inv(1, 1) = m(0, 0) / det;
  return inv;
}

namespace {

Mat2 symmetrize(const Mat2& m) {
  Mat2 s;
  s(0, 0) = m(0, 0);
  s(1, 1) = m(1, 1);
  s(0, 1) = s(1, 0) = 0.5 * (m(0, 1) + m(1, 0));
  return s;
}

}  // namespace

TargetBelief predict(const TargetBelief& b, const TargetState& t, double tau) {
  TargetState at_mean = t;
  at_mean.y1 = b.mean.x();
  at_mean.y2 = b.mean.y();
  const TargetState moved = step_target(at_mean, tau, Vec2::Zero());

  TargetBelief out;
  out.mean = Vec2(moved.y1, moved.y2);
  out.cov = b.cov + t.sigma_q * t.sigma_q * Mat2::Identity();
  return out;
}

Mat2 fused_update_cov(const FusedUpdateInput& in) {
  Mat2 info = invert2(in.prior.cov, 1e-12);
  for (const InfoContribution& c : in.contributions) {
    info += c.H.transpose() * invert2(c.R) * c.H;
  }
  return symmetrize(invert2(info));
}

Vec2 posterior_mean(const TargetBelief& prior,
                    std::span<const std::pair<Measurement, RobotState>> measurements,
                    const SensorNoiseParams& noise) {
  Vec2 mean = prior.mean;
  Mat2 cov = prior.cov;
  for (const auto& [z, robot] : measurements) {
    const auto [h, r] = measure(robot, mean, noise);
    const Mat2 jac = measurement_jacobian(robot, mean);
    const Mat2 s = jac * cov * jac.transpose() + r;
    const Mat2 gain = cov * jac.transpose() * invert2(s);
    Vec2 innovation(z.range - h.range, wrap_angle(z.bearing - h.bearing));
    mean += gain * innovation;
    cov = symmetrize((Mat2::Identity() - gain * jac) * cov);
  }
  return mean;
}

}  // namespace ratt

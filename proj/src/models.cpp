#include "ratt/models.hpp"

#include <cmath>

#include "ratt/errors.hpp"

namespace ratt {

double wrap_angle(double a) {
  // remainder lands in [-pi, pi]; fold the closed bottom end onto +pi.
  double w = std::remainder(a, 2.0 * M_PI);
  if (w <= -M_PI) w = M_PI;
  return w;
}

RobotState step_robot(const RobotState& s, const ControlInput& u, double tau) {
  RobotState next;
  next.x = s.x + u.nu * tau * std::cos(s.theta);
  next.y = s.y + u.nu * tau * std::sin(s.theta);
  next.theta = wrap_angle(s.theta + tau * u.omega);
  return next;
}

TargetState step_target(const TargetState& t, double tau, const Vec2& noise) {
  TargetState next = t;
  next.y1 = t.y1 + t.nu * std::cos(tau * t.omega) + noise.x();
  next.y2 = t.y2 + t.nu * std::sin(tau * t.omega) + noise.y();
  return next;
}

std::pair<Measurement, Mat2> measure(const RobotState& robot, const Vec2& target_pos,
                                     const SensorNoiseParams& noise) {
  const double d1 = target_pos.x() - robot.x;
  const double d2 = target_pos.y() - robot.y;
  const double range = std::sqrt(d1 * d1 + d2 * d2);
  if (range < kMinRange) {
    throw CoincidentPose("measure: robot and target closer than range guard");
  }
  Measurement z;
  z.range = range;
  z.bearing = wrap_angle(std::atan2(d2, d1) - robot.theta);

  const double sr = noise.sigma_r0 + noise.kappa_r * z.range;
  const double sb = noise.sigma_b0 + noise.kappa_b * std::abs(z.bearing);
  Mat2 r = Mat2::Zero();
  r(0, 0) = sr * sr;
  r(1, 1) = sb * sb;
  return {z, r};
}

Mat2 measurement_jacobian(const RobotState& robot, const Vec2& target_pos) {
  const double d1 = target_pos.x() - robot.x;
  const double d2 = target_pos.y() - robot.y;
  const double range = std::sqrt(d1 * d1 + d2 * d2);
  if (range < kMinRange) {
    throw CoincidentPose("measurement_jacobian: range below guard");
  }
  // theta + bearing = atan2(d2, d1); the whole matrix carries the 1/r
  // prefactor, which makes row 2 the exact gradient of atan2.
  const double heading_to_target = std::atan2(d2, d1);
  Mat2 j;
  j(0, 0) = d1 / range;
  j(0, 1) = d2 / range;
  j(1, 0) = -std::sin(heading_to_target) / range;
  j(1, 1) = std::cos(heading_to_target) / range;
  return j;
}

}  // namespace ratt

#pragma once

#include <Eigen/Dense>
#include <utility>

namespace ratt {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Coincidence guard below which the range-bearing Jacobian is singular [m].
constexpr double kMinRange = 1e-6;

struct RobotState {
  double x{0.0};      // [m]
  double y{0.0};      // [m]
  double theta{0.0};  // heading, (-pi, pi]
};

struct ControlInput {
  double nu{0.0};     // linear velocity [m/s]
  double omega{0.0};  // angular velocity [rad/s]
};

struct TargetState {
  double y1{0.0};       // position [m]
  double y2{0.0};       // position [m]
  double nu{0.0};       // [m/s]
  double omega{0.0};    // [rad/s]
  double sigma_q{0.0};  // process-noise std [m]
};

// Affine noise-growth law: sigma_r = sigma_r0 + kappa_r * range,
// sigma_b = sigma_b0 + kappa_b * |bearing|. Defaults are implementation
// choices sized for a 100x100 m arena.
struct SensorNoiseParams {
  double sigma_r0{0.5};   // [m]
  double kappa_r{0.02};   // [m std per m range]
  double sigma_b0{0.05};  // [rad]
  double kappa_b{0.02};   // [rad std per rad |bearing|]
};

struct Measurement {
  double range{0.0};    // [m], >= 0
  double bearing{0.0};  // [rad], (-pi, pi]
};

// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

// Discrete-time unicycle step over one sampling period.
RobotState step_robot(const RobotState& s, const ControlInput& u, double tau);

// Circular-motion target step; pass zero noise for the deterministic
// prediction. Velocity components are carried over unchanged.
TargetState step_target(const TargetState& t, double tau, const Vec2& noise);

// Range-bearing observation of a 2-D point plus its (diagonal, SPD) noise
// covariance. Throws CoincidentPose when the separation is below kMinRange.
std::pair<Measurement, Mat2> measure(const RobotState& robot, const Vec2& target_pos,
                                     const SensorNoiseParams& noise);

// Jacobian of the range-bearing observation w.r.t. the target position,
// evaluated at the given poses. Rows: d(range), d(bearing).
Mat2 measurement_jacobian(const RobotState& robot, const Vec2& target_pos);

}  // namespace ratt

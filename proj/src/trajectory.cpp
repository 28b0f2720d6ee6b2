#include "nlqg/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqg::traj {

double TrajectoryParams::big_n() const { return 2.0 * omega0 * std::cosh(2.0 * theta); }

double TrajectoryParams::delta(double t) const {
  const double by = b * 2.0 * omega0 * t;
  return big_n() * std::cosh(by) + 2.0 * omega0 * std::sinh(by);
}

double TrajectoryParams::delta_prime(double t) const {
  const double by = b * 2.0 * omega0 * t;
  return big_n() * std::cosh(by) - 2.0 * omega0 * std::sinh(by);
}

static double numerator(const TrajectoryParams& p, double t, double sign_osc) {
  const double y = 2.0 * p.omega0 * t;
  const double ch = std::cosh(p.b * y);
  const double sh = std::sinh(p.b * y);
  const double co = std::cos(p.a * y);
  const double si = std::sin(p.a * y);
  return (p.k[0] * t + p.k[1]) * ch + sign_osc * ((p.k[2] * t + p.k[3]) * sh +
                                                  (p.k[4] * t + p.k[5]) * co +
                                                  (p.k[6] * t + p.k[7]) * si);
}

double x_psi(const TrajectoryParams& p, double t) {
  return 2.0 * numerator(p, t, +1.0) / p.delta(t);
}

double x_phi(const TrajectoryParams& p, double t) {
  const double dp = p.delta_prime(t);
  if (std::abs(dp) < 1e-12)
    throw std::domain_error("x_phi: Delta' below 1e-12 (underflow guard)");
  return 2.0 * numerator(p, t, -1.0) / dp;
}

TrajectoryParams reversed_params(const TrajectoryParams& p) {
  TrajectoryParams q = p;
  q.k[0] = -p.k[0];  // k1
  q.k[2] = -p.k[2];  // k3
  q.k[5] = -p.k[5];  // k6
  q.k[6] = -p.k[6];  // k7
  return q;
}

double time_reversal_residual(const TrajectoryParams& p, double t) {
  return std::abs(x_psi(reversed_params(p), -t) - x_phi(p, t));
}

}  // namespace nlqg::traj

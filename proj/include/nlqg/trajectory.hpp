// Closed-form particle trajectories of the nonlinear pair,
//   X(t) = (2/Delta)[(k1 t + k2)cosh(by) + (k3 t + k4)sinh(by)
//                    + (k5 t + k6)cos(ay) + (k7 t + k8)sin(ay)],
// with y = 2 omega0 t, Delta = N cosh(by) + 2 omega0 sinh(by), and the
// partner trajectory carrying Delta' = N cosh(by) - 2 omega0 sinh(by).

#ifndef NLQG_TRAJECTORY_HPP
#define NLQG_TRAJECTORY_HPP

#include <array>

namespace nlqg::traj {

struct TrajectoryParams {
  std::array<double, 8> k{};  // k1..k8
  double omega0 = 1.0;        // > 0
  double a = 0.0;             // Re g
  double b = 0.0;             // Im g
  double theta = 0.0;

  double big_n() const;
  double delta(double t) const;
  double delta_prime(double t) const;
};

double x_psi(const TrajectoryParams& p, double t);

// Throws std::domain_error if |Delta'| underflows below 1e-12.
double x_phi(const TrajectoryParams& p, double t);

// Parameter map (k1,k3,k6,k7 flip sign) realizing x_psi(mapped; -t) = x_phi(k; t).
TrajectoryParams reversed_params(const TrajectoryParams& p);

// |x_psi(mapped k; -t) - x_phi(k; t)|
double time_reversal_residual(const TrajectoryParams& p, double t);

}  // namespace nlqg::traj

#endif  // NLQG_TRAJECTORY_HPP

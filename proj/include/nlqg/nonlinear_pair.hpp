// Exact evaluation of the coupled nonlinear state-vector pair
//   i d/dt |psi> = H|psi> + g |phi><phi|psi>
//   i d/dt |phi> = H|phi> + g*|psi><psi|phi>
// for H = diag(E_n), from the closed-form solution built on an orthonormal
// pair of linear Schroedinger solutions |A>, |B>.

#ifndef NLQG_NONLINEAR_PAIR_HPP
#define NLQG_NONLINEAR_PAIR_HPP

#include <complex>
#include <vector>

namespace nlqg::nlqm {

using cplx = std::complex<double>;

// Complex coupling g = a + i b.
struct Coupling {
  double a = 0.0;
  double b = 0.0;
  cplx g() const { return {a, b}; }
};

// Orthonormal basis pair |A> = sum A_n e^{-iE_n t}|n>, |B> likewise,
// with <A|B> = 0 and unit norms.
struct ModePair {
  std::vector<double> energies;
  std::vector<cplx> coeff_a;
  std::vector<cplx> coeff_b;

  std::size_t dim() const { return energies.size(); }
  // Throws std::domain_error when sizes mismatch, values are non-finite,
  // norms deviate from 1, or |<A|B>| exceeds tol.
  void validate(double tol = 1e-10) const;
};

// Full parameter set of the closed-form solution.
struct NonlinearSolution {
  Coupling coupling;
  double omega0 = 1.0;  // > 0
  double theta = 0.0;
  ModePair modes;

  double big_n() const;  // N = 2 omega0 cosh(2 theta)
  void validate(double tol = 1e-10) const;
};

struct StatePairAt {
  double t = 0.0;
  std::vector<cplx> psi;
  std::vector<cplx> phi;
};

struct NormPair {
  double norm_psi = 0.0;
  double norm_phi = 0.0;
};

struct ResidualPair {
  double res_psi = 0.0;
  double res_phi = 0.0;
};

// <phi(t)|psi(t)> = omega0 (cosh 2 omega0 b t)^{i g / b}; b = 0 gives omega0.
cplx gamma(const NonlinearSolution& sol, double t);

// Smooth-in-t branch of gamma^{1/2} (principal branch at t = 0).
cplx gamma_sqrt(const NonlinearSolution& sol, double t);

// Coefficient snapshots of |psi(t)>, |phi(t)>.
StatePairAt evolve_pair(const NonlinearSolution& sol, double t);

// Closed-form norms ((N + tau)/2, (N - tau)/2), tau = 2 omega0 tanh(2 omega0 b t).
NormPair norms(const NonlinearSolution& sol, double t);

// sum conj(x_n) y_n
cplx inner_product(const std::vector<cplx>& x, const std::vector<cplx>& y);

// Max-norm residual of the two equations of motion at time t, with the time
// derivative taken by a central difference of step h (O(h^2)).
ResidualPair equation_residual(const NonlinearSolution& sol, double t, double h);

}  // namespace nlqg::nlqm

#endif  // NLQG_NONLINEAR_PAIR_HPP

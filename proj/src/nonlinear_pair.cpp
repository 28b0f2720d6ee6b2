#include "nlqg/nonlinear_pair.hpp"

#include <cmath>
#include <stdexcept>

#include "nlqg/numerics.hpp"

namespace nlqg::nlqm {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string("non-finite ") + what);
}

}  // namespace

void ModePair::validate(double tol) const {
  if (energies.empty() || coeff_a.size() != energies.size() ||
      coeff_b.size() != energies.size())
    throw std::domain_error("mode pair: mismatched or empty coefficient lists");
  double na = 0.0, nb = 0.0;
  cplx ab = 0.0;
  for (std::size_t n = 0; n < energies.size(); ++n) {
    require_finite(energies[n], "energy");
    na += std::norm(coeff_a[n]);
    nb += std::norm(coeff_b[n]);
    ab += std::conj(coeff_a[n]) * coeff_b[n];
  }
  if (!std::isfinite(na) || !std::isfinite(nb) || std::abs(na - 1.0) > tol ||
      std::abs(nb - 1.0) > tol)
    throw std::domain_error("mode pair: coefficients not unit-normalized");
  if (!(std::abs(ab) <= tol))
    throw std::domain_error("mode pair: <A|B> != 0");
}

double NonlinearSolution::big_n() const { return 2.0 * omega0 * std::cosh(2.0 * theta); }

void NonlinearSolution::validate(double tol) const {
  require_finite(coupling.a, "coupling");
  require_finite(coupling.b, "coupling");
  require_finite(omega0, "omega0");
  require_finite(theta, "theta");
  if (omega0 <= 0.0) throw std::domain_error("omega0 must be positive");
  modes.validate(tol);
}

// Exponent of gamma: (i g / b) * lncosh(2 omega0 b t); the b -> 0 limit is 0.
static cplx gamma_log(const NonlinearSolution& sol, double t) {
  const double b = sol.coupling.b;
  if (b == 0.0) return {0.0, 0.0};
  const double lc = ln_cosh(2.0 * sol.omega0 * b * t);
  return cplx(0.0, 1.0) * sol.coupling.g() * (lc / b);
}

cplx gamma(const NonlinearSolution& sol, double t) {
  require_finite(t, "time");
  return sol.omega0 * std::exp(gamma_log(sol, t));
}

cplx gamma_sqrt(const NonlinearSolution& sol, double t) {
  require_finite(t, "time");
  return std::sqrt(sol.omega0) * std::exp(0.5 * gamma_log(sol, t));
}

StatePairAt evolve_pair(const NonlinearSolution& sol, double t) {
  sol.validate();
  require_finite(t, "time");
  const cplx i(0.0, 1.0);
  const cplx g = sol.coupling.g();
  const cplx gs = std::conj(g);
  const double sh = std::sinh(sol.theta);
  const double ch = std::cosh(sol.theta);
  const cplx root = gamma_sqrt(sol, t);
  const cplx root_c = std::conj(root);
  const cplx phase_a = std::exp(i * g * sol.omega0 * t) * sh;
  const cplx phase_b = std::exp(-i * g * sol.omega0 * t) * ch;
  const cplx phase_a_phi = std::exp(i * gs * sol.omega0 * t) * sh;
  const cplx phase_b_phi = std::exp(-i * gs * sol.omega0 * t) * ch;

  StatePairAt out;
  out.t = t;
  out.psi.resize(sol.modes.dim());
  out.phi.resize(sol.modes.dim());
  for (std::size_t n = 0; n < sol.modes.dim(); ++n) {
    const cplx en = std::exp(-i * sol.modes.energies[n] * t);
    const cplx an = sol.modes.coeff_a[n] * en;
    const cplx bn = sol.modes.coeff_b[n] * en;
    out.psi[n] = root * (phase_a * an + phase_b * bn);
    out.phi[n] = root_c * (-phase_a_phi * an + phase_b_phi * bn);
  }
  return out;
}

NormPair norms(const NonlinearSolution& sol, double t) {
  sol.validate();
  const double n = sol.big_n();
  const double tau = 2.0 * sol.omega0 * std::tanh(2.0 * sol.omega0 * sol.coupling.b * t);
  return {0.5 * (n + tau), 0.5 * (n - tau)};
}

cplx inner_product(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  if (x.size() != y.size()) throw std::domain_error("inner product: size mismatch");
  cplx s = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) s += std::conj(x[n]) * y[n];
  return s;
}

ResidualPair equation_residual(const NonlinearSolution& sol, double t, double h) {
  if (!(h > 0.0)) throw std::domain_error("equation residual: step must be positive");
  const cplx i(0.0, 1.0);
  const StatePairAt mid = evolve_pair(sol, t);
  const StatePairAt lo = evolve_pair(sol, t - h);
  const StatePairAt hi = evolve_pair(sol, t + h);
  const cplx g = sol.coupling.g();
  const cplx phi_psi = inner_product(mid.phi, mid.psi);
  const cplx psi_phi = std::conj(phi_psi);

  ResidualPair r;
  for (std::size_t n = 0; n < sol.modes.dim(); ++n) {
    const double en = sol.modes.energies[n];
    const cplx dpsi = (hi.psi[n] - lo.psi[n]) / (2.0 * h);
    const cplx dphi = (hi.phi[n] - lo.phi[n]) / (2.0 * h);
    const cplx lhs_psi = i * dpsi;
    const cplx rhs_psi = en * mid.psi[n] + g * mid.phi[n] * phi_psi;
    const cplx lhs_phi = i * dphi;
    const cplx rhs_phi = en * mid.phi[n] + std::conj(g) * mid.psi[n] * psi_phi;
    r.res_psi = std::max(r.res_psi, std::abs(lhs_psi - rhs_psi));
    r.res_phi = std::max(r.res_phi, std::abs(lhs_phi - rhs_phi));
  }
  return r;
}

}  // namespace nlqg::nlqm

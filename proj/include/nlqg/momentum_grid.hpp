// Free-particle realization on a uniform momentum grid. The Hamiltonian is
// p^2/(2m); the position operator acts as i d/dp (fourth-order central
// differences); matrix elements <A(t)|X|B(t)> come out linear in t, which is
// what feeds the trajectory-constant extraction.

#ifndef NLQG_MOMENTUM_GRID_HPP
#define NLQG_MOMENTUM_GRID_HPP

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "nlqg/nonlinear_pair.hpp"

namespace nlqg::freepart {

using cplx = std::complex<double>;

struct GaussianPacket {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;  // position width, > 0
  double mass = 1.0;   // > 0
  double sigma_p() const { return 0.5 / sigma; }
};

struct MomentumGrid {
  double pmin = 0.0;
  double dp = 0.0;
  int n = 0;
  double p(int i) const { return pmin + dp * i; }
  bool same(const MomentumGrid& o) const {
    return n == o.n && pmin == o.pmin && dp == o.dp;
  }
};

struct MomentumGridState {
  MomentumGrid grid;
  std::vector<cplx> amp;
};

// Uniform grid covering +-width*sigma_p around every packet center (>= 16 points).
MomentumGrid make_grid(std::span<const GaussianPacket> packets, int n = 4096,
                       double width = 8.0);

// psi(p) = (2 sigma^2/pi)^{1/4} exp(-sigma^2 (p-p0)^2) e^{-i p x0}
MomentumGridState gaussian_state(const GaussianPacket& g, const MomentumGrid& grid);

// Odd partner 2 sigma (p-p0) * gaussian: exactly orthogonal to the Gaussian.
MomentumGridState odd_partner_state(const GaussianPacket& g, const MomentumGrid& grid);

cplx inner(const MomentumGridState& a, const MomentumGridState& b);
double norm(const MomentumGridState& a);

// Normalizes A, projects A out of B, normalizes B; throws if the pair is
// degenerate or the residual overlap exceeds tol.
void gram_schmidt_pair(MomentumGridState& a, MomentumGridState& b, double tol = 1e-12);

// X = i d/dp via the 4th-order stencil (out-of-range amplitudes treated as 0).
MomentumGridState position_apply(const MomentumGridState& s);

// Multiplies by exp(-i p^2 t / (2 m)).
MomentumGridState evolve_free(const MomentumGridState& s, double t, double mass);

// <A(t)| X |B(t)> on the shared grid; throws on mismatched grids.
cplx matrix_element_x(const MomentumGridState& a, const MomentumGridState& b,
                      double t, double mass);

struct LinearCoeffs {
  cplx alpha;           // slope
  cplx beta;            // intercept
  double max_residual;  // max |y_i - (alpha t_i + beta)|
};

// Least-squares line through (t_i, y_i); needs >= 3 samples with distinct t.
LinearCoeffs fit_linear(std::span<const std::pair<double, cplx>> samples);

// Rayleigh quotient Re<psi|X|psi>/<psi|psi> with |psi(t)> assembled from the
// closed form over grid states A, B (assumed orthonormalized).
double trajectory_expectation(const MomentumGridState& a, const MomentumGridState& b,
                              const nlqm::Coupling& g, double omega0, double theta,
                              double t, double mass);

// Collects the eight trajectory constants from the three matrix-element lines.
// Diagonal coefficients must be real (tolerance 1e-8 on the imaginary part).
std::array<double, 8> extract_k(const LinearCoeffs& diag_a, const LinearCoeffs& diag_b,
                                const LinearCoeffs& cross, double omega0, double theta);

}  // namespace nlqg::freepart

#endif  // NLQG_MOMENTUM_GRID_HPP

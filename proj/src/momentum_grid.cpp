#include "nlqg/momentum_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlqg::freepart {

MomentumGrid make_grid(std::span<const GaussianPacket> packets, int n, double width) {
  if (packets.empty()) throw std::domain_error("make_grid: no packets");
  if (n < 16) throw std::domain_error("make_grid: need at least 16 points");
  double lo = packets[0].p0, hi = packets[0].p0;
  for (const auto& g : packets) {
    if (!(g.sigma > 0.0) || !(g.mass > 0.0))
      throw std::domain_error("gaussian packet: sigma and mass must be positive");
    lo = std::min(lo, g.p0 - width * g.sigma_p());
    hi = std::max(hi, g.p0 + width * g.sigma_p());
  }
  MomentumGrid grid;
  grid.n = n;
  grid.pmin = lo;
  grid.dp = (hi - lo) / (n - 1);
  return grid;
}

MomentumGridState gaussian_state(const GaussianPacket& g, const MomentumGrid& grid) {
  const double s2 = g.sigma * g.sigma;
  const double norm = std::pow(2.0 * s2 / M_PI, 0.25);
  MomentumGridState st;
  st.grid = grid;
  st.amp.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double p = grid.p(i);
    const double dpc = p - g.p0;
    st.amp[i] = norm * std::exp(-s2 * dpc * dpc) *
                std::exp(cplx(0.0, -p * g.x0));
  }
  return st;
}

MomentumGridState odd_partner_state(const GaussianPacket& g, const MomentumGrid& grid) {
  MomentumGridState st = gaussian_state(g, grid);
  for (int i = 0; i < grid.n; ++i)
    st.amp[i] *= 2.0 * g.sigma * (grid.p(i) - g.p0);
  return st;
}

cplx inner(const MomentumGridState& a, const MomentumGridState& b) {
  if (!a.grid.same(b.grid)) throw std::domain_error("grid mismatch");
  cplx s = 0.0;
  for (int i = 0; i < a.grid.n; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s * a.grid.dp;
}

double norm(const MomentumGridState& a) { return std::sqrt(std::real(inner(a, a))); }

void gram_schmidt_pair(MomentumGridState& a, MomentumGridState& b, double tol) {
  const double na = norm(a);
  if (na < 1e-12) throw std::domain_error("gram_schmidt: degenerate first state");
  for (auto& v : a.amp) v /= na;
  const cplx ab = inner(a, b);
  for (int i = 0; i < a.grid.n; ++i) b.amp[i] -= ab * a.amp[i];
  const double nb = norm(b);
  if (nb < 1e-12) throw std::domain_error("gram_schmidt: states are parallel");
  for (auto& v : b.amp) v /= nb;
  if (std::abs(inner(a, b)) > tol)
    throw std::domain_error("gram_schmidt: residual overlap above tolerance");
}

MomentumGridState position_apply(const MomentumGridState& s) {
  const int n = s.grid.n;
  const double inv = 1.0 / (12.0 * s.grid.dp);
  auto at = [&](int i) -> cplx { return (i < 0 || i >= n) ? cplx(0.0) : s.amp[i]; };
  MomentumGridState out;
  out.grid = s.grid;
  out.amp.resize(n);
  const cplx i_unit(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const cplx d = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) * inv;
    out.amp[i] = i_unit * d;
  }
  return out;
}

MomentumGridState evolve_free(const MomentumGridState& s, double t, double mass) {
  MomentumGridState out;
  out.grid = s.grid;
  out.amp.resize(s.grid.n);
  for (int i = 0; i < s.grid.n; ++i) {
    const double p = s.grid.p(i);
    out.amp[i] = s.amp[i] * std::exp(cplx(0.0, -p * p * t / (2.0 * mass)));
  }
  return out;
}

cplx matrix_element_x(const MomentumGridState& a, const MomentumGridState& b,
                      double t, double mass) {
  if (!a.grid.same(b.grid)) throw std::domain_error("matrix_element_x: grid mismatch");
  const MomentumGridState at = evolve_free(a, t, mass);
  const MomentumGridState bt = evolve_free(b, t, mass);
  return inner(at, position_apply(bt));
}

LinearCoeffs fit_linear(std::span<const std::pair<double, cplx>> samples) {
  if (samples.size() < 3) throw std::domain_error("fit_linear: need >= 3 samples");
  double tbar = 0.0;
  cplx ybar = 0.0;
  for (const auto& [t, y] : samples) {
    tbar += t;
    ybar += y;
  }
  tbar /= static_cast<double>(samples.size());
  ybar /= static_cast<double>(samples.size());
  double stt = 0.0;
  cplx sty = 0.0;
  for (const auto& [t, y] : samples) {
    stt += (t - tbar) * (t - tbar);
    sty += (t - tbar) * (y - ybar);
  }
  if (stt < 1e-14) throw std::domain_error("fit_linear: degenerate t-values");
  LinearCoeffs c;
  c.alpha = sty / stt;
  c.beta = ybar - c.alpha * tbar;
  c.max_residual = 0.0;
  for (const auto& [t, y] : samples)
    c.max_residual = std::max(c.max_residual, std::abs(y - (c.alpha * t + c.beta)));
  return c;
}

double trajectory_expectation(const MomentumGridState& a, const MomentumGridState& b,
                              const nlqm::Coupling& g, double omega0, double theta,
                              double t, double mass) {
  if (!a.grid.same(b.grid))
    throw std::domain_error("trajectory_expectation: grid mismatch");
  const cplx i_unit(0.0, 1.0);
  const cplx phase_a = std::exp(i_unit * g.g() * omega0 * t) * std::sinh(theta);
  const cplx phase_b = std::exp(-i_unit * g.g() * omega0 * t) * std::cosh(theta);
  MomentumGridState psi;
  psi.grid = a.grid;
  psi.amp.resize(a.grid.n);
  for (int i = 0; i < a.grid.n; ++i) {
    const double p = a.grid.p(i);
    const cplx schro = std::exp(cplx(0.0, -p * p * t / (2.0 * mass)));
    psi.amp[i] = (phase_a * a.amp[i] + phase_b * b.amp[i]) * schro;
  }
  // The overall gamma^{1/2} cancels in the quotient.
  const double den = std::real(inner(psi, psi));
  if (den < 1e-12) throw std::domain_error("trajectory_expectation: degenerate state");
  return std::real(inner(psi, position_apply(psi))) / den;
}

std::array<double, 8> extract_k(const LinearCoeffs& diag_a, const LinearCoeffs& diag_b,
                                const LinearCoeffs& cross, double omega0, double theta) {
  if (std::abs(std::imag(diag_a.alpha)) > 1e-8 ||
      std::abs(std::imag(diag_a.beta)) > 1e-8 ||
      std::abs(std::imag(diag_b.alpha)) > 1e-8 ||
      std::abs(std::imag(diag_b.beta)) > 1e-8)
    throw std::domain_error("extract_k: diagonal coefficients must be real");
  const double aa = std::real(diag_a.alpha), ab = std::real(diag_a.beta);
  const double ba = std::real(diag_b.alpha), bb = std::real(diag_b.beta);
  const double sh2 = std::sinh(theta) * std::sinh(theta);
  const double ch2 = std::cosh(theta) * std::cosh(theta);
  const double s2t = std::sinh(2.0 * theta);
  std::array<double, 8> k;
  k[0] = omega0 * (sh2 * aa + ch2 * ba);
  k[1] = omega0 * (sh2 * ab + ch2 * bb);
  k[2] = omega0 * (ch2 * ba - sh2 * aa);
  k[3] = omega0 * (ch2 * bb - sh2 * ab);
  k[4] = omega0 * s2t * std::real(cross.alpha);
  k[5] = omega0 * s2t * std::real(cross.beta);
  k[6] = omega0 * s2t * std::imag(cross.alpha);
  k[7] = omega0 * s2t * std::imag(cross.beta);
  return k;
}

}  // namespace nlqg::freepart

#include "nlqg/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "nlqg/kruskal.hpp"
#include "nlqg/metric2d.hpp"
#include "nlqg/metric_recovery.hpp"
#include "nlqg/momentum_grid.hpp"
#include "nlqg/nonlinear_pair.hpp"
#include "nlqg/numerics.hpp"
#include "nlqg/trajectory.hpp"

namespace nlqg::verify {

using report::Check;
using report::make_check;

namespace {

// ---------------------------------------------------------------- fixtures

nlqm::NonlinearSolution base_solution() {
  nlqm::NonlinearSolution sol;
  sol.coupling = {0.5, 0.2};
  sol.omega0 = 1.0;
  sol.theta = 0.3;
  sol.modes.energies = {0.0, 1.0};
  sol.modes.coeff_a = {1.0, 0.0};
  sol.modes.coeff_b = {0.0, 1.0};
  return sol;
}

nlqm::ModePair random_modes(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim_d(2, 4);
  std::uniform_real_distribution<double> en(0.0, 3.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dim = dim_d(rng);
  nlqm::ModePair m;
  m.energies.resize(dim);
  m.coeff_a.resize(dim);
  m.coeff_b.resize(dim);
  for (int n = 0; n < dim; ++n) {
    m.energies[n] = en(rng);
    m.coeff_a[n] = {gauss(rng), gauss(rng)};
    m.coeff_b[n] = {gauss(rng), gauss(rng)};
  }
  // Orthonormalize.
  double na = 0.0;
  for (auto& c : m.coeff_a) na += std::norm(c);
  na = std::sqrt(na);
  for (auto& c : m.coeff_a) c /= na;
  nlqm::cplx ab = 0.0;
  for (int n = 0; n < dim; ++n) ab += std::conj(m.coeff_a[n]) * m.coeff_b[n];
  for (int n = 0; n < dim; ++n) m.coeff_b[n] -= ab * m.coeff_a[n];
  double nb = 0.0;
  for (auto& c : m.coeff_b) nb += std::norm(c);
  nb = std::sqrt(nb);
  for (auto& c : m.coeff_b) c /= nb;
  return m;
}

invert::OneFunctionSolution one_fn_fixture() {
  invert::OneFunctionConstants c;
  c.rbar0 = 1.0;
  c.rbar1 = 0.0;
  c.rbar2 = 1.0;
  c.c1 = 0.0;
  c.c2 = 0.0;
  c.c3 = -1.0;  // a' = 1, b' = 0, c' = -1 -> R = -2, D = T^2 - 1 - X^2
  return invert::one_function_solution(invert::fn_exp(1.0), c);
}

invert::CaseASolution case_a_fixture() {
  invert::FunctionPair pair{invert::fn_exp(1.0), invert::fn_sin(1.0)};
  invert::CaseAConstants c;
  c.rbar2 = 1.0;
  c.qbar1 = 0.3;
  c.pbar0 = 1.2;
  c.rbar1 = 0.25;
  c.qbar0 = -0.4;
  c.rbar0 = 0.8;
  return invert::case_a_solution(pair, c);
}

invert::CaseBSolution case_b_fixture() {
  invert::FunctionPair pair{invert::fn_cos(1.0), invert::fn_sin(1.0)};  // v = -1
  invert::CaseBConstants c;
  c.m1 = 1.0;
  c.m2 = 0.2;
  c.m3 = 0.8;
  c.alpha = 0.3;
  c.beta = -0.2;
  c.rbar0 = 0.7;
  return invert::case_b_solution(pair, c);
}

geom::MetricField strip_derivs(geom::MetricField m) {
  m.derivs = nullptr;
  return m;
}

double coeff_gap(const invert::AnsatzCoefficients& a, const invert::AnsatzCoefficients& b) {
  double g = std::abs(a.p0 - b.p0);
  g = std::max(g, std::abs(a.q0 - b.q0));
  g = std::max(g, std::abs(a.q1 - b.q1));
  g = std::max(g, std::abs(a.r0 - b.r0));
  g = std::max(g, std::abs(a.r1 - b.r1));
  return std::max(g, std::abs(a.r2 - b.r2));
}

double metric_gap(const geom::Sym2& a, const geom::Sym2& b) {
  return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                   std::abs(a.m11 - b.m11)});
}

// ------------------------------------------------------------- check groups

void nlqm_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const auto sol = base_solution();

  double worst_psi = 0.0, worst_phi = 0.0;
  for (double t : {0.35, 0.8, -0.6}) {
    const auto r = nlqm::equation_residual(sol, t, 1e-4);
    worst_psi = std::max(worst_psi, r.res_psi);
    worst_phi = std::max(worst_phi, r.res_phi);
  }
  out.push_back(make_check("nlqm.residual_psi", worst_psi, opt.tol_residual, 1));
  out.push_back(make_check("nlqm.residual_phi", worst_phi, opt.tol_residual, 1));

  double worst_order_psi = 0.0, worst_order_phi = 0.0;
  for (double h : {1e-2, 1e-3}) {
    const auto rh = nlqm::equation_residual(sol, 0.5, h);
    const auto rh2 = nlqm::equation_residual(sol, 0.5, 0.5 * h);
    worst_order_psi = std::max(worst_order_psi, std::abs(rh.res_psi / rh2.res_psi - 4.0));
    worst_order_phi = std::max(worst_order_phi, std::abs(rh.res_phi / rh2.res_phi - 4.0));
  }
  out.push_back(make_check("nlqm.residual_order_psi", worst_order_psi,
                           opt.tol_residual_order, 1));
  out.push_back(make_check("nlqm.residual_order_phi", worst_order_phi,
                           opt.tol_residual_order, 1));

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> omega_d(0.5, 3.0), theta_d(-1.0, 1.0),
      ab_d(-1.0, 1.0);
  double worst_sum = 0.0, worst_closed = 0.0, worst_gamma = 0.0;
  for (int draw = 0; draw < opt.norm_draws; ++draw) {
    nlqm::NonlinearSolution s;
    s.modes = random_modes(rng);
    s.omega0 = omega_d(rng);
    s.theta = theta_d(rng);
    s.coupling = {ab_d(rng), ab_d(rng)};
    const double big_n = s.big_n();
    for (int it = 0; it <= 10; ++it) {
      const double t = -5.0 + it;
      const auto pair = nlqm::evolve_pair(s, t);
      const double npsi = std::real(nlqm::inner_product(pair.psi, pair.psi));
      const double nphi = std::real(nlqm::inner_product(pair.phi, pair.phi));
      worst_sum = std::max(worst_sum, std::abs(npsi + nphi - big_n));
      const auto closed = nlqm::norms(s, t);
      worst_closed = std::max(worst_closed, std::abs(closed.norm_psi - npsi));
      worst_closed = std::max(worst_closed, std::abs(closed.norm_phi - nphi));
      const double gmod = std::abs(nlqm::inner_product(pair.phi, pair.psi));
      const double want = s.omega0 / std::cosh(2.0 * s.omega0 * s.coupling.b * t);
      worst_gamma = std::max(worst_gamma, std::abs(gmod - want));
    }
  }
  out.push_back(make_check("nlqm.norm_sum", worst_sum, opt.tol_norm_sum, 2));
  out.push_back(make_check("nlqm.norm_closed_form", worst_closed, opt.tol_norm_sum, 2));
  out.push_back(make_check("nlqm.gamma_modulus", worst_gamma, opt.tol_gamma_modulus, 0));
}

void freeparticle_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  using namespace freepart;
  const GaussianPacket pa{0.3, 0.8, 1.0, 1.0};
  const GaussianPacket pb{-0.4, -0.5, 0.8, 1.0};
  const GaussianPacket packs[] = {pa, pb};
  const MomentumGrid grid = make_grid(packs);
  MomentumGridState sa = gaussian_state(pa, grid);
  MomentumGridState sb = gaussian_state(pb, grid);
  gram_schmidt_pair(sa, sb);

  // Linearity: raw second central difference, relative to the element scale.
  double worst_lin = 0.0;
  {
    const double h = 1e-2;
    double scale = 0.0;
    for (double t : {-1.5, -0.75, 0.0, 0.75, 1.5})
      scale = std::max(scale, std::abs(matrix_element_x(sa, sb, t, 1.0)));
    for (double t : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
      const cplx d2 = matrix_element_x(sa, sb, t + h, 1.0) -
                      2.0 * matrix_element_x(sa, sb, t, 1.0) +
                      matrix_element_x(sa, sb, t - h, 1.0);
      worst_lin = std::max(worst_lin, std::abs(d2) / (1.0 + scale));
    }
  }
  out.push_back(make_check("freeparticle.linearity", worst_lin, opt.tol_linearity, 3));

  double worst_herm = 0.0;
  for (double t : {0.0, 0.7, 1.4})
    worst_herm = std::max(worst_herm, std::abs(std::imag(matrix_element_x(sa, sa, t, 1.0))));
  out.push_back(make_check("freeparticle.hermitian", worst_herm, opt.tol_hermitian, 0));

  // Free Gaussian: <X>(t) = x0 + (p0/m) t.
  const GaussianPacket pg{0.0, 1.0, 1.0, 1.0};
  const GaussianPacket packs_g[] = {pg};
  const MomentumGrid grid_g = make_grid(packs_g);
  const MomentumGridState sg = gaussian_state(pg, grid_g);
  double worst_vel = 0.0;
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    const double x = std::real(matrix_element_x(sg, sg, t, 1.0));
    worst_vel = std::max(worst_vel, std::abs(x - (pg.x0 + pg.p0 * t)));
  }
  out.push_back(make_check("freeparticle.group_velocity", worst_vel,
                           opt.tol_group_velocity, 0));

  // Trajectory constants against the direct Rayleigh quotient.
  const double omega0 = 1.2, theta = 0.4;
  const nlqm::Coupling g{0.6, 0.35};
  std::vector<std::pair<double, cplx>> saa, sbb, sab;
  for (int i = 0; i <= 8; ++i) {
    const double t = -1.5 + 3.0 * i / 8.0;
    saa.emplace_back(t, matrix_element_x(sa, sa, t, 1.0));
    sbb.emplace_back(t, matrix_element_x(sb, sb, t, 1.0));
    sab.emplace_back(t, matrix_element_x(sa, sb, t, 1.0));
  }
  const auto k = extract_k(fit_linear(saa), fit_linear(sbb), fit_linear(sab),
                           omega0, theta);
  traj::TrajectoryParams tp;
  tp.k = k;
  tp.omega0 = omega0;
  tp.a = g.a;
  tp.b = g.b;
  tp.theta = theta;
  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> td(-2.0, 2.0);
  double worst_k = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = td(rng);
    const double direct = trajectory_expectation(sa, sb, g, omega0, theta, t, 1.0);
    worst_k = std::max(worst_k, std::abs(traj::x_psi(tp, t) - direct));
  }
  out.push_back(make_check("freeparticle.extract_k", worst_k, opt.tol_extract_k, 0));
}

void trajectory_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_real_distribution<double> omega_d(0.5, 2.5), theta_d(-1.0, 1.0),
      theta_mag_d(0.35, 1.0), ab_d(-1.0, 1.0), k_d(-2.0, 2.0), t_d(-3.0, 3.0);
  double worst_part = 0.0, worst_rev = 0.0;
  for (int i = 0; i < opt.reversal_draws; ++i) {
    traj::TrajectoryParams p;
    for (auto& kk : p.k) kk = k_d(rng);
    p.omega0 = omega_d(rng);
    p.theta = theta_d(rng);
    p.a = ab_d(rng);
    p.b = ab_d(rng);
    const double t = t_d(rng);
    worst_rev = std::max(worst_rev, traj::time_reversal_residual(p, t));
    // Partition ratio: |theta| >= 0.35 keeps N cosh(by)/Delta bounded, so the
    // cancellation stays below the 1e-14 budget.
    p.theta = std::copysign(theta_mag_d(rng), p.theta);
    const double by = 2.0 * p.omega0 * t * p.b;
    const double delta = p.delta(t);
    worst_part = std::max(worst_part,
                          std::abs(p.big_n() * std::cosh(by) / delta +
                                   2.0 * p.omega0 * std::sinh(by) / delta - 1.0));
  }
  out.push_back(make_check("trajectory.partition_identity", worst_part,
                           opt.tol_partition, 4));
  out.push_back(make_check("trajectory.time_reversal", worst_rev, opt.tol_reversal, 4));

  // Late-time slope 2 (k1 + k3) / (N + 2 omega0) for b > 0.
  traj::TrajectoryParams p;
  p.k = {0.7, -0.3, 0.4, 0.2, 1.1, -0.5, 0.3, 0.9};
  p.omega0 = 1.0;
  p.theta = 0.4;
  p.a = 0.8;
  p.b = 0.6;
  const double slope = (traj::x_psi(p, 45.0) - traj::x_psi(p, 35.0)) / 10.0;
  const double want = 2.0 * (p.k[0] + p.k[2]) / (p.big_n() + 2.0 * p.omega0);
  out.push_back(make_check("trajectory.asymptotic_slope", std::abs(slope - want),
                           opt.tol_asymptotic_slope, 0));
}

void one_function_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const auto sol = one_fn_fixture();
  std::mt19937_64 rng(opt.seed + 3);
  std::uniform_real_distribution<double> k_d(-0.3, 0.3), x0_d(-0.4, 0.4);

  // Straight lines X = k T + X0 and x = k f(t) + x0 are geodesics.
  geom::ConnectionField conn_big = [&sol](double t, double x) {
    return geom::christoffel(sol.metric_big, t, x);
  };
  geom::ConnectionField conn_tx = [&sol](double t, double x) {
    return geom::christoffel(sol.metric_tx, t, x);
  };
  double worst_line = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double k = k_d(rng), x0 = x0_d(rng);
    for (int j = 0; j <= 4; ++j) {
      const double tt = 1.7 + 0.2 * j;  // (T, X) chart
      worst_line = std::max(worst_line,
                            std::abs(geom::geodesic_residual(conn_big, tt, k * tt + x0,
                                                             k, 0.0)));
      const double t = 0.55 + 0.1 * j;  // (t, x) chart, x = k e^t + x0
      const double f = sol.f.f(t);
      worst_line = std::max(worst_line,
                            std::abs(geom::geodesic_residual(conn_tx, t, k * f + x0,
                                                             k * sol.f.df(t),
                                                             k * sol.f.d2f(t))));
    }
  }
  out.push_back(make_check("onefunction.line_geodesic", worst_line,
                           opt.tol_line_geodesic, 5));

  // Ricci proportional to the metric, constant scalar matching the closed form.
  double worst_prop = 0.0, worst_val = 0.0;
  std::vector<double> scalars;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double t = 1.7 + 0.8 * i / 19.0;
      const double x = -0.8 + 1.6 * j / 19.0;
      const auto rr = geom::ricci(sol.metric_big, t, x);
      const geom::Sym2 g = sol.metric_big.eval(t, x);
      worst_prop = std::max({worst_prop,
                             std::abs(rr.ricci.m00 - 0.5 * rr.scalar * g.m00),
                             std::abs(rr.ricci.m01 - 0.5 * rr.scalar * g.m01),
                             std::abs(rr.ricci.m11 - 0.5 * rr.scalar * g.m11)});
      worst_val = std::max(worst_val, std::abs(rr.scalar - sol.ricci_scalar));
      scalars.push_back(rr.scalar);
    }
  out.push_back(make_check("onefunction.ricci_proportional", worst_prop,
                           opt.tol_ricci_proportional, 5));
  out.push_back(make_check("onefunction.curvature_value", worst_val,
                           opt.tol_curvature_value, 5));
  double mean = 0.0;
  for (double s : scalars) mean += s;
  mean /= static_cast<double>(scalars.size());
  double var = 0.0;
  for (double s : scalars) var += (s - mean) * (s - mean);
  const double stddev = std::sqrt(var / static_cast<double>(scalars.size()));
  out.push_back(make_check("onefunction.curvature_constancy", stddev,
                           opt.tol_curvature_const * (1.0 + std::abs(sol.ricci_scalar)),
                           5));

  // Metric assembly: a_ij / det(a)^2 against the printed (t, x) closed form.
  double worst_asm = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double t = 0.5 + 0.05 * i;
    const double x = -0.4 + 0.1 * i;
    const geom::Sym2 built = sol.metric_tx.eval(t, x);
    const geom::Sym2 closed = sol.metric_tx_closed(t, x);
    worst_asm = std::max(worst_asm, metric_gap(built, closed));
  }
  out.push_back(make_check("onefunction.assembly_identity", worst_asm,
                           opt.tol_assembly, 0));
}

void roundtrip_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j)
      pts.emplace_back(0.25 + 0.12 * i, -0.45 + 0.3 * j);

  const auto one = one_fn_fixture();
  const auto ra = invert::verify_gauge_roundtrip(strip_derivs(one.metric_tx),
                                                 one.gauge, pts);
  out.push_back(make_check("gauge.roundtrip_onefunction", ra.max_dev,
                           opt.tol_roundtrip_fd, 6));

  const auto ca = case_a_fixture();
  const auto rb = invert::verify_gauge_roundtrip(strip_derivs(ca.metric), ca.gauge, pts);
  out.push_back(make_check("gauge.roundtrip_case_a", rb.max_dev,
                           opt.tol_roundtrip_fd, 6));

  const auto cb = case_b_fixture();
  const auto rc = invert::verify_gauge_roundtrip(strip_derivs(cb.metric), cb.gauge, pts);
  out.push_back(make_check("gauge.roundtrip_case_b", rc.max_dev,
                           opt.tol_roundtrip_fd, 6));
}

void ansatz_ode_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const double t0 = 0.1, t1 = 2.1;
  const int steps = 2000;
  auto compare = [&](const invert::GaugeField& gauge, const invert::CoefficientSet& cs) {
    const auto path = invert::integrate_ansatz(gauge, cs.value(t0), t0, t1, steps);
    double worst = 0.0;
    for (const auto& s : path) worst = std::max(worst, coeff_gap(s.c, cs.value(s.t)));
    return worst;
  };
  const auto one = one_fn_fixture();
  out.push_back(make_check("ansatz.ode_vs_closed_onefunction",
                           compare(one.gauge, one.coeffs), opt.tol_ode_match, 7));
  const auto ca = case_a_fixture();
  out.push_back(make_check("ansatz.ode_vs_closed_case_a", compare(ca.gauge, ca.coeffs),
                           opt.tol_ode_match, 7));
  const auto cb = case_b_fixture();
  out.push_back(make_check("ansatz.ode_vs_closed_case_b", compare(cb.gauge, cb.coeffs),
                           opt.tol_ode_match, 7));
}

void case_a_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const auto ca = case_a_fixture();
  geom::ConnectionField conn = [&ca](double t, double x) {
    return geom::christoffel(ca.metric, t, x);
  };
  std::mt19937_64 rng(opt.seed + 4);
  std::uniform_real_distribution<double> k_d(-0.2, 0.2);
  double worst_geo = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double k = k_d(rng);
    for (int j = 0; j <= 4; ++j) {
      const double t = 0.15 + 0.1 * j;
      const double x = k * ca.pair.f1.f(t) + ca.pair.f2.f(t);
      const double xd = k * ca.pair.f1.df(t) + ca.pair.f2.df(t);
      const double xdd = k * ca.pair.f1.d2f(t) + ca.pair.f2.d2f(t);
      worst_geo = std::max(worst_geo,
                           std::abs(geom::geodesic_residual(conn, t, x, xd, xdd)));
    }
  }
  out.push_back(make_check("case_a.geodesic_residual", worst_geo,
                           opt.tol_family_geodesic, 8));

  double worst_r = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.15 + 0.5 * (i % 10) / 9.0;
    const double x = -0.3 + 0.6 * (i / 10) / 4.0;
    worst_r = std::max(worst_r,
                       std::abs(geom::ricci(ca.metric, t, x).scalar - ca.ricci_scalar));
  }
  out.push_back(make_check("case_a.curvature_match", worst_r,
                           opt.tol_case_curvature, 8));

  // f2 = 0 reduction: same metric as the one-function family with
  // c1 = -qbar0/rbar1, c2 = -qbar1/rbar2, c3 = pbar0/rbar2.
  invert::FunctionPair reduced{invert::fn_exp(1.0), invert::fn_zero()};
  const auto car = invert::case_a_solution(reduced, ca.c);
  invert::OneFunctionConstants oc;
  oc.rbar0 = ca.c.rbar0;
  oc.rbar1 = ca.c.rbar1;
  oc.rbar2 = ca.c.rbar2;
  oc.c1 = -ca.c.qbar0 / ca.c.rbar1;
  oc.c2 = -ca.c.qbar1 / ca.c.rbar2;
  oc.c3 = ca.c.pbar0 / ca.c.rbar2;
  const auto one = invert::one_function_solution(invert::fn_exp(1.0), oc);
  double worst_red = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double t = 0.2 + 0.07 * i, x = -0.35 + 0.09 * i;
    worst_red = std::max(worst_red,
                         metric_gap(car.metric.eval(t, x), one.metric_tx.eval(t, x)));
  }
  out.push_back(make_check("case_a.reduction_to_onefunction", worst_red,
                           opt.tol_reduction, 8));
}

void case_b_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const auto cb = case_b_fixture();
  geom::ConnectionField conn = [&cb](double t, double x) {
    return geom::christoffel(cb.metric, t, x);
  };
  std::mt19937_64 rng(opt.seed + 5);
  std::uniform_real_distribution<double> k_d(-1.0, 1.0);
  double worst_geo = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double k1 = k_d(rng), k2 = k_d(rng);
    for (int j = 0; j <= 4; ++j) {
      const double t = 0.15 + 0.1 * j;
      const double x = k1 * cb.pair.f1.f(t) + k2 * cb.pair.f2.f(t);
      const double xd = k1 * cb.pair.f1.df(t) + k2 * cb.pair.f2.df(t);
      const double xdd = k1 * cb.pair.f1.d2f(t) + k2 * cb.pair.f2.d2f(t);
      worst_geo = std::max(worst_geo,
                           std::abs(geom::geodesic_residual(conn, t, x, xd, xdd)));
    }
  }
  out.push_back(make_check("case_b.geodesic_residual", worst_geo,
                           opt.tol_family_geodesic, 9));

  // Constraint: algebraic identity and drift of the integrated system.
  double worst_alg = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 + 2.0 * i / 20.0;
    worst_alg = std::max(worst_alg, std::abs(cb.a2(t) * cb.b2(t) - cb.cc(t) * cb.cc(t) -
                                             cb.constraint_value));
  }
  out.push_back(make_check("case_b.constraint_algebraic", worst_alg,
                           opt.tol_constraint_algebraic, 9));

  const double t0 = 0.1;
  const auto path = invert::integrate_ansatz(cb.gauge, cb.coeffs.value(t0), t0,
                                             t0 + 2.0, 2000);
  double worst_drift = 0.0;
  for (const auto& s : path) {
    const double v = cb.pair.v(s.t);
    const double a2 = cbrt_pow4(v) * s.c.p0;     // v^{4/3} p0
    const double b2 = s.c.r2 / cbrt_pow2(v);     // v^{-2/3} r2
    const double c2 = cbrt_pow1(v) * s.c.q1;     // v^{1/3} q1
    worst_drift = std::max(worst_drift,
                           std::abs(a2 * b2 - c2 * c2 - cb.constraint_value));
  }
  out.push_back(make_check("case_b.constraint_drift", worst_drift,
                           opt.tol_constraint_drift, 9));

  double worst_r = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.15 + 0.5 * (i % 10) / 9.0;
    const double x = -0.3 + 0.6 * (i / 10) / 4.0;
    worst_r = std::max(worst_r,
                       std::abs(geom::ricci(cb.metric, t, x).scalar - cb.ricci_scalar));
  }
  out.push_back(make_check("case_b.curvature_match", worst_r,
                           opt.tol_case_curvature, 9));

  // w = 0 reduction: f2 = scale f1 + offset collapses onto the one-function
  // family with remapped constants.
  const double scale = 0.5, offset = 2.0;
  invert::FunctionPair reduced{invert::fn_exp(1.0),
                               invert::fn_scale_add(invert::fn_exp(1.0), scale, offset)};
  invert::CaseBConstants bc;
  bc.m1 = 0.9;
  bc.m2 = 0.3;
  bc.m3 = 0.5;
  bc.alpha = 0.25;
  bc.beta = -0.15;
  bc.rbar0 = 0.6;
  const auto cbr = invert::case_b_solution(reduced, bc);
  const double msum = bc.m1 + bc.m2 * scale + bc.m3 * scale * scale;
  const double fsum = bc.alpha + bc.beta * scale;
  invert::OneFunctionConstants oc;
  oc.rbar2 = msum / cbrt_pow4(offset);
  oc.c2 = offset * (0.5 * bc.m2 + bc.m3 * scale) / msum;
  oc.c3 = bc.m3 * offset * offset / msum;
  oc.rbar0 = bc.rbar0 * cbrt_pow2(offset);
  oc.rbar1 = -2.0 * fsum / cbrt_pow1(offset);
  oc.c1 = bc.beta * offset / fsum;
  const auto one = invert::one_function_solution(invert::fn_exp(1.0), oc);
  double worst_red = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double t = 0.2 + 0.07 * i, x = -0.35 + 0.09 * i;
    worst_red = std::max(worst_red,
                         metric_gap(cbr.metric.eval(t, x), one.metric_tx.eval(t, x)));
  }
  out.push_back(make_check("case_b.reduction_to_onefunction", worst_red,
                           opt.tol_reduction, 9));
}

void kruskal_checks(const VerifyOptions& opt, std::vector<Check>& out) {
  const kruskal::KruskalChart chart{2.0};

  out.push_back(make_check("kruskal.null_slope_origin",
                           std::abs(kruskal::null_slope_sq(chart, 0.0) - 1.0), 0.0, 10));

  // Tangency <=> nullity over random lines, plus constructed null lines.
  std::mt19937_64 rng(opt.seed + 6);
  std::uniform_real_distribution<double> xi_d(-2.0, 2.0), u0_d(-3.0, 3.0);
  int mismatches = 0;
  for (int i = 0; i < opt.tangency_draws; ++i) {
    const kruskal::LineGeodesic line{xi_d(rng), u0_d(rng)};
    const bool tangent = kruskal::tangency_check(chart, line).status ==
                         kruskal::TangencyStatus::tangent;
    const bool null_line = kruskal::classify(chart, line) == kruskal::LineClass::null;
    if (tangent != null_line) ++mismatches;
  }
  for (int i = 1; i <= 100; ++i) {
    const double u0 = -3.0 + 6.0 * i / 101.0;
    if (std::abs(u0) < 1e-6) continue;
    const double xi = std::sqrt(kruskal::null_slope_sq(chart, u0)) * (i % 2 ? 1.0 : -1.0);
    const kruskal::LineGeodesic line{xi, u0};
    const bool tangent = kruskal::tangency_check(chart, line).status ==
                         kruskal::TangencyStatus::tangent;
    const bool null_line = kruskal::classify(chart, line) == kruskal::LineClass::null;
    if (!tangent || !null_line) ++mismatches;
  }
  out.push_back(make_check("kruskal.tangency_iff_null",
                           static_cast<double>(mismatches), 0.0, 10));

  // The v = 0 spacelike line traverses I <-> III and never meets D = 0.
  const auto space_rep = kruskal::traversability(chart, {0.0, 0.7});
  const bool space_ok =
      space_rep.crosses_throat && !space_rep.hits_singularity &&
      std::find(space_rep.regions.begin(), space_rep.regions.end(),
                kruskal::Region::I) != space_rep.regions.end() &&
      std::find(space_rep.regions.begin(), space_rep.regions.end(),
                kruskal::Region::III) != space_rep.regions.end();
  out.push_back(make_check("kruskal.spacelike_throat_traversal", space_ok ? 0.0 : 1.0,
                           0.0, 10));

  int traversals = 0;
  int drawn = 0;
  while (drawn < opt.timelike_draws) {
    const kruskal::LineGeodesic line{xi_d(rng), u0_d(rng)};
    if (kruskal::classify(chart, line) != kruskal::LineClass::timelike) continue;
    ++drawn;
    if (kruskal::traversability(chart, line).crosses_throat) ++traversals;
  }
  out.push_back(make_check("kruskal.timelike_no_traversal",
                           static_cast<double>(traversals), 0.0, 10));

  // Constant curvature R = -2 b'^2 of the (v, u) metric.
  const geom::MetricField muv = chart.metric_field();
  double worst_r = 0.0;
  for (double u : {0.0, 0.3, 0.6})
    for (double v : {0.0, 0.15, -0.2})
      worst_r = std::max(worst_r, std::abs(geom::ricci(muv, v, u).scalar +
                                           2.0 * chart.babs * chart.babs));
  out.push_back(make_check("kruskal.curvature_constant", worst_r,
                           opt.tol_kruskal_curvature, 10));

  // (T, X) -> (v, u) pullback of the one-function closed form.
  invert::OneFunctionConstants oc;
  oc.rbar2 = 1.0;
  oc.rbar1 = 2.0;
  oc.rbar0 = 1.0;
  oc.c1 = -chart.babs;
  oc.c2 = 0.0;
  oc.c3 = 0.0;  // a' = 0, b' = -babs, c' = 0
  const auto one = invert::one_function_solution(invert::fn_exp(1.0), oc);
  std::uniform_real_distribution<double> uv_d(-0.8, 0.8);
  double worst_pull = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double u = uv_d(rng), v = uv_d(rng);
    if (std::abs(chart.d(u, v)) < 0.3) continue;
    const geom::Sym2 h = one.metric_big.eval(v + u, v - u);
    const geom::Sym2 got = chart.metric_uv(u, v);
    const geom::Sym2 want{h.m00 + 2.0 * h.m01 + h.m11, h.m00 - h.m11,
                          h.m00 - 2.0 * h.m01 + h.m11};
    worst_pull = std::max(worst_pull, metric_gap(got, want));
  }
  out.push_back(make_check("kruskal.pullback_consistency", worst_pull,
                           opt.tol_pullback, 0));

  // Signature of the (v, u) metric matches the sign of D, and matches the
  // classification of the transformed (T, X) metric.
  int sig_mismatch = 0;
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) {
      const double u = -1.5 + 3.0 * i / 12.0;
      const double v = -1.5 + 3.0 * j / 12.0;
      const double d = chart.d(u, v);
      if (std::abs(d) < 0.2) continue;
      const auto sig = geom::signature(muv, v, u);
      const auto want = d < 0.0 ? geom::Signature::minkowski : geom::Signature::euclidean;
      if (sig != want) ++sig_mismatch;
      const auto sig_tx = geom::signature(one.metric_big, v + u, v - u);
      if (sig_tx != want) ++sig_mismatch;
    }
  out.push_back(make_check("kruskal.signature_consistency",
                           static_cast<double>(sig_mismatch), 0.0, 10));

  // Exactly two null directions through regular points, each null by K.
  double worst_null = 0.0;
  int found = 0;
  while (found < 50) {
    const double u = 3.0 * uv_d(rng), v = 3.0 * uv_d(rng);
    if (chart.d(u, v) >= -0.1) continue;
    ++found;
    const auto dirs = kruskal::null_directions(chart, u, v);
    for (double xi : dirs) {
      const double u0 = u - v / xi;
      const kruskal::LineGeodesic line{xi, u0};
      const double k = kruskal::k_value(chart, line);
      const double scale = 1.0 + chart.babs + xi * xi * (2.0 * u0 * u0 + chart.babs);
      worst_null = std::max(worst_null, std::abs(k) / scale);
    }
  }
  out.push_back(make_check("kruskal.null_cone_structure", worst_null,
                           opt.tol_null_cone, 0));
}

}  // namespace

std::vector<Check> run_all_checks(const VerifyOptions& opt) {
  std::vector<Check> out;
  nlqm_checks(opt, out);
  freeparticle_checks(opt, out);
  trajectory_checks(opt, out);
  one_function_checks(opt, out);
  roundtrip_checks(opt, out);
  ansatz_ode_checks(opt, out);
  case_a_checks(opt, out);
  case_b_checks(opt, out);
  kruskal_checks(opt, out);
  return out;
}

std::string canonical_options(const VerifyOptions& opt) {
  std::ostringstream os;
  auto kv = [&os](const char* k, double v) { os << k << "=" << fmt17(v) << "\n"; };
  kv("tol_residual", opt.tol_residual);
  kv("tol_residual_order", opt.tol_residual_order);
  kv("tol_norm_sum", opt.tol_norm_sum);
  kv("tol_gamma_modulus", opt.tol_gamma_modulus);
  kv("tol_linearity", opt.tol_linearity);
  kv("tol_hermitian", opt.tol_hermitian);
  kv("tol_group_velocity", opt.tol_group_velocity);
  kv("tol_extract_k", opt.tol_extract_k);
  kv("tol_partition", opt.tol_partition);
  kv("tol_reversal", opt.tol_reversal);
  kv("tol_asymptotic_slope", opt.tol_asymptotic_slope);
  kv("tol_line_geodesic", opt.tol_line_geodesic);
  kv("tol_ricci_proportional", opt.tol_ricci_proportional);
  kv("tol_curvature_value", opt.tol_curvature_value);
  kv("tol_curvature_const", opt.tol_curvature_const);
  kv("tol_assembly", opt.tol_assembly);
  kv("tol_roundtrip_fd", opt.tol_roundtrip_fd);
  kv("tol_ode_match", opt.tol_ode_match);
  kv("tol_family_geodesic", opt.tol_family_geodesic);
  kv("tol_case_curvature", opt.tol_case_curvature);
  kv("tol_reduction", opt.tol_reduction);
  kv("tol_constraint_algebraic", opt.tol_constraint_algebraic);
  kv("tol_constraint_drift", opt.tol_constraint_drift);
  kv("tol_kruskal_curvature", opt.tol_kruskal_curvature);
  kv("tol_pullback", opt.tol_pullback);
  kv("tol_null_cone", opt.tol_null_cone);
  kv("norm_draws", opt.norm_draws);
  kv("reversal_draws", opt.reversal_draws);
  kv("tangency_draws", opt.tangency_draws);
  kv("timelike_draws", opt.timelike_draws);
  kv("seed", static_cast<double>(opt.seed));
  return os.str();
}

}  // namespace nlqg::verify

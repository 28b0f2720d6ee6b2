// Command-line front end: scenario execution, CSV/JSON emission, and the
// verification suite runner.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nlqg/scenarios.hpp"

namespace {

using namespace nlqg;

// Writes text to a path, "-" meaning stdout.
int write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open output path: " << path << "\n";
    return 2;
  }
  os << text;
  return 0;
}

std::vector<std::complex<double>> to_complex(const std::vector<double>& flat) {
  if (flat.size() % 2 != 0)
    throw std::domain_error("complex coefficient list needs re/im pairs");
  std::vector<std::complex<double>> out(flat.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {flat[2 * i], flat[2 * i + 1]};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlqg: nonlinear two-state quantum evolution, trajectory families, "
               "and 2D metric recovery from geodesics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value config file; flags override");

  std::string out_path = "-";
  app.add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();

  // ---- evolve ----------------------------------------------------------
  auto* evolve = app.add_subcommand("evolve", "evaluate the closed-form state pair");
  struct {
    double omega0 = 1.0, theta = 0.3, a = 0.5, b = 0.2;
    std::vector<double> energies{0.0, 1.0};
    std::vector<double> coeff_a{1.0, 0.0, 0.0, 0.0};
    std::vector<double> coeff_b{0.0, 0.0, 1.0, 0.0};
    double t_min = -2.0, t_max = 2.0;
    int t_count = 81;
  } ev;
  evolve->add_option("--omega0", ev.omega0)->capture_default_str();
  evolve->add_option("--theta", ev.theta)->capture_default_str();
  evolve->add_option("--a", ev.a, "Re g")->capture_default_str();
  evolve->add_option("--b", ev.b, "Im g")->capture_default_str();
  evolve->add_option("--energies", ev.energies, "mode energies")->delimiter(',')->capture_default_str();
  evolve->add_option("--coeff-a", ev.coeff_a, "A_n as re im pairs")->delimiter(',')->capture_default_str();
  evolve->add_option("--coeff-b", ev.coeff_b, "B_n as re im pairs")->delimiter(',')->capture_default_str();
  evolve->add_option("--t-min", ev.t_min)->capture_default_str();
  evolve->add_option("--t-max", ev.t_max)->capture_default_str();
  evolve->add_option("--t-count", ev.t_count)->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  // ---- trajectory ------------------------------------------------------
  auto* trajc = app.add_subcommand("trajectory", "closed-form trajectory pair");
  struct {
    std::vector<double> k{1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    double omega0 = 1.0, theta = 0.5, a = 1.0, b = 0.3;
    double t_min = -3.0, t_max = 3.0;
    int t_count = 121;
  } tr;
  trajc->add_option("--k", tr.k, "k1..k8")->expected(8)->delimiter(',')->capture_default_str();
  trajc->add_option("--omega0", tr.omega0)->capture_default_str();
  trajc->add_option("--theta", tr.theta)->capture_default_str();
  trajc->add_option("--a", tr.a)->capture_default_str();
  trajc->add_option("--b", tr.b)->capture_default_str();
  trajc->add_option("--t-min", tr.t_min)->capture_default_str();
  trajc->add_option("--t-max", tr.t_max)->capture_default_str();
  trajc->add_option("--t-count", tr.t_count)->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  // ---- invert-one ------------------------------------------------------
  auto* inv1 = app.add_subcommand("invert-one",
                                  "one-function metric; curvature map over (T, X)");
  struct {
    std::string f = "exp:1";
    std::vector<double> rbar{1.0, 0.0, 1.0};
    std::vector<double> c{0.0, 0.0, -1.0};
    double t0 = 1.6, t1 = 2.6;
    double x0 = -0.9, x1 = 0.9;
    int n0 = 20, n1 = 20;
  } o1;
  inv1->add_option("--f", o1.f, "geodesic clock function, e.g. exp:1")
      ->capture_default_str();
  inv1->add_option("--rbar", o1.rbar, "rbar0 rbar1 rbar2")->expected(3)
      ->delimiter(',')->capture_default_str();
  inv1->add_option("--c", o1.c, "c1 c2 c3")->expected(3)->delimiter(',')->capture_default_str();
  inv1->add_option("--grid-t", o1.t0, "T min")->capture_default_str();
  inv1->add_option("--grid-t-max", o1.t1, "T max")->capture_default_str();
  inv1->add_option("--grid-x", o1.x0, "X min")->capture_default_str();
  inv1->add_option("--grid-x-max", o1.x1, "X max")->capture_default_str();
  inv1->add_option("--grid-nt", o1.n0)->check(CLI::Range(2, 100000))
      ->capture_default_str();
  inv1->add_option("--grid-nx", o1.n1)->check(CLI::Range(2, 100000))
      ->capture_default_str();

  // ---- invert-two-a ----------------------------------------------------
  auto* inv2a = app.add_subcommand("invert-two-a",
                                   "x = k f1 + f2 family; metric map over (t, x)");
  struct {
    std::string f1 = "exp:1", f2 = "sin:1";
    double rbar2 = 1.0, qbar1 = 0.3, pbar0 = 1.2, rbar1 = 0.25, qbar0 = -0.4,
           rbar0 = 0.8;
    double t0 = 0.15, t1 = 0.65, x0 = -0.3, x1 = 0.3;
    int n0 = 12, n1 = 12;
  } o2a;
  inv2a->add_option("--f1", o2a.f1)->capture_default_str();
  inv2a->add_option("--f2", o2a.f2)->capture_default_str();
  inv2a->add_option("--rbar2", o2a.rbar2)->capture_default_str();
  inv2a->add_option("--qbar1", o2a.qbar1)->capture_default_str();
  inv2a->add_option("--pbar0", o2a.pbar0)->capture_default_str();
  inv2a->add_option("--rbar1", o2a.rbar1)->capture_default_str();
  inv2a->add_option("--qbar0", o2a.qbar0)->capture_default_str();
  inv2a->add_option("--rbar0", o2a.rbar0)->capture_default_str();
  inv2a->add_option("--grid-t", o2a.t0)->capture_default_str();
  inv2a->add_option("--grid-t-max", o2a.t1)->capture_default_str();
  inv2a->add_option("--grid-x", o2a.x0)->capture_default_str();
  inv2a->add_option("--grid-x-max", o2a.x1)->capture_default_str();
  inv2a->add_option("--grid-nt", o2a.n0)->check(CLI::Range(2, 100000))
      ->capture_default_str();
  inv2a->add_option("--grid-nx", o2a.n1)->check(CLI::Range(2, 100000))
      ->capture_default_str();

  // ---- invert-two-b ----------------------------------------------------
  auto* inv2b = app.add_subcommand(
      "invert-two-b", "x = k1 f1 + k2 f2 family; metric map over (t, x)");
  struct {
    std::string f1 = "cos:1", f2 = "sin:1";
    double m1 = 1.0, m2 = 0.2, m3 = 0.8, alpha = 0.3, beta = -0.2, rbar0 = 0.7;
    double t0 = 0.15, t1 = 0.65, x0 = -0.3, x1 = 0.3;
    int n0 = 12, n1 = 12;
  } o2b;
  inv2b->add_option("--f1", o2b.f1)->capture_default_str();
  inv2b->add_option("--f2", o2b.f2)->capture_default_str();
  inv2b->add_option("--m1", o2b.m1)->capture_default_str();
  inv2b->add_option("--m2", o2b.m2)->capture_default_str();
  inv2b->add_option("--m3", o2b.m3)->capture_default_str();
  inv2b->add_option("--alpha", o2b.alpha)->capture_default_str();
  inv2b->add_option("--beta", o2b.beta)->capture_default_str();
  inv2b->add_option("--rbar0", o2b.rbar0)->capture_default_str();
  inv2b->add_option("--grid-t", o2b.t0)->capture_default_str();
  inv2b->add_option("--grid-t-max", o2b.t1)->capture_default_str();
  inv2b->add_option("--grid-x", o2b.x0)->capture_default_str();
  inv2b->add_option("--grid-x-max", o2b.x1)->capture_default_str();
  inv2b->add_option("--grid-nt", o2b.n0)->check(CLI::Range(2, 100000))
      ->capture_default_str();
  inv2b->add_option("--grid-nx", o2b.n1)->check(CLI::Range(2, 100000))
      ->capture_default_str();

  // ---- kruskal ---------------------------------------------------------
  auto* krus = app.add_subcommand("kruskal",
                                  "classify a line geodesic in the (u, v) chart");
  struct {
    double babs = 2.0;
    std::vector<double> line{0.5, 1.0};  // xi, u0
  } ko;
  krus->add_option("--babs", ko.babs, "|b'|")->check(CLI::PositiveNumber)
      ->capture_default_str();
  krus->add_option("--line", ko.line, "xi u0")->expected(2)->delimiter(',')->capture_default_str();

  // ---- verify ----------------------------------------------------------
  auto* verf = app.add_subcommand("verify", "run the full verification suite");
  verify::VerifyOptions vo;
  verf->add_option("--tol-residual", vo.tol_residual)->capture_default_str();
  verf->add_option("--tol-residual-order", vo.tol_residual_order)->capture_default_str();
  verf->add_option("--tol-norm-sum", vo.tol_norm_sum)->capture_default_str();
  verf->add_option("--tol-gamma-modulus", vo.tol_gamma_modulus)->capture_default_str();
  verf->add_option("--tol-linearity", vo.tol_linearity)->capture_default_str();
  verf->add_option("--tol-hermitian", vo.tol_hermitian)->capture_default_str();
  verf->add_option("--tol-group-velocity", vo.tol_group_velocity)->capture_default_str();
  verf->add_option("--tol-extract-k", vo.tol_extract_k)->capture_default_str();
  verf->add_option("--tol-partition", vo.tol_partition)->capture_default_str();
  verf->add_option("--tol-reversal", vo.tol_reversal)->capture_default_str();
  verf->add_option("--tol-asymptotic-slope", vo.tol_asymptotic_slope)
      ->capture_default_str();
  verf->add_option("--tol-line-geodesic", vo.tol_line_geodesic)->capture_default_str();
  verf->add_option("--tol-ricci-proportional", vo.tol_ricci_proportional)
      ->capture_default_str();
  verf->add_option("--tol-curvature-value", vo.tol_curvature_value)
      ->capture_default_str();
  verf->add_option("--tol-curvature-const", vo.tol_curvature_const)
      ->capture_default_str();
  verf->add_option("--tol-assembly", vo.tol_assembly)->capture_default_str();
  verf->add_option("--tol-roundtrip-fd", vo.tol_roundtrip_fd)->capture_default_str();
  verf->add_option("--tol-ode-match", vo.tol_ode_match)->capture_default_str();
  verf->add_option("--tol-family-geodesic", vo.tol_family_geodesic)
      ->capture_default_str();
  verf->add_option("--tol-case-curvature", vo.tol_case_curvature)->capture_default_str();
  verf->add_option("--tol-reduction", vo.tol_reduction)->capture_default_str();
  verf->add_option("--tol-constraint-algebraic", vo.tol_constraint_algebraic)
      ->capture_default_str();
  verf->add_option("--tol-constraint-drift", vo.tol_constraint_drift)
      ->capture_default_str();
  verf->add_option("--tol-kruskal-curvature", vo.tol_kruskal_curvature)
      ->capture_default_str();
  verf->add_option("--tol-pullback", vo.tol_pullback)->capture_default_str();
  verf->add_option("--tol-null-cone", vo.tol_null_cone)->capture_default_str();
  verf->add_option("--norm-draws", vo.norm_draws)->capture_default_str();
  verf->add_option("--reversal-draws", vo.reversal_draws)->capture_default_str();
  verf->add_option("--tangency-draws", vo.tangency_draws)->capture_default_str();
  verf->add_option("--timelike-draws", vo.timelike_draws)->capture_default_str();
  verf->add_option("--seed", vo.seed)->capture_default_str();
  bool quiet = false;
  verf->add_flag("--quiet", quiet, "suppress the per-check lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*evolve) {
      nlqm::NonlinearSolution sol;
      sol.coupling = {ev.a, ev.b};
      sol.omega0 = ev.omega0;
      sol.theta = ev.theta;
      sol.modes.energies = ev.energies;
      sol.modes.coeff_a = to_complex(ev.coeff_a);
      sol.modes.coeff_b = to_complex(ev.coeff_b);
      sol.validate();
      std::ostringstream os;
      scenario::emit_evolution_csv(sol, {ev.t_min, ev.t_max, ev.t_count}, os);
      return write_out(out_path, os.str());
    }
    if (*trajc) {
      traj::TrajectoryParams p;
      for (int i = 0; i < 8; ++i) p.k[i] = tr.k[i];
      p.omega0 = tr.omega0;
      p.theta = tr.theta;
      p.a = tr.a;
      p.b = tr.b;
      std::ostringstream os;
      scenario::emit_trajectory_csv(p, {tr.t_min, tr.t_max, tr.t_count}, os);
      return write_out(out_path, os.str());
    }
    if (*inv1) {
      invert::OneFunctionConstants c;
      c.rbar0 = o1.rbar[0];
      c.rbar1 = o1.rbar[1];
      c.rbar2 = o1.rbar[2];
      c.c1 = o1.c[0];
      c.c2 = o1.c[1];
      c.c3 = o1.c[2];
      const auto sol =
          invert::one_function_solution(scenario::parse_scalar_fn(o1.f), c);
      scenario::GridSpec grid{o1.t0, o1.t1, o1.n0, o1.x0, o1.x1, o1.n1};
      std::ostringstream os;
      scenario::emit_metric_grid(sol.metric_big, grid, "T", "X", os);
      return write_out(out_path, os.str());
    }
    if (*inv2a) {
      invert::FunctionPair pair{scenario::parse_scalar_fn(o2a.f1),
                                scenario::parse_scalar_fn(o2a.f2)};
      invert::CaseAConstants c;
      c.rbar2 = o2a.rbar2;
      c.qbar1 = o2a.qbar1;
      c.pbar0 = o2a.pbar0;
      c.rbar1 = o2a.rbar1;
      c.qbar0 = o2a.qbar0;
      c.rbar0 = o2a.rbar0;
      const auto sol = invert::case_a_solution(pair, c);
      scenario::GridSpec grid{o2a.t0, o2a.t1, o2a.n0, o2a.x0, o2a.x1, o2a.n1};
      std::ostringstream os;
      scenario::emit_metric_grid(sol.metric, grid, "t", "x", os);
      return write_out(out_path, os.str());
    }
    if (*inv2b) {
      invert::FunctionPair pair{scenario::parse_scalar_fn(o2b.f1),
                                scenario::parse_scalar_fn(o2b.f2)};
      invert::CaseBConstants c;
      c.m1 = o2b.m1;
      c.m2 = o2b.m2;
      c.m3 = o2b.m3;
      c.alpha = o2b.alpha;
      c.beta = o2b.beta;
      c.rbar0 = o2b.rbar0;
      const auto sol = invert::case_b_solution(pair, c);
      scenario::GridSpec grid{o2b.t0, o2b.t1, o2b.n0, o2b.x0, o2b.x1, o2b.n1};
      std::ostringstream os;
      scenario::emit_metric_grid(sol.metric, grid, "t", "x", os);
      return write_out(out_path, os.str());
    }
    if (*krus) {
      const kruskal::KruskalChart chart{ko.babs};
      const kruskal::LineGeodesic line{ko.line[0], ko.line[1]};
      return write_out(out_path, scenario::kruskal_report_json(chart, line));
    }
    if (*verf) {
      const auto rep = scenario::run_verify(vo, quiet ? nullptr : &std::cerr);
      const int status = write_out(out_path, report::to_json(rep));
      if (status != 0) return status;
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

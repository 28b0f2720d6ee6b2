#include "nlqg/scenarios.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "nlqg/numerics.hpp"

namespace nlqg::scenario {

void GridSpec::validate() const {
  if (c0_count < 2 || c1_count < 2)
    throw std::domain_error("grid: counts must be >= 2");
  if (!std::isfinite(c0_min) || !std::isfinite(c0_max) || !std::isfinite(c1_min) ||
      !std::isfinite(c1_max))
    throw std::domain_error("grid: ranges must be finite");
}

namespace {

int thread_count() {
  if (const char* env = std::getenv("NLQG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Index-parallel map; results land in preassigned slots, so output is
// identical for any thread count.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int threads = std::min(thread_count(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

void emit_metric_grid(const geom::MetricField& m, const GridSpec& grid,
                      const std::string& name0, const std::string& name1,
                      std::ostream& os) {
  grid.validate();
  const int rows = grid.c0_count * grid.c1_count;
  std::vector<std::string> lines(rows);
  parallel_for(rows, [&](int idx) {
    const int i = idx / grid.c1_count;
    const int j = idx % grid.c1_count;
    const double c0 =
        grid.c0_min + (grid.c0_max - grid.c0_min) * i / (grid.c0_count - 1);
    const double c1 =
        grid.c1_min + (grid.c1_max - grid.c1_min) * j / (grid.c1_count - 1);
    const geom::Sym2 g = m.eval(c0, c1);
    const double det = g.det();
    const geom::Signature sig = geom::signature(m, c0, c1);
    const bool singular = sig == geom::Signature::singular;
    double scalar = std::nan("");
    if (!singular) scalar = geom::ricci(m, c0, c1).scalar;
    std::ostringstream line;
    line << fmt17(c0) << ',' << fmt17(c1) << ',' << fmt17(g.m00) << ','
         << fmt17(g.m01) << ',' << fmt17(g.m11) << ',' << fmt17(det) << ','
         << fmt17(scalar) << ',' << geom::to_string(sig) << ','
         << (singular ? 1 : 0);
    lines[idx] = line.str();
  });
  os << name0 << ',' << name1 << ",g00,g01,g11,det,ricci_scalar,signature,singular\n";
  for (const auto& l : lines) os << l << '\n';
}

invert::ScalarFn parse_scalar_fn(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  auto arg = [&](std::size_t i, double dflt) {
    return parts.size() > i && !parts[i].empty() ? std::stod(parts[i]) : dflt;
  };
  const std::string& name = parts[0];
  if (name == "exp") return invert::fn_exp(arg(1, 1.0));
  if (name == "sin") return invert::fn_sin(arg(1, 1.0));
  if (name == "cos") return invert::fn_cos(arg(1, 1.0));
  if (name == "tanh") return invert::fn_tanh(arg(1, 1.0));
  if (name == "t") return invert::fn_poly(0.0, 1.0);
  if (name == "t2") return invert::fn_poly(0.0, 0.0, 1.0);
  if (name == "linear") return invert::fn_poly(arg(1, 0.0), arg(2, 1.0));
  if (name == "poly") return invert::fn_poly(arg(1, 0.0), arg(2, 0.0), arg(3, 0.0));
  if (name == "zero") return invert::fn_zero();
  throw std::invalid_argument("unknown scalar function: " + name);
}

void emit_evolution_csv(const nlqm::NonlinearSolution& sol, const TimeGrid& grid,
                        std::ostream& os) {
  os << "t";
  for (std::size_t n = 0; n < sol.modes.dim(); ++n)
    os << ",psi_re_" << n << ",psi_im_" << n << ",phi_re_" << n << ",phi_im_" << n;
  os << ",norm_psi,norm_phi,gamma_re,gamma_im,gamma_abs\n";
  for (int i = 0; i < grid.count; ++i) {
    const double t =
        grid.t_min + (grid.t_max - grid.t_min) * i / std::max(1, grid.count - 1);
    const auto pair = nlqm::evolve_pair(sol, t);
    const auto nn = nlqm::norms(sol, t);
    const auto g = nlqm::gamma(sol, t);
    os << fmt17(t);
    for (std::size_t n = 0; n < sol.modes.dim(); ++n)
      os << ',' << fmt17(pair.psi[n].real()) << ',' << fmt17(pair.psi[n].imag()) << ','
         << fmt17(pair.phi[n].real()) << ',' << fmt17(pair.phi[n].imag());
    os << ',' << fmt17(nn.norm_psi) << ',' << fmt17(nn.norm_phi) << ','
       << fmt17(g.real()) << ',' << fmt17(g.imag()) << ',' << fmt17(std::abs(g))
       << '\n';
  }
}

void emit_trajectory_csv(const traj::TrajectoryParams& p, const TimeGrid& grid,
                         std::ostream& os) {
  os << "t,x_psi,x_phi\n";
  for (int i = 0; i < grid.count; ++i) {
    const double t =
        grid.t_min + (grid.t_max - grid.t_min) * i / std::max(1, grid.count - 1);
    os << fmt17(t) << ',' << fmt17(traj::x_psi(p, t)) << ','
       << fmt17(traj::x_phi(p, t)) << '\n';
  }
}

std::string kruskal_report_json(const kruskal::KruskalChart& chart,
                                const kruskal::LineGeodesic& line) {
  nlohmann::ordered_json j;
  j["chart"]["babs"] = chart.babs;
  j["line"]["xi"] = line.xi;
  j["line"]["u0"] = line.u0;
  j["k"] = kruskal::k_value(chart, line);
  j["classification"] = kruskal::to_string(kruskal::classify(chart, line));
  j["null_slope_sq_at_u0"] = kruskal::null_slope_sq(chart, line.u0);
  const auto tan = kruskal::tangency_check(chart, line);
  switch (tan.status) {
    case kruskal::TangencyStatus::tangent: j["tangency"]["status"] = "tangent"; break;
    case kruskal::TangencyStatus::asymptotic:
      j["tangency"]["status"] = "asymptotic";
      break;
    default: j["tangency"]["status"] = "not_tangent";
  }
  if (tan.touch_point) {
    j["tangency"]["touch_u"] = (*tan.touch_point)[0];
    j["tangency"]["touch_v"] = (*tan.touch_point)[1];
  }
  const auto trav = kruskal::traversability(chart, line);
  j["traversability"]["regions"] = nlohmann::ordered_json::array();
  for (auto r : trav.regions)
    j["traversability"]["regions"].push_back(kruskal::to_string(r));
  j["traversability"]["crosses_throat"] = trav.crosses_throat;
  j["traversability"]["hits_singularity"] = trav.hits_singularity;
  j["traversability"]["singular_u"] = trav.singular_u;
  return j.dump(2) + "\n";
}

report::Report run_verify(const verify::VerifyOptions& opt, std::ostream* human) {
  report::Report rep;
  rep.checks = verify::run_all_checks(opt);
  rep.config_hash = report::fnv1a(verify::canonical_options(opt));
  rep.version = report::kVersion;
  if (human) {
    for (const auto& c : rep.checks)
      *human << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << fmt17(c.value)
             << " tol=" << fmt17(c.tol) << "\n";
    *human << (rep.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT")
           << " (" << rep.checks.size() << " checks)\n";
  }
  return rep;
}

}  // namespace nlqg::scenario

// Scenario execution behind the CLI: deterministic CSV/JSON emission for the
// evolution, trajectory, inversion, and causal-structure scenarios, plus the
// verification report writer.

#ifndef NLQG_SCENARIOS_HPP
#define NLQG_SCENARIOS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nlqg/kruskal.hpp"
#include "nlqg/metric2d.hpp"
#include "nlqg/metric_recovery.hpp"
#include "nlqg/nonlinear_pair.hpp"
#include "nlqg/report.hpp"
#include "nlqg/trajectory.hpp"
#include "nlqg/verification.hpp"

namespace nlqg::scenario {

struct GridSpec {
  double c0_min = 0.0, c0_max = 1.0;
  int c0_count = 2;  // >= 2
  double c1_min = 0.0, c1_max = 1.0;
  int c1_count = 2;  // >= 2
  void validate() const;
};

// CSV grid sweep of a metric field: header row, row-major (coordinate 0 outer,
// ascending), 17-significant-digit floats, singular rows flagged rather than
// dropped. Honors NLQG_THREADS for the point evaluations; output order is
// independent of the thread count.
void emit_metric_grid(const geom::MetricField& m, const GridSpec& grid,
                      const std::string& name0, const std::string& name1,
                      std::ostream& os);

// "name:p1:p2" -> ScalarFn; names: exp, sin, cos, tanh, t, t2, poly, zero,
// linear (poly synonyms); throws std::invalid_argument on unknown names.
invert::ScalarFn parse_scalar_fn(const std::string& spec);

struct TimeGrid {
  double t_min = 0.0, t_max = 1.0;
  int count = 2;
};

void emit_evolution_csv(const nlqm::NonlinearSolution& sol, const TimeGrid& grid,
                        std::ostream& os);
void emit_trajectory_csv(const traj::TrajectoryParams& p, const TimeGrid& grid,
                         std::ostream& os);

std::string kruskal_report_json(const kruskal::KruskalChart& chart,
                                const kruskal::LineGeodesic& line);

// Runs the verification suite and assembles the JSON report; `human`, when
// non-null, receives one "PASS|FAIL name value tol" line per check.
report::Report run_verify(const verify::VerifyOptions& opt, std::ostream* human);

}  // namespace nlqg::scenario

#endif  // NLQG_SCENARIOS_HPP

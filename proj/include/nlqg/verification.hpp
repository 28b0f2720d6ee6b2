// The full verification suite: every invariant and closed-form reproduction
// the library guarantees, as named checks with pinned tolerances. Shared by
// the `verify` CLI scenario and the acceptance test binary.

#ifndef NLQG_VERIFICATION_HPP
#define NLQG_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nlqg/report.hpp"

namespace nlqg::verify {

struct VerifyOptions {
  // Tolerances (all overridable through config keys of the same name).
  double tol_residual = 1e-6;
  double tol_residual_order = 0.5;  // |ratio - 4|
  double tol_norm_sum = 1e-10;
  double tol_gamma_modulus = 1e-12;
  double tol_linearity = 1e-7;
  double tol_hermitian = 1e-12;
  double tol_group_velocity = 1e-8;
  double tol_extract_k = 1e-9;
  double tol_partition = 1e-14;
  double tol_reversal = 1e-12;
  double tol_asymptotic_slope = 1e-6;
  double tol_line_geodesic = 1e-9;
  double tol_ricci_proportional = 1e-7;
  double tol_curvature_value = 1e-9;
  double tol_curvature_const = 1e-7;
  double tol_assembly = 1e-12;
  double tol_roundtrip_fd = 1e-6;
  double tol_ode_match = 1e-6;
  double tol_family_geodesic = 1e-6;
  double tol_case_curvature = 1e-6;
  double tol_reduction = 1e-9;
  double tol_constraint_algebraic = 1e-12;
  double tol_constraint_drift = 1e-8;
  double tol_kruskal_curvature = 1e-6;
  double tol_pullback = 1e-12;
  double tol_null_cone = 1e-10;

  // Sweep sizes and randomness.
  int norm_draws = 1000;
  int reversal_draws = 10000;
  int tangency_draws = 10000;
  int timelike_draws = 1000;
  std::uint64_t seed = 20240815;
};

// Runs every named check; deterministic for a fixed options value.
std::vector<report::Check> run_all_checks(const VerifyOptions& opt);

// Canonical text of the options (hashed into the report meta).
std::string canonical_options(const VerifyOptions& opt);

}  // namespace nlqg::verify

#endif  // NLQG_VERIFICATION_HPP

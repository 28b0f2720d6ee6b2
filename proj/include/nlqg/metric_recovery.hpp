// Metric recovery from straight-line geodesic families. Builds the gauge
// invariants K_i for the one-function family x = k f(t) + const and the two
// two-function families (x = k f1 + f2 and x = k1 f1 + k2 f2), integrates the
// gauge-invariant auxiliary system
//   a_ij = |det g|^{-2/3} g_ij,   a11 = p0, a01 = q0 + q1 x,
//   a00 = r0 + r1 x + r2 x^2,
// evaluates the closed-form coefficient solutions, and assembles metrics via
// g_ij = a_ij / |det a|^2.

#ifndef NLQG_METRIC_RECOVERY_HPP
#define NLQG_METRIC_RECOVERY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlqg/metric2d.hpp"

namespace nlqg::invert {

// Smooth scalar function of t with first and second derivatives.
struct ScalarFn {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
};

ScalarFn fn_exp(double rate = 1.0);              // e^{rate t}
ScalarFn fn_sin(double freq = 1.0);
ScalarFn fn_cos(double freq = 1.0);
ScalarFn fn_tanh(double rate = 1.0);
ScalarFn fn_poly(double c0, double c1, double c2 = 0.0);  // c0 + c1 t + c2 t^2
ScalarFn fn_zero();
ScalarFn fn_scale_add(const ScalarFn& base, double scale, double offset);

struct FunctionPair {
  ScalarFn f1;
  ScalarFn f2;
  double u(double t) const;     // f2'/f1'
  double v(double t) const;     // f1' f2 - f2' f1
  double w(double t) const;     // f1'' f2' - f2'' f1'
  double vdot(double t) const;  // f1'' f2 - f2'' f1
};

// Gauge invariants of the supported families: K1 = K1(t),
// K0 = k0_const(t) + k0_x(t) * x, K2 = K3 = 0. `denom` is the function whose
// zero-crossing makes the family degenerate (f' or v); it is scanned before
// integration and evaluation throws a domain error at a crossing.
struct GaugeField {
  std::function<double(double)> k1;
  std::function<double(double)> k0_const;
  std::function<double(double)> k0_x;
  std::function<double(double)> denom;
  geom::GaugeK eval(double t, double x) const;
};

GaugeField gauge_one_function(const ScalarFn& f);  // K1 = f''/f'
GaugeField gauge_case_a(const FunctionPair& p);    // K1 = f1''/f1', K0 = -w/f1'
GaugeField gauge_case_b(const FunctionPair& p);    // K1 = vdot/v, K0 = -(w/v) x

// Returns a zero/sign-change location of fn on [t0, t1] if one exists.
std::optional<double> scan_sign_change(const std::function<double(double)>& fn,
                                       double t0, double t1, int samples = 256);

// Polynomial-ansatz coefficients at a fixed time.
struct AnsatzCoefficients {
  double p0 = 0.0;
  double q0 = 0.0;
  double q1 = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// Right-hand side of the six coefficient ODEs obtained by inserting the
// polynomial ansatz into the a_ij system and matching powers of x
// (valid for K2 = K3 = 0, K0 affine in x).
AnsatzCoefficients ansatz_rates(const AnsatzCoefficients& c, double k1, double k0c,
                                double k0x);

struct AnsatzSample {
  double t = 0.0;
  AnsatzCoefficients c;
};

// RK4 on the coefficient system; throws on a gauge singularity inside the span.
std::vector<AnsatzSample> integrate_ansatz(const GaugeField& gauge,
                                           const AnsatzCoefficients& init, double t0,
                                           double t1, int steps);

// Coefficient functions with analytic time derivatives.
struct CoefficientSet {
  std::function<AnsatzCoefficients(double)> value;
  std::function<AnsatzCoefficients(double)> rate;
};

// Metric g_ij = a_ij / det(a)^2 on the (t, x) chart, with analytic partials
// assembled from the coefficient values and rates.
geom::MetricField ansatz_metric(const CoefficientSet& coeffs);

geom::Sym2 ansatz_components(const AnsatzCoefficients& c, double x);  // a_ij at x

// ---------------------------------------------------------------------------
// One-function family x = k f(t) + const.

struct OneFunctionConstants {
  double rbar0 = 0.0;
  double rbar1 = 0.0;
  double rbar2 = 1.0;  // != 0
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double a_prime() const;
  double b_prime() const;
  double c_prime() const;
  double alpha() const;  // x-shift rbar1 / (2 rbar2)
  double beta() const;   // T-shift c2
};

struct OneFunctionSolution {
  ScalarFn f;
  OneFunctionConstants c;
  CoefficientSet coeffs;
  GaugeField gauge;
  geom::MetricField metric_tx;   // (t, x) chart, assembled from the ansatz
  geom::MetricField metric_big;  // (T, X) chart closed form
  double ricci_scalar = 0.0;     // 2 rbar2^3 (a'c' - b'^2)

  double big_d(double T, double X) const;            // singular-locus function
  geom::Sym2 metric_tx_closed(double t, double x) const;  // printed (t,x) form
  geom::Connection connection_big(double T, double X) const;
  double to_big_t(double t) const;  // T = f(t) + beta
  double to_big_x(double x) const;  // X = x + alpha
};

OneFunctionSolution one_function_solution(const ScalarFn& f,
                                          const OneFunctionConstants& c);

// ---------------------------------------------------------------------------
// Case A: x = k f1(t) + f2(t), geodesic for every k.

struct CaseAConstants {
  double rbar2 = 1.0;
  double qbar1 = 0.0;
  double pbar0 = 0.0;
  double rbar1 = 0.0;
  double qbar0 = 0.0;
  double rbar0 = 0.0;
  double e1() const;  // qbar1^2 - pbar0 rbar2
  double e2() const;  // -qbar0^2 + 4 pbar0 rbar0
  double e3() const;  // rbar1^2 - 4 rbar0 rbar2
  double e4() const;  // qbar0 qbar1 - pbar0 rbar1
  double e5() const;  // -4 qbar1 rbar0 + qbar0 rbar1
  double e6() const;  // qbar1 rbar1 - qbar0 rbar2
};

struct CaseASolution {
  FunctionPair pair;
  CaseAConstants c;
  CoefficientSet coeffs;
  GaugeField gauge;
  geom::MetricField metric;   // (t, x) chart
  double ricci_scalar = 0.0;  // -2 rbar0 e1 + rbar1 e4 / 2 + qbar0 e6 / 2

  double det_a(double t, double x) const;          // p0 a00 - a01^2
  double det_a_bracket(double t, double x) const;  // e_i determinant expression
};

CaseASolution case_a_solution(const FunctionPair& pair, const CaseAConstants& c);

// ---------------------------------------------------------------------------
// Case B: x = kappa1 f1(t) + kappa2 f2(t), geodesic for every (kappa1, kappa2).

struct CaseBConstants {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double rbar0 = 0.0;
  double n1() const;  // -m2^2 + 4 m1 m3
  double n2() const;  // -4 m2 alpha + 8 m1 beta
  double n3() const;  // -8 m3 alpha + 4 m2 beta
  double n4() const;  // m1 rbar0 - alpha^2
  double n5() const;  // m2 rbar0 - 2 alpha beta
  double n6() const;  // m3 rbar0 - beta^2
};

struct CaseBSolution {
  FunctionPair pair;
  CaseBConstants c;
  CoefficientSet coeffs;
  GaugeField gauge;
  geom::MetricField metric;      // (t, x) chart
  double ricci_scalar = 0.0;     // rbar0 n1 / 2 + (n3 alpha - n2 beta) / 4
  double constraint_value = 0.0; // m1 m3 - m2^2 / 4

  double a2(double t) const;  // rescaled p0
  double b2(double t) const;  // rescaled r2
  double cc(double t) const;  // rescaled q1
  double det_a(double t, double x) const;
  double det_a_bracket(double t, double x) const;  // n_i determinant expression
};

CaseBSolution case_b_solution(const FunctionPair& pair, const CaseBConstants& c);

// ---------------------------------------------------------------------------

struct RoundtripReport {
  double max_dev = 0.0;   // worst deviation over all four K's and all points
  double max_k0 = 0.0;
  double max_k1 = 0.0;
  double max_k2 = 0.0;
  double max_k3 = 0.0;
};

// Christoffels of the assembled metric, recombined into the four gauge
// invariants and compared against the input K field at the given points.
RoundtripReport verify_gauge_roundtrip(const geom::MetricField& metric,
                                       const GaugeField& gauge,
                                       const std::vector<std::pair<double, double>>& pts);

}  // namespace nlqg::invert

#endif  // NLQG_METRIC_RECOVERY_HPP

// 2D differential-geometry toolkit: Christoffel symbols from a metric field,
// geodesic residuals and integration with a non-affine evolution parameter
// (coordinate time x^0), Ricci tensor/scalar, and signature classification.

#ifndef NLQG_METRIC2D_HPP
#define NLQG_METRIC2D_HPP

#include <functional>
#include <optional>
#include <vector>

namespace nlqg::geom {

// Symmetric 2x2 tensor components (indices 0,1 are the chart coordinates).
struct Sym2 {
  double m00 = 0.0;
  double m01 = 0.0;
  double m11 = 0.0;
  double det() const { return m00 * m11 - m01 * m01; }
};

struct MetricDerivs {
  Sym2 d0;  // partial along coordinate 0
  Sym2 d1;  // partial along coordinate 1
};

// Metric as a point evaluator, with optional analytic first partials.
// Without them, christoffel() falls back to fourth-order central differences
// of step fd_step * (1 + |coordinate|).
struct MetricField {
  std::function<Sym2(double, double)> eval;
  std::function<MetricDerivs(double, double)> derivs;  // may be empty
  double fd_step = 1e-4;
};

// The six connection components; symmetric lower pair stored once.
struct Connection {
  double g0_00 = 0.0;
  double g0_01 = 0.0;
  double g0_11 = 0.0;
  double g1_00 = 0.0;
  double g1_01 = 0.0;
  double g1_11 = 0.0;
};

// The four combinations determined by unparameterized geodesics.
struct GaugeK {
  double k0 = 0.0;  // -G1_00
  double k1 = 0.0;  //  G0_00 - 2 G1_01
  double k2 = 0.0;  // -G1_11 + 2 G0_01
  double k3 = 0.0;  //  G0_11
};

GaugeK gauge_from_connection(const Connection& c);

// Gamma^i_jk = (1/2) g^{il} (g_{jl,k} + g_{lk,j} - g_{jk,l});
// throws std::domain_error when |det g| < 1e-12 at the point.
Connection christoffel(const MetricField& m, double c0, double c1);
MetricDerivs metric_derivs(const MetricField& m, double c0, double c1);

using ConnectionField = std::function<Connection(double, double)>;

// Left side of the non-affine geodesic equation for the path x^1(t), t = x^0:
//   xdd + (2 G1_01 - G0_00) xd + (G1_11 - 2 G0_01) xd^2 - G0_11 xd^3 + G1_00.
double geodesic_residual(const Connection& c, double xd, double xdd);
double geodesic_residual(const ConnectionField& conn, double t, double x, double xd,
                         double xdd);

// Path with analytic derivatives: returns (x, xd, xdd) at t.
struct PathPoint {
  double x = 0.0;
  double xd = 0.0;
  double xdd = 0.0;
};
using PathFn = std::function<PathPoint(double)>;
double geodesic_residual(const ConnectionField& conn, const PathFn& path, double t);

// Residual from uniformly sampled positions (>= 5 samples); interior path
// derivatives via fourth-order central differences.
std::vector<double> geodesic_residual_samples(const ConnectionField& conn, double t0,
                                              double dt, const std::vector<double>& x);

struct GeodesicPath {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> xdot;
  bool singular_stop = false;  // halted on a singular-locus crossing
};

// RK4 on the first-order system (x, xd). An optional |det g| probe flags and
// halts the walk when the path crosses a singular locus (|det| < 1e-12 or
// 1/|det| < 1e-12, covering both vanishing and blowing-up determinants).
GeodesicPath integrate_geodesic(const ConnectionField& conn, double x0, double xdot0,
                                double t0, double t1, int steps,
                                const std::function<double(double, double)>& det_probe = {});

struct RicciResult {
  Sym2 ricci;
  double scalar = 0.0;
};

// Ricci via derivatives of the connection (same stencil policy as christoffel).
RicciResult ricci(const MetricField& m, double c0, double c1);

enum class Signature { euclidean, minkowski, singular };

// Sign of det g; |det| < tol or |det| > 1/tol classifies as singular.
Signature signature(const MetricField& m, double c0, double c1, double tol = 1e-12);
const char* to_string(Signature s);

}  // namespace nlqg::geom

#endif  // NLQG_METRIC2D_HPP

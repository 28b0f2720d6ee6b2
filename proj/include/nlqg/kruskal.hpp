// Causal structure of the one-function spacetime with a' = c' = 0, b' < 0,
// rbar2 = 1, in null-style coordinates T = v + u, X = v - u. The singular
// locus is the hyperbola v^2 - u^2 = |b'|/2; straight geodesics v = xi(u - u0)
// are classified by K = xi^2 (2 u0^2 + |b'|) - |b'|, and a line is null
// exactly when it is tangent to the hyperbola.

#ifndef NLQG_KRUSKAL_HPP
#define NLQG_KRUSKAL_HPP

#include <array>
#include <optional>
#include <vector>

#include "nlqg/metric2d.hpp"

namespace nlqg::kruskal {

struct KruskalChart {
  double babs = 1.0;  // |b'| > 0
  double d(double u, double v) const {
    return babs * (2.0 * (v * v - u * u) - babs);
  }
  geom::Sym2 metric_uv(double u, double v) const;  // component ordering (v, u)
  geom::MetricField metric_field() const;          // coordinates (v, u)
};

// v = xi (u - u0)
struct LineGeodesic {
  double xi = 0.0;
  double u0 = 0.0;
};

double k_value(const KruskalChart& chart, const LineGeodesic& line);
double null_slope_sq(const KruskalChart& chart, double u0);

enum class LineClass { timelike, null, spacelike };
LineClass classify(const KruskalChart& chart, const LineGeodesic& line);
const char* to_string(LineClass c);

enum class TangencyStatus { tangent, not_tangent, asymptotic };
struct TangencyResult {
  TangencyStatus status = TangencyStatus::not_tangent;
  std::optional<std::array<double, 2>> touch_point;  // (u, v) when tangent
};

// Intersects the line with the singular hyperbola; tangent iff the quadratic
// discriminant vanishes (relative tolerance). The u0 = 0 null lines v = +-u
// degenerate the quadratic and are reported as asymptotically tangent.
TangencyResult tangency_check(const KruskalChart& chart, const LineGeodesic& line);

// Kruskal-diagram regions: I (u > |v|), II (v > |u|), III (-u > |v|),
// IV (-v > |u|).
enum class Region { I = 1, II, III, IV };
const char* to_string(Region r);
std::optional<Region> region_at(double u, double v);

struct TraversalReport {
  std::vector<Region> regions;    // distinct regions visited on physical segments
  bool crosses_throat = false;    // one singularity-free segment joins I and III
  bool hits_singularity = false;  // the line meets D = 0
  std::vector<double> singular_u; // sorted u of D = 0 crossings (or tangency)
};

TraversalReport traversability(const KruskalChart& chart, const LineGeodesic& line);

// The two null slopes through a regular point (throws where D >= 0).
std::array<double, 2> null_directions(const KruskalChart& chart, double u, double v);

}  // namespace nlqg::kruskal

#endif  // NLQG_KRUSKAL_HPP

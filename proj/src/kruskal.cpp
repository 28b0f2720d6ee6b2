#include "nlqg/kruskal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlqg::kruskal {

geom::Sym2 KruskalChart::metric_uv(double u, double v) const {
  const double dd = d(u, v);
  const double s = 2.0 / (dd * dd);
  return {s * (2.0 * u * u + babs), s * (-2.0 * u * v), s * (2.0 * v * v - babs)};
}

geom::MetricField KruskalChart::metric_field() const {
  const double b = babs;
  geom::MetricField m;
  m.eval = [b](double v, double u) {
    KruskalChart c{b};
    return c.metric_uv(u, v);
  };
  m.derivs = [b](double v, double u) {
    const double dd = b * (2.0 * (v * v - u * u) - b);
    const double d_v = 4.0 * b * v;
    const double d_u = -4.0 * b * u;
    const double n00 = 2.0 * (2.0 * u * u + b);
    const double n01 = -4.0 * u * v;
    const double n11 = 2.0 * (2.0 * v * v - b);
    const double inv3 = 1.0 / (dd * dd * dd);
    auto comp = [&](double n, double dn, double ddir) {
      return (dn * dd - 2.0 * n * ddir) * inv3;
    };
    geom::MetricDerivs out;
    out.d0 = {comp(n00, 0.0, d_v), comp(n01, -4.0 * u, d_v), comp(n11, 8.0 * v, d_v)};
    out.d1 = {comp(n00, 8.0 * u, d_u), comp(n01, -4.0 * v, d_u), comp(n11, 0.0, d_u)};
    return out;
  };
  return m;
}

double k_value(const KruskalChart& chart, const LineGeodesic& line) {
  return line.xi * line.xi * (2.0 * line.u0 * line.u0 + chart.babs) - chart.babs;
}

double null_slope_sq(const KruskalChart& chart, double u0) {
  return chart.babs / (2.0 * u0 * u0 + chart.babs);
}

LineClass classify(const KruskalChart& chart, const LineGeodesic& line) {
  const double k = k_value(chart, line);
  const double scale = chart.babs + line.xi * line.xi * (2.0 * line.u0 * line.u0 + chart.babs);
  const double tol = 1e-12 * (1.0 + scale);
  if (k > tol) return LineClass::timelike;
  if (k < -tol) return LineClass::spacelike;
  return LineClass::null;
}

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::timelike: return "timelike";
    case LineClass::null: return "null";
    default: return "spacelike";
  }
}

// Intersection quadratic of the line with v^2 - u^2 = |b'|/2:
//   Q(u) = (xi^2 - 1) u^2 - 2 xi^2 u0 u + (xi^2 u0^2 - |b'|/2).
// Along the line, D(u, v) = 2 |b'| Q(u).
namespace {

struct Quad {
  double a, b, c;
  double operator()(double u) const { return (a * u + b) * u + c; }
};

Quad intersection_quadratic(const KruskalChart& chart, const LineGeodesic& line) {
  const double xi2 = line.xi * line.xi;
  return {xi2 - 1.0, -2.0 * xi2 * line.u0, xi2 * line.u0 * line.u0 - 0.5 * chart.babs};
}

}  // namespace

TangencyResult tangency_check(const KruskalChart& chart, const LineGeodesic& line) {
  const Quad q = intersection_quadratic(chart, line);
  const double xi2 = line.xi * line.xi;
  TangencyResult res;
  if (std::abs(q.a) < 1e-12 * (1.0 + xi2)) {
    // Slope +-1: parallel to the asymptotes. Through the origin the line never
    // meets the hyperbola but approaches both branches.
    if (std::abs(q.b) < 1e-12 * (1.0 + xi2)) {
      res.status = TangencyStatus::asymptotic;
      return res;
    }
    res.status = TangencyStatus::not_tangent;  // single transversal crossing
    return res;
  }
  const double disc4 = q.b * q.b * 0.25 - q.a * q.c;
  const double scale = std::max({q.b * q.b * 0.25, std::abs(q.a * q.c),
                                 chart.babs * chart.babs});
  if (std::abs(disc4) < 1e-10 * (scale + 1e-300)) {
    res.status = TangencyStatus::tangent;
    const double u = -q.b / (2.0 * q.a);
    res.touch_point = {{u, line.xi * (u - line.u0)}};
    return res;
  }
  res.status = TangencyStatus::not_tangent;
  return res;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    default: return "IV";
  }
}

std::optional<Region> region_at(double u, double v) {
  const double au = std::abs(u), av = std::abs(v);
  if (au > av) return u > 0.0 ? Region::I : Region::III;
  if (av > au) return v > 0.0 ? Region::II : Region::IV;
  return std::nullopt;  // on a horizon line
}

TraversalReport traversability(const KruskalChart& chart, const LineGeodesic& line) {
  const Quad q = intersection_quadratic(chart, line);
  TraversalReport rep;

  // Real roots of Q (the D = 0 crossings along the line).
  std::vector<double> roots;
  if (std::abs(q.a) < 1e-14 * (1.0 + line.xi * line.xi)) {
    if (std::abs(q.b) > 1e-300) roots.push_back(-q.c / q.b);
  } else {
    const double disc4 = q.b * q.b * 0.25 - q.a * q.c;
    if (disc4 == 0.0) {
      roots.push_back(-q.b / (2.0 * q.a));
    } else if (disc4 > 0.0) {
      // Stable quadratic pair via the larger-magnitude intermediate.
      const double sq = std::sqrt(disc4);
      const double qq = -(0.5 * q.b + std::copysign(sq, q.b));
      roots.push_back(qq / q.a);
      if (qq != 0.0) roots.push_back(q.c / qq);
      std::sort(roots.begin(), roots.end());
    }
  }
  rep.singular_u = roots;
  rep.hits_singularity = !roots.empty();

  // Segment endpoints: roots plus far bounds beyond every crossing.
  double far = 1e3 * (1.0 + std::abs(line.u0)) * (1.0 + std::abs(line.xi));
  for (double r : roots) far = std::max(far, 2.0 * std::abs(r) + 1.0);
  std::vector<double> edges;
  edges.push_back(-far);
  for (double r : roots) edges.push_back(r);
  edges.push_back(far);
  std::sort(edges.begin(), edges.end());

  auto sample_regions = [&](double ua, double ub, bool open_left, bool open_right,
                            std::vector<Region>& out) {
    for (int i = 1; i <= 7; ++i) {
      const double u = ua + (ub - ua) * i / 8.0;
      if (auto r = region_at(u, line.xi * (u - line.u0))) {
        if (std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
      }
    }
    // Asymptotic region labels for unbounded ends.
    auto push = [&](std::optional<Region> r) {
      if (r && std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
    };
    const double axi = std::abs(line.xi);
    if (open_right) {
      if (axi < 1.0) push(Region::I);
      else if (line.xi > 1.0) push(Region::II);
      else if (line.xi < -1.0) push(Region::IV);
    }
    if (open_left) {
      if (axi < 1.0) push(Region::III);
      else if (line.xi > 1.0) push(Region::IV);
      else if (line.xi < -1.0) push(Region::II);
    }
  };

  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double ua = edges[s], ub = edges[s + 1];
    const double mid = 0.5 * (ua + ub);
    if (q(mid) >= 0.0) continue;  // not a physical (D < 0) segment
    std::vector<Region> seg;
    sample_regions(ua, ub, s == 0, s + 2 == edges.size(), seg);
    const bool has_i = std::find(seg.begin(), seg.end(), Region::I) != seg.end();
    const bool has_iii = std::find(seg.begin(), seg.end(), Region::III) != seg.end();
    if (has_i && has_iii) rep.crosses_throat = true;
    for (Region r : seg)
      if (std::find(rep.regions.begin(), rep.regions.end(), r) == rep.regions.end())
        rep.regions.push_back(r);
  }
  std::sort(rep.regions.begin(), rep.regions.end());
  return rep;
}

std::array<double, 2> null_directions(const KruskalChart& chart, double u, double v) {
  // ds^2 = 0 along dv = xi du: (2u^2+|b'|) xi^2 - 4uv xi + (2v^2-|b'|) = 0.
  const double a = 2.0 * u * u + chart.babs;
  const double b = -4.0 * u * v;
  const double c = 2.0 * v * v - chart.babs;
  const double disc4 = 0.25 * b * b - a * c;  // = -D(u, v)
  if (disc4 <= 0.0)
    throw std::domain_error("null_directions: point is not in a Minkowski region");
  const double sq = std::sqrt(disc4);
  const double xi1 = (-0.5 * b + sq) / a;
  const double xi2 = (-0.5 * b - sq) / a;
  return {xi1, xi2};
}

}  // namespace nlqg::kruskal

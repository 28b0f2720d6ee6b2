#include "nlqg/metric2d.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqg::geom {

GaugeK gauge_from_connection(const Connection& c) {
  return {-c.g1_00, c.g0_00 - 2.0 * c.g1_01, -c.g1_11 + 2.0 * c.g0_01, c.g0_11};
}

MetricDerivs metric_derivs(const MetricField& m, double c0, double c1) {
  if (m.derivs) return m.derivs(c0, c1);
  auto stencil = [&](auto eval_at, double h) {
    Sym2 lo2 = eval_at(-2.0 * h), lo1 = eval_at(-h), hi1 = eval_at(h), hi2 = eval_at(2.0 * h);
    const double inv = 1.0 / (12.0 * h);
    Sym2 d;
    d.m00 = (-hi2.m00 + 8.0 * hi1.m00 - 8.0 * lo1.m00 + lo2.m00) * inv;
    d.m01 = (-hi2.m01 + 8.0 * hi1.m01 - 8.0 * lo1.m01 + lo2.m01) * inv;
    d.m11 = (-hi2.m11 + 8.0 * hi1.m11 - 8.0 * lo1.m11 + lo2.m11) * inv;
    return d;
  };
  MetricDerivs d;
  const double h0 = m.fd_step * (1.0 + std::abs(c0));
  const double h1 = m.fd_step * (1.0 + std::abs(c1));
  d.d0 = stencil([&](double e) { return m.eval(c0 + e, c1); }, h0);
  d.d1 = stencil([&](double e) { return m.eval(c0, c1 + e); }, h1);
  return d;
}

Connection christoffel(const MetricField& m, double c0, double c1) {
  const Sym2 g = m.eval(c0, c1);
  const double det = g.det();
  if (std::abs(det) < 1e-12) throw std::domain_error("christoffel: singular metric");
  const MetricDerivs d = metric_derivs(m, c0, c1);

  // g_{ij,k} from the symmetric storage.
  const Sym2 dg[2] = {d.d0, d.d1};
  auto lower = [&](int i, int j, int k) {
    const Sym2& s = dg[k];
    if (i == 0 && j == 0) return s.m00;
    if (i == 1 && j == 1) return s.m11;
    return s.m01;
  };
  // Gamma_{l jk} = (1/2)(g_{jl,k} + g_{lk,j} - g_{jk,l})
  auto gamma_lower = [&](int l, int j, int k) {
    return 0.5 * (lower(j, l, k) + lower(l, k, j) - lower(j, k, l));
  };
  const double inv00 = g.m11 / det;
  const double inv01 = -g.m01 / det;
  const double inv11 = g.m00 / det;
  auto raise = [&](int i, int j, int k) {
    const double a = (i == 0) ? inv00 : inv01;
    const double b = (i == 0) ? inv01 : inv11;
    return a * gamma_lower(0, j, k) + b * gamma_lower(1, j, k);
  };
  Connection c;
  c.g0_00 = raise(0, 0, 0);
  c.g0_01 = raise(0, 0, 1);
  c.g0_11 = raise(0, 1, 1);
  c.g1_00 = raise(1, 0, 0);
  c.g1_01 = raise(1, 0, 1);
  c.g1_11 = raise(1, 1, 1);
  return c;
}

double geodesic_residual(const Connection& c, double xd, double xdd) {
  return xdd + (2.0 * c.g1_01 - c.g0_00) * xd + (c.g1_11 - 2.0 * c.g0_01) * xd * xd -
         c.g0_11 * xd * xd * xd + c.g1_00;
}

double geodesic_residual(const ConnectionField& conn, double t, double x, double xd,
                         double xdd) {
  return geodesic_residual(conn(t, x), xd, xdd);
}

double geodesic_residual(const ConnectionField& conn, const PathFn& path, double t) {
  const PathPoint p = path(t);
  return geodesic_residual(conn(t, p.x), p.xd, p.xdd);
}

std::vector<double> geodesic_residual_samples(const ConnectionField& conn, double t0,
                                              double dt, const std::vector<double>& x) {
  if (x.size() < 5)
    throw std::domain_error("geodesic_residual_samples: need >= 5 samples");
  std::vector<double> res;
  res.reserve(x.size() - 4);
  const double inv1 = 1.0 / (12.0 * dt);
  const double inv2 = 1.0 / (12.0 * dt * dt);
  for (std::size_t i = 2; i + 2 < x.size(); ++i) {
    const double xd = (-x[i + 2] + 8.0 * x[i + 1] - 8.0 * x[i - 1] + x[i - 2]) * inv1;
    const double xdd = (-x[i + 2] + 16.0 * x[i + 1] - 30.0 * x[i] + 16.0 * x[i - 1] -
                        x[i - 2]) * inv2;
    const double t = t0 + dt * static_cast<double>(i);
    res.push_back(geodesic_residual(conn(t, x[i]), xd, xdd));
  }
  return res;
}

GeodesicPath integrate_geodesic(const ConnectionField& conn, double x0, double xdot0,
                                double t0, double t1, int steps,
                                const std::function<double(double, double)>& det_probe) {
  if (steps < 16) throw std::domain_error("integrate_geodesic: need >= 16 steps");
  const double dt = (t1 - t0) / steps;
  if (std::abs(dt) < 1e-300)
    throw std::domain_error("integrate_geodesic: step underflow");

  double prev_det = 0.0;
  bool have_prev_det = false;
  auto singular_here = [&](double t, double x) {
    if (!det_probe) return false;
    const double d = det_probe(t, x);
    const double ad = std::abs(d);
    if (!(std::isfinite(d)) || ad < 1e-12 || ad > 1e12) return true;
    // A sign flip of det g between steps means the walk stepped across a
    // singular locus even if no sample landed near it.
    const bool flipped = have_prev_det && (d > 0.0) != (prev_det > 0.0);
    prev_det = d;
    have_prev_det = true;
    return flipped;
  };
  singular_here(t0, x0);
  auto rhs = [&](double t, double x, double xd, double& out_xdd) {
    const Connection c = conn(t, x);
    out_xdd = -((2.0 * c.g1_01 - c.g0_00) * xd + (c.g1_11 - 2.0 * c.g0_01) * xd * xd -
                c.g0_11 * xd * xd * xd + c.g1_00);
    return std::isfinite(out_xdd);
  };

  GeodesicPath path;
  path.t.push_back(t0);
  path.x.push_back(x0);
  path.xdot.push_back(xdot0);
  double t = t0, x = x0, xd = xdot0;
  for (int s = 0; s < steps; ++s) {
    double a1, a2, a3, a4;
    bool ok = rhs(t, x, xd, a1);
    const double x2 = x + 0.5 * dt * xd, v2 = xd + 0.5 * dt * a1;
    ok = ok && rhs(t + 0.5 * dt, x2, v2, a2);
    const double x3 = x + 0.5 * dt * v2, v3 = xd + 0.5 * dt * a2;
    ok = ok && rhs(t + 0.5 * dt, x3, v3, a3);
    const double x4 = x + dt * v3, v4 = xd + dt * a3;
    ok = ok && rhs(t + dt, x4, v4, a4);
    if (!ok) {
      path.singular_stop = true;
      break;
    }
    const double xn = x + (dt / 6.0) * (xd + 2.0 * v2 + 2.0 * v3 + v4);
    const double vn = xd + (dt / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    t = t0 + dt * (s + 1);
    if (singular_here(t, xn)) {
      path.singular_stop = true;
      break;
    }
    x = xn;
    xd = vn;
    path.t.push_back(t);
    path.x.push_back(x);
    path.xdot.push_back(xd);
  }
  return path;
}

RicciResult ricci(const MetricField& m, double c0, double c1) {
  // Connection and its coordinate derivatives (fourth-order stencil on
  // christoffel, which itself uses analytic partials when available).
  auto conn_at = [&](double a, double b) { return christoffel(m, a, b); };
  auto to_array = [](const Connection& c, double g[2][2][2]) {
    g[0][0][0] = c.g0_00;
    g[0][0][1] = g[0][1][0] = c.g0_01;
    g[0][1][1] = c.g0_11;
    g[1][0][0] = c.g1_00;
    g[1][0][1] = g[1][1][0] = c.g1_01;
    g[1][1][1] = c.g1_11;
  };
  const double h0 = m.fd_step * (1.0 + std::abs(c0));
  const double h1 = m.fd_step * (1.0 + std::abs(c1));
  double g[2][2][2], dg[2][2][2][2];  // dg[mu][i][j][k] = d_mu Gamma^i_jk
  to_array(conn_at(c0, c1), g);
  for (int mu = 0; mu < 2; ++mu) {
    const double h = (mu == 0) ? h0 : h1;
    double gm2[2][2][2], gm1[2][2][2], gp1[2][2][2], gp2[2][2][2];
    auto shift = [&](double e) {
      return (mu == 0) ? conn_at(c0 + e, c1) : conn_at(c0, c1 + e);
    };
    to_array(shift(-2.0 * h), gm2);
    to_array(shift(-h), gm1);
    to_array(shift(h), gp1);
    to_array(shift(2.0 * h), gp2);
    const double inv = 1.0 / (12.0 * h);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          dg[mu][i][j][k] =
              (-gp2[i][j][k] + 8.0 * gp1[i][j][k] - 8.0 * gm1[i][j][k] + gm2[i][j][k]) * inv;
  }

  // R_{sn} = d_mu G^mu_{ns} - d_n G^mu_{mu s} + G^mu_{mu l} G^l_{ns} - G^mu_{nl} G^l_{mu s}
  double r[2][2];
  for (int s = 0; s < 2; ++s)
    for (int n = 0; n < 2; ++n) {
      double val = 0.0;
      for (int mu = 0; mu < 2; ++mu) {
        val += dg[mu][mu][n][s] - dg[n][mu][mu][s];
        for (int l = 0; l < 2; ++l)
          val += g[mu][mu][l] * g[l][n][s] - g[mu][n][l] * g[l][mu][s];
      }
      r[s][n] = val;
    }

  const Sym2 gm = m.eval(c0, c1);
  const double det = gm.det();
  if (std::abs(det) < 1e-12) throw std::domain_error("ricci: singular metric");
  const double inv00 = gm.m11 / det, inv01 = -gm.m01 / det, inv11 = gm.m00 / det;
  RicciResult out;
  out.ricci = {r[0][0], 0.5 * (r[0][1] + r[1][0]), r[1][1]};
  out.scalar = inv00 * out.ricci.m00 + 2.0 * inv01 * out.ricci.m01 + inv11 * out.ricci.m11;
  return out;
}

Signature signature(const MetricField& m, double c0, double c1, double tol) {
  const double det = m.eval(c0, c1).det();
  if (!std::isfinite(det) || std::abs(det) < tol || std::abs(det) > 1.0 / tol)
    return Signature::singular;
  return det > 0.0 ? Signature::euclidean : Signature::minkowski;
}

const char* to_string(Signature s) {
  switch (s) {
    case Signature::euclidean: return "euclidean";
    case Signature::minkowski: return "minkowski";
    default: return "singular";
  }
}

}  // namespace nlqg::geom

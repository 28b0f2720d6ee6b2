#include "nlqg/metric_recovery.hpp"

#include <cmath>
#include <stdexcept>

#include "nlqg/numerics.hpp"

namespace nlqg::invert {

ScalarFn fn_exp(double rate) {
  return {[rate](double t) { return std::exp(rate * t); },
          [rate](double t) { return rate * std::exp(rate * t); },
          [rate](double t) { return rate * rate * std::exp(rate * t); }};
}

ScalarFn fn_sin(double freq) {
  return {[freq](double t) { return std::sin(freq * t); },
          [freq](double t) { return freq * std::cos(freq * t); },
          [freq](double t) { return -freq * freq * std::sin(freq * t); }};
}

ScalarFn fn_cos(double freq) {
  return {[freq](double t) { return std::cos(freq * t); },
          [freq](double t) { return -freq * std::sin(freq * t); },
          [freq](double t) { return -freq * freq * std::cos(freq * t); }};
}

ScalarFn fn_tanh(double rate) {
  return {[rate](double t) { return std::tanh(rate * t); },
          [rate](double t) {
            const double c = std::cosh(rate * t);
            return rate / (c * c);
          },
          [rate](double t) {
            const double c = std::cosh(rate * t);
            return -2.0 * rate * rate * std::tanh(rate * t) / (c * c);
          }};
}

ScalarFn fn_poly(double c0, double c1, double c2) {
  return {[=](double t) { return c0 + c1 * t + c2 * t * t; },
          [=](double t) { return c1 + 2.0 * c2 * t; },
          [=](double t) { (void)t; return 2.0 * c2; }};
}

ScalarFn fn_zero() { return fn_poly(0.0, 0.0, 0.0); }

ScalarFn fn_scale_add(const ScalarFn& base, double scale, double offset) {
  return {[base, scale, offset](double t) { return scale * base.f(t) + offset; },
          [base, scale](double t) { return scale * base.df(t); },
          [base, scale](double t) { return scale * base.d2f(t); }};
}

double FunctionPair::u(double t) const { return f2.df(t) / f1.df(t); }
double FunctionPair::v(double t) const { return f1.df(t) * f2.f(t) - f2.df(t) * f1.f(t); }
double FunctionPair::w(double t) const {
  return f1.d2f(t) * f2.df(t) - f2.d2f(t) * f1.df(t);
}
double FunctionPair::vdot(double t) const {
  return f1.d2f(t) * f2.f(t) - f2.d2f(t) * f1.f(t);
}

geom::GaugeK GaugeField::eval(double t, double x) const {
  return {k0_const(t) + k0_x(t) * x, k1(t), 0.0, 0.0};
}

namespace {

double guarded(double denom, double t, const char* what) {
  if (!std::isfinite(denom) || denom == 0.0)
    throw std::domain_error(std::string(what) + " vanishes at t = " + std::to_string(t));
  return denom;
}

std::function<double(double)> zero_of_t() {
  return [](double) { return 0.0; };
}

}  // namespace

GaugeField gauge_one_function(const ScalarFn& f) {
  GaugeField g;
  g.k1 = [f](double t) { return f.d2f(t) / guarded(f.df(t), t, "f'"); };
  g.k0_const = zero_of_t();
  g.k0_x = zero_of_t();
  g.denom = [f](double t) { return f.df(t); };
  return g;
}

GaugeField gauge_case_a(const FunctionPair& p) {
  GaugeField g;
  g.k1 = [p](double t) { return p.f1.d2f(t) / guarded(p.f1.df(t), t, "f1'"); };
  g.k0_const = [p](double t) { return -p.w(t) / guarded(p.f1.df(t), t, "f1'"); };
  g.k0_x = zero_of_t();
  g.denom = [p](double t) { return p.f1.df(t); };
  return g;
}

GaugeField gauge_case_b(const FunctionPair& p) {
  GaugeField g;
  g.k1 = [p](double t) { return p.vdot(t) / guarded(p.v(t), t, "v"); };
  g.k0_const = zero_of_t();
  g.k0_x = [p](double t) { return -p.w(t) / guarded(p.v(t), t, "v"); };
  g.denom = [p](double t) { return p.v(t); };
  return g;
}

std::optional<double> scan_sign_change(const std::function<double(double)>& fn,
                                       double t0, double t1, int samples) {
  double prev = fn(t0);
  for (int i = 1; i <= samples; ++i) {
    const double t = t0 + (t1 - t0) * i / samples;
    const double cur = fn(t);
    if (prev == 0.0) return t0 + (t1 - t0) * (i - 1) / samples;
    if (cur == 0.0 || (prev > 0.0) != (cur > 0.0)) {
      // Bisect to the crossing.
      double lo = t0 + (t1 - t0) * (i - 1) / samples, hi = t;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (prev > 0.0))
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
  }
  return std::nullopt;
}

AnsatzCoefficients ansatz_rates(const AnsatzCoefficients& c, double k1, double k0c,
                                double k0x) {
  AnsatzCoefficients d;
  d.r0 = (2.0 / 3.0) * k1 * c.r0 - 2.0 * k0c * c.q0;
  d.r1 = (2.0 / 3.0) * k1 * c.r1 - 2.0 * k0c * c.q1 - 2.0 * k0x * c.q0;
  d.r2 = (2.0 / 3.0) * k1 * c.r2 - 2.0 * k0x * c.q1;
  d.q0 = -(1.0 / 3.0) * k1 * c.q0 - 0.5 * c.r1 - k0c * c.p0;
  d.q1 = -(1.0 / 3.0) * k1 * c.q1 - c.r2 - k0x * c.p0;
  d.p0 = -(4.0 / 3.0) * k1 * c.p0 - 2.0 * c.q1;
  return d;
}

std::vector<AnsatzSample> integrate_ansatz(const GaugeField& gauge,
                                           const AnsatzCoefficients& init, double t0,
                                           double t1, int steps) {
  if (steps < 2) throw std::domain_error("integrate_ansatz: need >= 2 steps");
  if (auto z = scan_sign_change(gauge.denom, t0, t1))
    throw std::domain_error("integrate_ansatz: gauge singular at t = " +
                            std::to_string(*z));
  const double dt = (t1 - t0) / steps;
  if (std::abs(dt) < 1e-300) throw std::domain_error("integrate_ansatz: step underflow");

  Rk4Rhs<6> rhs = [&gauge](double t, const std::array<double, 6>& y) {
    const AnsatzCoefficients c{y[0], y[1], y[2], y[3], y[4], y[5]};
    const AnsatzCoefficients d =
        ansatz_rates(c, gauge.k1(t), gauge.k0_const(t), gauge.k0_x(t));
    return std::array<double, 6>{d.p0, d.q0, d.q1, d.r0, d.r1, d.r2};
  };

  std::vector<AnsatzSample> out;
  out.reserve(steps + 1);
  std::array<double, 6> y{init.p0, init.q0, init.q1, init.r0, init.r1, init.r2};
  out.push_back({t0, init});
  for (int s = 0; s < steps; ++s) {
    y = rk4_step<6>(rhs, t0 + dt * s, y, dt);
    out.push_back({t0 + dt * (s + 1),
                   AnsatzCoefficients{y[0], y[1], y[2], y[3], y[4], y[5]}});
  }
  return out;
}

geom::Sym2 ansatz_components(const AnsatzCoefficients& c, double x) {
  return {c.r0 + c.r1 * x + c.r2 * x * x, c.q0 + c.q1 * x, c.p0};
}

geom::MetricField ansatz_metric(const CoefficientSet& coeffs) {
  geom::MetricField m;
  m.eval = [coeffs](double t, double x) {
    const geom::Sym2 a = ansatz_components(coeffs.value(t), x);
    const double det = a.det();
    const double inv = 1.0 / (det * det);
    return geom::Sym2{a.m00 * inv, a.m01 * inv, a.m11 * inv};
  };
  m.derivs = [coeffs](double t, double x) {
    const AnsatzCoefficients c = coeffs.value(t);
    const AnsatzCoefficients d = coeffs.rate(t);
    const geom::Sym2 a = ansatz_components(c, x);
    const geom::Sym2 at = ansatz_components(d, x);  // d/dt of a_ij
    const geom::Sym2 ax{c.r1 + 2.0 * c.r2 * x, c.q1, 0.0};
    const double det = a.det();
    const double det_t = at.m00 * a.m11 + a.m00 * at.m11 - 2.0 * a.m01 * at.m01;
    const double det_x = ax.m00 * a.m11 + a.m00 * ax.m11 - 2.0 * a.m01 * ax.m01;
    const double inv3 = 1.0 / (det * det * det);
    auto d_of = [&](double aij, double daij, double ddet) {
      return (daij * det - 2.0 * aij * ddet) * inv3;
    };
    geom::MetricDerivs out;
    out.d0 = {d_of(a.m00, at.m00, det_t), d_of(a.m01, at.m01, det_t),
              d_of(a.m11, at.m11, det_t)};
    out.d1 = {d_of(a.m00, ax.m00, det_x), d_of(a.m01, ax.m01, det_x),
              d_of(a.m11, ax.m11, det_x)};
    return out;
  };
  return m;
}

// ---------------------------------------------------------------------------

double OneFunctionConstants::a_prime() const {
  return rbar0 / rbar2 - rbar1 * rbar1 / (4.0 * rbar2 * rbar2);
}
double OneFunctionConstants::b_prime() const {
  return (c1 - c2) * rbar1 / (2.0 * rbar2);
}
double OneFunctionConstants::c_prime() const { return c3 - c2 * c2; }
double OneFunctionConstants::alpha() const { return rbar1 / (2.0 * rbar2); }
double OneFunctionConstants::beta() const { return c2; }

double OneFunctionSolution::big_d(double T, double X) const {
  const double bp = c.b_prime() + T * X;
  return -bp * bp + (c.c_prime() + T * T) * (c.a_prime() + X * X);
}

double OneFunctionSolution::to_big_t(double t) const { return f.f(t) + c.beta(); }
double OneFunctionSolution::to_big_x(double x) const { return x + c.alpha(); }

geom::Sym2 OneFunctionSolution::metric_tx_closed(double t, double x) const {
  const double T = to_big_t(t), X = to_big_x(x);
  const double d = big_d(T, X);
  const double fd = f.df(t);
  const double scale = 1.0 / (c.rbar2 * c.rbar2 * c.rbar2 * d * d);
  return {(c.a_prime() + X * X) * fd * fd * scale,
          -(c.b_prime() + T * X) * fd * scale,
          (c.c_prime() + T * T) * scale};
}

geom::Connection OneFunctionSolution::connection_big(double T, double X) const {
  const double d = big_d(T, X);
  const double ap = c.a_prime(), bp = c.b_prime(), cp = c.c_prime();
  geom::Connection conn;
  conn.g0_00 = 2.0 * (bp * X - ap * T) / d;
  conn.g0_01 = (bp * T - cp * X) / d;
  conn.g0_11 = 0.0;
  conn.g1_00 = 0.0;
  conn.g1_01 = (bp * X - ap * T) / d;
  conn.g1_11 = 2.0 * (bp * T - cp * X) / d;
  return conn;
}

OneFunctionSolution one_function_solution(const ScalarFn& f,
                                          const OneFunctionConstants& c) {
  if (c.rbar2 == 0.0)
    throw std::domain_error("one_function_solution: rbar2 must be nonzero");
  OneFunctionSolution sol;
  sol.f = f;
  sol.c = c;
  sol.gauge = gauge_one_function(f);

  auto value = [f, c](double t) {
    const double fv = f.f(t);
    const double fd = guarded(f.df(t), t, "f'");
    AnsatzCoefficients a;
    a.r0 = c.rbar0 * cbrt_pow2(fd);
    a.r1 = c.rbar1 * cbrt_pow2(fd);
    a.r2 = c.rbar2 * cbrt_pow2(fd);
    a.q0 = -0.5 * c.rbar1 * (c.c1 + fv) / cbrt_pow1(fd);
    a.q1 = -c.rbar2 * (c.c2 + fv) / cbrt_pow1(fd);
    a.p0 = c.rbar2 * (c.c3 + 2.0 * c.c2 * fv + fv * fv) / cbrt_pow4(fd);
    return a;
  };
  GaugeField gauge = sol.gauge;
  sol.coeffs.value = value;
  sol.coeffs.rate = [value, gauge](double t) {
    return ansatz_rates(value(t), gauge.k1(t), 0.0, 0.0);
  };
  sol.metric_tx = ansatz_metric(sol.coeffs);

  const double ap = c.a_prime(), bp = c.b_prime(), cp = c.c_prime();
  const double r2c = c.rbar2 * c.rbar2 * c.rbar2;
  sol.ricci_scalar = 2.0 * r2c * (ap * cp - bp * bp);

  geom::MetricField big;
  big.eval = [ap, bp, cp, r2c](double T, double X) {
    const double bb = bp + T * X;
    const double d = -bb * bb + (cp + T * T) * (ap + X * X);
    const double s = 1.0 / (r2c * d * d);
    return geom::Sym2{(ap + X * X) * s, -bb * s, (cp + T * T) * s};
  };
  big.derivs = [ap, bp, cp, r2c](double T, double X) {
    const double bb = bp + T * X;
    const double n00 = ap + X * X, n11 = cp + T * T;
    const double d = -bb * bb + n11 * n00;
    const double dT = -2.0 * bb * X + 2.0 * T * n00;
    const double dX = -2.0 * bb * T + 2.0 * X * n11;
    const double inv3 = 1.0 / (r2c * d * d * d);
    auto comp = [&](double n, double dn, double dd) {
      return (dn * d - 2.0 * n * dd) * inv3;
    };
    geom::MetricDerivs out;
    out.d0 = {comp(n00, 0.0, dT), comp(-bb, -X, dT), comp(n11, 2.0 * T, dT)};
    out.d1 = {comp(n00, 2.0 * X, dX), comp(-bb, -T, dX), comp(n11, 0.0, dX)};
    return out;
  };
  sol.metric_big = big;
  return sol;
}

// ---------------------------------------------------------------------------

double CaseAConstants::e1() const { return qbar1 * qbar1 - pbar0 * rbar2; }
double CaseAConstants::e2() const { return -qbar0 * qbar0 + 4.0 * pbar0 * rbar0; }
double CaseAConstants::e3() const { return rbar1 * rbar1 - 4.0 * rbar0 * rbar2; }
double CaseAConstants::e4() const { return qbar0 * qbar1 - pbar0 * rbar1; }
double CaseAConstants::e5() const { return -4.0 * qbar1 * rbar0 + qbar0 * rbar1; }
double CaseAConstants::e6() const { return qbar1 * rbar1 - qbar0 * rbar2; }

double CaseASolution::det_a(double t, double x) const {
  return ansatz_components(coeffs.value(t), x).det();
}

double CaseASolution::det_a_bracket(double t, double x) const {
  const double f1 = pair.f1.f(t), f2 = pair.f2.f(t);
  const double e1 = c.e1(), e2 = c.e2(), e3 = c.e3();
  const double e4 = c.e4(), e5 = c.e5(), e6 = c.e6();
  const double bracket = e2 - 4.0 * e4 * x - 4.0 * e1 * x * x - e3 * f1 * f1 +
                         4.0 * (e4 + 2.0 * e1 * x) * f2 - 4.0 * e1 * f2 * f2 +
                         2.0 * f1 * (e5 - 2.0 * e6 * x + 2.0 * e6 * f2);
  return bracket / (4.0 * cbrt_pow2(pair.f1.df(t)));
}

CaseASolution case_a_solution(const FunctionPair& pair, const CaseAConstants& c) {
  CaseASolution sol;
  sol.pair = pair;
  sol.c = c;
  sol.gauge = gauge_case_a(pair);

  auto value = [pair, c](double t) {
    const double f1 = pair.f1.f(t);
    const double fd = guarded(pair.f1.df(t), t, "f1'");
    const double u = pair.u(t);
    const double vq = pair.v(t) / fd;
    AnsatzCoefficients a;
    a.r2 = c.rbar2 * cbrt_pow2(fd);
    a.q1 = (c.qbar1 - c.rbar2 * f1) / cbrt_pow1(fd);
    a.p0 = (c.pbar0 - 2.0 * c.qbar1 * f1 + c.rbar2 * f1 * f1) / cbrt_pow4(fd);
    a.r1 = cbrt_pow2(fd) * (c.rbar1 - 2.0 * c.qbar1 * u - 2.0 * c.rbar2 * vq);
    a.q0 = 0.5 / cbrt_pow1(fd) *
           (c.qbar0 + 2.0 * c.rbar2 * vq * f1 - 2.0 * c.pbar0 * u - c.rbar1 * f1 +
            2.0 * c.qbar1 * (u * f1 - vq));
    a.r0 = cbrt_pow2(fd) *
           (c.rbar0 - c.qbar0 * u + c.rbar2 * vq * vq + c.pbar0 * u * u -
            c.rbar1 * vq + 2.0 * u * c.qbar1 * vq);
    return a;
  };
  GaugeField gauge = sol.gauge;
  sol.coeffs.value = value;
  sol.coeffs.rate = [value, gauge](double t) {
    return ansatz_rates(value(t), gauge.k1(t), gauge.k0_const(t), 0.0);
  };
  sol.metric = ansatz_metric(sol.coeffs);
  sol.ricci_scalar = -2.0 * c.rbar0 * c.e1() + 0.5 * c.rbar1 * c.e4() +
                     0.5 * c.qbar0 * c.e6();
  return sol;
}

// ---------------------------------------------------------------------------

double CaseBConstants::n1() const { return -m2 * m2 + 4.0 * m1 * m3; }
double CaseBConstants::n2() const { return -4.0 * m2 * alpha + 8.0 * m1 * beta; }
double CaseBConstants::n3() const { return -8.0 * m3 * alpha + 4.0 * m2 * beta; }
double CaseBConstants::n4() const { return m1 * rbar0 - alpha * alpha; }
double CaseBConstants::n5() const { return m2 * rbar0 - 2.0 * alpha * beta; }
double CaseBConstants::n6() const { return m3 * rbar0 - beta * beta; }

double CaseBSolution::a2(double t) const {
  const double f1 = pair.f1.f(t), f2 = pair.f2.f(t);
  return c.m1 * f1 * f1 + c.m2 * f1 * f2 + c.m3 * f2 * f2;
}

double CaseBSolution::b2(double t) const {
  const double d1 = pair.f1.df(t), d2 = pair.f2.df(t);
  const double v = pair.v(t);
  return (c.m1 * d1 * d1 + c.m2 * d1 * d2 + c.m3 * d2 * d2) / (v * v);
}

double CaseBSolution::cc(double t) const {
  const double f1 = pair.f1.f(t), f2 = pair.f2.f(t);
  const double d1 = pair.f1.df(t), d2 = pair.f2.df(t);
  return -(c.m1 * f1 * d1 + c.m3 * f2 * d2 + 0.5 * c.m2 * (d1 * f2 + d2 * f1)) /
         pair.v(t);
}

double CaseBSolution::det_a(double t, double x) const {
  return ansatz_components(coeffs.value(t), x).det();
}

double CaseBSolution::det_a_bracket(double t, double x) const {
  const double f1 = pair.f1.f(t), f2 = pair.f2.f(t);
  const double bracket = c.n1() * x * x + x * (c.n2() * f1 + c.n3() * f2) +
                         4.0 * (c.n4() * f1 * f1 + c.n6() * f2 * f2 +
                                c.n5() * f1 * f2);
  return bracket / (4.0 * cbrt_pow2(pair.v(t)));
}

CaseBSolution case_b_solution(const FunctionPair& pair, const CaseBConstants& c) {
  CaseBSolution sol;
  sol.pair = pair;
  sol.c = c;
  sol.gauge = gauge_case_b(pair);

  auto value = [pair, c](double t) {
    const double f1 = pair.f1.f(t), f2 = pair.f2.f(t);
    const double d1 = pair.f1.df(t), d2 = pair.f2.df(t);
    const double v = guarded(pair.v(t), t, "v");
    AnsatzCoefficients a;
    a.r0 = c.rbar0 * cbrt_pow2(v);
    a.q0 = (c.alpha * f1 + c.beta * f2) / cbrt_pow1(v);
    a.r1 = -2.0 * (c.alpha * d1 + c.beta * d2) / cbrt_pow1(v);
    a.p0 = (c.m1 * f1 * f1 + c.m2 * f1 * f2 + c.m3 * f2 * f2) / cbrt_pow4(v);
    a.r2 = (c.m1 * d1 * d1 + c.m2 * d1 * d2 + c.m3 * d2 * d2) / cbrt_pow4(v);
    a.q1 = -(c.m1 * f1 * d1 + c.m3 * f2 * d2 + 0.5 * c.m2 * (d1 * f2 + d2 * f1)) /
           cbrt_pow4(v);
    return a;
  };
  GaugeField gauge = sol.gauge;
  sol.coeffs.value = value;
  sol.coeffs.rate = [value, gauge](double t) {
    return ansatz_rates(value(t), gauge.k1(t), 0.0, gauge.k0_x(t));
  };
  sol.metric = ansatz_metric(sol.coeffs);
  sol.ricci_scalar = 0.5 * c.rbar0 * c.n1() + 0.25 * (c.n3() * c.alpha - c.n2() * c.beta);
  sol.constraint_value = c.m1 * c.m3 - 0.25 * c.m2 * c.m2;
  return sol;
}

// ---------------------------------------------------------------------------

RoundtripReport verify_gauge_roundtrip(const geom::MetricField& metric,
                                       const GaugeField& gauge,
                                       const std::vector<std::pair<double, double>>& pts) {
  RoundtripReport rep;
  for (const auto& [t, x] : pts) {
    const geom::GaugeK got = geom::gauge_from_connection(geom::christoffel(metric, t, x));
    const geom::GaugeK want = gauge.eval(t, x);
    rep.max_k0 = std::max(rep.max_k0, std::abs(got.k0 - want.k0));
    rep.max_k1 = std::max(rep.max_k1, std::abs(got.k1 - want.k1));
    rep.max_k2 = std::max(rep.max_k2, std::abs(got.k2 - want.k2));
    rep.max_k3 = std::max(rep.max_k3, std::abs(got.k3 - want.k3));
  }
  rep.max_dev = std::max(std::max(rep.max_k0, rep.max_k1),
                         std::max(rep.max_k2, rep.max_k3));
  return rep;
}

}  // namespace nlqg::invert

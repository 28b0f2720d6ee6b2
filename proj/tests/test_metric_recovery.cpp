#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "nlqg/metric2d.hpp"
#include "nlqg/metric_recovery.hpp"
#include "nlqg/numerics.hpp"

using namespace nlqg;
using invert::AnsatzCoefficients;

namespace {

// Five-point central derivative, step tuned for ~1e-10 accuracy.
double fd_deriv(const std::function<double(double)>& f, double t, double h = 1e-3) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

AnsatzCoefficients fd_rate(const std::function<AnsatzCoefficients(double)>& value,
                           double t) {
  AnsatzCoefficients d;
  d.p0 = fd_deriv([&](double s) { return value(s).p0; }, t);
  d.q0 = fd_deriv([&](double s) { return value(s).q0; }, t);
  d.q1 = fd_deriv([&](double s) { return value(s).q1; }, t);
  d.r0 = fd_deriv([&](double s) { return value(s).r0; }, t);
  d.r1 = fd_deriv([&](double s) { return value(s).r1; }, t);
  d.r2 = fd_deriv([&](double s) { return value(s).r2; }, t);
  return d;
}

double max_gap(const AnsatzCoefficients& a, const AnsatzCoefficients& b) {
  return std::max({std::abs(a.p0 - b.p0), std::abs(a.q0 - b.q0), std::abs(a.q1 - b.q1),
                   std::abs(a.r0 - b.r0), std::abs(a.r1 - b.r1),
                   std::abs(a.r2 - b.r2)});
}

invert::CaseAConstants case_a_constants() {
  invert::CaseAConstants c;
  c.rbar2 = 1.0;
  c.qbar1 = 0.3;
  c.pbar0 = 1.2;
  c.rbar1 = 0.25;
  c.qbar0 = -0.4;
  c.rbar0 = 0.8;
  return c;
}

invert::CaseBConstants case_b_constants() {
  invert::CaseBConstants c;
  c.m1 = 1.0;
  c.m2 = 0.2;
  c.m3 = 0.8;
  c.alpha = 0.3;
  c.beta = -0.2;
  c.rbar0 = 0.7;
  return c;
}

}  // namespace

TEST_CASE("gauge invariants of the three families") {
  SUBCASE("one function") {
    auto flat = invert::gauge_one_function(invert::fn_poly(0.0, 1.0));  // f = t
    CHECK(flat.k1(0.7) == 0.0);
    auto exp2 = invert::gauge_one_function(invert::fn_exp(2.0));
    CHECK(exp2.k1(-0.4) == doctest::Approx(2.0).epsilon(1e-14));
    auto th = invert::gauge_one_function(invert::fn_tanh(1.0));
    CHECK(th.k1(0.7) == doctest::Approx(-1.2087355542343269926).epsilon(1e-13));
    CHECK(th.eval(0.7, 1.3).k0 == 0.0);
    CHECK(th.eval(0.7, 1.3).k2 == 0.0);
    CHECK(th.eval(0.7, 1.3).k3 == 0.0);
    // f = t^2 has f'(0) = 0 exactly; the span scan also finds the crossing
    // of f' = cos t at pi/2.
    auto sq_gauge = invert::gauge_one_function(invert::fn_poly(0.0, 0.0, 1.0));
    CHECK_THROWS_AS(sq_gauge.k1(0.0), std::domain_error);
    auto sin_gauge = invert::gauge_one_function(invert::fn_sin(1.0));
    CHECK_THROWS_AS(
        invert::integrate_ansatz(sin_gauge, invert::AnsatzCoefficients{}, 1.0, 2.0, 50),
        std::domain_error);
  }
  SUBCASE("case A") {
    invert::FunctionPair tpair{invert::fn_poly(0.0, 1.0), invert::fn_poly(0.0, 0.0, 1.0)};
    auto g = invert::gauge_case_a(tpair);  // f1 = t, f2 = t^2: w = -2, K0 = 2
    CHECK(g.k0_const(0.9) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g.k1(0.9) == 0.0);

    invert::FunctionPair zpair{invert::fn_exp(1.0), invert::fn_zero()};
    auto gz = invert::gauge_case_a(zpair);
    CHECK(gz.k0_const(0.4) == 0.0);  // w = 0 collapses onto one function
    CHECK(gz.k1(0.4) == doctest::Approx(1.0).epsilon(1e-14));

    invert::FunctionPair epair{invert::fn_exp(1.0), invert::fn_sin(1.0)};
    auto ge = invert::gauge_case_a(epair);
    for (double t : {0.2, 0.9, 1.7}) {
      // w = e^t (cos t + sin t), f1' = e^t.
      CHECK(ge.k0_const(t) ==
            doctest::Approx(-(std::cos(t) + std::sin(t))).epsilon(1e-13));
      CHECK(ge.k1(t) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  SUBCASE("case B") {
    invert::FunctionPair tpair{invert::fn_poly(0.0, 1.0), invert::fn_poly(0.0, 0.0, 1.0)};
    auto g = invert::gauge_case_b(tpair);  // v = -t^2, w = -2
    CHECK(g.k1(0.5) == doctest::Approx(2.0 / 0.5).epsilon(1e-13));
    CHECK(g.k0_x(0.5) == doctest::Approx(-(-2.0) / (-0.25)).epsilon(1e-12));
    CHECK_THROWS_AS(g.k1(0.0), std::domain_error);  // v(0) = 0

    invert::FunctionPair cs{invert::fn_cos(1.0), invert::fn_sin(1.0)};
    auto gc = invert::gauge_case_b(cs);  // v = -1, w = -1
    CHECK(gc.k1(0.8) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(gc.eval(0.8, 0.7).k0 == doctest::Approx(-0.7).epsilon(1e-14));

    // f2 = beta f1 + beta0 has w = 0: reduces toward the one-function case.
    invert::FunctionPair red{invert::fn_exp(1.0),
                             invert::fn_scale_add(invert::fn_exp(1.0), 0.5, 2.0)};
    auto gr = invert::gauge_case_b(red);
    CHECK(std::abs(gr.k0_x(0.6)) < 1e-14);
    CHECK(gr.k1(0.6) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("function-pair identity f2 = u f1 + v/f1'") {
  const invert::FunctionPair pairs[] = {
      {invert::fn_exp(1.0), invert::fn_sin(1.0)},
      {invert::fn_exp(0.7), invert::fn_poly(0.3, -1.1, 0.4)},
      {invert::fn_cos(1.0), invert::fn_sin(1.0)},
  };
  for (const auto& p : pairs)
    for (double t : {-0.8, 0.2, 1.1}) {
      if (std::abs(p.f1.df(t)) < 1e-6) continue;
      const double rhs = p.u(t) * p.f1.f(t) + p.v(t) / p.f1.df(t);
      CHECK(p.f2.f(t) == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("polynomial reduction of the auxiliary system") {
  // With K2 = K3 = 0 and K0 affine in x, inserting the ansatz into the four
  // field equations and matching powers of x must leave no residual term.
  // The coefficient rates below are exactly the coded ODE right-hand sides,
  // so each polynomial coefficient of each equation must cancel identically.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const AnsatzCoefficients c{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const double k1 = d(rng), k0c = d(rng), k0x = d(rng);
    const AnsatzCoefficients dc = invert::ansatz_rates(c, k1, k0c, k0x);

    // eq1 = da00/dt + 2 K0 a01 - (2/3) K1 a00, coefficients of x^0, x^1, x^2.
    const double eq1[3] = {
        dc.r0 + 2.0 * k0c * c.q0 - (2.0 / 3.0) * k1 * c.r0,
        dc.r1 + 2.0 * (k0c * c.q1 + k0x * c.q0) - (2.0 / 3.0) * k1 * c.r1,
        dc.r2 + 2.0 * k0x * c.q1 - (2.0 / 3.0) * k1 * c.r2};
    // eq2 = 2 da01/dt + dx a00 + 2 K0 a11 + (2/3) K1 a01, coefficients x^0, x^1.
    const double eq2[2] = {
        2.0 * dc.q0 + c.r1 + 2.0 * k0c * c.p0 + (2.0 / 3.0) * k1 * c.q0,
        2.0 * dc.q1 + 2.0 * c.r2 + 2.0 * k0x * c.p0 + (2.0 / 3.0) * k1 * c.q1};
    // eq3 = da11/dt + 2 dx a01 + (4/3) K1 a11.
    const double eq3 = dc.p0 + 2.0 * c.q1 + (4.0 / 3.0) * k1 * c.p0;

    for (double v : eq1) CHECK(std::abs(v) < 1e-13);
    for (double v : eq2) CHECK(std::abs(v) < 1e-13);
    CHECK(std::abs(eq3) < 1e-13);
  }
}

TEST_CASE("flat drift of the coefficient system") {
  // All K = 0: r_i frozen, q0' = -r1/2, q1' = -r2, p0' = -2 q1.
  const AnsatzCoefficients c{1.1, -0.3, 0.6, 0.9, 0.4, -0.7};
  const auto d = invert::ansatz_rates(c, 0.0, 0.0, 0.0);
  CHECK(d.r0 == 0.0);
  CHECK(d.r1 == 0.0);
  CHECK(d.r2 == 0.0);
  CHECK(d.q0 == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(d.q1 == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(d.p0 == doctest::Approx(-1.2).epsilon(1e-15));

  invert::GaugeField zero;
  zero.k1 = [](double) { return 0.0; };
  zero.k0_const = [](double) { return 0.0; };
  zero.k0_x = [](double) { return 0.0; };
  zero.denom = [](double) { return 1.0; };
  const auto path = invert::integrate_ansatz(zero, c, 0.0, 2.0, 200);
  for (const auto& s : path) {
    const double t = s.t;
    CHECK(std::abs(s.c.r0 - c.r0) < 1e-12);
    CHECK(std::abs(s.c.q0 - (c.q0 - 0.5 * c.r1 * t)) < 1e-12);
    CHECK(std::abs(s.c.q1 - (c.q1 - c.r2 * t)) < 1e-12);
    CHECK(std::abs(s.c.p0 - (c.p0 - 2.0 * c.q1 * t + c.r2 * t * t)) < 1e-12);
  }
}

TEST_CASE("closed-form coefficients satisfy their field equations") {
  // Analytic rates against finite differences of the values, and the full
  // field equations evaluated pointwise in (t, x).
  auto pde_residual = [](const invert::CoefficientSet& cs, const invert::GaugeField& g,
                         double t, double x) {
    const AnsatzCoefficients c = cs.value(t);
    const AnsatzCoefficients dc = cs.rate(t);
    const double k1 = g.k1(t), k0 = g.k0_const(t) + g.k0_x(t) * x;
    const double da00 = dc.r0 + dc.r1 * x + dc.r2 * x * x;
    const double da01 = dc.q0 + dc.q1 * x;
    const double da11 = dc.p0;
    const double a00 = c.r0 + c.r1 * x + c.r2 * x * x;
    const double a01 = c.q0 + c.q1 * x;
    const double a11 = c.p0;
    const double a00x = c.r1 + 2.0 * c.r2 * x;
    const double a01x = c.q1;
    const double e1 = da00 + 2.0 * k0 * a01 - (2.0 / 3.0) * k1 * a00;
    const double e2 = 2.0 * da01 + a00x + 2.0 * k0 * a11 + (2.0 / 3.0) * k1 * a01;
    const double e3 = da11 + 2.0 * a01x + (4.0 / 3.0) * k1 * a11;
    return std::max({std::abs(e1), std::abs(e2), std::abs(e3)});
  };

  SUBCASE("one function") {
    invert::OneFunctionConstants c;
    c.rbar0 = 0.9;
    c.rbar1 = 0.5;
    c.rbar2 = 1.3;
    c.c1 = 0.4;
    c.c2 = -0.2;
    c.c3 = 0.8;
    const auto sol = invert::one_function_solution(invert::fn_exp(0.7), c);
    for (double t : {0.1, 0.9, 1.6}) {
      CHECK(max_gap(sol.coeffs.rate(t), fd_rate(sol.coeffs.value, t)) < 1e-7);
      CHECK(pde_residual(sol.coeffs, sol.gauge, t, 0.6) < 1e-12);
    }
  }
  SUBCASE("case A, including the q0 sign from the printed solution") {
    const auto sol = invert::case_a_solution(
        {invert::fn_exp(1.0), invert::fn_sin(1.0)}, case_a_constants());
    for (double t : {0.15, 0.7, 1.3}) {
      CHECK(max_gap(sol.coeffs.rate(t), fd_rate(sol.coeffs.value, t)) < 1e-7);
      CHECK(pde_residual(sol.coeffs, sol.gauge, t, -0.4) < 1e-12);
    }
  }
  SUBCASE("case B on both orientations of v") {
    const auto sol = invert::case_b_solution(
        {invert::fn_cos(1.0), invert::fn_sin(1.0)}, case_b_constants());  // v = -1
    for (double t : {0.15, 0.7, 1.3}) {
      CHECK(max_gap(sol.coeffs.rate(t), fd_rate(sol.coeffs.value, t)) < 1e-7);
      CHECK(pde_residual(sol.coeffs, sol.gauge, t, 0.5) < 1e-12);
    }
    const auto sol2 = invert::case_b_solution(
        {invert::fn_sin(1.0), invert::fn_cos(1.0)}, case_b_constants());  // v = +1
    for (double t : {0.15, 0.7}) {
      CHECK(max_gap(sol2.coeffs.rate(t), fd_rate(sol2.coeffs.value, t)) < 1e-7);
      CHECK(pde_residual(sol2.coeffs, sol2.gauge, t, -0.3) < 1e-12);
    }
  }
}

TEST_CASE("one-function closed forms") {
  SUBCASE("h components and curvature at a spot check") {
    // a' = 0, b' = -1, c' = 0: at (T, X) = (2, 1),
    // D = -(b' + TX)^2 + T^2 X^2 = |b'|(2TX - |b'|) = 3, h00 = X^2/D^2 = 1/9.
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 2.0;
    c.rbar2 = 1.0;
    c.c1 = -1.0;
    c.c2 = 0.0;
    c.c3 = 0.0;
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    CHECK(sol.c.a_prime() == doctest::Approx(0.0));
    CHECK(sol.c.b_prime() == doctest::Approx(-1.0));
    CHECK(sol.c.c_prime() == doctest::Approx(0.0));
    CHECK(sol.big_d(2.0, 1.0) == doctest::Approx(3.0));
    CHECK(sol.metric_big.eval(2.0, 1.0).m00 ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(sol.ricci_scalar == doctest::Approx(-2.0));
  }
  SUBCASE("Euclidean plane for a', c' > 0 with a'c' - b'^2 >= 0") {
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 0.0;
    c.rbar2 = 1.0;
    c.c1 = 0.2;
    c.c2 = 0.0;
    c.c3 = 1.0;  // a' = 1, b' = 0, c' = 1
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 50; ++i)
      CHECK(geom::signature(sol.metric_big, d(rng), d(rng)) ==
            geom::Signature::euclidean);
  }
  SUBCASE("assembled (t, x) metric equals the printed closed form") {
    invert::OneFunctionConstants c;
    c.rbar0 = 0.9;
    c.rbar1 = 0.5;
    c.rbar2 = 1.3;
    c.c1 = 0.4;
    c.c2 = -0.2;
    c.c3 = 0.8;
    const auto sol = invert::one_function_solution(invert::fn_exp(0.7), c);
    for (double t : {0.2, 1.1})
      for (double x : {-0.6, 0.3}) {
        const auto built = sol.metric_tx.eval(t, x);
        const auto closed = sol.metric_tx_closed(t, x);
        CHECK(std::abs(built.m00 - closed.m00) < 1e-12 * (1.0 + std::abs(closed.m00)));
        CHECK(std::abs(built.m01 - closed.m01) < 1e-12 * (1.0 + std::abs(closed.m01)));
        CHECK(std::abs(built.m11 - closed.m11) < 1e-12 * (1.0 + std::abs(closed.m11)));
      }
  }
  SUBCASE("rbar2 must not vanish") {
    invert::OneFunctionConstants c;
    c.rbar2 = 0.0;
    CHECK_THROWS_AS(invert::one_function_solution(invert::fn_exp(1.0), c),
                    std::domain_error);
  }
}

TEST_CASE("case A closed forms") {
  const auto c = case_a_constants();
  SUBCASE("f2 = 0 reduces to the one-function coefficients") {
    const auto sol =
        invert::case_a_solution({invert::fn_exp(1.0), invert::fn_zero()}, c);
    invert::OneFunctionConstants oc;
    oc.rbar0 = c.rbar0;
    oc.rbar1 = c.rbar1;
    oc.rbar2 = c.rbar2;
    oc.c1 = -c.qbar0 / c.rbar1;
    oc.c2 = -c.qbar1 / c.rbar2;
    oc.c3 = c.pbar0 / c.rbar2;
    const auto one = invert::one_function_solution(invert::fn_exp(1.0), oc);
    for (double t : {0.2, 0.8, 1.5})
      CHECK(max_gap(sol.coeffs.value(t), one.coeffs.value(t)) < 1e-13);
  }
  SUBCASE("curvature formula spot value") {
    invert::CaseAConstants simple;
    simple.qbar1 = 0.0;
    simple.qbar0 = 0.0;
    simple.rbar1 = 0.0;
    simple.pbar0 = 1.0;
    simple.rbar2 = 1.0;
    simple.rbar0 = 1.0;
    CHECK(simple.e1() == doctest::Approx(-1.0));
    CHECK(simple.e4() == doctest::Approx(0.0));
    CHECK(simple.e6() == doctest::Approx(0.0));
    const auto sol = invert::case_a_solution(
        {invert::fn_exp(1.0), invert::fn_sin(1.0)}, simple);
    CHECK(sol.ricci_scalar == doctest::Approx(2.0));
  }
  SUBCASE("determinant matches the printed e_i expression") {
    const auto sol =
        invert::case_a_solution({invert::fn_exp(1.0), invert::fn_sin(1.0)}, c);
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> t_d(0.1, 1.4), x_d(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) {
      const double t = t_d(rng), x = x_d(rng);
      CHECK(sol.det_a(t, x) ==
            doctest::Approx(sol.det_a_bracket(t, x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("case B closed forms") {
  SUBCASE("circular pair with m = (1, 0, 1) keeps A2 = B2 = 1, C = 0") {
    invert::CaseBConstants c;
    c.m1 = 1.0;
    c.m2 = 0.0;
    c.m3 = 1.0;
    c.alpha = 0.0;
    c.beta = 0.0;
    c.rbar0 = 1.0;
    const auto sol =
        invert::case_b_solution({invert::fn_cos(1.0), invert::fn_sin(1.0)}, c);
    for (double t : {0.0, 0.6, 2.2}) {
      CHECK(sol.a2(t) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(sol.b2(t) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(sol.cc(t)) < 1e-14);
    }
    CHECK(sol.constraint_value == doctest::Approx(1.0));
  }
  SUBCASE("degenerate m with alpha = beta = 0 gives zero constraint and R") {
    invert::CaseBConstants c;
    c.m1 = 1.0;
    c.m2 = 2.0;
    c.m3 = 1.0;  // m2^2 = 4 m1 m3
    c.alpha = 0.0;
    c.beta = 0.0;
    c.rbar0 = 0.9;
    const auto sol =
        invert::case_b_solution({invert::fn_cos(1.0), invert::fn_sin(1.0)}, c);
    CHECK(sol.constraint_value == 0.0);
    CHECK(sol.ricci_scalar == 0.0);
  }
  SUBCASE("constraint is the constant m1 m3 - m2^2/4 along t") {
    const auto sol = invert::case_b_solution(
        {invert::fn_exp(1.0), invert::fn_exp(2.0)}, case_b_constants());
    for (double t : {0.1, 0.5, 1.0})
      CHECK(sol.a2(t) * sol.b2(t) - sol.cc(t) * sol.cc(t) ==
            doctest::Approx(sol.constraint_value).epsilon(1e-12));
  }
  SUBCASE("determinant matches the printed n_i expression") {
    const auto sol = invert::case_b_solution(
        {invert::fn_cos(1.0), invert::fn_sin(1.0)}, case_b_constants());
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> t_d(0.1, 1.4), x_d(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) {
      const double t = t_d(rng), x = x_d(rng);
      CHECK(sol.det_a(t, x) ==
            doctest::Approx(sol.det_a_bracket(t, x)).epsilon(1e-11));
    }
  }
  SUBCASE("v zero-crossing is rejected") {
    invert::FunctionPair tpair{invert::fn_poly(0.0, 1.0),
                               invert::fn_poly(0.0, 0.0, 1.0)};  // v = -t^2
    const auto sol = invert::case_b_solution(tpair, case_b_constants());
    CHECK_THROWS_AS(
        invert::integrate_ansatz(sol.gauge, sol.coeffs.value(-1.0), -1.0, 1.0, 100),
        std::domain_error);
  }
}

TEST_CASE("gauge roundtrip through the assembled metrics") {
  std::vector<std::pair<double, double>> pts;
  for (double t : {0.3, 0.6, 0.9})
    for (double x : {-0.4, 0.1, 0.5}) pts.emplace_back(t, x);

  SUBCASE("flat family roundtrips zeros") {
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 0.0;
    c.rbar2 = 1.0;
    c.c1 = 0.0;
    c.c2 = 0.0;
    c.c3 = 1.0;
    const auto sol = invert::one_function_solution(invert::fn_poly(0.0, 1.0), c);
    const auto rep = invert::verify_gauge_roundtrip(sol.metric_tx, sol.gauge, pts);
    CHECK(rep.max_dev < 1e-9);
  }
  SUBCASE("one-function analytic roundtrip under 1e-9") {
    const auto sol = [] {
      invert::OneFunctionConstants c;
      c.rbar0 = 0.9;
      c.rbar1 = 0.5;
      c.rbar2 = 1.3;
      c.c1 = 0.4;
      c.c2 = -0.2;
      c.c3 = 0.8;
      return invert::one_function_solution(invert::fn_exp(1.0), c);
    }();
    const auto rep = invert::verify_gauge_roundtrip(sol.metric_tx, sol.gauge, pts);
    CHECK(rep.max_dev < 1e-9);
  }
  SUBCASE("case B roundtrip holds pointwise in x") {
    const auto sol = invert::case_b_solution(
        {invert::fn_cos(1.0), invert::fn_sin(1.0)}, case_b_constants());
    const auto rep = invert::verify_gauge_roundtrip(sol.metric, sol.gauge, pts);
    CHECK(rep.max_dev < 1e-9);
    // K0 = -(w/v) x itself varies with x; spot-check the christoffel route.
    const auto conn = geom::christoffel(sol.metric, 0.6, 0.5);
    CHECK(geom::gauge_from_connection(conn).k0 ==
          doctest::Approx(sol.gauge.eval(0.6, 0.5).k0).epsilon(1e-10));
  }
}

TEST_CASE("integrate_ansatz matches closed forms over a span") {
  const double t0 = 0.1, t1 = 2.1;
  auto run = [&](const invert::GaugeField& g, const invert::CoefficientSet& cs) {
    const auto path = invert::integrate_ansatz(g, cs.value(t0), t0, t1, 2000);
    double worst = 0.0;
    for (const auto& s : path) worst = std::max(worst, max_gap(s.c, cs.value(s.t)));
    return worst;
  };
  SUBCASE("one function, f = e^t") {
    invert::OneFunctionConstants c;
    c.rbar0 = 0.9;
    c.rbar1 = 0.5;
    c.rbar2 = 1.3;
    c.c1 = 0.4;
    c.c2 = -0.2;
    c.c3 = 0.8;
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    CHECK(run(sol.gauge, sol.coeffs) < 1e-6);
  }
  SUBCASE("case B circular pair") {
    const auto sol = invert::case_b_solution(
        {invert::fn_cos(1.0), invert::fn_sin(1.0)}, case_b_constants());
    CHECK(run(sol.gauge, sol.coeffs) < 1e-6);
  }
}

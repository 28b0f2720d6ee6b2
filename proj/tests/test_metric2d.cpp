#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "nlqg/metric2d.hpp"
#include "nlqg/metric_recovery.hpp"

using namespace nlqg;

namespace {

geom::MetricField flat(double g00 = 1.0, double g11 = 1.0) {
  geom::MetricField m;
  m.eval = [g00, g11](double, double) { return geom::Sym2{g00, 0.0, g11}; };
  m.derivs = [](double, double) { return geom::MetricDerivs{}; };
  return m;
}

// e^{2 sigma} (dT^2 + dX^2), sigma = X.
geom::MetricField conformal_x() {
  geom::MetricField m;
  m.eval = [](double, double x) {
    const double e = std::exp(2.0 * x);
    return geom::Sym2{e, 0.0, e};
  };
  m.derivs = [](double, double x) {
    const double e = 2.0 * std::exp(2.0 * x);
    geom::MetricDerivs d;
    d.d1 = {e, 0.0, e};
    return d;
  };
  return m;
}

// Unit 2-sphere patch: d theta^2 + sin^2(theta) d phi^2, coordinates (theta, phi).
geom::MetricField sphere() {
  geom::MetricField m;
  m.eval = [](double th, double) {
    const double s = std::sin(th);
    return geom::Sym2{1.0, 0.0, s * s};
  };
  m.derivs = [](double th, double) {
    geom::MetricDerivs d;
    d.d0 = {0.0, 0.0, std::sin(2.0 * th)};
    return d;
  };
  return m;
}

invert::OneFunctionSolution minkowski_fixture() {
  // a' = 0, b' = -1, c' = 0.
  invert::OneFunctionConstants c;
  c.rbar0 = 1.0;
  c.rbar1 = 2.0;
  c.rbar2 = 1.0;
  c.c1 = -1.0;
  c.c2 = 0.0;
  c.c3 = 0.0;
  return invert::one_function_solution(invert::fn_exp(1.0), c);
}

}  // namespace

TEST_CASE("christoffel on elementary metrics") {
  SUBCASE("flat: all components vanish") {
    const auto c = geom::christoffel(flat(), 0.3, -0.7);
    CHECK(c.g0_00 == 0.0);
    CHECK(c.g0_01 == 0.0);
    CHECK(c.g0_11 == 0.0);
    CHECK(c.g1_00 == 0.0);
    CHECK(c.g1_01 == 0.0);
    CHECK(c.g1_11 == 0.0);
  }
  SUBCASE("conformal gauge, sigma = X") {
    // G0_00 = 0, G0_01 = 1, G0_11 = 0? For e^{2s}(dT^2+dX^2):
    // G0_00 = s_T, G0_01 = s_X, G0_11 = -s_T, G1_00 = -s_X, G1_01 = s_T,
    // G1_11 = s_X. Here s_T = 0, s_X = 1.
    const auto c = geom::christoffel(conformal_x(), 0.2, 0.5);
    CHECK(c.g0_00 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.g0_01 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.g0_11 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.g1_00 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c.g1_01 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.g1_11 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("finite differences agree with analytic partials") {
    auto fd = conformal_x();
    fd.derivs = nullptr;
    const auto ca = geom::christoffel(conformal_x(), 0.2, 0.5);
    const auto cf = geom::christoffel(fd, 0.2, 0.5);
    CHECK(std::abs(ca.g0_01 - cf.g0_01) < 1e-7);
    CHECK(std::abs(ca.g1_00 - cf.g1_00) < 1e-7);
    CHECK(std::abs(ca.g1_11 - cf.g1_11) < 1e-7);
  }
  SUBCASE("singular metric is rejected") {
    CHECK_THROWS_AS(geom::christoffel(flat(1.0, 0.0), 0.0, 0.0), std::domain_error);
  }
}

TEST_CASE("christoffel matches the printed connection of the recovered metric") {
  const auto sol = minkowski_fixture();
  // Finite-difference route.
  auto fd = sol.metric_big;
  fd.derivs = nullptr;
  for (auto [t, x] : {std::pair{1.0, 0.0}, {2.0, 0.5}, {1.5, -0.3}}) {
    const auto closed = sol.connection_big(t, x);
    const auto got = geom::christoffel(fd, t, x);
    CHECK(std::abs(got.g0_00 - closed.g0_00) < 1e-6);
    CHECK(std::abs(got.g0_01 - closed.g0_01) < 1e-6);
    CHECK(std::abs(got.g0_11 - closed.g0_11) < 1e-6);
    CHECK(std::abs(got.g1_00 - closed.g1_00) < 1e-6);
    CHECK(std::abs(got.g1_01 - closed.g1_01) < 1e-6);
    CHECK(std::abs(got.g1_11 - closed.g1_11) < 1e-6);
  }
  // Spot values at (T, X) = (1, 0): D = -1.
  const auto c = sol.connection_big(1.0, 0.0);
  CHECK(c.g0_00 == doctest::Approx(0.0));
  CHECK(c.g0_01 == doctest::Approx(1.0));
  CHECK(c.g1_11 == doctest::Approx(2.0));
  CHECK(c.g1_00 == 0.0);
  CHECK(c.g0_11 == 0.0);
}

TEST_CASE("gauge combinations from a connection") {
  geom::Connection c{0.3, -0.7, 1.1, 0.9, 0.4, -0.2};
  const auto k = geom::gauge_from_connection(c);
  CHECK(k.k0 == -c.g1_00);
  CHECK(k.k1 == c.g0_00 - 2.0 * c.g1_01);
  CHECK(k.k2 == -c.g1_11 + 2.0 * c.g0_01);
  CHECK(k.k3 == c.g0_11);
}

TEST_CASE("geodesic residual") {
  SUBCASE("straight line in flat space") {
    geom::ConnectionField conn = [](double, double) { return geom::Connection{}; };
    CHECK(geom::geodesic_residual(conn, 0.4, 1.7, 2.0, 0.0) == 0.0);
  }
  SUBCASE("lines under the recovered metric, path-function form") {
    const auto sol = minkowski_fixture();
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_big, t, x);
    };
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> k_d(-0.4, 0.4);
    for (int i = 0; i < 10; ++i) {
      const double k = k_d(rng), x0 = k_d(rng);
      geom::PathFn path = [k, x0](double t) { return geom::PathPoint{k * t + x0, k, 0.0}; };
      // Stay clear of D = |b'|(2TX - |b'|) = 0.
      const double t = 2.0 + i * 0.1;
      if (std::abs(sol.big_d(t, k * t + x0)) < 1e-2) continue;
      CHECK(std::abs(geom::geodesic_residual(conn, path, t)) < 1e-9);
    }
  }
  SUBCASE("wrong connection is detected") {
    // 0-row from a shifted-b' chart, 1-row from the original: the gauge
    // combinations no longer cancel for straight lines.
    const auto sol = minkowski_fixture();
    invert::OneFunctionConstants cc = sol.c;
    cc.c1 = sol.c.c1 - 0.1;  // shifts b' by -0.1
    const auto pert = invert::one_function_solution(invert::fn_exp(1.0), cc);
    geom::ConnectionField conn = [&](double t, double x) {
      geom::Connection mix = sol.connection_big(t, x);
      const geom::Connection other = pert.connection_big(t, x);
      mix.g0_00 = other.g0_00;
      mix.g0_01 = other.g0_01;
      mix.g0_11 = other.g0_11;
      return mix;
    };
    const double k = 0.3, x0 = 0.1, t = 2.0;
    CHECK(std::abs(geom::geodesic_residual(conn, t, k * t + x0, k, 0.0)) > 1e-3);
  }
  SUBCASE("sampled-path form") {
    const auto sol = minkowski_fixture();
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_big, t, x);
    };
    const double k = 0.25, x0 = -0.2, t0 = 1.8, dt = 0.01;
    std::vector<double> xs;
    for (int i = 0; i <= 40; ++i) xs.push_back(k * (t0 + dt * i) + x0);
    const auto res = geom::geodesic_residual_samples(conn, t0, dt, xs);
    for (double r : res) CHECK(std::abs(r) < 1e-8);
    CHECK_THROWS_AS(geom::geodesic_residual_samples(conn, t0, dt, {0.0, 0.1}),
                    std::domain_error);
  }
}

TEST_CASE("geodesic integration") {
  SUBCASE("flat space stays on the line") {
    geom::ConnectionField conn = [](double, double) { return geom::Connection{}; };
    const auto path = geom::integrate_geodesic(conn, 0.0, 2.0, 0.0, 1.0, 64);
    CHECK_FALSE(path.singular_stop);
    CHECK(path.x.back() == doctest::Approx(2.0).epsilon(1e-10));
  }
  SUBCASE("recovered-metric geodesics reproduce the line family") {
    // Euclidean-everywhere constants keep the whole span regular.
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 0.0;
    c.rbar2 = 1.0;
    c.c1 = 0.3;
    c.c2 = 0.0;
    c.c3 = 1.0;  // a' = 1, b' = 0 with rbar1 = 0 ... c' = 1
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_big, t, x);
    };
    const double k = 0.7, x0 = -0.4;
    const auto path = geom::integrate_geodesic(conn, x0, k, 0.0, 1.0, 256);
    CHECK_FALSE(path.singular_stop);
    double worst = 0.0;
    for (std::size_t i = 0; i < path.t.size(); ++i)
      worst = std::max(worst, std::abs(path.x[i] - (k * path.t[i] + x0)));
    CHECK(worst < 1e-8);
  }
  SUBCASE("integrated path satisfies the geodesic equation") {
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 0.0;
    c.rbar2 = 1.0;
    c.c1 = 0.3;
    c.c2 = 0.0;
    c.c3 = 1.0;
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_tx, t, x);
    };
    const auto path = geom::integrate_geodesic(conn, 0.4, 0.3, 0.0, 1.0, 200);
    REQUIRE_FALSE(path.singular_stop);
    const double dt = path.t[1] - path.t[0];
    for (double r : geom::geodesic_residual_samples(conn, path.t.front(), dt, path.x))
      CHECK(std::abs(r) < 1e-6);
  }
  SUBCASE("fourth-order convergence on the (t, x) chart") {
    // x = k e^t + x0 geodesics of the one-function (t, x) metric.
    invert::OneFunctionConstants c;
    c.rbar0 = 1.0;
    c.rbar1 = 0.0;
    c.rbar2 = 1.0;
    c.c1 = 0.3;
    c.c2 = 0.0;
    c.c3 = 1.0;
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_tx, t, x);
    };
    const double k = 0.5, x0 = 0.2;
    auto err = [&](int steps) {
      const auto p = geom::integrate_geodesic(conn, k + x0, k, 0.0, 1.0, steps);
      return std::abs(p.x.back() - (k * std::exp(1.0) + x0));
    };
    const double e1 = err(32), e2 = err(64);
    CHECK(e1 / e2 > 8.0);
    CHECK(e1 / e2 < 40.0);
  }
  SUBCASE("halts with a flag at a singular-locus crossing") {
    const auto sol = [] {
      invert::OneFunctionConstants c;
      c.rbar0 = 1.0;
      c.rbar1 = 0.0;
      c.rbar2 = 1.0;
      c.c1 = 0.0;
      c.c2 = 0.0;
      c.c3 = -1.0;  // a' = 1, c' = -1: D = T^2 - 1 - X^2 changes sign
      return invert::one_function_solution(invert::fn_exp(1.0), c);
    }();
    geom::ConnectionField conn = [&sol](double t, double x) {
      return geom::christoffel(sol.metric_tx, t, x);
    };
    auto det = [&sol](double t, double x) { return sol.metric_tx.eval(t, x).det(); };
    // Walk t downward from 0.5; the locus sits at e^{2t} = 1 + x^2.
    const auto path = geom::integrate_geodesic(conn, 0.2, 0.0, 0.5, -0.5, 128, det);
    CHECK(path.singular_stop);
    CHECK(path.t.back() > -0.5);
  }
  SUBCASE("step validation") {
    geom::ConnectionField conn = [](double, double) { return geom::Connection{}; };
    CHECK_THROWS_AS(geom::integrate_geodesic(conn, 0.0, 1.0, 0.0, 1.0, 4),
                    std::domain_error);
  }
}

TEST_CASE("ricci curvature") {
  SUBCASE("flat space vanishes") {
    const auto r = geom::ricci(flat(), 0.1, 0.2);
    CHECK(std::abs(r.scalar) < 1e-10);
    CHECK(std::abs(r.ricci.m00) < 1e-10);
    CHECK(std::abs(r.ricci.m11) < 1e-10);
  }
  SUBCASE("unit sphere has R = 2") {
    const auto r = geom::ricci(sphere(), 1.0, 0.3);
    CHECK(r.scalar == doctest::Approx(2.0).epsilon(1e-9));
    // 2D identity R_ab = (R/2) g_ab.
    const auto g = sphere().eval(1.0, 0.3);
    CHECK(std::abs(r.ricci.m00 - 0.5 * r.scalar * g.m00) < 1e-9);
    CHECK(std::abs(r.ricci.m11 - 0.5 * r.scalar * g.m11) < 1e-9);
  }
  SUBCASE("finite-difference metric derivatives stay within 1e-7") {
    auto fd = sphere();
    fd.derivs = nullptr;
    const auto r = geom::ricci(fd, 1.0, 0.3);
    CHECK(std::abs(r.scalar - 2.0) < 1e-7);
  }
  SUBCASE("recovered metric: R = 2 rbar2^3 (a'c' - b'^2)") {
    const auto sol = minkowski_fixture();  // a' = c' = 0, b' = -1 -> R = -2
    const auto r = geom::ricci(sol.metric_big, 2.0, 0.4);
    CHECK(r.scalar == doctest::Approx(-2.0).epsilon(1e-8));
  }
  SUBCASE("2D identity at random regular points, both derivative routes") {
    invert::OneFunctionConstants c;
    c.rbar0 = 0.9;
    c.rbar1 = 0.5;
    c.rbar2 = 1.3;
    c.c1 = 0.4;
    c.c2 = -0.2;
    c.c3 = 0.8;  // a'c' - b'^2 > 0: regular everywhere
    const auto sol = invert::one_function_solution(invert::fn_exp(1.0), c);
    auto fd = sol.metric_big;
    fd.derivs = nullptr;
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
      const double t = d(rng), x = d(rng);
      const auto g = sol.metric_big.eval(t, x);
      const auto ra = geom::ricci(sol.metric_big, t, x);
      CHECK(std::abs(ra.ricci.m00 - 0.5 * ra.scalar * g.m00) < 1e-10);
      CHECK(std::abs(ra.ricci.m01 - 0.5 * ra.scalar * g.m01) < 1e-10);
      CHECK(std::abs(ra.ricci.m11 - 0.5 * ra.scalar * g.m11) < 1e-10);
      if (i % 10 == 0) {
        const auto rf = geom::ricci(fd, t, x);
        CHECK(std::abs(rf.ricci.m00 - 0.5 * rf.scalar * g.m00) < 1e-7);
        CHECK(std::abs(rf.ricci.m11 - 0.5 * rf.scalar * g.m11) < 1e-7);
      }
    }
    // Scalar curvature carries the rbar2^3 factor.
    const double want = 2.0 * std::pow(1.3, 3) *
                        (c.a_prime() * c.c_prime() - c.b_prime() * c.b_prime());
    CHECK(geom::ricci(sol.metric_big, 0.7, -1.1).scalar ==
          doctest::Approx(want).epsilon(1e-8));
    CHECK(sol.ricci_scalar == doctest::Approx(want));
  }
}

TEST_CASE("signature classification") {
  CHECK(geom::signature(flat(), 0.0, 0.0) == geom::Signature::euclidean);
  CHECK(geom::signature(flat(-1.0, 1.0), 0.0, 0.0) == geom::Signature::minkowski);
  CHECK(geom::signature(flat(1.0, 0.0), 0.0, 0.0) == geom::Signature::singular);

  // On D = 0 the recovered metric blows up; 1/|det| flags it singular.
  const auto sol = minkowski_fixture();  // D = |b'| (2TX - |b'|), zero at TX = 1/2
  CHECK(geom::signature(sol.metric_big, 1.0, 0.5) == geom::Signature::singular);
  CHECK(geom::signature(sol.metric_big, 2.0, 0.0) == geom::Signature::minkowski);
  CHECK(std::string(geom::to_string(geom::Signature::singular)) == "singular");
}

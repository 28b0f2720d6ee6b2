// Small numerical helpers shared across the library: overflow-safe log-cosh,
// real cube-root powers, a fixed-step RK4 driver, and deterministic float
// formatting for file output.

#ifndef NLQG_NUMERICS_HPP
#define NLQG_NUMERICS_HPP

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

namespace nlqg {

// log(cosh(x)) without overflow for large |x| and without cancellation near 0.
inline double ln_cosh(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) {
    const double s = std::sinh(0.5 * x);
    return std::log1p(2.0 * s * s);
  }
  return ax + std::log1p(std::exp(-2.0 * ax)) - M_LN2;
}

// Real cube-root powers z^{p/3}, valid for z of either sign (z != 0).
inline double cbrt_pow1(double z) { return std::cbrt(z); }          // z^{1/3}
inline double cbrt_pow2(double z) { double c = std::cbrt(z); return c * c; }  // z^{2/3}
inline double cbrt_pow4(double z) { return z * std::cbrt(z); }      // z^{4/3}

inline bool finite(double x) { return std::isfinite(x); }

// Classic fixed-step RK4 on y' = f(t, y) for small state vectors.
template <std::size_t N>
using Rk4Rhs = std::function<std::array<double, N>(double, const std::array<double, N>&)>;

template <std::size_t N>
std::array<double, N> rk4_step(const Rk4Rhs<N>& f, double t,
                               const std::array<double, N>& y, double dt) {
  std::array<double, N> k1 = f(t, y);
  std::array<double, N> ytmp;
  for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + 0.5 * dt * k1[i];
  std::array<double, N> k2 = f(t + 0.5 * dt, ytmp);
  for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + 0.5 * dt * k2[i];
  std::array<double, N> k3 = f(t + 0.5 * dt, ytmp);
  for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + dt * k3[i];
  std::array<double, N> k4 = f(t + dt, ytmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

// Deterministic 17-significant-digit formatting ("." decimal, stable NaN/inf).
inline std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace nlqg

#endif  // NLQG_NUMERICS_HPP

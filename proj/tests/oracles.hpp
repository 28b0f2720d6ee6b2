// Test-only oracles: independent extended-precision evaluation of the
// closed-form state pair and trajectory, assembled from polar pieces through
// a different code path than the library.

#ifndef NLQG_TESTS_ORACLES_HPP
#define NLQG_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using lcplx = std::complex<long double>;

struct OraclePair {
  std::vector<lcplx> psi;
  std::vector<lcplx> phi;
};

// Closed-form pair evaluated in long double: gamma^{1/2} from separate
// modulus exp(-L/2) and phase a L / (2b), mode phases from explicit
// trig/exp factors.
inline OraclePair closed_form_pair(long double a, long double b, long double w0,
                                   long double th, const std::vector<long double>& en,
                                   const std::vector<lcplx>& ca,
                                   const std::vector<lcplx>& cb, long double t) {
  const long double L = b == 0.0L ? 0.0L : std::log(std::cosh(2.0L * w0 * b * t));
  const long double mod_root = std::sqrt(w0) * std::exp(-0.5L * L);
  const long double phase_root = b == 0.0L ? 0.0L : a * L / (2.0L * b);
  const lcplx root(mod_root * std::cos(phase_root), mod_root * std::sin(phase_root));
  const lcplx root_c = std::conj(root);

  // e^{i g w0 t} = e^{-b w0 t} (cos(a w0 t) + i sin(a w0 t)), g = a + i b.
  const long double cw = std::cos(a * w0 * t), sw = std::sin(a * w0 * t);
  const lcplx eig = std::exp(-b * w0 * t) * lcplx(cw, sw);
  const lcplx eig_inv = std::exp(b * w0 * t) * lcplx(cw, -sw);
  // g* = a - i b swaps the real exponential.
  const lcplx eig_star = std::exp(b * w0 * t) * lcplx(cw, sw);
  const lcplx eig_star_inv = std::exp(-b * w0 * t) * lcplx(cw, -sw);

  const long double sh = std::sinh(th), ch = std::cosh(th);
  OraclePair out;
  out.psi.resize(en.size());
  out.phi.resize(en.size());
  for (std::size_t n = 0; n < en.size(); ++n) {
    const lcplx mode(std::cos(en[n] * t), -std::sin(en[n] * t));
    out.psi[n] = root * (eig * sh * ca[n] + eig_inv * ch * cb[n]) * mode;
    out.phi[n] = root_c * (-eig_star * sh * ca[n] + eig_star_inv * ch * cb[n]) * mode;
  }
  return out;
}

// Trajectory formula in long double.
inline long double trajectory_value(const long double k[8], long double w0,
                                    long double a, long double b, long double th,
                                    long double t) {
  const long double y = 2.0L * w0 * t;
  const long double big_n = 2.0L * w0 * std::cosh(2.0L * th);
  const long double delta = big_n * std::cosh(b * y) + 2.0L * w0 * std::sinh(b * y);
  return 2.0L / delta *
         ((k[0] * t + k[1]) * std::cosh(b * y) + (k[2] * t + k[3]) * std::sinh(b * y) +
          (k[4] * t + k[5]) * std::cos(a * y) + (k[6] * t + k[7]) * std::sin(a * y));
}

}  // namespace oracle

#endif  // NLQG_TESTS_ORACLES_HPP

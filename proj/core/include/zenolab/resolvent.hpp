#pragma once

#include <complex>
#include <vector>

#include "zenolab/model.hpp"
#include "zenolab/self_energy.hpp"

namespace zenolab {

// Second-sheet pole of the reduced resolvent and its derived quantities.
// s_pole is dimensionless (units of Lambda); gamma and delta_e are in rad/s:
//   gamma = -2 Lambda Re s_pole, delta_e = Lambda (Im s_pole + a).
// residue_modulus/phase give Z e^{i zeta} = 1/(1 + chi Qbar_II'(s_pole)).
struct PoleData {
  std::complex<double> s_pole{};
  double gamma = 0.0;
  double delta_e = 0.0;
  double residue_modulus = 1.0;
  double residue_phase = 0.0;

  std::complex<double> residue() const {
    return std::polar(residue_modulus, residue_phase);
  }
};

// ytilde(s) = 1/(s + i a + chi Qbar(s)) on the requested sheet. Throws
// std::domain_error when the denominator falls below 1e-13 (at the pole).
std::complex<double> resolvent_value(SheetPoint p, const AtomParams& params);

// Newton search for the second-sheet pole seeded at s = -i a. Converges for
// chi/a << 1; throws convergence_error otherwise or when the iterate drifts
// into the s = 0 or s = +-1 neighborhoods.
PoleData find_pole(const AtomParams& params, double tol = 1e-13, int max_iter = 50);

// Leading-order pole data: gamma from the golden rule 2 pi chi Lambda g(a),
// delta_e from the principal-value level shift chi Lambda Delta(a), s_pole
// from the first-order truncation at the cut edge, residue set to (1, 0).
PoleData perturbative_pole(const AtomParams& params);

// Principal value Delta(x) = PV int_0^inf g(x')/(x' - x) dx' for x > 0.
// Symmetric excision at delta = 1e-3 and 1e-4 with linear-order Richardson
// extrapolation; near the origin (x < 1e-2) the excision loses its clearance
// from the endpoint and the subtracted-kernel form is used instead.
double pv_shift(double x);

// Continuum spectral density
//   w(x) = chi g(x) / [(x - a + chi Delta(x))^2 + (pi chi g(x))^2],
// the boundary value (1/pi) Re ytilde(0+ - i x). Normalized to 1 with mean a
// and variance chi/6.
double spectral_density(double x, const AtomParams& params);

// Location of the resonance peak, the root of x - a + chi Delta(x) = 0. The
// shift from a is chi Delta(a), which for hydrogen exceeds the half-width
// pi chi g(a) by a factor Delta/(pi g) ~ 90: quadrature windows must center
// here, not at a.
double spectral_peak(const AtomParams& params);

// Panel seed points for integrals of the spectral density over [0, x_max]: a
// geometric ladder of scales around the peak (half-width steps of x50) plus
// the bare level position a.
std::vector<double> spectral_breakpoints(const AtomParams& params, double x_max);

}  // namespace zenolab

#pragma once

#include <cmath>

namespace zenolab {

// Fine-structure constant and electron rest frequency m_e c^2 / hbar [rad/s].
// All derived scales come from these two numbers.
struct PhysicalConstants {
  double alpha;
  double m_e;
};

// CODATA-derived defaults.
constexpr PhysicalConstants codata_constants() {
  return {7.2973525693e-3, 7.76344e20};
}

// Two-level emitter coupled to a photon continuum with form factor
// |phi(omega)|^2 = chi * Lambda * g(omega/Lambda), g(x) = x/(1+x^2)^4.
// Everything downstream is dimensionless in units of the cutoff Lambda;
// z = 0 marks synthetic (non-hydrogen) parameter sets.
struct AtomParams {
  int z = 0;
  double cutoff_lambda = 0.0;  // Lambda [rad/s]
  double chi = 0.0;            // dimensionless coupling
  double a = 0.0;              // omega0 / Lambda
  double omega0 = 0.0;         // a * Lambda [rad/s]
};

// Hydrogen-like parameters for nuclear charge z >= 1:
//   Lambda = (3/2) z alpha m_e, chi = (2/pi)(2/3)^9 z^2 alpha^3, a = z alpha / 4.
AtomParams hydrogen_params(const PhysicalConstants& constants, int z);

// Synthetic parameter set; requires cutoff_lambda > 0, chi > 0, 0 < a < 1.
AtomParams custom_params(double cutoff_lambda, double chi, double a);

// Duration scale of the initial quadratic regime, tau_Z = sqrt(6/chi)/Lambda
// [s]. The corrected variant divides by sqrt(1.4210) (multi-level +
// counter-rotating contribution to the energy spread).
double zeno_time(const AtomParams& params, bool corrected = false);

// g(x) = x/(1+x^2)^4 for x >= 0. The physical |phi(omega)|^2 per unit omega
// is chi*Lambda*g(omega/Lambda); callers apply the prefactor.
double form_factor_squared(double x);

inline double dimensionless_time(const AtomParams& params, double t_seconds) {
  return params.cutoff_lambda * t_seconds;
}

inline double seconds_from_tau(const AtomParams& params, double tau) {
  return tau / params.cutoff_lambda;
}

}  // namespace zenolab

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zenolab/model.hpp"

namespace zenolab {

// Brute-force evaluations of the survival amplitude that never touch the
// contour-deformation machinery: a direct Bromwich line integral, a Fourier
// transform of the spectral density, and unitary evolution of a discretized
// continuum. Used to validate the pole + cut representation.

// (1/2 pi i) int e^{s tau} / (s + i a + chi Qbar(s)) ds along Re s = c.
// The free-resolvent part is inverted analytically (e^{-i a tau}) so the
// remainder decays like |s|^-3 and the line can be truncated. For tau beyond
// a few units the effective abscissa is min(abscissa, 3/tau): e^{c tau}
// otherwise amplifies roundoff past any useful tolerance.
std::complex<double> bromwich_inverse(double tau, const AtomParams& params,
                                      double abscissa = 0.5, double tol = 1e-9);

// int_0^inf w(x) e^{-i x tau} dx with the integration split at the resonance
// window [a - 50 Gbar, a + 50 Gbar], Gbar = pi chi g(a).
std::complex<double> spectral_inverse(double tau, const AtomParams& params,
                                      double tol = 1e-8);

// One-excitation sector of the model Hamiltonian on n_modes Gauss-Legendre
// frequencies in [0, x_max]: an arrowhead matrix diag(a, x_1..x_n) with first
// row/column couplings g_i = sqrt(chi g(x_i) w_i). Diagonalized once through
// the secular equation E - a = sum_i g_i^2/(E - x_i) (eigenvalues interlace
// the nodes); spectral_weights are |<excited|v_m>|^2.
struct DiscretizedModel {
  int n_modes = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> couplings;
  double excited_energy = 0.0;
  std::vector<double> eigenvalues;
  std::vector<double> spectral_weights;
  // level spacing next to x = a resolves the resonance width pi chi g(a)
  bool resolution_ok = true;
};

DiscretizedModel build_discretized_model(const AtomParams& params, int n_modes,
                                         double x_max);

// y(tau_k) = sum_m |<excited|v_m>|^2 e^{-i E_m tau_k} from the eigendata.
std::vector<std::complex<double>> evaluate_survival(const DiscretizedModel& model,
                                                    std::span<const double> taus);

std::vector<std::complex<double>> discretized_evolution(const AtomParams& params,
                                                        int n_modes, double x_max,
                                                        std::span<const double> taus);

}  // namespace zenolab

#pragma once

#include <complex>
#include <vector>

#include "zenolab/model.hpp"
#include "zenolab/resolvent.hpp"

namespace zenolab {

enum class CutMethod { gauss_laguerre, adaptive_truncated };

struct CutQuadratureSpec {
  CutMethod method = CutMethod::adaptive_truncated;
  double tolerance = 1e-10;  // relative, on the cut amplitude
  int max_nodes = 400'000;
};

// One survival-probability sample. Assembly identities: y = y_pole + y_cut,
// p = |y|^2, h = |y_cut| (omega0 t)^2 / (chi C), eta = arg(-y_cut).
struct SurvivalSample {
  double t = 0.0;    // seconds
  double tau = 0.0;  // Lambda * t
  std::complex<double> y{};
  double p = 0.0;
  std::complex<double> y_pole{};
  std::complex<double> y_cut{};
  double h = 0.0;
  double eta = 0.0;
};

struct TimeGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  int points = 2;
  enum class Scale { log, linear } scale = Scale::log;
};

// Transcendental crossover root of 2 ln(omega0 t) - gamma t / 2 = ln chi
// (the large root), plus the directly measured time where the pole and cut
// amplitudes are equal.
struct CrossoverResult {
  double t_equation = 0.0;          // seconds
  double lifetimes_equation = 0.0;  // t_equation * gamma
  double t_amplitude = 0.0;         // |y_pole| = |y_cut| time, seconds
  double lifetimes_amplitude = 0.0;
  double residual = 0.0;            // equation residual at the root
};

// Amplitude prefactor of the branch-cut tail, C = (1 - 5 pi chi/(32 a))^-2.
double cut_prefactor(const AtomParams& params);

// Pole contribution residue * exp(s_pole * tau); equals
// Z e^{-gamma t/2} e^{-i(omega0 - dE) t + i zeta}.
std::complex<double> y_pole_term(double tau, const PoleData& pole);

// Branch-cut contribution for tau > 0: the difference of the resolvent
// across the cut, integrated along a ray tilted below the negative real
// axis. The tilt keeps the contour clear of the second-sheet zeros of the
// continued denominator clustered around s = +-1; the integrand is the
// stabilized form with (s^2-1)^-4 cancelled into the discontinuity term, so
// it stays finite where |s| = 1. On the real-axis limit the same integrand
// reduces to chi x0^2 int xi e^-xi (xi^2 x0^2 - 1)^-4 / (D_I D_II) dxi with
// x0 = 1/tau, but that limit excludes the ring residues and does not
// reconstruct y - y_pole at small tau.
std::complex<double> y_cut_term(double tau, const AtomParams& params,
                                const CutQuadratureSpec& spec = {});

// Full sample at time t > 0 (seconds). The probability is evaluated both as
// |y|^2 and from the three-term pole/cut/interference expansion; the two
// must agree to 1e-10 of the dominant term.
SurvivalSample survival_point(double t, const AtomParams& params,
                              const PoleData& pole,
                              const CutQuadratureSpec& spec = {});

// Short-time quadratic law 1 - (t/tau_Z)^2, clamped at zero.
double approx_short(double t, const AtomParams& params);

// Long-time expansion with h = 1, eta = 0:
// Z^2 e^{-gamma t} + chi^2 C^2/(omega0 t)^4
//   - 2 chi C Z/(omega0 t)^2 e^{-gamma t/2} cos[(omega0 - dE) t - zeta].
double approx_long(double t, const AtomParams& params, const PoleData& pole);

CrossoverResult crossover_time(const AtomParams& params, const PoleData& pole,
                               const CutQuadratureSpec& spec = {});

// Independent samples on a monotone time grid; deterministic for fixed
// inputs. Per-point failures are rethrown with the failing t attached.
std::vector<SurvivalSample> timeseries(const AtomParams& params,
                                       const PoleData& pole,
                                       const CutQuadratureSpec& spec,
                                       const TimeGrid& grid);

}  // namespace zenolab

#include "zenolab/survival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zenolab/errors.hpp"
#include "zenolab/quadrature.hpp"
#include "zenolab/self_energy.hpp"

namespace zenolab {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kXiMax = 50.0;  // exp(-50) ~ 2e-22, below every tolerance used
constexpr int kLaguerreNodes = 128;

cplx denominator_first(cplx s, const AtomParams& params) {
  return s + kI * params.a + params.chi * qbar({s, Sheet::first});
}

// (s^2-1)^4 * D_II(s); finite at s = +-1 where D_II itself diverges.
cplx bracket(cplx s, cplx d1, double chi) {
  const cplx s21 = s * s - 1.0;
  const cplx s214 = (s21 * s21) * (s21 * s21);
  return s214 * d1 + 2.0 * kPi * kI * chi * s;
}

// Contour tilt below the negative real axis. Grows with the radius of the
// ring of second-sheet denominator zeros around s = +-1, which scales like
// (pi chi / 8)^(1/4).
double ray_tilt(double chi) {
  const double theta = 0.25 + 2.0 * std::pow(kPi * chi / 8.0, 0.25);
  if (theta > 1.0)
    throw convergence_error("y_cut_term: coupling too strong for a separated cut contour");
  return theta;
}

void validate_spec(const CutQuadratureSpec& spec) {
  if (!(spec.tolerance > 0.0))
    throw std::domain_error("CutQuadratureSpec: tolerance must be positive");
  if (spec.max_nodes < 32)
    throw std::domain_error("CutQuadratureSpec: max_nodes must be >= 32");
}

// xi-form along the ray, natural for tau >= 1:
//   chi z0^2 int_0^50 xi e^{-xi(1+i tan th)} / (D_I(s) bracket(s)) dxi,
//   s = -xi z0, z0 = (1 + i tan th)/tau.
cplx cut_adaptive_xi(double tau, const AtomParams& params, const CutQuadratureSpec& spec,
                     double theta) {
  const double tn = std::tan(theta);
  const cplx z0 = cplx(1.0, tn) / tau;
  const double chi = params.chi;
  auto f = [&](double xi) -> cplx {
    if (xi == 0.0) return {};
    const cplx s = -xi * z0;
    const cplx d1 = denominator_first(s, params);
    return xi * std::exp(cplx(-xi, -xi * tn)) / (d1 * bracket(s, d1, chi));
  };
  QuadOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = spec.tolerance;
  opt.max_evals = spec.max_nodes;
  const double ct = tau * std::cos(theta);
  double br[4] = {params.a * ct, ct, 2.0, 20.0};
  std::sort(std::begin(br), std::end(br));
  const QuadResult r = integrate(f, 0.0, kXiMax, opt, br);
  return chi * z0 * z0 * r.value;
}

// s-direct form for tau < 1, where the integrand decays algebraically:
//   chi e^{2 i th} int_0^R rho e^{s tau} / (D_I(s) bracket(s)) drho,
//   s = -rho e^{i th}.
cplx cut_adaptive_rho(double tau, const AtomParams& params, const CutQuadratureSpec& spec,
                      double theta) {
  const cplx eith = std::polar(1.0, theta);
  const double chi = params.chi;
  auto f = [&](double rho) -> cplx {
    if (rho == 0.0) return {};
    const cplx s = -rho * eith;
    const cplx d1 = denominator_first(s, params);
    return rho * std::exp(s * tau) / (d1 * bracket(s, d1, chi));
  };
  const double rmax = std::max(16.0, std::pow(1.0 / (40.0 * spec.tolerance), 0.125));
  QuadOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = spec.tolerance;
  opt.max_evals = spec.max_nodes;
  const double br[] = {params.a / 2.0, params.a, 3.0 * params.a, 0.5, 1.0, 2.0, 4.0};
  const QuadResult r = integrate(f, 0.0, rmax, opt, br);
  return chi * eith * eith * r.value;
}

cplx cut_laguerre(double tau, const AtomParams& params, double theta) {
  static const GaussRule rule = gauss_laguerre_xweight(kLaguerreNodes);
  const double tn = std::tan(theta);
  const cplx z0 = cplx(1.0, tn) / tau;
  const double chi = params.chi;
  cplx sum{};
  for (int k = 0; k < kLaguerreNodes; ++k) {
    const double xi = rule.nodes[k];
    const cplx s = -xi * z0;
    const cplx d1 = denominator_first(s, params);
    sum += rule.weights[k] * std::exp(cplx(0.0, -xi * tn)) / (d1 * bracket(s, d1, chi));
  }
  return chi * z0 * z0 * sum;
}

}  // namespace

double cut_prefactor(const AtomParams& params) {
  const double r = 1.0 - 5.0 * kPi * params.chi / (32.0 * params.a);
  return 1.0 / (r * r);
}

cplx y_pole_term(double tau, const PoleData& pole) {
  if (tau < 0.0) throw std::domain_error("y_pole_term: tau must be >= 0");
  return pole.residue() * std::exp(pole.s_pole * tau);
}

cplx y_cut_term(double tau, const AtomParams& params, const CutQuadratureSpec& spec) {
  if (!(tau > 0.0)) throw std::domain_error("y_cut_term: tau must be positive");
  validate_spec(spec);
  const double theta = ray_tilt(params.chi);
  if (tau < 1.0) return cut_adaptive_rho(tau, params, spec, theta);
  if (spec.method == CutMethod::gauss_laguerre) {
    // the fixed rule needs the integrand knee at xi ~ a tau cos(theta) past
    // the first few nodes, and a contour tilt mild enough that the e^{-i xi
    // tan(theta)} factor stays resolvable by 128 nodes
    if (params.a * tau * std::cos(theta) >= 3.0 && std::tan(theta) <= 0.4)
      return cut_laguerre(tau, params, theta);
  }
  return cut_adaptive_xi(tau, params, spec, theta);
}

SurvivalSample survival_point(double t, const AtomParams& params, const PoleData& pole,
                              const CutQuadratureSpec& spec) {
  if (!(t > 0.0)) throw std::domain_error("survival_point: t must be positive");
  SurvivalSample smp;
  smp.t = t;
  smp.tau = dimensionless_time(params, t);
  smp.y_pole = y_pole_term(smp.tau, pole);
  smp.y_cut = y_cut_term(smp.tau, params, spec);
  smp.y = smp.y_pole + smp.y_cut;
  smp.p = std::norm(smp.y);

  const double w0t = params.a * smp.tau;  // omega0 * t
  const double chic = params.chi * cut_prefactor(params);
  smp.h = std::abs(smp.y_cut) * w0t * w0t / chic;
  smp.eta = std::arg(-smp.y_cut);

  // three-term expansion: exponential + power-law + interference. The cross
  // term is taken from the complex product; its cosine form adds eta - zeta
  // to a phase of order omega0 t, which falls below one ulp long before the
  // crossover.
  const double p_exp = std::norm(smp.y_pole);
  const double p_pow = std::norm(smp.y_cut);
  const double p_int = 2.0 * (smp.y_pole * std::conj(smp.y_cut)).real();
  const double p_three = p_exp + p_pow + p_int;
  const double scale = std::max({smp.p, p_exp, p_pow});
  if (std::abs(smp.p - p_three) > 1e-10 * scale + 1e-300)
    throw std::logic_error("survival_point: probability expansions disagree");
  return smp;
}

double approx_short(double t, const AtomParams& params) {
  if (t < 0.0) throw std::domain_error("approx_short: t must be >= 0");
  const double r = t / zeno_time(params, false);
  return std::max(0.0, 1.0 - r * r);
}

double approx_long(double t, const AtomParams& params, const PoleData& pole) {
  if (!(t > 0.0)) throw std::domain_error("approx_long: t must be positive");
  const double z = pole.residue_modulus;
  const double w0t2 = params.omega0 * t * params.omega0 * t;
  const double chic = params.chi * cut_prefactor(params);
  const double decay = std::exp(-pole.gamma * t / 2.0);
  const double phase = (params.omega0 - pole.delta_e) * t - pole.residue_phase;
  return z * z * decay * decay + chic * chic / (w0t2 * w0t2) -
         2.0 * chic * z / w0t2 * decay * std::cos(phase);
}

CrossoverResult crossover_time(const AtomParams& params, const PoleData& pole,
                               const CutQuadratureSpec& spec) {
  CrossoverResult out;
  const double gamma = pole.gamma;
  const double lnchi = std::log(params.chi);
  auto eq = [&](double t) { return 2.0 * std::log(params.omega0 * t) - gamma * t / 2.0 - lnchi; };
  auto deq = [&](double t) { return 2.0 / t - gamma / 2.0; };

  double lo = 10.0 / gamma, hi = 1e4 / gamma;
  if (!(eq(lo) > 0.0 && eq(hi) < 0.0))
    throw convergence_error("crossover_time: equation not bracketed on [10, 1e4] lifetimes");
  double t = 125.0 / gamma;
  for (int it = 0; it < 200; ++it) {
    const double f = eq(t);
    if (std::abs(f) < 1e-12) break;
    if (f > 0.0) lo = t; else hi = t;
    double tn = t - f / deq(t);
    t = (tn > lo && tn < hi) ? tn : 0.5 * (lo + hi);
  }
  out.t_equation = t;
  out.lifetimes_equation = t * gamma;
  out.residual = eq(t);
  if (std::abs(out.residual) > 1e-10)
    throw convergence_error("crossover_time: residual above 1e-10");

  // direct |y_pole| = |y_cut| time; log-magnitudes avoid the e^{-gamma t/2}
  // underflow at the upper bracket end
  const double lnz = std::log(pole.residue_modulus);
  auto ampdiff = [&](double ts) {
    const double tau = dimensionless_time(params, ts);
    const double lp = lnz + pole.s_pole.real() * tau;
    const double lc = std::log(std::abs(y_cut_term(tau, params, spec)));
    return lp - lc;
  };
  double alo = 10.0 / gamma, ahi = 1e4 / gamma;
  if (!(ampdiff(alo) > 0.0 && ampdiff(ahi) < 0.0))
    throw convergence_error("crossover_time: amplitude equality not bracketed");
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (alo + ahi);
    if (ampdiff(mid) > 0.0) alo = mid; else ahi = mid;
  }
  out.t_amplitude = 0.5 * (alo + ahi);
  out.lifetimes_amplitude = out.t_amplitude * gamma;
  return out;
}

std::vector<SurvivalSample> timeseries(const AtomParams& params, const PoleData& pole,
                                       const CutQuadratureSpec& spec, const TimeGrid& grid) {
  if (!(grid.t_min > 0.0)) throw std::domain_error("timeseries: t_min must be positive");
  if (!(grid.t_max > grid.t_min))
    throw std::domain_error("timeseries: t_max must exceed t_min");
  if (grid.points < 2) throw std::domain_error("timeseries: points must be >= 2");

  std::vector<double> ts(grid.points);
  if (grid.scale == TimeGrid::Scale::log) {
    const double l0 = std::log(grid.t_min), l1 = std::log(grid.t_max);
    for (int i = 0; i < grid.points; ++i)
      ts[i] = std::exp(l0 + (l1 - l0) * i / (grid.points - 1));
  } else {
    for (int i = 0; i < grid.points; ++i)
      ts[i] = grid.t_min + (grid.t_max - grid.t_min) * i / (grid.points - 1);
  }
  ts.front() = grid.t_min;
  ts.back() = grid.t_max;

  std::vector<SurvivalSample> out;
  out.reserve(ts.size());
  for (double t : ts) {
    try {
      out.push_back(survival_point(t, params, pole, spec));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "timeseries: sample at t = " << t << " s failed: " << e.what();
      throw convergence_error(msg.str());
    }
  }
  return out;
}

}  // namespace zenolab

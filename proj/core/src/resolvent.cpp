#include "zenolab/resolvent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zenolab/errors.hpp"
#include "zenolab/quadrature.hpp"

namespace zenolab {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

double form_factor_prime(double x) {
  const double d = 1.0 + x * x;
  const double d4 = d * d * d * d;
  return (1.0 - 7.0 * x * x) / (d4 * d);
}

// One-sided excised integral int_{[0,x-delta] u [x+delta, inf)} g(t)/(t-x) dt.
double excised_integral(double x, double delta, double tol) {
  QuadOptions opt;
  opt.abs_tol = tol;
  auto f = [x](double t) -> cplx { return form_factor_squared(t) / (t - x); };
  double total = 0.0;
  if (x - delta > 0.0) {
    const double br[] = {x / 2.0, x - 2.0 * delta};
    total += integrate(f, 0.0, x - delta, opt, br).value.real();
  }
  const double far = std::max(3.0, 2.0 * x + 1.0);
  const double br2[] = {x + 2.0 * delta, (x + delta + far) / 2.0};
  total += integrate(f, x + delta, far, opt, br2).value.real();
  // tail through t = 1/u: int_far^inf g/(t-x) dt = int_0^{1/far} u^6/((1+u^2)^4 (1-xu)) du
  auto tail = [x](double u) -> cplx {
    const double d = 1.0 + u * u;
    const double d2 = d * d;
    const double u3 = u * u * u;
    return u3 * u3 / (d2 * d2 * (1.0 - x * u));
  };
  total += integrate(tail, 0.0, 1.0 / far, opt).value.real();
  return total;
}

// Subtracted-kernel form, exact up to quadrature error; the logarithmic
// endpoint terms cancel on [0, 2x].
double pv_subtracted(double x, double tol) {
  QuadOptions opt;
  opt.abs_tol = tol;
  const double gx = form_factor_squared(x);
  const double gpx = form_factor_prime(x);
  auto near = [x, gx, gpx](double t) -> cplx {
    const double d = t - x;
    if (std::abs(d) < 1e-9 * (1.0 + x)) return gpx;
    return (form_factor_squared(t) - gx) / d;
  };
  const double br[] = {x / 2.0, x, 1.5 * x};
  double total = integrate(near, 0.0, 2.0 * x, opt, br).value.real();
  const double far = std::max(3.0, 4.0 * x);
  auto mid = [x](double t) -> cplx { return form_factor_squared(t) / (t - x); };
  total += integrate(mid, 2.0 * x, far, opt).value.real();
  auto tail = [x](double u) -> cplx {
    const double d = 1.0 + u * u;
    const double d2 = d * d;
    const double u3 = u * u * u;
    return u3 * u3 / (d2 * d2 * (1.0 - x * u));
  };
  total += integrate(tail, 0.0, 1.0 / far, opt).value.real();
  return total;
}

// Natural cubic spline over the tabulated principal-value shift. Delta(x)
// depends only on the form factor, so one process-wide table serves every
// parameter set; spectral_density is evaluated inside oscillatory outer
// quadratures and cannot afford a fresh PV integral per call.
class DeltaTable {
public:
  DeltaTable() {
    xs_.push_back(0.0);
    double x = 1e-6;
    while (x < 0.2) {
      xs_.push_back(x);
      x *= 1.15;
    }
    while (x <= 64.0) {
      xs_.push_back(x);
      x += 0.02;
    }
    ys_.resize(xs_.size());
    ys_[0] = 5.0 * kPi / 32.0;  // Delta(0+) = int g(t)/t dt
    for (std::size_t i = 1; i < xs_.size(); ++i) ys_[i] = pv_shift(xs_[i]);
    build_spline();
  }

  double operator()(double x) const {
    if (x >= xs_.back()) return pv_shift(x);
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double h = xs_[j + 1] - xs_[j];
    const double A = (xs_[j + 1] - x) / h;
    const double B = 1.0 - A;
    return A * ys_[j] + B * ys_[j + 1] +
           ((A * A * A - A) * y2_[j] + (B * B * B - B) * y2_[j + 1]) * h * h / 6.0;
  }

private:
  void build_spline() {
    const std::size_t n = xs_.size();
    y2_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double sig = (xs_[i] - xs_[i - 1]) / (xs_[i + 1] - xs_[i - 1]);
      const double p = sig * y2_[i - 1] + 2.0;
      y2_[i] = (sig - 1.0) / p;
      const double d = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]) -
                       (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
      u[i] = (6.0 * d / (xs_[i + 1] - xs_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t i = n - 1; i-- > 0;) y2_[i] = y2_[i] * y2_[i + 1] + u[i];
  }

  std::vector<double> xs_, ys_, y2_;
};

double pv_shift_cached(double x) {
  static const DeltaTable table;
  return table(x);
}

}  // namespace

double pv_shift(double x) {
  if (!(x > 0.0)) throw std::domain_error("pv_shift: x must be positive");
  constexpr double kTol = 1e-12;
  if (x < 1e-2) return pv_subtracted(x, kTol);
  constexpr double d1 = 1e-3, d2 = 1e-4;
  const double i1 = excised_integral(x, d1, kTol);
  const double i2 = excised_integral(x, d2, kTol);
  // leading excision error is linear in delta
  return (d1 * i2 - d2 * i1) / (d1 - d2);
}

cplx resolvent_value(SheetPoint p, const AtomParams& params) {
  const cplx den = p.s + kI * params.a + params.chi * qbar(p);
  if (std::abs(den) < 1e-13)
    throw std::domain_error("resolvent_value: denominator vanishes (pole)");
  return 1.0 / den;
}

PoleData find_pole(const AtomParams& params, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::domain_error("find_pole: tol must be positive");
  const double a = params.a;
  const double chi = params.chi;
  cplx s{0.0, -a};
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    const cplx f = s + kI * a + chi * qbar({s, Sheet::second});
    if (std::abs(f) < tol) {
      converged = true;
      break;
    }
    const cplx fp = 1.0 + chi * qbar_derivative({s, Sheet::second});
    s -= f / fp;
    if (std::abs(s) < 0.05 * a || std::abs(s - 1.0) < 0.06 || std::abs(s + 1.0) < 0.06)
      throw convergence_error("find_pole: iterate left the resonance neighborhood");
  }
  if (!converged)
    throw convergence_error("find_pole: no convergence within max_iter");
  if (!(std::abs(s + kI * a) < a))
    throw convergence_error("find_pole: pole outside the expansion radius");

  PoleData pole;
  pole.s_pole = s;
  pole.gamma = -2.0 * params.cutoff_lambda * s.real();
  pole.delta_e = params.cutoff_lambda * (s.imag() + a);
  const cplx res = 1.0 / (1.0 + chi * qbar_derivative({s, Sheet::second}));
  pole.residue_modulus = std::abs(res);
  pole.residue_phase = std::arg(res);
  if (!(s.real() < 0.0 && s.imag() < 0.0))
    throw convergence_error("find_pole: pole not in the lower-left half plane");
  return pole;
}

PoleData perturbative_pole(const AtomParams& params) {
  const double a = params.a;
  const double chi = params.chi;
  PoleData pole;
  pole.gamma = 2.0 * kPi * chi * params.cutoff_lambda * form_factor_squared(a);
  pole.delta_e = chi * params.cutoff_lambda * pv_shift(a);
  constexpr double kEdgeOffset = 1e-9;
  const cplx edge{kEdgeOffset, -a};
  pole.s_pole = -kI * a - chi * qbar({edge, Sheet::first});
  pole.residue_modulus = 1.0;
  pole.residue_phase = 0.0;
  return pole;
}

double spectral_density(double x, const AtomParams& params) {
  if (!(x > 0.0)) throw std::domain_error("spectral_density: x must be positive");
  const double gx = form_factor_squared(x);
  const double A = x - params.a + params.chi * pv_shift_cached(x);
  const double B = kPi * params.chi * gx;
  return params.chi * gx / (A * A + B * B);
}

double spectral_peak(const AtomParams& params) {
  double x = params.a;
  for (int it = 0; it < 4; ++it) {
    const double next = params.a - params.chi * pv_shift_cached(x);
    if (!(next > 0.0)) return x;
    x = next;
  }
  return x;
}

std::vector<double> spectral_breakpoints(const AtomParams& params, double x_max) {
  const double peak = spectral_peak(params);
  const double width = kPi * params.chi * form_factor_squared(params.a);
  std::vector<double> br{params.a, peak};
  for (double scale = 0.5 * width; scale < x_max; scale *= 7.0) {
    br.push_back(peak - scale);
    br.push_back(peak + scale);
  }
  std::erase_if(br, [x_max](double x) { return x <= 0.0 || x >= x_max; });
  return br;
}

}  // namespace zenolab

#include "zenolab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zenolab/errors.hpp"
#include "zenolab/quadrature.hpp"
#include "zenolab/resolvent.hpp"
#include "zenolab/self_energy.hpp"

namespace zenolab {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

}  // namespace

cplx bromwich_inverse(double tau, const AtomParams& params, double abscissa,
                      double tol) {
  if (!(tau > 0.0)) throw std::domain_error("bromwich_inverse: tau must be positive");
  if (!(abscissa > 0.0))
    throw std::domain_error("bromwich_inverse: abscissa must be positive");
  if (!(tol > 0.0)) throw std::domain_error("bromwich_inverse: tol must be positive");

  const double a = params.a;
  const double chi = params.chi;
  const double c = std::min(abscissa, 3.0 / tau);
  const double amp = std::exp(c * tau);

  // |R(c+iv)| <= chi/(3|v|^3) for |v| >= 8; both tails below tol/2
  const double v_max = std::max(8.0, std::sqrt(amp * chi / (3.0 * kPi * tol)));

  auto f = [&](double v) -> cplx {
    const cplx s{c, v};
    const cplx q = qbar({s, Sheet::first});
    const cplx free = s + kI * a;
    return std::exp(s * tau) * (-chi * q) / (free * (free + chi * q));
  };

  std::vector<double> br{-3.0, -1.0, -a, 0.0, a, 1.0, 3.0};
  const double step = 2.0 * kPi / tau;  // one oscillation period per panel
  if (step < v_max) {
    const int count = static_cast<int>(2.0 * v_max / step);
    br.reserve(br.size() + count);
    for (double v = -v_max + step; v < v_max; v += step) br.push_back(v);
  }
  QuadOptions opt;
  opt.abs_tol = tol * kPi;  // budget tol/2 after the 1/(2 pi) factor
  opt.max_evals = 40'000'000;
  const QuadResult r = integrate(f, -v_max, v_max, opt, br);
  return std::exp(-kI * a * tau) + r.value / (2.0 * kPi);
}

cplx spectral_inverse(double tau, const AtomParams& params, double tol) {
  if (tau < 0.0) throw std::domain_error("spectral_inverse: tau must be >= 0");
  if (!(tol > 0.0)) throw std::domain_error("spectral_inverse: tol must be positive");

  // w ~ chi/x^9 beyond the resonance; truncate where the tail drops below tol
  const double x_end = std::max(3.0, std::pow(params.chi / (4.0 * tol), 0.125));

  auto f = [&](double x) -> cplx {
    if (x <= 0.0) return {};
    return spectral_density(x, params) * std::exp(-kI * x * tau);
  };

  std::vector<double> br = spectral_breakpoints(params, x_end);
  const double step = 2.0 * kPi / std::max(tau, 1.0);
  if (step < x_end) {
    const int count = static_cast<int>(x_end / step);
    br.reserve(br.size() + count);
    for (double x = step; x < x_end; x += step) br.push_back(x);
  }
  QuadOptions opt;
  opt.abs_tol = tol;
  opt.max_evals = 40'000'000;
  const QuadResult r = integrate(f, 0.0, x_end, opt, br);
  return r.value;
}

DiscretizedModel build_discretized_model(const AtomParams& params, int n_modes,
                                         double x_max) {
  if (n_modes < 100)
    throw std::domain_error("build_discretized_model: n_modes must be >= 100");
  if (!(x_max >= 10.0))
    throw std::domain_error("build_discretized_model: x_max must be >= 10");

  DiscretizedModel m;
  m.n_modes = n_modes;
  m.excited_energy = params.a;
  GaussRule rule = gauss_legendre(n_modes, 0.0, x_max);
  m.nodes = std::move(rule.nodes);
  m.weights = std::move(rule.weights);
  m.couplings.resize(n_modes);
  for (int i = 0; i < n_modes; ++i)
    m.couplings[i] =
        std::sqrt(params.chi * form_factor_squared(m.nodes[i]) * m.weights[i]);

  const auto& x = m.nodes;
  const auto& cp = m.couplings;
  const double a = params.a;

  auto secular = [&](double e) {
    double sum = 0.0;
    for (int i = 0; i < n_modes; ++i) sum += cp[i] * cp[i] / (e - x[i]);
    return e - a - sum;
  };
  auto secular_prime = [&](double e) {
    double sum = 0.0;
    for (int i = 0; i < n_modes; ++i) {
      const double d = e - x[i];
      sum += cp[i] * cp[i] / (d * d);
    }
    return 1.0 + sum;
  };

  // one root per node gap plus one below x_1 and one above x_n; the secular
  // function is strictly increasing from -inf to +inf on each interval
  auto bisect = [&](double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-17 * (1.0 + std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (secular(mid) < 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  m.eigenvalues.resize(n_modes + 1);
  {
    double lo = std::min(a, x[0]) - 1.0;
    int guard = 0;
    while (secular(lo) >= 0.0 && guard++ < 60) lo -= 2.0 * (x[0] - lo);
    m.eigenvalues[0] = bisect(lo, std::nextafter(x[0], lo));
  }
  for (int k = 0; k + 1 < n_modes; ++k)
    m.eigenvalues[k + 1] =
        bisect(std::nextafter(x[k], x[k + 1]), std::nextafter(x[k + 1], x[k]));
  {
    double hi = x[n_modes - 1] + std::max(1.0, a - x[n_modes - 1] + 1.0);
    int guard = 0;
    while (secular(hi) <= 0.0 && guard++ < 60) hi += 2.0 * (hi - x[n_modes - 1]);
    m.eigenvalues[n_modes] = bisect(std::nextafter(x[n_modes - 1], hi), hi);
  }

  m.spectral_weights.resize(n_modes + 1);
  for (int mth = 0; mth <= n_modes; ++mth)
    m.spectral_weights[mth] = 1.0 / secular_prime(m.eigenvalues[mth]);

  // resonance resolvable when the local level spacing is below the width
  const double width = kPi * params.chi * form_factor_squared(a);
  auto it = std::lower_bound(x.begin(), x.end(), a);
  double spacing;
  if (it == x.begin()) {
    spacing = x[1] - x[0];
  } else if (it == x.end()) {
    spacing = x[n_modes - 1] - x[n_modes - 2];
  } else {
    const auto j = it - x.begin();
    spacing = x[j] - x[j - 1];
  }
  m.resolution_ok = spacing <= width;
  return m;
}

std::vector<cplx> evaluate_survival(const DiscretizedModel& model,
                                    std::span<const double> taus) {
  std::vector<cplx> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    cplx y{};
    for (std::size_t mth = 0; mth < model.eigenvalues.size(); ++mth)
      y += model.spectral_weights[mth] *
           std::exp(-kI * model.eigenvalues[mth] * tau);
    out.push_back(y);
  }
  return out;
}

std::vector<cplx> discretized_evolution(const AtomParams& params, int n_modes,
                                        double x_max, std::span<const double> taus) {
  const DiscretizedModel model = build_discretized_model(params, n_modes, x_max);
  return evaluate_survival(model, taus);
}

}  // namespace zenolab

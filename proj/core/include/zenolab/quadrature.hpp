#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <vector>

#include "zenolab/errors.hpp"

namespace zenolab {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_evals = 4'000'000;
};

struct QuadResult {
  std::complex<double> value{};
  double error = 0.0;  // estimated absolute error
  int evals = 0;
};

// Gauss rule with nodes/weights mapped to the target interval (or half line).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b]; nodes strictly increasing.
GaussRule gauss_legendre(int n, double a, double b);

// n-point generalized Gauss-Laguerre rule for the weight x*exp(-x) on [0, inf).
GaussRule gauss_laguerre_xweight(int n);

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae).
inline constexpr double kKronrodX[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodW[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGaussW[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::complex<double> k15{}, g7{};
  for (int j = 0; j < 8; ++j) {
    const std::complex<double> fp = f(c + h * kKronrodX[j]);
    const std::complex<double> fm =
        (j == 7) ? fp : std::complex<double>(f(c - h * kKronrodX[j]));
    const std::complex<double> sum = (j == 7) ? fp : fp + fm;
    k15 += kKronrodW[j] * sum;
    if (j % 2 == 1) g7 += kGaussW[j / 2] * sum;
  }
  k15 *= h;
  g7 *= h;
  const double err = std::abs(k15 - g7);
  if (!std::isfinite(k15.real()) || !std::isfinite(k15.imag()))
    throw convergence_error("quadrature: non-finite integrand value");
  return Panel{a, b, k15, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of a complex-valued integrand
// over [a, b]. `breaks` seeds interior panel boundaries (must lie inside
// (a, b); they are sorted and deduplicated here). Termination when the summed
// error estimate falls below max(abs_tol, rel_tol * |integral|).
template <class F>
QuadResult integrate(F&& f, double a, double b, QuadOptions opt = {},
                     std::span<const double> breaks = {}) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breaks)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<detail::Panel> heap;
  std::complex<double> total{};
  double total_err = 0.0;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto p = detail::evaluate_panel(f, edges[i], edges[i + 1]);
    evals += 15;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (evals >= opt.max_evals)
      throw convergence_error("quadrature: node budget exhausted before tolerance");
    detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw convergence_error("quadrature: interval underflow before tolerance");
    auto left = detail::evaluate_panel(f, worst.a, mid);
    auto right = detail::evaluate_panel(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  return QuadResult{total, total_err, evals};
}

}  // namespace zenolab

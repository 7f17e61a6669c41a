#include "zenolab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zenolab {
namespace {

// Orthonormal three-term recurrence p_{k+1} = ((x - a_k) p_k - b_k p_{k-1}) / b_{k+1}.
// Returns p_n(x) and p_n'(x) and accumulates sum_{k<n} p_k(x)^2 for the
// Christoffel weight 1/sum.
struct RecurrenceEval {
  double p, dp, christoffel_sum;
};

template <class A, class B>
RecurrenceEval eval_orthonormal(int n, double x, double p0, A&& ak, B&& bk) {
  double pm = 0.0, dpm = 0.0;
  double p = p0, dp = 0.0;
  double csum = p0 * p0;
  for (int k = 0; k < n; ++k) {
    const double bk1 = bk(k + 1);
    const double bkk = (k == 0) ? 0.0 : bk(k);  // multiplies p_{-1} = 0
    const double pn = ((x - ak(k)) * p - bkk * pm) / bk1;
    const double dpn = ((x - ak(k)) * dp + p - bkk * dpm) / bk1;
    pm = p;
    dpm = dp;
    p = pn;
    dp = dpn;
    if (k + 1 < n) csum += p * p;
  }
  return {p, dp, csum};
}

// Finds node i by Newton from guess(i, found_roots); iterates are kept above
// the previous root by bisecting against it when a step overshoots.
template <class A, class B, class G>
GaussRule rule_from_recurrence(int n, double p0, A&& ak, B&& bk, G&& guess) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = guess(i, rule.nodes);
    const double floor = (i == 0) ? -1e308 : rule.nodes[i - 1];
    RecurrenceEval e{};
    for (int it = 0; it < 200; ++it) {
      e = eval_orthonormal(n, x, p0, ak, bk);
      const double step = e.p / e.dp;
      double xn = x - step;
      if (xn <= floor) xn = 0.5 * (x + floor);
      const double moved = std::abs(xn - x);
      x = xn;
      if (moved <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    e = eval_orthonormal(n, x, p0, ak, bk);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / e.christoffel_sum;
  }
  for (int i = 1; i < n; ++i)
    if (!(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::logic_error("gauss rule: nodes not strictly increasing");
  return rule;
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: requires b > a");
  auto ak = [](int) { return 0.0; };
  auto bk = [](int k) { return k / std::sqrt(4.0 * k * k - 1.0); };
  auto guess = [n](int i, const std::vector<double>&) {
    return -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
  };
  GaussRule rule = rule_from_recurrence(n, 1.0 / std::sqrt(2.0), ak, bk, guess);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

GaussRule gauss_laguerre_xweight(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre_xweight: n must be >= 1");
  constexpr double alf = 1.0;  // weight x^alf e^-x with alf = 1; total mass 1
  auto ak = [](int k) { return 2.0 * k + alf + 1.0; };
  auto bk = [](int k) { return std::sqrt(k * (k + alf)); };
  // each guess extrapolates from the two previously refined roots
  auto guess = [n](int i, const std::vector<double>& roots) {
    if (i == 0) return (1.0 + alf) * (3.0 + 0.92 * alf) / (1.0 + 2.4 * n + 1.8 * alf);
    if (i == 1) return roots[0] + (15.0 + 6.25 * alf) / (1.0 + 0.9 * alf + 2.5 * n);
    const double ai = i - 1;
    return roots[i - 1] +
           ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alf / (1.0 + 3.5 * ai)) *
               (roots[i - 1] - roots[i - 2]) / (1.0 + 0.3 * alf);
  };
  return rule_from_recurrence(n, 1.0, ak, bk, guess);
}

}  // namespace zenolab

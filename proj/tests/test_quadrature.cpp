#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "zenolab/errors.hpp"
#include "zenolab/quadrature.hpp"

using namespace zenolab;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_CASE("adaptive integration reproduces elementary integrals") {
  auto poly = [](double x) -> cplx { return x * x; };
  auto r = integrate(poly, 0.0, 1.0, {.abs_tol = 1e-13});
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-13);

  auto osc = [](double x) -> cplx { return std::exp(cplx(0.0, x)); };
  auto r2 = integrate(osc, 0.0, 10.0 * kPi, {.abs_tol = 1e-12});
  CHECK(std::abs(r2.value) < 1e-11);  // full periods cancel

  auto decay = [](double x) -> cplx { return std::exp(-x) * std::cos(5.0 * x); };
  auto r3 = integrate(decay, 0.0, 40.0, {.abs_tol = 1e-13});
  CHECK(std::abs(r3.value.real() - 1.0 / 26.0) < 1e-12);
}

TEST_CASE("adaptive integration respects interior breaks and budgets") {
  auto kink = [](double x) -> cplx { return std::abs(x - 0.3); };
  const double brk[] = {0.3};
  auto r = integrate(kink, 0.0, 1.0, {.abs_tol = 1e-13}, brk);
  const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
  CHECK(std::abs(r.value.real() - exact) < 1e-13);

  auto needle = [](double x) -> cplx { return 1.0 / (1e-6 + (x - 0.5) * (x - 0.5)); };
  CHECK_THROWS_AS(integrate(needle, 0.0, 1.0, {.abs_tol = 1e-14, .max_evals = 60}),
                  convergence_error);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const auto rule = gauss_legendre(12, 0.0, 3.0);
  REQUIRE(rule.nodes.size() == 12);
  double mass = 0.0, p5 = 0.0, p23 = 0.0;
  for (int i = 0; i < 12; ++i) {
    mass += rule.weights[i];
    p5 += rule.weights[i] * std::pow(rule.nodes[i], 5);
    p23 += rule.weights[i] * std::pow(rule.nodes[i], 23);
  }
  CHECK(mass == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p5 == doctest::Approx(std::pow(3.0, 6) / 6.0).epsilon(1e-14));
  // degree 23 = 2n - 1 is still exact
  CHECK(p23 == doctest::Approx(std::pow(3.0, 24) / 24.0).epsilon(1e-13));
}

TEST_CASE("gauss-laguerre rule matches factorial moments of x e^-x") {
  const auto rule = gauss_laguerre_xweight(128);
  REQUIRE(rule.nodes.size() == 128);
  for (int k : {0, 1, 3, 7, 12}) {
    double sum = 0.0;
    for (int i = 0; i < 128; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    double expect = 1.0;  // int x^{k+1} e^-x dx = (k+1)!
    for (int j = 2; j <= k + 1; ++j) expect *= j;
    CHECK(sum == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("gauss-laguerre handles a smooth decaying integrand") {
  const auto rule = gauss_laguerre_xweight(128);
  // int_0^inf x e^-x / (1 + x/4) dx, reference from adaptive quadrature
  auto f = [](double x) -> cplx { return std::exp(-x) * x / (1.0 + 0.25 * x); };
  auto ref = integrate(f, 0.0, 60.0, {.abs_tol = 1e-13});
  double sum = 0.0;
  for (int i = 0; i < 128; ++i)
    sum += rule.weights[i] / (1.0 + 0.25 * rule.nodes[i]);
  CHECK(sum == doctest::Approx(ref.value.real()).epsilon(1e-12));
}

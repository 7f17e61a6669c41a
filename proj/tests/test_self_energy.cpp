#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "reference_values.hpp"
#include "zenolab/model.hpp"
#include "zenolab/self_energy.hpp"

using namespace zenolab;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

namespace {

// deterministic sample covering the right half-plane plus the negative real
// axis, the closed form's two analytic regions away from the cut
std::vector<cplx> closed_form_sample() {
  std::vector<cplx> pts;
  std::mt19937 rng(20260811);
  std::uniform_real_distribution<double> logr(-3.0, 3.0);
  std::uniform_real_distribution<double> phase(-0.49 * kPi, 0.49 * kPi);
  for (int i = 0; i < 80; ++i)
    pts.push_back(std::polar(std::pow(10.0, logr(rng)), phase(rng)));
  for (int i = 0; i < 20; ++i)
    pts.emplace_back(-std::pow(10.0, logr(rng)), 0.0);
  return pts;
}

}  // namespace

TEST_CASE("removable singularity anchors at s = +-1") {
  const cplx plus = qbar({{1.0, 0.0}, Sheet::first});
  const cplx minus = qbar({{-1.0, 0.0}, Sheet::first});
  const cplx ref_plus = (32.0 - 5.0 * kPi * kI) / 256.0;
  const cplx ref_minus = (-32.0 - 5.0 * kPi * kI) / 256.0;
  CHECK(std::abs(plus - ref_plus) < 1e-10 * std::abs(ref_plus));
  CHECK(std::abs(minus - ref_minus) < 1e-10 * std::abs(ref_minus));
}

TEST_CASE("limits: branch point and large |s|") {
  // s -> 0+ along the positive real axis approaches -5 pi i/32
  const cplx near_zero = qbar({{1e-6, 0.0}, Sheet::first});
  CHECK(std::abs(near_zero - (-5.0 * kPi * kI / 32.0)) < 2e-5);
  CHECK(std::abs(near_zero - zenoref::kQbarNearZero) < 1e-15);

  // Qbar(s) ~ 1/(6 s)
  const cplx far = qbar({{100.0, 0.0}, Sheet::first});
  CHECK(std::abs(far - 1.0 / 600.0) < 1e-5);
  for (int k = 0; k < 8; ++k) {
    const cplx s = std::polar(100.0, -0.49 * kPi + 0.98 * kPi * k / 7.0);
    CHECK(std::abs(s * qbar({s, Sheet::first}) - cplx(1.0 / 6.0, 0.0)) < 0.01);
  }
}

TEST_CASE("frozen closed-form samples") {
  CHECK(std::abs(qbar({{2.0, 1.0}, Sheet::first}) - zenoref::kQbar2p1i) < 1e-15);
  CHECK(std::abs(qbar({{-0.5, 0.0}, Sheet::first}) - zenoref::kQbarNegHalf) < 1e-15);
  CHECK(std::abs(qbar({{0.0, 1.0}, Sheet::first}) - zenoref::kQbarI) < 1e-15);
  CHECK(std::abs(qbar({{0.3, -0.7}, Sheet::first}) - zenoref::kQbarFourthQuad) < 1e-15);
  CHECK(std::abs(qbar({{-0.3, -0.3}, Sheet::second}) - zenoref::kQbarSecondSheet) < 1e-14);
}

TEST_CASE("closed form agrees with the defining integral") {
  // the published anchors
  CHECK(std::abs(qbar_quadrature({1.0, 0.0}, 1e-12) -
                 (32.0 - 5.0 * kPi * kI) / 256.0) < 1e-10);
  CHECK(std::abs(qbar_quadrature({-0.5, 0.0}, 1e-12) -
                 qbar({{-0.5, 0.0}, Sheet::first})) < 1e-10);
  CHECK(std::abs(qbar_quadrature({0.0, 1.0}, 1e-12) -
                 qbar({{0.0, 1.0}, Sheet::first})) < 1e-10);

  // property: 100-point sample, guards the log branch
  double worst = 0.0;
  for (const cplx& s : closed_form_sample()) {
    const cplx cf = qbar({s, Sheet::first});
    const cplx qd = qbar_quadrature(s, 1e-12);
    worst = std::max(worst, std::abs(cf - qd));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("sheet consistency and cut-edge jump") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    cplx s{re(rng), im(rng)};
    if (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3 || std::abs(s + 1.0) < 1e-3)
      continue;
    if (s.real() == 0.0 && s.imag() <= 0.0) continue;
    const cplx diff = qbar({s, Sheet::second}) - qbar({s, Sheet::first});
    CHECK(std::abs(diff - qbar_discontinuity(s)) <= 1e-12 * (1.0 + std::abs(diff)));
  }

  // jump across the cut equals 2 pi g(x), and equals the discontinuity term
  for (double x : {0.3, 0.7, 1.5, 3.0}) {
    const double eps = 1e-7;
    const cplx jump =
        qbar({{eps, -x}, Sheet::first}) - qbar({{-eps, -x}, Sheet::first});
    CHECK(std::abs(jump - 2.0 * kPi * form_factor_squared(x)) < 1e-5);
    CHECK(std::abs(jump - qbar_discontinuity(cplx(0.0, -x))) < 1e-5);
  }

  // second sheet continues the first through the cut from the right
  for (double x : {0.3, 2.0}) {
    const double eps = 1e-8;
    const cplx left_ii = qbar({{-eps, -x}, Sheet::second});
    const cplx right_i = qbar({{eps, -x}, Sheet::first});
    CHECK(std::abs(left_ii - right_i) < 1e-6);
  }
}

TEST_CASE("sign structure on the positive real axis") {
  for (double sigma : {0.05, 0.3, 1.0, 4.0, 50.0}) {
    const cplx q = qbar({{sigma, 0.0}, Sheet::first});
    CHECK(q.real() > 0.0);
    CHECK(q.imag() < 0.0);
  }
}

TEST_CASE("derivative against finite differences and frozen value") {
  const cplx s0{2.0, 1.0};
  const double hstep = 1e-5;
  const cplx fd = (qbar({s0 + hstep, Sheet::first}) - qbar({s0 - hstep, Sheet::first})) /
                  (2.0 * hstep);
  const cplx an = qbar_derivative({s0, Sheet::first});
  CHECK(std::abs(fd - an) < 1e-8 * std::abs(an));
  CHECK(std::abs(an - zenoref::kQbarPrime2p1i) < 1e-15);

  // finite at the removable singularity, smooth across the patch boundary
  const cplx d1 = qbar_derivative({{1.0, 0.0}, Sheet::first});
  CHECK(std::isfinite(d1.real()));
  CHECK(std::isfinite(d1.imag()));
  // no jump at the patch boundary beyond the function's own variation
  const cplx inner = qbar({{1.0 + 0.0499, 0.0}, Sheet::first});
  const cplx outer = qbar({{1.0 + 0.0501, 0.0}, Sheet::first});
  CHECK(std::abs(inner - outer) < 5e-5);
  const cplx fd_patch =
      (qbar({{1.02 + 1e-6, 0.0}, Sheet::first}) - qbar({{1.02 - 1e-6, 0.0}, Sheet::first})) /
      cplx(2e-6, 0.0);
  CHECK(std::abs(fd_patch - qbar_derivative({{1.02, 0.0}, Sheet::first})) <
        1e-7 * std::abs(fd_patch));

  // second-sheet derivative = first-sheet + discontinuity derivative
  const cplx s2{-0.3, -0.3};
  const cplx dII = qbar_derivative({s2, Sheet::second});
  const cplx dI = qbar_derivative({s2, Sheet::first});
  const double h2 = 1e-6;
  const cplx fd_disc =
      (qbar_discontinuity(s2 + h2) - qbar_discontinuity(s2 - h2)) / (2.0 * h2);
  CHECK(std::abs(dII - dI - fd_disc) < 1e-6 * std::abs(dII));
}

TEST_CASE("series patch matches quadrature at the boundary") {
  for (double r : {0.045, 0.049, 0.0501}) {
    for (double ph : {0.0, 1.2, 2.8, -1.9}) {
      const cplx s = 1.0 + std::polar(r, ph);
      CHECK(std::abs(qbar({s, Sheet::first}) - qbar_quadrature(s, 1e-13)) < 1e-10);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(qbar({{0.0, -0.5}, Sheet::first}), std::domain_error);
  CHECK_THROWS_AS(qbar({{0.0, 0.0}, Sheet::first}), std::domain_error);
  CHECK_THROWS_AS(qbar({{0.0, 0.0}, Sheet::second}), std::domain_error);
  CHECK_THROWS_AS(qbar({{1.0, 0.0}, Sheet::second}), std::domain_error);
  CHECK_THROWS_AS(qbar({{-1.0, 0.0}, Sheet::second}), std::domain_error);
  CHECK_NOTHROW(qbar({{0.0, -0.5}, Sheet::second}));  // defined on the cut
  CHECK_NOTHROW(qbar({{0.0, 0.5}, Sheet::first}));    // upper axis is off-cut
  CHECK_THROWS_AS(qbar_quadrature({0.0, -2.0}, 1e-10), std::domain_error);
  CHECK_THROWS_AS(qbar_quadrature({1.0, 0.0}, -1.0), std::domain_error);
}

#include "zenolab/self_energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zenolab/model.hpp"
#include "zenolab/quadrature.hpp"

namespace zenolab {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kPatchRadius = 0.05;

// log with argument in (-pi/2, 3pi/2]; points on the negative imaginary axis
// take the left-edge value (arg = 3pi/2 side).
cplx branch_log(cplx s) {
  double th = std::arg(s);
  if (th <= -kPi / 2) th += 2.0 * kPi;
  return cplx(std::log(std::abs(s)), th);
}

bool on_first_sheet_cut(cplx s) { return s.real() == 0.0 && s.imag() <= 0.0; }

cplx pow4(cplx z) {
  const cplx z2 = z * z;
  return z2 * z2;
}

// Numerator N(s) of Qbar = N / (96 (s^2-1)^4).
cplx numerator(cplx s) {
  const cplx L = branch_log(s);
  // Horner over the polynomial part; coefficients of s^0..s^7.
  const cplx c0{0.0, -15.0 * kPi};
  const cplx c1{-88.0, 48.0 * kPi};
  const cplx c2{0.0, -45.0 * kPi};
  const cplx c3{144.0, 0.0};
  const cplx c4{0.0, 15.0 * kPi};
  const cplx c5{-72.0, 0.0};
  const cplx c6{0.0, -3.0 * kPi};
  const cplx c7{16.0, 0.0};
  cplx poly = c7;
  poly = poly * s + c6;
  poly = poly * s + c5;
  poly = poly * s + c4;
  poly = poly * s + c3;
  poly = poly * s + c2;
  poly = poly * s + c1;
  poly = poly * s + c0;
  return poly - 96.0 * s * L;
}

cplx numerator_derivative(cplx s) {
  const cplx L = branch_log(s);
  const cplx c0{-88.0, 48.0 * kPi};
  const cplx c1{0.0, -90.0 * kPi};
  const cplx c2{432.0, 0.0};
  const cplx c3{0.0, 60.0 * kPi};
  const cplx c4{-360.0, 0.0};
  const cplx c5{0.0, -18.0 * kPi};
  const cplx c6{112.0, 0.0};
  cplx poly = c6;
  poly = poly * s + c5;
  poly = poly * s + c4;
  poly = poly * s + c3;
  poly = poly * s + c2;
  poly = poly * s + c1;
  poly = poly * s + c0;
  return poly - 96.0 * L - 96.0;
}

// Taylor coefficients of N(center+u)/u^4 about the removable singularities;
// order 10 keeps the truncation below 1e-17 at the patch boundary.
inline constexpr cplx kNumSeriesPlus[] = {
    {192.00000000000000, -94.247779607693797},   // u^0
    {268.80000000000000, -56.548667764616278},   // u^1
    {108.80000000000000, -9.4247779607693797},   // u^2
    {18.285714285714286, 0.0},                   // u^3
    {-1.7142857142857143, 0.0},                  // u^4
    {1.3333333333333333, 0.0},                   // u^5
    {-1.0666666666666667, 0.0},                  // u^6
    {0.87272727272727273, 0.0},                  // u^7
    {-0.72727272727272727, 0.0},                 // u^8
    {0.61538461538461538, 0.0},                  // u^9
    {-0.52747252747252747, 0.0},                 // u^10
};
inline constexpr cplx kNumSeriesMinus[] = {
    {-192.00000000000000, -94.247779607693797},  // u^0
    {268.80000000000000, 56.548667764616278},    // u^1
    {-108.80000000000000, -9.4247779607693797},  // u^2
    {18.285714285714286, 0.0},                   // u^3
    {1.7142857142857143, 0.0},                   // u^4
    {1.3333333333333333, 0.0},                   // u^5
    {1.0666666666666667, 0.0},                   // u^6
    {0.87272727272727273, 0.0},                  // u^7
    {0.72727272727272727, 0.0},                  // u^8
    {0.61538461538461538, 0.0},                  // u^9
    {0.52747252747252747, 0.0},                  // u^10
};
constexpr int kSeriesOrder = 10;

cplx series_eval(std::span<const cplx> c, cplx u) {
  cplx m = c[kSeriesOrder];
  for (int j = kSeriesOrder - 1; j >= 0; --j) m = m * u + c[j];
  return m;
}

cplx series_eval_derivative(std::span<const cplx> c, cplx u) {
  cplx m = static_cast<double>(kSeriesOrder) * c[kSeriesOrder];
  for (int j = kSeriesOrder - 1; j >= 1; --j)
    m = m * u + static_cast<double>(j) * c[j];
  return m;
}

// First-sheet closed form without the cut check (the on-axis value is the
// left-edge limit; second-sheet evaluation relies on that).
cplx qbar_raw(cplx s) {
  if (std::abs(s - 1.0) < kPatchRadius) {
    const cplx u = s - 1.0;
    return series_eval(kNumSeriesPlus, u) / (96.0 * pow4(u + 2.0));
  }
  if (std::abs(s + 1.0) < kPatchRadius) {
    const cplx u = s + 1.0;
    return series_eval(kNumSeriesMinus, u) / (96.0 * pow4(u - 2.0));
  }
  return numerator(s) / (96.0 * pow4(s * s - 1.0));
}

cplx qbar_raw_derivative(cplx s) {
  if (std::abs(s - 1.0) < kPatchRadius) {
    const cplx u = s - 1.0;
    const cplx d = u + 2.0;
    return series_eval_derivative(kNumSeriesPlus, u) / (96.0 * pow4(d)) -
           4.0 * series_eval(kNumSeriesPlus, u) / (96.0 * pow4(d) * d);
  }
  if (std::abs(s + 1.0) < kPatchRadius) {
    const cplx u = s + 1.0;
    const cplx d = u - 2.0;
    return series_eval_derivative(kNumSeriesMinus, u) / (96.0 * pow4(d)) -
           4.0 * series_eval(kNumSeriesMinus, u) / (96.0 * pow4(d) * d);
  }
  const cplx s21 = s * s - 1.0;
  return (numerator_derivative(s) * s21 - 8.0 * s * numerator(s)) /
         (96.0 * pow4(s21) * s21);
}

void check_second_sheet_domain(cplx s) {
  if (std::abs(s) < 1e-250)
    throw std::domain_error("qbar: branch point s = 0 on the second sheet");
  if (std::abs(s - 1.0) < 1e-60 || std::abs(s + 1.0) < 1e-60)
    throw std::domain_error("qbar: poles s = +-1 on the second sheet");
}

}  // namespace

cplx qbar_discontinuity(cplx s) {
  return 2.0 * kPi * kI * s / pow4(s * s - 1.0);
}

cplx qbar(SheetPoint p) {
  if (p.sheet == Sheet::first) {
    if (on_first_sheet_cut(p.s))
      throw std::domain_error("qbar: first-sheet point on the branch cut");
    return qbar_raw(p.s);
  }
  check_second_sheet_domain(p.s);
  return qbar_raw(p.s) + qbar_discontinuity(p.s);
}

cplx qbar_derivative(SheetPoint p) {
  if (p.sheet == Sheet::first) {
    if (on_first_sheet_cut(p.s))
      throw std::domain_error("qbar_derivative: first-sheet point on the branch cut");
    return qbar_raw_derivative(p.s);
  }
  check_second_sheet_domain(p.s);
  const cplx s = p.s;
  const cplx s21 = s * s - 1.0;
  const cplx ddisc = -2.0 * kPi * kI * (7.0 * s * s + 1.0) / (pow4(s21) * s21);
  return qbar_raw_derivative(s) + ddisc;
}

cplx qbar_quadrature(cplx s, double tol) {
  if (on_first_sheet_cut(s))
    throw std::domain_error("qbar_quadrature: point on the branch cut");
  if (!(tol > 0.0)) throw std::domain_error("qbar_quadrature: tol must be positive");
  const double split = std::abs(s);
  QuadOptions opt;
  opt.abs_tol = tol / 2.0;

  auto head = [s](double x) -> cplx {
    return form_factor_squared(x) / (x - kI * s);
  };
  const double hb[] = {split / 4.0, split / 2.0};
  const QuadResult rh = integrate(head, 0.0, split, opt, hb);

  // tail x in [split, inf) mapped through x = 1/u
  auto tail = [s](double u) -> cplx {
    const double u2 = 1.0 + u * u;
    const double u22 = u2 * u2;
    const double num = u * u * u * u * u * u;
    return num / (u22 * u22 * (1.0 - kI * s * u));
  };
  const double ub = 1.0 / split;
  const double tb[] = {std::min(1.0, ub / 2.0), std::min(2.0, ub * 0.75)};
  const QuadResult rt = integrate(tail, 0.0, ub, opt, tb);

  return -kI * (rh.value + rt.value);
}

}  // namespace zenolab

#pragma once

#include <complex>

namespace zenolab {

// Riemann sheet of the reduced self-energy. The first (physical) sheet has a
// logarithmic branch cut along {Re s = 0, Im s <= 0}; the second sheet is the
// continuation through that cut, Qbar_II(s) = Qbar(s) + 2 pi i s/(s^2-1)^4.
enum class Sheet { first, second };

struct SheetPoint {
  std::complex<double> s{};
  Sheet sheet = Sheet::first;
};

// Reduced self-energy Qbar(s) = -i \int_0^inf g(x)/(x - i s) dx in closed
// form, g(x) = x/(1+x^2)^4.
//
// Branch convention: the logarithm's argument runs over (-pi/2, 3pi/2], so
// the cut lies along the negative imaginary axis. A principal log (cut on
// the negative reals) would be wrong everywhere left of the imaginary axis.
// Within |s -/+ 1| < 0.05 the removable singularity is evaluated from a
// frozen Taylor series of the full ratio.
//
// First sheet: throws std::domain_error on the cut. Second sheet: defined on
// the cut itself (continuation from the right edge) but throws at the branch
// point s = 0 and at the genuine poles s = +-1 of the continuation term.
std::complex<double> qbar(SheetPoint p);

// Analytic derivative of qbar, same domain and sheet rules.
std::complex<double> qbar_derivative(SheetPoint p);

// Independent check of the closed form: adaptive quadrature of the defining
// integral to absolute accuracy tol. First sheet only, off the cut. Splits
// [0, inf) at x = |s| and maps the tail through x -> 1/u.
std::complex<double> qbar_quadrature(std::complex<double> s, double tol);

// Discontinuity across the cut: Qbar_II(s) - Qbar(s) = 2 pi i s/(s^2-1)^4.
std::complex<double> qbar_discontinuity(std::complex<double> s);

}  // namespace zenolab

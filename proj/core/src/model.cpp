#include "zenolab/model.hpp"

#include <numbers>
#include <stdexcept>

namespace zenolab {

AtomParams hydrogen_params(const PhysicalConstants& constants, int z) {
  if (!(constants.alpha > 0.0 && constants.alpha < 0.01))
    throw std::domain_error("hydrogen_params: alpha outside (0, 0.01)");
  if (!(constants.m_e > 0.0))
    throw std::domain_error("hydrogen_params: m_e must be positive");
  if (z < 1) throw std::domain_error("hydrogen_params: z must be >= 1");
  const double a = z * constants.alpha / 4.0;
  if (!(a < 1.0))
    throw std::domain_error("hydrogen_params: z alpha / 4 must stay below 1");
  AtomParams p;
  p.z = z;
  p.cutoff_lambda = 1.5 * z * constants.alpha * constants.m_e;
  const double z2 = static_cast<double>(z) * z;
  const double a3 = constants.alpha * constants.alpha * constants.alpha;
  p.chi = (2.0 / std::numbers::pi) * std::pow(2.0 / 3.0, 9) * z2 * a3;
  p.a = a;
  p.omega0 = p.a * p.cutoff_lambda;
  return p;
}

AtomParams custom_params(double cutoff_lambda, double chi, double a) {
  if (!(cutoff_lambda > 0.0))
    throw std::domain_error("custom_params: cutoff_lambda must be positive");
  if (!(chi > 0.0)) throw std::domain_error("custom_params: chi must be positive");
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("custom_params: a must lie in (0, 1)");
  AtomParams p;
  p.z = 0;
  p.cutoff_lambda = cutoff_lambda;
  p.chi = chi;
  p.a = a;
  p.omega0 = a * cutoff_lambda;
  return p;
}

double zeno_time(const AtomParams& params, bool corrected) {
  if (!(params.chi > 0.0 && params.cutoff_lambda > 0.0))
    throw std::domain_error("zeno_time: invalid params");
  double tz = std::sqrt(6.0 / params.chi) / params.cutoff_lambda;
  if (corrected) tz /= std::sqrt(1.4210);
  return tz;
}

double form_factor_squared(double x) {
  if (x < 0.0) throw std::domain_error("form_factor_squared: x must be >= 0");
  const double d = 1.0 + x * x;
  const double d2 = d * d;
  return x / (d2 * d2);
}

}  // namespace zenolab

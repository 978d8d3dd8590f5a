#include "finsler/integral_family.hpp"

#include <cmath>

#include "finsler/errors.hpp"

namespace finsler {

double integral_antiderivative(double lambda, double b, double s,
                               const QuadratureOptions& opts) {
  if (s == 0.0) return 0.0;
  const auto integrand = [lambda, b](double t) {
    const double r2 = b * b - t * t;
    return std::exp(lambda * t) / (r2 * std::sqrt(r2));
  };
  return integrate_adaptive(integrand, 0.0, s, opts).value;
}

PhiDerivatives integral_phi_eval(double c1, double c2, double c3,
                                 double lambda, double b, double s,
                                 double eps_margin,
                                 const QuadratureOptions& opts) {
  if (!(b > 0.0)) throw DomainError("integral family needs b > 0");
  if (std::abs(s) > b * (1.0 - eps_margin)) {
    throw SingularODE("s = " + std::to_string(s) +
                      " too close to the endpoint singularity at |s| = b = " +
                      std::to_string(b));
  }
  const double r2 = b * b - s * s;
  const double R = std::sqrt(r2);
  const double R1 = -s / R;                 // R'
  const double R2 = -b * b / (r2 * R);      // R''
  const double R3 = -3.0 * b * b * s / (r2 * r2 * R);  // R'''

  const double J = integral_antiderivative(lambda, b, s, opts);
  const double E = std::exp(lambda * s);
  const double J1 = E / (r2 * R);
  const double J2 = E * (lambda / (r2 * R) + 3.0 * s / (r2 * r2 * R));
  const double J3 = E * (lambda * lambda / (r2 * R) +
                         6.0 * lambda * s / (r2 * r2 * R) +
                         3.0 / (r2 * r2 * R) +
                         15.0 * s * s / (r2 * r2 * r2 * R));

  PhiDerivatives out;
  out.phi = c1 * s + c2 * R + c3 * R * J;
  out.dphi = c1 + c2 * R1 + c3 * (R1 * J + R * J1);
  out.d2phi = c2 * R2 + c3 * (R2 * J + 2.0 * R1 * J1 + R * J2);
  out.d3phi = c2 * R3 + c3 * (R3 * J + 3.0 * R2 * J1 + 3.0 * R1 * J2 + R * J3);
  return out;
}

}  // namespace finsler

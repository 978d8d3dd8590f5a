#pragma once

#include "finsler/metric.hpp"
#include "finsler/quadrature.hpp"

namespace finsler {

/// The antiderivative term of the integral family,
///   J(s) = int_0^s e^{lambda t} / (b^2 - t^2)^{3/2} dt,
/// by adaptive Gauss-Legendre quadrature. The integration constant is fixed
/// by the lower limit 0; any other choice only shifts the c2 sqrt(b^2-s^2)
/// term, which the family already spans.
double integral_antiderivative(double lambda, double b, double s,
                               const QuadratureOptions& opts = {});

/// phi = c1 s + c2 R + c3 R J(s) with R = sqrt(b^2 - s^2), plus its first
/// three derivatives. J is the only quadrature-backed quantity; the
/// derivatives use the fundamental theorem of calculus (J' = e^{lambda s}/R^3
/// in closed form), so differentiation adds no quadrature error.
/// Requires |s| <= b (1 - eps_margin); closer to the endpoints the integrand
/// is too singular and SingularODE is thrown.
PhiDerivatives integral_phi_eval(double c1, double c2, double c3,
                                 double lambda, double b, double s,
                                 double eps_margin = 1e-3,
                                 const QuadratureOptions& opts = {});

}  // namespace finsler

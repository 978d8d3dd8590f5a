#pragma once

#include <functional>

namespace finsler {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated absolute error bound
  int panels = 0;               // leaf panels actually summed
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  int max_depth = 48;
};

/// Adaptive Gauss-Legendre integration of f over [a, b]. Each panel is
/// estimated with a 15-point rule; a panel is accepted when bisecting it
/// changes the result by less than its share of the tolerance, otherwise
/// the halves are refined recursively. Throws QuadratureFailure when the
/// depth cap is hit before convergence.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

}  // namespace finsler

#pragma once

#include <functional>
#include <vector>

#include "finsler/metric.hpp"
#include "finsler/tensors.hpp"

namespace finsler {

/// The 2-D Berwald frame at y(theta) = (cos theta, sin theta):
/// y_perp is g-orthogonal to y with g(y_perp, y_perp) = F^2, oriented so
/// that det[y, y_perp] > 0 (which puts the second component positive at
/// theta = 0 for admissible families, matching the printed closed forms).
struct Frame2D {
  double theta = 0.0;
  Vec<2> y{};
  Vec<2> y_perp{};
  FlagTensors<2> tensors;
};

Frame2D berwald_perp(const MetricModel& model, double theta);

/// xi(theta) = F |C(y_perp, y_perp, y_perp)| / g(y_perp, y_perp)^{3/2}
/// from the jet pipeline.
double xi_numeric(const MetricModel& model, double theta);

/// The printed closed-form xi for the two theorem families.
double closed_form_xi(const MetricModel& model, double theta);

/// The printed closed-form y_perp for the two theorem families.
Vec<2> closed_form_perp(const MetricModel& model, double theta);

/// The polynomial ingredients of the closed forms on [0,1] x [-1,1]:
/// f (generalized Randers) or f1, f2 (quadratic beta), plus the profile
/// g(k, x) whose max over x = cos theta is the Cartan norm. g is flagged
/// undefined instead of throwing when its radicand is non-positive.
struct FgValues {
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double g = 0.0;
  bool g_defined = false;
};

FgValues fg_polynomials(const MetricFamily& family, double k, double x);

/// Grid + local-refinement certificates for the sign analysis of the
/// boundedness proofs: min f over the square for generalized Randers;
/// the sign pattern of f1 and f2 for quadratic beta.
struct PositivityScan {
  // generalized Randers
  double f_min = 0.0;
  double f_argmin_k = 0.0;
  double f_argmin_x = 0.0;
  // quadratic beta
  double f1_min_abs = 0.0;
  int f1_sign = 0;
  bool f1_sign_constant = false;
  double f2_min_abs = 0.0;
  int f2_sign = 0;
  bool f2_sign_constant = false;
};

PositivityScan positivity_scan(const MetricFamily& family, int grid_k,
                               int grid_x);

enum class XiMethod { jet, closed_form };

/// A theta-scan of xi with its refined maximum.
struct FrameScan {
  std::vector<double> theta_grid;
  std::vector<double> xi_values;
  double grid_max = 0.0;   // before refinement
  double norm = 0.0;       // after golden-section refinement
  double theta_argmax = 0.0;
  XiMethod method = XiMethod::jet;
};

/// Dense scan of xi over theta in [0, pi] (the canonical model satisfies
/// xi(2 pi - theta) = xi(theta)), clipped to the family's working interval,
/// followed by golden-section refinement around the grid argmax.
FrameScan cartan_norm_2d(const MetricModel& model, int theta_samples,
                         XiMethod method);

/// Golden-section maximization of a smooth unimodal-on-the-bracket function.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol, double* arg = nullptr);

}  // namespace finsler

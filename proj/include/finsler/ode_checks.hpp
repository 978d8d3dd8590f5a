#pragma once

#include <span>
#include <vector>

#include "finsler/metric.hpp"

namespace finsler {

/// Residual of (b^2 - s^2) phi''' - 3 s phi''. This is the numerator of
/// the last fraction of the A formula; the sqrt(b^2-s^2)/b^2 family
/// annihilates it identically.
double ode1_residual(const MetricFamily& family, double s, double b);

/// Natural magnitude of the ode1 terms, for scale-aware tolerances.
double ode1_scale(const MetricFamily& family, double s, double b);

/// Residual of
/// phi''' - (lambda + 3s/(b^2-s^2)) phi'' + s lambda/(b^2-s^2) phi'
///        - lambda/(b^2-s^2) phi.
/// The integral family with the same lambda annihilates it.
double ode2_residual(const MetricFamily& family, double s, double b,
                     double lambda);

double ode2_scale(const MetricFamily& family, double s, double b,
                  double lambda);

/// Cartan norms of the canonical model across several values of k = ||beta||,
/// with the spread reported against a pass tolerance. Both the 2-D scan norm
/// and the 3-D brute-force estimate are published: the theorem carries no
/// dimension restriction while its supporting machinery assumes n >= 3, so
/// the scan reports both rather than picking one.
struct BIndependenceScan {
  std::vector<double> k_values;
  std::vector<double> norms_2d;
  std::vector<double> norms_3d;
  double deviation_2d = 0.0;  // max - min over k
  double deviation_3d = 0.0;
  double tolerance = 0.0;
  bool pass_2d = false;
  bool pass_3d = false;
};

struct BIndependenceOptions {
  int theta_samples = 2048;
  double tolerance = 1e-4;
  int y_samples = 512;
  int u_samples = 96;
  std::uint64_t seed = 0;
};

BIndependenceScan b_independence_scan(const MetricFamily& family,
                                      std::span<const double> k_list,
                                      const BIndependenceOptions& opts = {});

}  // namespace finsler

#pragma once

#include <cstdint>

#include "finsler/metric.hpp"
#include "finsler/tensors.hpp"

namespace finsler {

/// Result of the dimension-3 brute-force estimate of the Cartan norm.
struct NdScan {
  double norm = 0.0;       // after local refinement
  double grid_norm = 0.0;  // best plain sample, before refinement
  Vec<3> y_argmax{};
  Vec<3> u_argmax{};
  int y_samples = 0;
  int u_samples = 0;
  std::uint64_t seed = 0;
};

/// Estimates sup over flags (y, u) of F |C(u,u,u)| / g(u,u)^{3/2}.
///
/// y runs over a deterministic golden-angle spiral on the sphere (prefix
/// points are independent of the total count, so enlarging y_samples never
/// loses a sample); for each y the supremum over u is attained on the
/// g-orthogonal circle of y, which is scanned with a uniform grid of
/// u_samples angles. The best sample seeds a shrinking-step ascent over the
/// sphere angles with a golden-section inner maximization over the circle.
/// The estimate is a lower bound converging to the supremum. The seed only
/// jitters the refinement start (seed 0 means no jitter).
NdScan cartan_norm_nd(const MetricModel& model, int y_samples, int u_samples,
                      std::uint64_t seed);

}  // namespace finsler

#pragma once

#include <array>
#include <cmath>

#include "finsler/jet.hpp"
#include "finsler/metric.hpp"

namespace finsler {

template <int N>
using Vec = std::array<double, N>;
template <int N>
using Mat = std::array<std::array<double, N>, N>;
template <int N>
using Cube = std::array<std::array<std::array<double, N>, N>, N>;

/// The flag data of one point-direction pair in the canonical model:
/// F, the fundamental tensor g and its inverse, the Cartan torsion C,
/// the mean Cartan torsion I, the angular metric h and the Matsumoto
/// torsion M. All from the order-3 jet of F^2:
///   g_ij = 1/2 d2 F^2,   C_ijk = 1/4 d3 F^2.
template <int N>
struct FlagTensors {
  Vec<N> y{};
  double F = 0.0;
  Mat<N> g{};
  Mat<N> g_inv{};
  Cube<N> C{};
  Vec<N> I{};
  Mat<N> h{};
  Cube<N> M{};
};

/// F(y) = alpha(y) phi(beta/alpha) with alpha = |y| and beta = k y^1.
double metric_value(const MetricModel& model, const double* y, int n);

template <int N>
double metric_value(const MetricModel& model, const Vec<N>& y) {
  return metric_value(model, y.data(), N);
}

template <int N>
FlagTensors<N> flag_tensors(const MetricModel& model, const Vec<N>& y);

struct FlagScalars {
  double C_uuu = 0.0;
  double g_uu = 0.0;
  double ratio = 0.0;  // F |C(u,u,u)| / g(u,u)^{3/2}
};

template <int N>
FlagScalars flag_scalars(const FlagTensors<N>& t, const Vec<N>& u) {
  double nrm = 0.0;
  for (int i = 0; i < N; ++i) nrm += u[i] * u[i];
  if (nrm == 0.0) throw InvalidInput("flag vector u must be nonzero");
  FlagScalars out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      out.g_uu += t.g[i][j] * u[i] * u[j];
      for (int k = 0; k < N; ++k) out.C_uuu += t.C[i][j][k] * u[i] * u[j] * u[k];
    }
  if (!(out.g_uu > 0.0))
    throw NonPositiveDefinite("g(u,u) non-positive along the flag vector");
  out.ratio = t.F * std::abs(out.C_uuu) / (out.g_uu * std::sqrt(out.g_uu));
  return out;
}

template <int N>
double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <int N>
double g_inner(const Mat<N>& g, const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) s += g[i][j] * a[i] * b[j];
  return s;
}

extern template FlagTensors<2> flag_tensors<2>(const MetricModel&, const Vec<2>&);
extern template FlagTensors<3> flag_tensors<3>(const MetricModel&, const Vec<3>&);

}  // namespace finsler

#include "finsler/tensors.hpp"

#include <string>

#include "finsler/errors.hpp"

namespace finsler {
namespace {

// Adjugate inverses with a relative determinant threshold; n <= 3 keeps the
// closed forms exact and dependency-free.
template <int N>
void invert_spd(const Mat<N>& g, Mat<N>& inv);

template <>
void invert_spd<2>(const Mat<2>& g, Mat<2>& inv) {
  double scale = 0.0;
  for (const auto& row : g)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (!(g[0][0] > 0.0) || !(det > 1e-12 * scale * scale))
    throw NonPositiveDefinite("fundamental tensor is not positive definite");
  inv[0][0] = g[1][1] / det;
  inv[1][1] = g[0][0] / det;
  inv[0][1] = inv[1][0] = -g[0][1] / det;
}

template <>
void invert_spd<3>(const Mat<3>& g, Mat<3>& inv) {
  double scale = 0.0;
  for (const auto& row : g)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double det2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const double det =
      g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
      g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
      g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (!(g[0][0] > 0.0) || !(det2 > 1e-12 * scale * scale) ||
      !(det > 1e-12 * scale * scale * scale))
    throw NonPositiveDefinite("fundamental tensor is not positive definite");
  inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  inv[1][0] = inv[0][1];
  inv[2][0] = inv[0][2];
  inv[2][1] = inv[1][2];
}

template <int N>
Jet<N> squared_metric_jet(const MetricModel& model, const Vec<N>& y) {
  std::array<Jet<N>, N> yj;
  for (int i = 0; i < N; ++i) yj[i] = Jet<N>::variable(i, y[i]);
  Jet<N> alpha2 = yj[0] * yj[0];
  for (int i = 1; i < N; ++i) alpha2 = alpha2 + yj[i] * yj[i];
  const Jet<N> alpha = sqrt(alpha2);
  const Jet<N> s = (model.k() * yj[0]) / alpha;
  const PhiDerivatives pd = model.phi(s.value);
  const Jet<N> phi = compose(s, pd.phi, pd.dphi, pd.d2phi, pd.d3phi);
  const Jet<N> F = alpha * phi;
  return F * F;
}

}  // namespace

double metric_value(const MetricModel& model, const double* y, int n) {
  if (n != model.n())
    throw InvalidInput("direction dimension " + std::to_string(n) +
                       " does not match the model dimension " +
                       std::to_string(model.n()));
  double a2 = 0.0;
  for (int i = 0; i < n; ++i) a2 += y[i] * y[i];
  if (a2 == 0.0) throw InvalidInput("direction y must be nonzero");
  const double alpha = std::sqrt(a2);
  const double s = model.k() * y[0] / alpha;
  return alpha * model.phi(s).phi;
}

template <int N>
FlagTensors<N> flag_tensors(const MetricModel& model, const Vec<N>& y) {
  if (model.n() != N)
    throw InvalidInput("flag_tensors dimension mismatch: model n = " +
                       std::to_string(model.n()));
  double a2 = 0.0;
  for (int i = 0; i < N; ++i) a2 += y[i] * y[i];
  if (a2 == 0.0) throw InvalidInput("direction y must be nonzero");

  const Jet<N> E = squared_metric_jet(model, y);  // jet of F^2

  FlagTensors<N> t;
  t.y = y;
  t.F = std::sqrt(std::max(E.value, 0.0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      t.g[i][j] = 0.5 * E.hess[i][j];
      for (int k = 0; k < N; ++k) t.C[i][j][k] = 0.25 * E.third[i][j][k];
    }
  invert_spd<N>(t.g, t.g_inv);

  for (int i = 0; i < N; ++i) {
    double acc = 0.0;
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) acc += t.g_inv[j][k] * t.C[i][j][k];
    t.I[i] = acc;
  }

  Vec<N> w{};  // covector g(y, .)
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) w[i] += t.g[i][j] * y[j];
  const double F2 = E.value;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) t.h[i][j] = t.g[i][j] - w[i] * w[j] / F2;

  const double inv_np1 = 1.0 / (N + 1.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        t.M[i][j][k] = t.C[i][j][k] -
                       inv_np1 * (t.I[i] * t.h[j][k] + t.I[j] * t.h[i][k] +
                                  t.I[k] * t.h[i][j]);
  return t;
}

template FlagTensors<2> flag_tensors<2>(const MetricModel&, const Vec<2>&);
template FlagTensors<3> flag_tensors<3>(const MetricModel&, const Vec<3>&);

}  // namespace finsler

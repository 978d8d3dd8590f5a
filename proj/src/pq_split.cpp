#include "finsler/pq_split.hpp"

#include <cmath>
#include <string>

#include "finsler/errors.hpp"

namespace finsler {
namespace {

constexpr double kDenomEps = 1e-12;

void check_denominator(double value, const char* which) {
  if (std::abs(value) < kDenomEps)
    throw SingularSplit(std::string("denominator '") + which +
                        "' is numerically zero (" + std::to_string(value) + ")");
}

}  // namespace

ABTerms compute_aA(const MetricFamily& family, double s, double b, int n) {
  if (n < 3) throw InvalidInput("the p/q split requires dimension n >= 3");
  const PhiDerivatives d = family.phi_derivatives(s, b);
  const double phi_minus = d.phi - s * d.dphi;
  const double reg = (b * b - s * s) * d.d2phi + phi_minus;
  check_denominator(phi_minus, "phi - s phi'");
  check_denominator(d.phi, "phi");
  check_denominator(reg, "(b^2-s^2) phi'' + phi - s phi'");

  ABTerms out;
  out.a = d.phi * phi_minus;
  out.A = (n - 2) * s * d.d2phi / phi_minus - (n + 1) * d.dphi / d.phi -
          ((b * b - s * s) * d.d3phi - 3.0 * s * d.d2phi) / reg;
  return out;
}

ABTerms compute_aA(const MetricModel& model, double s) {
  return compute_aA(model.family(), s, model.k(), model.n());
}

PQSplit compute_p(const MetricFamily& family, double s, double b, int n) {
  const ABTerms ab = compute_aA(family, s, b, n);
  const PhiDerivatives d = family.phi_derivatives(s, b);
  check_denominator(ab.a * ab.A, "a A");
  PQSplit out;
  out.s = s;
  out.b = b;
  out.n = n;
  out.a = ab.a;
  out.A = ab.A;
  out.p = (n + 1) / (ab.a * ab.A) *
          (s * (d.phi * d.d2phi + d.dphi * d.dphi) - d.phi * d.dphi);
  out.q = 1.0 - out.p;
  return out;
}

PQSplit compute_p(const MetricModel& model, double s) {
  return compute_p(model.family(), s, model.k(), model.n());
}

double norm_relation_factor(double p, double q, int n) {
  if (std::abs(p + q - 1.0) > 1e-9)
    throw InvalidInput("norm relation factor requires p + q = 1");
  const double radicand = (3.0 * p * p + 6.0 * p * q + (n + 1.0) * q * q) / (n + 1.0);
  if (!(radicand >= 0.0))
    throw DomainError("norm relation radicand is negative: " +
                      std::to_string(radicand));
  return std::sqrt(radicand);
}

double decomposition_residual_with_p(const FlagTensors<3>& t, double p, int n) {
  double norm_I2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) norm_I2 += t.g_inv[i][j] * t.I[i] * t.I[j];
  if (!(std::sqrt(std::max(norm_I2, 0.0)) > 1e-12))
    throw RiemannianFlag("mean Cartan torsion is numerically zero; the "
                         "decomposition is degenerate");
  const double q = 1.0 - p;
  double residual = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double rhs =
            p / (1.0 + n) *
                (t.h[i][j] * t.I[k] + t.h[j][k] * t.I[i] + t.h[k][i] * t.I[j]) +
            q / norm_I2 * t.I[i] * t.I[j] * t.I[k];
        residual = std::max(residual, std::abs(t.C[i][j][k] - rhs));
      }
  return residual;
}

double decomposition_residual(const MetricModel& model, const Vec<3>& y) {
  if (model.n() != 3)
    throw InvalidInput("decomposition residual is defined for n = 3");
  const FlagTensors<3> t = flag_tensors<3>(model, y);
  const double alpha = std::sqrt(dot<3>(y, y));
  const double s = model.k() * y[0] / alpha;
  const PQSplit split = compute_p(model, s);
  return decomposition_residual_with_p(t, split.p, model.n());
}

double c2like_residual(const MetricFamily& family, double s, double b) {
  const PhiDerivatives d = family.phi_derivatives(s, b);
  return s * (d.phi * d.d2phi + d.dphi * d.dphi) - d.phi * d.dphi;
}

}  // namespace finsler

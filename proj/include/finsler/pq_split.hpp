#pragma once

#include "finsler/metric.hpp"
#include "finsler/tensors.hpp"

namespace finsler {

/// The scalars of the semi-C-reducibility decomposition at one (s, b, n):
///   C_ijk = p/(n+1) {h_ij I_k + h_jk I_i + h_ki I_j} + q/||I||^2 I_i I_j I_k
/// with p + q = 1.
struct PQSplit {
  double s = 0.0;
  double b = 0.0;
  int n = 3;
  double a = 0.0;  // phi (phi - s phi')
  double A = 0.0;
  double p = 0.0;
  double q = 0.0;
};

struct ABTerms {
  double a = 0.0;
  double A = 0.0;
};

/// a = phi (phi - s phi') and
/// A = (n-2) s phi''/(phi - s phi') - (n+1) phi'/phi
///     - [(b^2-s^2) phi''' - 3 s phi''] / [(b^2-s^2) phi'' + phi - s phi'].
/// Throws SingularSplit naming the term whose denominator is within 1e-12
/// of zero. Requires n >= 3.
ABTerms compute_aA(const MetricFamily& family, double s, double b, int n);
ABTerms compute_aA(const MetricModel& model, double s);

/// p = (n+1)/(a A) [ s (phi phi'' + (phi')^2) - phi phi' ], q = 1 - p.
PQSplit compute_p(const MetricFamily& family, double s, double b, int n);
PQSplit compute_p(const MetricModel& model, double s);

/// sqrt((3 p^2 + 6 p q + (n+1) q^2) / (n+1)), the factor relating the
/// Cartan and mean Cartan norms. Requires p + q = 1.
double norm_relation_factor(double p, double q, int n);

/// Max-abs entry of C minus the decomposition right side, with p from
/// compute_p at s = beta/alpha and ||I||^2 = g^{ij} I_i I_j. Throws
/// RiemannianFlag when ||I|| is numerically zero.
double decomposition_residual(const MetricModel& model, const Vec<3>& y);

/// Same residual with an explicitly supplied p (used to test the
/// specialized formulas against the decomposition directly).
double decomposition_residual_with_p(const FlagTensors<3>& t, double p, int n);

/// Left side of s (phi phi'' + (phi')^2) - phi phi' = 0; zero characterizes
/// the C2-like case (p = 0).
double c2like_residual(const MetricFamily& family, double s, double b);

}  // namespace finsler

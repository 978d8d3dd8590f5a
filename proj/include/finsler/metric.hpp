#pragma once

#include <array>
#include <iosfwd>
#include <string>

namespace finsler {

/// phi and its first three derivatives at one value of s = beta/alpha.
struct PhiDerivatives {
  double phi = 0.0;
  double dphi = 0.0;
  double d2phi = 0.0;
  double d3phi = 0.0;
};

enum class FamilyKind {
  GeneralizedRanders,   // phi = sqrt(c1 + 2 c2 s + c3 s^2)
  QuadraticBeta,        // phi = c1 + c2 s + c3 s^2
  SqrtBIndependent,     // phi = d1 sqrt(b^2 - s^2)/b^2 + d2 s + d3
  IntegralBIndependent, // phi = c1 s + c2 R + c3 R * int_0^s e^{lambda t}/R(t)^3 dt
  GeneralizedKropina,   // phi = s^{-m}
  PowerRanders,         // phi = (1 + s)^m
};

/// A phi-family with its coefficients. phi defines the metric F = alpha *
/// phi(beta/alpha); the sqrt-type families also depend on b = ||beta||,
/// which is supplied per evaluation (the canonical model sets b = k).
class MetricFamily {
 public:
  static MetricFamily generalized_randers(double c1, double c2, double c3);
  static MetricFamily quadratic_beta(double c1, double c2, double c3);
  static MetricFamily sqrt_b_independent(double d1, double d2, double d3);
  /// The companion solution family with sqrt(s^2 - b^2) has an imaginary
  /// radical on |s| <= b; it cannot be instantiated over the reals and this
  /// constructor always throws UnsupportedFamily.
  static MetricFamily sqrt_b_independent_neg(double d1, double d2, double d3);
  static MetricFamily integral_b_independent(double c1, double c2, double c3,
                                             double lambda);
  static MetricFamily generalized_kropina(double m);
  static MetricFamily power_randers(double m);

  FamilyKind kind() const { return kind_; }
  /// Coefficient i of the family (c1..c3 or d1..d3), zero-based.
  double coef(int i) const { return coef_.at(static_cast<std::size_t>(i)); }
  double lambda() const { return lambda_; }
  double exponent() const { return m_; }
  /// Relative margin kept from the singular endpoints |s| = b.
  double endpoint_margin() const { return endpoint_margin_; }
  void set_endpoint_margin(double eps) { endpoint_margin_ = eps; }

  /// CLI/spec-file spelling: "gen-randers", "quadratic-beta", ...
  std::string name() const;

  /// phi(s) and its first three derivatives, all in closed form; only the
  /// antiderivative term of the integral family is computed by quadrature.
  PhiDerivatives phi_derivatives(double s, double b) const;

  /// Working s-interval [lo, hi] inside [-b, b]. Polynomial-type families
  /// use the full interval; sqrt-type families stop endpoint_margin() short
  /// of the |s| = b singularities; the Kropina family lives on s > 0.
  std::array<double, 2> s_interval(double b) const;

  /// True for families containing sqrt(b^2 - s^2), which need b > 0.
  bool requires_positive_b() const;

  /// True when the paper's printed frame / xi closed forms apply.
  bool has_closed_forms() const;

 private:
  MetricFamily() = default;
  FamilyKind kind_ = FamilyKind::GeneralizedRanders;
  std::array<double, 3> coef_{};
  double lambda_ = 0.0;
  double m_ = 0.0;
  double endpoint_margin_ = 1e-3;
};

/// How to treat the k = 1 endpoint at model construction.
enum class UnitNormPolicy {
  automatic,  // allow only where the positivity argument covers k = 1
  allow,
  forbid,
};

/// A family placed in the canonical flat model: a_ij = delta_ij and
/// b_i = (k, 0, ..., 0), so alpha = |y|, beta = k y^1 and ||beta|| = k.
class MetricModel {
 public:
  MetricModel(MetricFamily family, double k, int n,
              UnitNormPolicy policy = UnitNormPolicy::automatic);

  const MetricFamily& family() const { return family_; }
  double k() const { return k_; }
  int n() const { return n_; }

  PhiDerivatives phi(double s) const {
    return family_.phi_derivatives(s, k_);
  }

  /// Same family and k in the other supported dimension.
  MetricModel with_dimension(int n) const;

 private:
  MetricFamily family_;
  double k_ = 0.0;
  int n_ = 2;
};

struct HypothesisReport {
  bool holds = false;
  // Positive slack means the inequality is satisfied strictly.
  double slack1 = 0.0;
  double slack2 = 0.0;
  std::string detail;
};

/// Theorem 1 sufficient condition for the generalized Randers family:
/// c2^2 < c1 c3 and c1^2 > |c2 (3 c1 + c3)|.
HypothesisReport theorem1_hypothesis(double c1, double c2, double c3);

/// Theorem 2 sufficient condition for the quadratic-beta family:
/// c2^2 < 4 c1 c3 and |c1| > |c3|.
HypothesisReport theorem2_hypothesis(double c1, double c2, double c3);

struct AdmissibilityReport {
  double min_phi = 0.0;
  double min_phi_minus = 0.0;  // phi - s phi'
  double min_regularity = 0.0; // phi - s phi' + (b^2 - s^2) phi''
  double argmin_phi = 0.0;
  double argmin_phi_minus = 0.0;
  double argmin_regularity = 0.0;
  int samples = 0;
  bool admissible = false;
};

/// Scans the regularity triple over the family's working s-interval.
/// The model is admissible iff all three minima are strictly positive.
AdmissibilityReport admissibility_report(const MetricModel& model, int samples);

/// Parses the metric-spec text format: one `key = value` per line, `#`
/// comments, keys family, c1..c3, d1..d3, lambda, m, k, n. Unknown keys and
/// malformed values raise InvalidInput.
MetricModel parse_metric_spec(std::istream& in);
MetricModel parse_metric_spec_file(const std::string& path);

}  // namespace finsler

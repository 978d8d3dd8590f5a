#include "finsler/metric.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "finsler/errors.hpp"
#include "finsler/integral_family.hpp"

namespace finsler {

MetricFamily MetricFamily::generalized_randers(double c1, double c2, double c3) {
  MetricFamily f;
  f.kind_ = FamilyKind::GeneralizedRanders;
  f.coef_ = {c1, c2, c3};
  return f;
}

MetricFamily MetricFamily::quadratic_beta(double c1, double c2, double c3) {
  MetricFamily f;
  f.kind_ = FamilyKind::QuadraticBeta;
  f.coef_ = {c1, c2, c3};
  return f;
}

MetricFamily MetricFamily::sqrt_b_independent(double d1, double d2, double d3) {
  MetricFamily f;
  f.kind_ = FamilyKind::SqrtBIndependent;
  f.coef_ = {d1, d2, d3};
  return f;
}

MetricFamily MetricFamily::sqrt_b_independent_neg(double d1, double, double) {
  if (d1 == 0.0)
    throw UnsupportedFamily(
        "the sqrt(s^2-b^2) family with d1 = 0 is linear; use sqrt-bindep");
  throw UnsupportedFamily(
      "the sqrt(s^2-b^2) solution family has an imaginary radical on its "
      "natural domain |s| <= b and cannot be instantiated over the reals");
}

MetricFamily MetricFamily::integral_b_independent(double c1, double c2,
                                                  double c3, double lambda) {
  MetricFamily f;
  f.kind_ = FamilyKind::IntegralBIndependent;
  f.coef_ = {c1, c2, c3};
  f.lambda_ = lambda;
  return f;
}

MetricFamily MetricFamily::generalized_kropina(double m) {
  if (m == 0.0) throw InvalidInput("generalized Kropina exponent m must be nonzero");
  MetricFamily f;
  f.kind_ = FamilyKind::GeneralizedKropina;
  f.m_ = m;
  return f;
}

MetricFamily MetricFamily::power_randers(double m) {
  MetricFamily f;
  f.kind_ = FamilyKind::PowerRanders;
  f.m_ = m;
  return f;
}

std::string MetricFamily::name() const {
  switch (kind_) {
    case FamilyKind::GeneralizedRanders: return "gen-randers";
    case FamilyKind::QuadraticBeta: return "quadratic-beta";
    case FamilyKind::SqrtBIndependent: return "sqrt-bindep";
    case FamilyKind::IntegralBIndependent: return "integral-bindep";
    case FamilyKind::GeneralizedKropina: return "gen-kropina";
    case FamilyKind::PowerRanders: return "power-randers";
  }
  return "?";
}

PhiDerivatives MetricFamily::phi_derivatives(double s, double b) const {
  PhiDerivatives out;
  switch (kind_) {
    case FamilyKind::GeneralizedRanders: {
      const double c1 = coef_[0], c2 = coef_[1], c3 = coef_[2];
      const double q = c1 + 2.0 * c2 * s + c3 * s * s;
      if (!(q > 0.0))
        throw DomainError("generalized Randers radicand non-positive at s = " +
                          std::to_string(s));
      const double phi = std::sqrt(q);
      const double disc = c1 * c3 - c2 * c2;
      out.phi = phi;
      out.dphi = (c2 + c3 * s) / phi;
      out.d2phi = disc / (q * phi);
      out.d3phi = -3.0 * disc * (c2 + c3 * s) / (q * q * phi);
      return out;
    }
    case FamilyKind::QuadraticBeta: {
      const double c1 = coef_[0], c2 = coef_[1], c3 = coef_[2];
      out.phi = c1 + c2 * s + c3 * s * s;
      out.dphi = c2 + 2.0 * c3 * s;
      out.d2phi = 2.0 * c3;
      out.d3phi = 0.0;
      return out;
    }
    case FamilyKind::SqrtBIndependent: {
      if (!(b > 0.0)) throw DomainError("sqrt-type family needs b > 0");
      if (std::abs(s) > b * (1.0 - endpoint_margin_))
        throw DomainError("s = " + std::to_string(s) +
                          " outside the working interval |s| <= b(1-eps), b = " +
                          std::to_string(b));
      const double d1 = coef_[0], d2 = coef_[1], d3 = coef_[2];
      const double r2 = b * b - s * s;
      const double R = std::sqrt(r2);
      const double ib2 = 1.0 / (b * b);
      out.phi = d1 * R * ib2 + d2 * s + d3;
      out.dphi = -d1 * s / R * ib2 + d2;
      out.d2phi = -d1 * b * b / (r2 * R) * ib2;
      out.d3phi = -3.0 * d1 * b * b * s / (r2 * r2 * R) * ib2;
      return out;
    }
    case FamilyKind::IntegralBIndependent:
      return integral_phi_eval(coef_[0], coef_[1], coef_[2], lambda_, b, s,
                               endpoint_margin_);
    case FamilyKind::GeneralizedKropina: {
      if (!(s > 0.0))
        throw DomainError("generalized Kropina needs s > 0, got s = " +
                          std::to_string(s));
      const double m = m_;
      const double p = std::pow(s, -m);
      out.phi = p;
      out.dphi = -m * p / s;
      out.d2phi = m * (m + 1.0) * p / (s * s);
      out.d3phi = -m * (m + 1.0) * (m + 2.0) * p / (s * s * s);
      return out;
    }
    case FamilyKind::PowerRanders: {
      if (!(1.0 + s > 0.0))
        throw DomainError("power Randers needs 1 + s > 0, got s = " +
                          std::to_string(s));
      const double m = m_;
      const double u = 1.0 + s;
      const double p = std::pow(u, m);
      out.phi = p;
      out.dphi = m * p / u;
      out.d2phi = m * (m - 1.0) * p / (u * u);
      out.d3phi = m * (m - 1.0) * (m - 2.0) * p / (u * u * u);
      return out;
    }
  }
  throw InvalidInput("unknown family kind");
}

std::array<double, 2> MetricFamily::s_interval(double b) const {
  switch (kind_) {
    case FamilyKind::SqrtBIndependent:
    case FamilyKind::IntegralBIndependent: {
      const double hi = b * (1.0 - endpoint_margin_);
      return {-hi, hi};
    }
    case FamilyKind::GeneralizedKropina:
      return {b * 1e-3, b};
    default:
      return {-b, b};
  }
}

bool MetricFamily::requires_positive_b() const {
  return kind_ == FamilyKind::SqrtBIndependent ||
         kind_ == FamilyKind::IntegralBIndependent;
}

bool MetricFamily::has_closed_forms() const {
  return kind_ == FamilyKind::GeneralizedRanders ||
         kind_ == FamilyKind::QuadraticBeta;
}

MetricModel::MetricModel(MetricFamily family, double k, int n,
                         UnitNormPolicy policy)
    : family_(std::move(family)), k_(k), n_(n) {
  if (n != 2 && n != 3)
    throw InvalidInput("dimension n must be 2 or 3, got " + std::to_string(n));
  if (!(k >= 0.0 && k <= 1.0))
    throw InvalidInput("k must lie in [0, 1], got " + std::to_string(k));
  if (family_.requires_positive_b() && !(k > 0.0))
    throw InvalidInput("sqrt-type families need k > 0");

  // Families that degenerate at ||beta|| = 1 are capped at 1 - 1e-3; the
  // generalized Randers family under the Theorem 1 inequalities stays
  // regular on the closed interval, so k = 1 is allowed there.
  bool unit_ok = false;
  switch (policy) {
    case UnitNormPolicy::allow: unit_ok = true; break;
    case UnitNormPolicy::forbid: unit_ok = false; break;
    case UnitNormPolicy::automatic:
      unit_ok = family_.kind() == FamilyKind::GeneralizedRanders &&
                theorem1_hypothesis(family_.coef(0), family_.coef(1),
                                    family_.coef(2)).holds;
      break;
  }
  const double cap = unit_ok ? 1.0 : 1.0 - 1e-3;
  if (k > cap)
    throw InvalidInput("k = " + std::to_string(k) +
                       " exceeds the admissible cap " + std::to_string(cap) +
                       " for this family");
}

MetricModel MetricModel::with_dimension(int n) const {
  MetricModel m = *this;
  if (n != 2 && n != 3) throw InvalidInput("dimension n must be 2 or 3");
  m.n_ = n;
  return m;
}

HypothesisReport theorem1_hypothesis(double c1, double c2, double c3) {
  HypothesisReport r;
  r.slack1 = c1 * c3 - c2 * c2;
  r.slack2 = c1 * c1 - std::abs(c2 * (3.0 * c1 + c3));
  r.holds = r.slack1 > 0.0 && r.slack2 > 0.0;
  std::ostringstream os;
  os << "c2^2 < c1*c3: " << c2 * c2 << (r.slack1 > 0.0 ? " < " : " !< ")
     << c1 * c3 << "; c1^2 > |c2(3c1+c3)|: " << c1 * c1
     << (r.slack2 > 0.0 ? " > " : " !> ") << std::abs(c2 * (3.0 * c1 + c3));
  r.detail = os.str();
  return r;
}

HypothesisReport theorem2_hypothesis(double c1, double c2, double c3) {
  HypothesisReport r;
  r.slack1 = 4.0 * c1 * c3 - c2 * c2;
  r.slack2 = std::abs(c1) - std::abs(c3);
  r.holds = r.slack1 > 0.0 && r.slack2 > 0.0;
  std::ostringstream os;
  os << "c2^2 < 4*c1*c3: " << c2 * c2 << (r.slack1 > 0.0 ? " < " : " !< ")
     << 4.0 * c1 * c3 << "; |c1| > |c3|: " << std::abs(c1)
     << (r.slack2 > 0.0 ? " > " : " !> ") << std::abs(c3);
  r.detail = os.str();
  return r;
}

AdmissibilityReport admissibility_report(const MetricModel& model,
                                         int samples) {
  if (samples < 2) throw InvalidInput("admissibility scan needs >= 2 samples");
  const auto [lo, hi] = model.family().s_interval(model.k());
  AdmissibilityReport rep;
  rep.samples = samples;
  rep.min_phi = rep.min_phi_minus = rep.min_regularity =
      std::numeric_limits<double>::infinity();
  const double b = model.k();
  for (int i = 0; i < samples; ++i) {
    const double s = lo + (hi - lo) * i / (samples - 1);
    const PhiDerivatives d = model.phi(s);
    const double pm = d.phi - s * d.dphi;
    const double reg = pm + (b * b - s * s) * d.d2phi;
    if (d.phi < rep.min_phi) { rep.min_phi = d.phi; rep.argmin_phi = s; }
    if (pm < rep.min_phi_minus) { rep.min_phi_minus = pm; rep.argmin_phi_minus = s; }
    if (reg < rep.min_regularity) { rep.min_regularity = reg; rep.argmin_regularity = s; }
  }
  rep.admissible = rep.min_phi > 0.0 && rep.min_phi_minus > 0.0 &&
                   rep.min_regularity > 0.0;
  return rep;
}

namespace {

double parse_number(const std::string& key, const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("bad numeric value '" + text + "' for key " + key);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos != text.size())
    throw InvalidInput("trailing characters in value '" + text + "' for key " + key);
  return v;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

}  // namespace

MetricModel parse_metric_spec(std::istream& in) {
  std::map<std::string, double> num;
  std::string family;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("line " + std::to_string(lineno) +
                         ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "family") {
      family = value;
    } else if (key == "c1" || key == "c2" || key == "c3" || key == "d1" ||
               key == "d2" || key == "d3" || key == "lambda" || key == "m" ||
               key == "k" || key == "n") {
      if (num.count(key))
        throw InvalidInput("duplicate key '" + key + "' at line " +
                           std::to_string(lineno));
      num[key] = parse_number(key, value);
    } else {
      throw InvalidInput("unknown key '" + key + "' at line " +
                         std::to_string(lineno));
    }
  }
  if (family.empty()) throw InvalidInput("metric spec is missing 'family'");
  if (!num.count("k")) throw InvalidInput("metric spec is missing 'k'");

  const auto get = [&](const char* key, double fallback) {
    auto it = num.find(key);
    return it == num.end() ? fallback : it->second;
  };

  MetricFamily fam = [&] {
    if (family == "gen-randers")
      return MetricFamily::generalized_randers(get("c1", 1.0), get("c2", 0.0),
                                               get("c3", 1.0));
    if (family == "quadratic-beta")
      return MetricFamily::quadratic_beta(get("c1", 1.0), get("c2", 0.0),
                                          get("c3", 0.0));
    if (family == "sqrt-bindep")
      return MetricFamily::sqrt_b_independent(get("d1", 0.0), get("d2", 1.0),
                                              get("d3", 1.0));
    if (family == "sqrt-bindep-neg")
      return MetricFamily::sqrt_b_independent_neg(get("d1", 0.0), get("d2", 1.0),
                                                  get("d3", 1.0));
    if (family == "integral-bindep")
      return MetricFamily::integral_b_independent(
          get("c1", 0.0), get("c2", 1.0), get("c3", 0.0), get("lambda", 0.0));
    if (family == "gen-kropina")
      return MetricFamily::generalized_kropina(get("m", 1.0));
    if (family == "power-randers")
      return MetricFamily::power_randers(get("m", 2.0));
    throw InvalidInput("unknown family '" + family + "'");
  }();

  const int n = static_cast<int>(get("n", 3.0));
  return MetricModel(fam, num.at("k"), n);
}

MetricModel parse_metric_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open metric spec file '" + path + "'");
  return parse_metric_spec(in);
}

}  // namespace finsler

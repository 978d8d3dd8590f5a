#include "finsler/frame2d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "finsler/errors.hpp"

namespace finsler {
namespace {

void require_2d(const MetricModel& model) {
  if (model.n() != 2)
    throw InvalidInput("Berwald frame operations need a 2-dimensional model");
}

double sqr(double x) { return x * x; }

}  // namespace

Frame2D berwald_perp(const MetricModel& model, double theta) {
  require_2d(model);
  Frame2D fr;
  fr.theta = theta;
  fr.y = {std::cos(theta), std::sin(theta)};
  fr.tensors = flag_tensors<2>(model, fr.y);
  const Mat<2>& g = fr.tensors.g;
  const Vec<2> w = {g[0][0] * fr.y[0] + g[0][1] * fr.y[1],
                    g[1][0] * fr.y[0] + g[1][1] * fr.y[1]};
  // yp = (-w_2, w_1) solves g(y, yp) = 0 with det[y, yp] = g(y, y) > 0.
  const Vec<2> yp = {-w[1], w[0]};
  const double nyp = g_inner<2>(g, yp, yp);
  const double F2 = sqr(fr.tensors.F);
  if (!(nyp > 0.0) || !(F2 > 0.0))
    throw DegenerateFrame("frame normalization radicand non-positive at theta = " +
                          std::to_string(theta));
  const double lam = std::sqrt(F2 / nyp);
  fr.y_perp = {yp[0] * lam, yp[1] * lam};
  return fr;
}

double xi_numeric(const MetricModel& model, double theta) {
  const Frame2D fr = berwald_perp(model, theta);
  return flag_scalars<2>(fr.tensors, fr.y_perp).ratio;
}

Vec<2> closed_form_perp(const MetricModel& model, double theta) {
  require_2d(model);
  const MetricFamily& fam = model.family();
  const double k = model.k();
  const double x = std::cos(theta), sn = std::sin(theta);
  const double c1 = fam.coef(0), c2 = fam.coef(1), c3 = fam.coef(2);
  switch (fam.kind()) {
    case FamilyKind::GeneralizedRanders: {
      const double f = fg_polynomials(fam, k, x).f;
      if (!(f > 0.0))
        throw DegenerateFrame("closed-form frame denominator f <= 0");
      const double den = std::sqrt(f);
      return {-sn * (c2 * k * x + c1) / den,
              (c3 * k * k * x + c2 * k + c1 * x + c2 * k * x * x) / den};
    }
    case FamilyKind::QuadraticBeta: {
      const FgValues v = fg_polynomials(fam, k, x);
      const double rad = -v.f1 * v.f2;
      if (!(rad > 0.0))
        throw DegenerateFrame("closed-form frame radicand -f1*f2 <= 0");
      const double den = std::sqrt(rad);
      return {-sn * (c1 - c3 * k * k * x * x) / den,
              (c1 * x + k * c2 + 2.0 * c3 * k * k * x - c3 * k * k * x * x * x) /
                  den};
    }
    default:
      throw UnsupportedFamily("printed frame closed form exists only for the "
                              "generalized Randers and quadratic-beta families");
  }
}

double closed_form_xi(const MetricModel& model, double theta) {
  require_2d(model);
  const MetricFamily& fam = model.family();
  const double k = model.k();
  const double x = std::cos(theta), sn = std::sin(theta);
  const double c1 = fam.coef(0), c2 = fam.coef(1), c3 = fam.coef(2);
  switch (fam.kind()) {
    case FamilyKind::GeneralizedRanders: {
      const double f = fg_polynomials(fam, k, x).f;
      if (!(f > 0.0)) throw DegenerateFrame("closed-form xi denominator f <= 0");
      const double num = c2 * k * sn * sqr(c1 + 2.0 * c2 * k * x + c3 * k * k * x * x);
      return 1.5 * std::abs(num / (f * std::sqrt(f)));
    }
    case FamilyKind::QuadraticBeta: {
      const FgValues v = fg_polynomials(fam, k, x);
      const double rad = -v.f1 * v.f2;
      if (!(rad > 0.0) || v.f1 == 0.0)
        throw DegenerateFrame("closed-form xi radicand -f1*f2 <= 0");
      const double k2 = k * k, k3 = k * k * k;
      const double num = -c1 * c2 - 4.0 * k3 * c3 * c3 * x +
                         8.0 * c3 * c3 * k3 * x * x * x - 2.0 * k2 * c2 * c3 +
                         5.0 * c2 * c3 * k2 * x * x;
      return 1.5 * std::abs(k * sn * num / (v.f1 * std::sqrt(rad)));
    }
    default:
      throw UnsupportedFamily("printed xi closed form exists only for the "
                              "generalized Randers and quadratic-beta families");
  }
}

FgValues fg_polynomials(const MetricFamily& family, double k, double x) {
  FgValues out;
  const double c1 = family.coef(0), c2 = family.coef(1), c3 = family.coef(2);
  const double k2 = k * k, k3 = k * k * k;
  const double root = std::sqrt(std::max(1.0 - x * x, 0.0));
  switch (family.kind()) {
    case FamilyKind::GeneralizedRanders: {
      out.f = c1 * c3 * k2 + c2 * c3 * k3 * x * x * x + 3.0 * c2 * c2 * k2 * x * x +
              3.0 * c1 * c2 * k * x - c2 * c2 * k2 + c1 * c1;
      if (out.f > 0.0) {
        out.g = 1.5 * c2 * k * root * sqr(c1 + 2.0 * c2 * k * x + c3 * k2 * x * x) /
                (out.f * std::sqrt(out.f));
        out.g_defined = true;
      }
      return out;
    }
    case FamilyKind::QuadraticBeta: {
      out.f1 = 3.0 * c3 * k2 * x * x - 2.0 * c3 * k2 - c1;
      out.f2 = c1 + c2 * k * x + c3 * k2 * x * x;
      const double rad = -out.f1 * out.f2;
      if (rad > 0.0 && out.f1 != 0.0) {
        const double num = -c1 * c2 - 4.0 * k3 * c3 * c3 * x +
                           8.0 * c3 * c3 * k3 * x * x * x - 2.0 * k2 * c2 * c3 +
                           5.0 * c2 * c3 * k2 * x * x;
        out.g = 1.5 * k * root * num / (out.f1 * std::sqrt(rad));
        out.g_defined = true;
      }
      return out;
    }
    default:
      throw UnsupportedFamily(
          "f/g polynomials are defined for the theorem families only");
  }
}

namespace {

// Shrinking-box refinement of a scalar function of (k, x) around a grid
// minimizer, staying inside [0,1] x [-1,1].
void refine_min(const std::function<double(double, double)>& f, double& best,
                double& bk, double& bx, double dk, double dx) {
  for (int round = 0; round < 6; ++round) {
    double lk = std::max(0.0, bk - dk), hk = std::min(1.0, bk + dk);
    double lx = std::max(-1.0, bx - dx), hx = std::min(1.0, bx + dx);
    const int m = 16;
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        const double kk = lk + (hk - lk) * i / m;
        const double xx = lx + (hx - lx) * j / m;
        const double v = f(kk, xx);
        if (v < best) { best = v; bk = kk; bx = xx; }
      }
    dk /= 8.0;
    dx /= 8.0;
  }
}

}  // namespace

PositivityScan positivity_scan(const MetricFamily& family, int grid_k,
                               int grid_x) {
  if (grid_k < 2 || grid_x < 2)
    throw InvalidInput("positivity scan needs at least a 2 x 2 grid");
  PositivityScan out;
  const bool is_gr = family.kind() == FamilyKind::GeneralizedRanders;

  double f_min = std::numeric_limits<double>::infinity();
  double f1_min_abs = std::numeric_limits<double>::infinity();
  double f2_min_abs = std::numeric_limits<double>::infinity();
  int f1_sign = 0, f2_sign = 0;
  bool f1_const = true, f2_const = true;
  double bk = 0.0, bx = 0.0;

  for (int i = 0; i < grid_k; ++i) {
    const double k = static_cast<double>(i) / (grid_k - 1);
    for (int j = 0; j < grid_x; ++j) {
      const double x = -1.0 + 2.0 * static_cast<double>(j) / (grid_x - 1);
      const FgValues v = fg_polynomials(family, k, x);
      if (is_gr) {
        if (v.f < f_min) { f_min = v.f; bk = k; bx = x; }
      } else {
        const int s1 = v.f1 > 0.0 ? 1 : (v.f1 < 0.0 ? -1 : 0);
        const int s2 = v.f2 > 0.0 ? 1 : (v.f2 < 0.0 ? -1 : 0);
        if (f1_sign == 0) f1_sign = s1;
        else if (s1 != 0 && s1 != f1_sign) f1_const = false;
        if (s1 == 0) f1_const = false;
        if (f2_sign == 0) f2_sign = s2;
        else if (s2 != 0 && s2 != f2_sign) f2_const = false;
        if (s2 == 0) f2_const = false;
        f1_min_abs = std::min(f1_min_abs, std::abs(v.f1));
        f2_min_abs = std::min(f2_min_abs, std::abs(v.f2));
      }
    }
  }

  if (is_gr) {
    refine_min([&](double k, double x) { return fg_polynomials(family, k, x).f; },
               f_min, bk, bx, 1.0 / (grid_k - 1), 2.0 / (grid_x - 1));
    out.f_min = f_min;
    out.f_argmin_k = bk;
    out.f_argmin_x = bx;
  } else {
    double dummy_k = 0.0, dummy_x = 0.0;
    refine_min(
        [&](double k, double x) { return std::abs(fg_polynomials(family, k, x).f1); },
        f1_min_abs, dummy_k, dummy_x, 1.0 / (grid_k - 1), 2.0 / (grid_x - 1));
    refine_min(
        [&](double k, double x) { return std::abs(fg_polynomials(family, k, x).f2); },
        f2_min_abs, dummy_k, dummy_x, 1.0 / (grid_k - 1), 2.0 / (grid_x - 1));
    out.f1_min_abs = f1_min_abs;
    out.f1_sign = f1_sign;
    out.f1_sign_constant = f1_const && f1_min_abs > 0.0;
    out.f2_min_abs = f2_min_abs;
    out.f2_sign = f2_sign;
    out.f2_sign_constant = f2_const && f2_min_abs > 0.0;
  }
  return out;
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol, double* arg) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (arg) *arg = mid;
  return std::max(fm, std::max(fc, fd));
}

FrameScan cartan_norm_2d(const MetricModel& model, int theta_samples,
                         XiMethod method) {
  require_2d(model);
  if (theta_samples < 64)
    throw InvalidInput("theta_samples must be at least 64");

  const auto eval = [&](double theta) {
    return method == XiMethod::jet ? xi_numeric(model, theta)
                                   : closed_form_xi(model, theta);
  };

  // Clip [0, pi] to the family's working cone: s = k cos(theta).
  const double k = model.k();
  double theta_lo = 0.0, theta_hi = std::numbers::pi;
  if (k > 0.0) {
    const auto [s_lo, s_hi] = model.family().s_interval(k);
    theta_lo = std::acos(std::clamp(s_hi / k, -1.0, 1.0));
    theta_hi = std::acos(std::clamp(s_lo / k, -1.0, 1.0));
  }

  FrameScan scan;
  scan.method = method;
  scan.theta_grid.reserve(theta_samples);
  scan.xi_values.reserve(theta_samples);
  int argmax = 0;
  for (int i = 0; i < theta_samples; ++i) {
    const double theta =
        theta_lo + (theta_hi - theta_lo) * i / (theta_samples - 1);
    double v;
    try {
      v = eval(theta);
    } catch (const DegenerateFrame& e) {
      throw DegenerateFrame(std::string(e.what()) + " (scan aborted at theta = " +
                            std::to_string(theta) + ")");
    }
    scan.theta_grid.push_back(theta);
    scan.xi_values.push_back(v);
    if (v > scan.xi_values[argmax]) argmax = i;
  }
  scan.grid_max = scan.xi_values[argmax];
  scan.theta_argmax = scan.theta_grid[argmax];

  const double step = (theta_hi - theta_lo) / (theta_samples - 1);
  const double lo = std::max(theta_lo, scan.theta_argmax - step);
  const double hi = std::min(theta_hi, scan.theta_argmax + step);
  double arg = scan.theta_argmax;
  const double refined = golden_section_max(eval, lo, hi, 1e-10, &arg);
  scan.norm = std::max(scan.grid_max, refined);
  if (refined >= scan.grid_max) scan.theta_argmax = arg;
  return scan;
}

}  // namespace finsler

#include "finsler/bruteforce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "finsler/errors.hpp"
#include "finsler/frame2d.hpp"

namespace finsler {
namespace {

constexpr double kPi = std::numbers::pi;

// Van der Corput radical inverse in base 2.
double vdc(std::uint32_t i) {
  i = (i << 16) | (i >> 16);
  i = ((i & 0x00ff00ffu) << 8) | ((i & 0xff00ff00u) >> 8);
  i = ((i & 0x0f0f0f0fu) << 4) | ((i & 0xf0f0f0f0u) >> 4);
  i = ((i & 0x33333333u) << 2) | ((i & 0xccccccccu) >> 2);
  i = ((i & 0x55555555u) << 1) | ((i & 0xaaaaaaaau) >> 1);
  return static_cast<double>(i) * 0x1p-32;
}

Vec<3> sphere_point(double polar, double azimuth) {
  return {std::cos(polar), std::sin(polar) * std::cos(azimuth),
          std::sin(polar) * std::sin(azimuth)};
}

// i-th point of the golden-angle spiral; independent of the sample count.
Vec<3> spiral_point(int i) {
  const double z = 1.0 - 2.0 * vdc(static_cast<std::uint32_t>(i + 1));
  const double polar = std::acos(std::clamp(z, -1.0, 1.0));
  constexpr double golden = 0.6180339887498949;  // (sqrt 5 - 1)/2
  const double azimuth = 2.0 * kPi * std::fmod((i + 1) * golden, 1.0);
  return sphere_point(polar, azimuth);
}

struct CircleBasis {
  Vec<3> e1, e2;
};

// g-orthonormal basis of the g-orthogonal complement of y. The supremum over
// u at fixed y is attained there: C(.,.,y) = 0 kills the y-component of u in
// the numerator while g(u,u) only grows with it.
CircleBasis orthogonal_circle(const FlagTensors<3>& t) {
  // Start from the two coordinate axes least aligned with y.
  int skip = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(t.y[i]) > std::abs(t.y[skip])) skip = i;
  Vec<3> v1{}, v2{};
  v1[(skip + 1) % 3] = 1.0;
  v2[(skip + 2) % 3] = 1.0;
  const double F2 = t.F * t.F;

  const auto project = [&](Vec<3> v, const Vec<3>* against) {
    const double cy = g_inner<3>(t.g, v, t.y) / F2;
    for (int i = 0; i < 3; ++i) v[i] -= cy * t.y[i];
    if (against) {
      const double ca = g_inner<3>(t.g, v, *against);
      for (int i = 0; i < 3; ++i) v[i] -= ca * (*against)[i];
    }
    const double len2 = g_inner<3>(t.g, v, v);
    if (!(len2 > 0.0))
      throw NonPositiveDefinite("degenerate g-orthogonal circle basis");
    const double inv = 1.0 / std::sqrt(len2);
    for (int i = 0; i < 3; ++i) v[i] *= inv;
    return v;
  };

  CircleBasis basis;
  basis.e1 = project(v1, nullptr);
  basis.e2 = project(v2, &basis.e1);
  return basis;
}

double ratio_at(const FlagTensors<3>& t, const CircleBasis& basis, double psi) {
  Vec<3> u;
  const double c = std::cos(psi), s = std::sin(psi);
  for (int i = 0; i < 3; ++i) u[i] = c * basis.e1[i] + s * basis.e2[i];
  return flag_scalars<3>(t, u).ratio;
}

// Max of the ratio over the g-orthogonal circle: coarse grid (period pi)
// plus golden-section polish around the best cell.
double circle_max(const FlagTensors<3>& t, int u_samples, double* best_psi) {
  const CircleBasis basis = orthogonal_circle(t);
  double best = -1.0;
  double arg = 0.0;
  for (int j = 0; j < u_samples; ++j) {
    const double psi = kPi * j / u_samples;
    const double v = ratio_at(t, basis, psi);
    if (v > best) { best = v; arg = psi; }
  }
  const double step = kPi / u_samples;
  double refined_arg = arg;
  const double refined =
      golden_section_max([&](double psi) { return ratio_at(t, basis, psi); },
                         arg - step, arg + step, 1e-9, &refined_arg);
  if (refined > best) { best = refined; arg = refined_arg; }
  if (best_psi) *best_psi = arg;
  return best;
}

// s = k cos(polar) must stay inside the family's working interval.
bool direction_admissible(const MetricModel& model, const Vec<3>& y) {
  const double alpha = std::sqrt(dot<3>(y, y));
  const double s = model.k() * y[0] / alpha;
  const auto [lo, hi] = model.family().s_interval(model.k());
  return s >= lo && s <= hi;
}

}  // namespace

NdScan cartan_norm_nd(const MetricModel& model, int y_samples, int u_samples,
                      std::uint64_t seed) {
  if (model.n() != 3)
    throw InvalidInput("the brute-force oracle runs in dimension 3");
  if (y_samples < 1 || u_samples < 4)
    throw InvalidInput("need y_samples >= 1 and u_samples >= 4");

  NdScan out;
  out.y_samples = y_samples;
  out.u_samples = u_samples;
  out.seed = seed;

  double best = -1.0;
  Vec<3> best_y{1.0, 0.0, 0.0};
  double best_psi = 0.0;
  int evaluated = 0;
  for (int i = 0; i < y_samples; ++i) {
    const Vec<3> y = spiral_point(i);
    if (!direction_admissible(model, y)) continue;
    const FlagTensors<3> t = flag_tensors<3>(model, y);
    double psi = 0.0;
    const double v = circle_max(t, u_samples, &psi);
    ++evaluated;
    if (v > best) { best = v; best_y = y; best_psi = psi; }
  }
  if (evaluated == 0)
    throw DomainError("no sample direction lies in the family's working cone");
  out.grid_norm = best;

  // Ascent over the sphere angles of y with the circle max as objective.
  double polar = std::acos(std::clamp(best_y[0], -1.0, 1.0));
  double azimuth = std::atan2(best_y[2], best_y[1]);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-1e-4, 1e-4);
    polar += jitter(rng);
    azimuth += jitter(rng);
  }

  const auto objective = [&](double po, double az) -> double {
    const Vec<3> y = sphere_point(po, az);
    if (!direction_admissible(model, y)) return -1.0;
    const FlagTensors<3> t = flag_tensors<3>(model, y);
    return circle_max(t, 64, nullptr);
  };

  double current = objective(polar, azimuth);
  double step = 2.0 * kPi / std::max(8, y_samples / 8);
  while (step > 1e-7) {
    bool improved = false;
    const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& mv : moves) {
      const double v = objective(polar + mv[0], azimuth + mv[1]);
      if (v > current) {
        current = v;
        polar += mv[0];
        azimuth += mv[1];
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  if (current > best) {
    best = current;
    best_y = sphere_point(polar, azimuth);
    const FlagTensors<3> t = flag_tensors<3>(model, best_y);
    circle_max(t, 256, &best_psi);
  }

  out.norm = best;
  out.y_argmax = best_y;
  {
    const FlagTensors<3> t = flag_tensors<3>(model, best_y);
    const CircleBasis basis = orthogonal_circle(t);
    for (int i = 0; i < 3; ++i)
      out.u_argmax[i] = std::cos(best_psi) * basis.e1[i] +
                        std::sin(best_psi) * basis.e2[i];
  }
  return out;
}

}  // namespace finsler

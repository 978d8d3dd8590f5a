#pragma once

#include <array>
#include <cmath>

#include "finsler/errors.hpp"

namespace finsler {

/// Truncated third-order Taylor jet in N variables: the value of a scalar
/// function together with all of its partial derivatives through order 3.
///
/// Arithmetic on jets propagates derivatives exactly (full third-order
/// Leibniz rule for products, composition rule for univariate functions),
/// so any expression built from seeds yields machine-precision derivatives
/// of the composed function. hess and third are stored as full (symmetric)
/// arrays; every operation below fills them with manifestly symmetric
/// expressions, so the symmetry invariants hold by construction.
template <int N>
struct Jet {
  static_assert(N >= 1 && N <= 3, "jets are fixed to small dimensions");
  static constexpr int nvars = N;

  double value = 0.0;
  std::array<double, N> grad{};
  std::array<std::array<double, N>, N> hess{};
  std::array<std::array<std::array<double, N>, N>, N> third{};

  Jet() = default;

  /// Seed a constant: value set, every derivative zero.
  static Jet constant(double v) {
    Jet r;
    r.value = v;
    return r;
  }

  /// Seed the coordinate function y^index: grad[index] = 1, rest zero.
  static Jet variable(int index, double v) {
    if (index < 0 || index >= N) {
      throw InvalidInput("jet seed index " + std::to_string(index) +
                         " out of range for " + std::to_string(N) + " variables");
    }
    Jet r;
    r.value = v;
    r.grad[index] = 1.0;
    return r;
  }
};

template <int N>
Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.value = a.value + b.value;
  for (int i = 0; i < N; ++i) {
    r.grad[i] = a.grad[i] + b.grad[i];
    for (int j = 0; j < N; ++j) {
      r.hess[i][j] = a.hess[i][j] + b.hess[i][j];
      for (int k = 0; k < N; ++k)
        r.third[i][j][k] = a.third[i][j][k] + b.third[i][j][k];
    }
  }
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r;
  r.value = -a.value;
  for (int i = 0; i < N; ++i) {
    r.grad[i] = -a.grad[i];
    for (int j = 0; j < N; ++j) {
      r.hess[i][j] = -a.hess[i][j];
      for (int k = 0; k < N; ++k) r.third[i][j][k] = -a.third[i][j][k];
    }
  }
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  return a + (-b);
}

/// Full third-order Leibniz rule.
template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.value = a.value * b.value;
  for (int i = 0; i < N; ++i)
    r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      r.hess[i][j] = a.hess[i][j] * b.value + a.grad[i] * b.grad[j] +
                     a.grad[j] * b.grad[i] + a.value * b.hess[i][j];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        r.third[i][j][k] = a.third[i][j][k] * b.value +
                           a.hess[i][j] * b.grad[k] + a.hess[i][k] * b.grad[j] +
                           a.hess[j][k] * b.grad[i] + a.grad[i] * b.hess[j][k] +
                           a.grad[j] * b.hess[i][k] + a.grad[k] * b.hess[i][j] +
                           a.value * b.third[i][j][k];
  return r;
}

template <int N>
Jet<N> operator*(double c, const Jet<N>& a) {
  Jet<N> r;
  r.value = c * a.value;
  for (int i = 0; i < N; ++i) {
    r.grad[i] = c * a.grad[i];
    for (int j = 0; j < N; ++j) {
      r.hess[i][j] = c * a.hess[i][j];
      for (int k = 0; k < N; ++k) r.third[i][j][k] = c * a.third[i][j][k];
    }
  }
  return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, double c) {
  return c * a;
}

template <int N>
Jet<N> operator+(const Jet<N>& a, double c) {
  Jet<N> r = a;
  r.value += c;
  return r;
}

template <int N>
Jet<N> operator+(double c, const Jet<N>& a) {
  return a + c;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, double c) {
  return a + (-c);
}

template <int N>
Jet<N> operator-(double c, const Jet<N>& a) {
  return (-a) + c;
}

/// Compose a univariate function onto a jet: given f and its first three
/// derivatives at u.value, returns the jet of f(u). This is the order-3
/// Faa di Bruno rule; sqrt, exp and the reciprocal are thin wrappers with
/// their own derivative tables.
template <int N>
Jet<N> compose(const Jet<N>& u, double f0, double f1, double f2, double f3) {
  Jet<N> r;
  r.value = f0;
  for (int i = 0; i < N; ++i) r.grad[i] = f1 * u.grad[i];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      r.hess[i][j] = f2 * u.grad[i] * u.grad[j] + f1 * u.hess[i][j];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        r.third[i][j][k] =
            f3 * u.grad[i] * u.grad[j] * u.grad[k] +
            f2 * (u.hess[i][j] * u.grad[k] + u.hess[i][k] * u.grad[j] +
                  u.hess[j][k] * u.grad[i]) +
            f1 * u.third[i][j][k];
  return r;
}

template <int N>
Jet<N> reciprocal(const Jet<N>& a) {
  if (a.value == 0.0) throw SingularJet("jet division by zero value");
  const double x = a.value;
  const double inv = 1.0 / x;
  return compose(a, inv, -inv * inv, 2.0 * inv * inv * inv,
                 -6.0 * inv * inv * inv * inv);
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  return a * reciprocal(b);
}

template <int N>
Jet<N> operator/(const Jet<N>& a, double c) {
  return a * (1.0 / c);
}

template <int N>
Jet<N> operator/(double c, const Jet<N>& a) {
  return c * reciprocal(a);
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  if (!(a.value > 0.0))
    throw DomainError("jet sqrt of non-positive value " + std::to_string(a.value));
  const double s = std::sqrt(a.value);
  const double f1 = 0.5 / s;
  const double f2 = -0.25 / (a.value * s);
  const double f3 = 0.375 / (a.value * a.value * s);
  return compose(a, s, f1, f2, f3);
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
  const double e = std::exp(a.value);
  if (!std::isfinite(e)) throw NumericOverflow("jet exp overflow");
  return compose(a, e, e, e, e);
}

/// Integer power by repeated multiplication; negative exponents go through
/// the reciprocal jet.
template <int N>
Jet<N> powi(const Jet<N>& a, int m) {
  if (m == 0) return Jet<N>::constant(1.0);
  if (m < 0) {
    if (a.value == 0.0) throw SingularJet("negative jet power of zero value");
    return powi(reciprocal(a), -m);
  }
  Jet<N> base = a;
  Jet<N> acc = Jet<N>::constant(1.0);
  int e = m;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

}  // namespace finsler

/* Copyright (C) 2026 The tricover authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "tricover/elliptic/betti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

namespace {

using LD = long double;
const LD kPi = 3.141592653589793238462643383279502884L;
const LComplex kI(0.0L, 1.0L);

LComplex L(Complex z) { return LComplex(z.real(), z.imag()); }

std::array<LComplex, 3> cubic_roots(LComplex a, LComplex b) {
  // Durand-Kerner on x^3 + a x + b, then Newton polishing.
  auto f = [&](LComplex x) { return x * x * x + a * x + b; };
  auto df = [&](LComplex x) { return LD(3) * x * x + a; };
  LD r = 1 + std::max(std::abs(a), std::abs(b));
  std::array<LComplex, 3> z = {std::polar(r, LD(0.4)), std::polar(r, LD(2.5)), std::polar(r, LD(4.6))};
  for (int it = 0; it < 500; ++it) {
    LD moved = 0;
    for (int i = 0; i < 3; ++i) {
      LComplex den = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= z[i] - z[j];
      LComplex step = f(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L * r) break;
  }
  for (auto& x : z)
    for (int it = 0; it < 3; ++it) {
      LComplex d = df(x);
      if (std::abs(d) == 0) break;
      x -= f(x) / d;
    }
  return z;
}

// Arithmetic-geometric mean with the closest-mean branch at every step.
LComplex agm(LComplex x, LComplex y) {
  for (int it = 0; it < 200; ++it) {
    LComplex m = (x + y) / LD(2);
    LComplex g = std::sqrt(x * y);
    if (std::abs(m - g) > std::abs(m + g)) g = -g;
    x = m;
    y = g;
    if (std::abs(x - y) <= 1e-30L * std::abs(x)) break;
  }
  return x;
}

void eisenstein(LComplex tau, LComplex* e4, LComplex* e6) {
  LComplex q = std::exp(LD(2) * kPi * kI * tau);
  LComplex s4 = 0, s6 = 0, qn = 1;
  for (int n = 1; n < 400; ++n) {
    qn *= q;
    LComplex t = qn / (LD(1) - qn);
    LD n3 = LD(n) * n * n;
    s4 += n3 * t;
    s6 += n3 * n * n * t;
    if (std::abs(qn) * n3 * n * n < 1e-32L) break;
  }
  *e4 = LD(1) + LD(240) * s4;
  *e6 = LD(1) - LD(504) * s6;
}

void reduce_basis(LComplex* w1, LComplex* w2) {
  if ((*w2 / *w1).imag() < 0) *w2 = -*w2;
  for (int it = 0; it < 200; ++it) {
    LComplex tau = *w2 / *w1;
    LD shift = std::round(tau.real());
    if (shift != 0) *w2 -= shift * *w1;
    tau = *w2 / *w1;
    if (std::abs(tau) < 1 - 1e-15L) {
      LComplex t = *w1;
      *w1 = *w2;
      *w2 = -t;
      continue;
    }
    break;
  }
}

// Reduces u modulo Z + tau Z to the parallelogram centered at 0.
LComplex center(LComplex u, LComplex tau) {
  LD t = std::round(u.imag() / tau.imag());
  u -= t * tau;
  u -= std::round(u.real());
  return u;
}

LComplex wp_tau(LComplex u, LComplex tau) {
  LComplex q = std::exp(LD(2) * kPi * kI * tau);
  LComplex w = std::exp(LD(2) * kPi * kI * u), wi = LD(1) / w;
  auto h = [](LComplex x) { return x / ((LD(1) - x) * (LD(1) - x)); };
  LComplex s = h(w), qn = 1;
  for (int n = 1; n < 200; ++n) {
    qn *= q;
    LComplex t = h(qn * w) + h(qn * wi) - LD(2) * h(qn);
    s += t;
    if (std::abs(t) < 1e-34L * std::max(LD(1), std::abs(s))) break;
  }
  LComplex c = LD(2) * kPi * kI;
  return c * c * (LD(1) / LD(12) + s);
}

LComplex wp_prime_tau(LComplex u, LComplex tau) {
  LComplex q = std::exp(LD(2) * kPi * kI * tau);
  LComplex w = std::exp(LD(2) * kPi * kI * u), wi = LD(1) / w;
  auto g = [](LComplex x) {
    LComplex d = LD(1) - x;
    return x * (LD(1) + x) / (d * d * d);
  };
  LComplex s = g(w), qn = 1;
  for (int n = 1; n < 200; ++n) {
    qn *= q;
    LComplex t = g(qn * w) - g(qn * wi);
    s += t;
    if (std::abs(t) < 1e-34L * std::max(LD(1), std::abs(s))) break;
  }
  LComplex c = LD(2) * kPi * kI;
  return c * c * c * s;
}

// Carlson's symmetric integral R_F by duplication.
LComplex carlson_rf(LComplex x, LComplex y, LComplex z) {
  for (int it = 0; it < 100; ++it) {
    LComplex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    LComplex lam = sx * sy + sx * sz + sy * sz;
    x = (x + lam) / LD(4);
    y = (y + lam) / LD(4);
    z = (z + lam) / LD(4);
    LComplex m = (x + y + z) / LD(3);
    LD dev = std::max({std::abs(x - m), std::abs(y - m), std::abs(z - m)}) / std::abs(m);
    if (dev < 1e-7L) {
      LComplex X = LD(1) - x / m, Y = LD(1) - y / m, Z = -X - Y;
      LComplex E2 = X * Y - Z * Z, E3 = X * Y * Z;
      return (LD(1) - E2 / LD(10) + E3 / LD(14) + E2 * E2 / LD(24) - LD(3) * E2 * E3 / LD(44)) / std::sqrt(m);
    }
  }
  return LComplex(std::numeric_limits<LD>::quiet_NaN(), 0);
}

}  // namespace

PeriodLattice period_lattice(Complex a_, Complex b_, double tol) {
  LComplex a = L(a_), b = L(b_);
  LD scale = std::max({std::abs(a) * std::abs(a) * std::abs(a), std::abs(b) * std::abs(b), LD(1e-300)});
  LComplex disc = LD(4) * a * a * a + LD(27) * b * b;
  if (std::abs(disc) < tol * std::max(scale, LD(1)))
    throw DomainError("near_singular", "curve is numerically singular");
  const LComplex g2 = LD(-4) * a, g3 = LD(-4) * b;
  auto e = cubic_roots(a, b);
  std::array<int, 3> perm = {0, 1, 2};
  LD best_err = 1e300L;
  PeriodLattice best{};
  do {
    LComplex e1 = e[perm[0]], e2 = e[perm[1]], e3 = e[perm[2]];
    LComplex s13 = std::sqrt(e1 - e3), s12 = std::sqrt(e1 - e2), s23 = std::sqrt(e2 - e3);
    for (int sign = 0; sign < 2; ++sign) {
      LComplex w1 = kPi / agm(s13, sign ? -s12 : s12);
      LComplex w2 = kPi * kI / agm(s13, s23);
      if (!std::isfinite(std::abs(w1)) || !std::isfinite(std::abs(w2))) continue;
      if (std::abs((w2 / w1).imag()) < 1e-12L) continue;
      reduce_basis(&w1, &w2);
      LComplex tau = w2 / w1, e4, e6;
      eisenstein(tau, &e4, &e6);
      LComplex G2 = LD(4) * std::pow(kPi, LD(4)) / LD(3) * e4 / std::pow(w1, 4);
      LComplex G3 = LD(8) * std::pow(kPi, LD(6)) / LD(27) * e6 / std::pow(w1, 6);
      LD err = std::abs(G2 - g2) / std::max(std::abs(g2), LD(1)) + std::abs(G3 - g3) / std::max(std::abs(g3), LD(1));
      if (err < best_err) {
        best_err = err;
        best = {w1, w2, tau, G2, G3};
      }
      if (best_err < 1e-15L) break;
    }
  } while (best_err >= 1e-15L && std::next_permutation(perm.begin(), perm.end()));
  if (best_err > 1e-8L) throw DomainError("no_convergence", "period lattice failed the invariant check");
  best.g2 = g2;
  best.g3 = g3;
  return best;
}

LComplex wp(const PeriodLattice& Lt, LComplex z) {
  LComplex u = center(z / Lt.w1, Lt.tau);
  return wp_tau(u, Lt.tau) / (Lt.w1 * Lt.w1);
}

LComplex wp_prime(const PeriodLattice& Lt, LComplex z) {
  LComplex u = center(z / Lt.w1, Lt.tau);
  return wp_prime_tau(u, Lt.tau) / (Lt.w1 * Lt.w1 * Lt.w1);
}

LComplex elliptic_log(const PeriodLattice& Lt, Complex x_, Complex y_, double tol) {
  const LComplex x = L(x_), y = L(y_);
  const LComplex tau = Lt.tau, w1 = Lt.w1;
  const LComplex target = x * w1 * w1;
  const LD yscale = std::max(LD(1), std::abs(x) * std::sqrt(std::abs(x)));
  auto fix_sign = [&](LComplex u) -> LComplex {
    LComplex d = wp_prime_tau(u, tau) / (w1 * w1 * w1);
    LD plus = std::abs(d - LD(2) * y), minus = std::abs(d + LD(2) * y);
    LD bound = 1e3L * tol * std::max(yscale, std::abs(y));
    if (std::min(plus, minus) > std::max(bound, LD(1e-6) * std::max(LD(1), std::abs(y))))
      throw DomainError("off_curve", "point is not on the numeric curve");
    return plus <= minus ? u : -u;
  };
  if (std::abs(y) < 1e-9L * yscale) {
    // Two-torsion: the half periods.
    const LComplex halves[3] = {LD(0.5), tau / LD(2), (LD(1) + tau) / LD(2)};
    LComplex best = halves[0];
    LD bd = 1e300L;
    for (auto h : halves) {
      LD d = std::abs(wp_tau(h, tau) - target);
      if (d < bd) {
        bd = d;
        best = h;
      }
    }
    return center(best, tau) * w1;
  }
  auto newton = [&](LComplex u, int iters) {
    for (int it = 0; it < iters; ++it) {
      LComplex f = wp_tau(u, tau) - target;
      LComplex df = wp_prime_tau(u, tau);
      if (std::abs(df) == 0) break;
      LComplex step = f / df;
      if (std::abs(step) > 0.1L) step *= 0.1L / std::abs(step);
      u = center(u - step, tau);
      if (std::abs(step) < 1e-18L) break;
    }
    return u;
  };
  auto residual = [&](LComplex u) { return std::abs(wp_tau(u, tau) - target) / std::max(LD(1), std::abs(target)); };
  // Start from the integral of dt / sqrt(4 (t - e1)(t - e2)(t - e3)) over [x, oo).
  auto e = cubic_roots(-Lt.g2 / LD(4), -Lt.g3 / LD(4));
  LComplex z0 = carlson_rf(x - e[0], x - e[1], x - e[2]);
  if (std::isfinite(std::abs(z0))) {
    LComplex u = newton(center(z0 / w1, tau), 12);
    if (residual(u) < 1e-12L) return center(fix_sign(u), tau) * w1;
  }
  const int G = 16;
  LComplex u = LD(0.25);
  LD bd = 1e300L;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      LComplex c = LD(i + 0.5) / LD(G) + LD(j + 0.5) / LD(G) * tau;
      LD d = std::abs(wp_tau(center(c, tau), tau) - target);
      if (d < bd) {
        bd = d;
        u = center(c, tau);
      }
    }
  return center(fix_sign(newton(u, 200)), tau) * w1;
}

BettiCoordinates betti_coordinates(Complex a, Complex b, bool infinity, Complex x, Complex y, double tol) {
  BettiCoordinates out;
  out.lattice = period_lattice(a, b, tol);
  if (infinity) return out;
  out.z = elliptic_log(out.lattice, x, y, tol);
  LComplex u = out.z / out.lattice.w1;
  LD t2 = u.imag() / out.lattice.tau.imag();
  LD t1 = u.real() - t2 * out.lattice.tau.real();
  auto wrap = [](LD t) {
    t -= std::floor(t);
    return t >= 1 ? t - 1 : t;
  };
  out.b1 = static_cast<double>(wrap(t1));
  out.b2 = static_cast<double>(wrap(t2));
  return out;
}

std::optional<Fraction> nearby_fraction(double t, long max_den, double tol) {
  for (long d = 1; d <= max_den; ++d) {
    double k = std::round(t * d);
    if (std::abs(t - k / d) <= tol) {
      long kk = static_cast<long>(k) % d;
      if (kk < 0) kk += d;
      return Fraction{kk, d};
    }
  }
  return std::nullopt;
}

std::optional<long> betti_torsion_order(const BettiCoordinates& c, long max_den, double tol) {
  for (long d = 1; d <= max_den; ++d) {
    double r1 = c.b1 * d, r2 = c.b2 * d;
    if (std::abs(r1 - std::round(r1)) <= tol * d && std::abs(r2 - std::round(r2)) <= tol * d) return d;
  }
  return std::nullopt;
}

}  // namespace tricover

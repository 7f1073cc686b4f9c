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
#include "tricover/exactalg/complex_roots.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>

#include "tricover/errors.hpp"

namespace tricover {

std::string FieldTraits<Complex>::str(const Complex& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
  return buf;
}

namespace {

using LC = std::complex<long double>;

struct Scaled {
  std::vector<LC> c;  // g(y) = f(2^k y) / 2^M, lowest degree first
  int k = 0;
};

Scaled rescale(const QPoly& f) {
  QPoly g = primitive_integer(f);
  const int n = g.degree();
  std::vector<double> lg(n + 1, -std::numeric_limits<double>::infinity());
  std::vector<double> mant(n + 1, 0.0);
  std::vector<long> ex(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    mpz_class v = g.coeffs()[i].num();
    if (v == 0) continue;
    long e;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    mant[i] = m;
    ex[i] = e;
    lg[i] = std::log2(std::fabs(m)) + static_cast<double>(e);
  }
  double r = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    if (std::isfinite(lg[i])) r = std::max(r, (lg[i] - lg[n]) / (n - i));
  Scaled s;
  s.k = std::isfinite(r) ? static_cast<int>(std::lround(r)) : 0;
  double top = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i)
    if (std::isfinite(lg[i])) top = std::max(top, lg[i] + static_cast<double>(i) * s.k);
  long M = static_cast<long>(std::ceil(top));
  s.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (mant[i] == 0.0) continue;
    long e = ex[i] + static_cast<long>(i) * s.k - M;
    s.c[i] = LC(std::ldexp(static_cast<long double>(mant[i]), static_cast<int>(std::max(e, -16000L))), 0.0L);
  }
  return s;
}

// Horner for g and g' with a running bound on the rounding error of g.
void horner(const std::vector<LC>& c, LC z, LC* g, LC* dg, long double* err) {
  LC p = c.back(), d = 0;
  long double e = std::abs(p) / 2;
  const long double az = std::abs(z);
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    d = d * z + p;
    p = p * z + c[i];
    e = e * az + std::abs(p);
  }
  *g = p;
  *dg = d;
  const long double u = std::numeric_limits<long double>::epsilon();
  *err = u * (2 * e - std::abs(p)) * 4;
}

}  // namespace

RootDiscs complex_root_discs(const QPoly& f, double tol) {
  if (f.is_zero()) throw std::domain_error("zero input");
  RootDiscs out;
  const int n = f.degree();
  if (n < 1) return out;
  Scaled s = rescale(f);
  const long double scale = std::ldexp(1.0L, s.k);
  std::vector<LC> z(n);
  for (int i = 0; i < n; ++i) {
    long double ang = 2.0L * 3.14159265358979323846L * i / n + 0.4L;
    z[i] = std::polar(1.0L, ang);
  }
  const int max_iter = 2000;
  for (int it = 0; it < max_iter; ++it) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      LC g, dg;
      long double err;
      horner(s.c, z[i], &g, &dg, &err);
      if (std::abs(g) <= err) continue;
      LC ratio = g / dg, sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      LC w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 64 * std::numeric_limits<long double>::epsilon()) break;
  }
  out.centers.resize(n);
  out.radii.resize(n);
  long double max_res = 0;
  for (int i = 0; i < n; ++i) {
    LC g, dg;
    long double err;
    horner(s.c, z[i], &g, &dg, &err);
    LC prod = s.c.back();
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= (z[i] - z[j]);
    long double rad = n * (std::abs(g) + err) / std::abs(prod);
    max_res = std::max(max_res, rad * scale);
    out.centers[i] = Complex(static_cast<double>(z[i].real() * scale), static_cast<double>(z[i].imag() * scale));
    out.radii[i] = static_cast<double>(rad * scale);
  }
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    if (!(out.radii[i] <= tol)) ok = false;
    for (int j = i + 1; j < n && ok; ++j)
      if (std::abs(out.centers[i] - out.centers[j]) <= out.radii[i] + out.radii[j]) ok = false;
  }
  if (!ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "root finder did not converge (largest inclusion radius %.3Lg)", max_res);
    throw DomainError("no_convergence", buf);
  }
  return out;
}

std::vector<Complex> complex_roots(const QPoly& f, double tol) { return complex_root_discs(f, tol).centers; }

std::vector<Complex> complex_poly_roots(const std::vector<Complex>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n > 0 && coeffs[n] == Complex(0.0, 0.0)) --n;
  if (n < 1) return {};
  std::vector<LC> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = LC(coeffs[i]) / LC(coeffs[n]);
  auto eval = [&](LC z) {
    LC acc = 1.0L;
    for (int i = n - 1; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  if (n == 1) return {Complex(-c[0])};
  long double R = 1.0L;
  for (int i = 0; i < n; ++i) R = std::max(R, 2.0L * std::pow(std::abs(c[i]), 1.0L / (n - i)));
  std::vector<LC> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(R * 0.5L, 0.4L + 6.283185307179586L * i / n);
  for (int it = 0; it < 500; ++it) {
    long double move = 0;
    for (int i = 0; i < n; ++i) {
      LC d = 1.0L;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      if (std::abs(d) == 0.0L) d = LC(1e-30L, 0.0L);
      LC step = eval(z[i]) / d;
      z[i] -= step;
      move = std::max(move, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (move < 1e-18L) break;
  }
  std::vector<Complex> out;
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

}  // namespace tricover

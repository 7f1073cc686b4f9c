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
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/errors.hpp"
#include "tricover/exactalg/poly.hpp"

namespace tricover {

// Short Weierstrass curve y^2 = x^3 + a x + b.
template <class K>
struct WeierstrassCurve {
  K a, b;

  K discriminant() const {  // 4a^3 + 27b^2
    return int_like(a, 4) * a * a * a + int_like(a, 27) * b * b;
  }
  Poly<K> rhs() const {  // x^3 + a x + b
    return Poly<K>(FieldTraits<K>::context(a), {b, a, zero_like(a), one_like(a)});
  }
};

// Affine point or the point at infinity O.
template <class K>
struct ECPoint {
  bool infinity = true;
  K x{}, y{};

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(K x, K y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

template <class K>
bool on_curve(const WeierstrassCurve<K>& E, const ECPoint<K>& P) {
  if (P.infinity) return true;
  return is_zero(P.y * P.y - (P.x * P.x * P.x + E.a * P.x + E.b));
}

template <class K>
void require_on_curve(const WeierstrassCurve<K>& E, const ECPoint<K>& P) {
  if (!on_curve(E, P)) throw DomainError("off_curve", "point is not on the curve");
}

template <class K>
ECPoint<K> ec_neg(const ECPoint<K>& P) {
  if (P.infinity) return P;
  return ECPoint<K>::affine(P.x, -P.y);
}

// Chord-tangent addition without on-curve validation (hot loops).
template <class K>
ECPoint<K> ec_add_unchecked(const WeierstrassCurve<K>& E, const ECPoint<K>& P, const ECPoint<K>& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  K slope;
  if (P.x == Q.x) {
    if (is_zero(P.y + Q.y)) return ECPoint<K>::at_infinity();
    slope = (int_like(P.x, 3) * P.x * P.x + E.a) / (int_like(P.y, 2) * P.y);
  } else {
    slope = (Q.y - P.y) / (Q.x - P.x);
  }
  K x3 = slope * slope - P.x - Q.x;
  K y3 = slope * (P.x - x3) - P.y;
  return ECPoint<K>::affine(std::move(x3), std::move(y3));
}

template <class K>
ECPoint<K> ec_add(const WeierstrassCurve<K>& E, const ECPoint<K>& P, const ECPoint<K>& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  return ec_add_unchecked(E, P, Q);
}

template <class K>
ECPoint<K> ec_mul_unchecked(const WeierstrassCurve<K>& E, long n, const ECPoint<K>& P) {
  if (n < 0) return ec_mul_unchecked(E, -n, ec_neg(P));
  ECPoint<K> acc = ECPoint<K>::at_infinity(), base = P;
  while (n) {
    if (n & 1) acc = ec_add_unchecked(E, acc, base);
    n >>= 1;
    if (n) base = ec_add_unchecked(E, base, base);
  }
  return acc;
}

template <class K>
ECPoint<K> ec_mul(const WeierstrassCurve<K>& E, long n, const ECPoint<K>& P) {
  require_on_curve(E, P);
  return ec_mul_unchecked(E, n, P);
}

// psi_n = f_n for odd n and psi_n = y f_n for even n, with y^2 replaced by
// x^3 + a x + b.  `f` is the x-polynomial f_n.
template <class K>
struct DivisionPoly {
  int n;
  Poly<K> f;
  bool y_factor;  // true for even n
};

template <class K>
std::vector<Poly<K>> division_poly_table(const WeierstrassCurve<K>& E, int n) {
  if (n < 1) throw std::domain_error("division polynomial index must be positive");
  const auto ctx = FieldTraits<K>::context(E.a);
  auto C = [&](long v) { return make_int<K>(ctx, v); };
  const K& a = E.a;
  const K& b = E.b;
  Poly<K> F = E.rhs(), F2 = F * F;
  std::vector<Poly<K>> f(std::max(n + 1, 5), Poly<K>(ctx));
  f[1] = Poly<K>::constant(ctx, 1);
  f[2] = Poly<K>::constant(ctx, 2);
  f[3] = Poly<K>(ctx, {-a * a, C(12) * b, C(6) * a, C(0), C(3)});
  f[4] = C(4) * Poly<K>(ctx, {C(-8) * b * b - a * a * a, C(-4) * a * b, C(-5) * a * a, C(20) * b, C(5) * a, C(0), C(1)});
  const K half = C(1) / C(2);
  for (int k = 5; k <= n; ++k) {
    int m = k / 2;
    if (k % 2 == 1) {
      if (m % 2 == 0)
        f[k] = F2 * f[m + 2] * pow(f[m], 3) - f[m - 1] * pow(f[m + 1], 3);
      else
        f[k] = f[m + 2] * pow(f[m], 3) - F2 * f[m - 1] * pow(f[m + 1], 3);
    } else {
      f[k] = half * (f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]));
    }
  }
  f.resize(n + 1);
  f[0] = Poly<K>(ctx);
  return f;
}

template <class K>
DivisionPoly<K> division_poly(const WeierstrassCurve<K>& E, int n) {
  auto t = division_poly_table(E, n);
  return {n, t[n], n % 2 == 0};
}

// x-polynomial whose roots are the x-coordinates of the nonzero points with
// nP = O: f_n for odd n and (x^3+ax+b) f_n for even n.
template <class K>
Poly<K> torsion_condition(const WeierstrassCurve<K>& E, int n) {
  DivisionPoly<K> d = division_poly(E, n);
  return d.y_factor ? E.rhs() * d.f : d.f;
}

}  // namespace tricover

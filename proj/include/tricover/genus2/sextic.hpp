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

#include <string>
#include <vector>

#include "tricover/errors.hpp"
#include "tricover/exactalg/complex_roots.hpp"
#include "tricover/exactalg/poly.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"
#include "tricover/exactalg/tower.hpp"

namespace tricover {

// v^2 = f(u) with f squarefree of degree 5 or 6.
template <class K>
struct SexticModel {
  Poly<K> f;

  static SexticModel make(Poly<K> f) {
    if (f.degree() != 5 && f.degree() != 6) throw DomainError("bad_degree", "model needs degree 5 or 6");
    if (!is_squarefree(f)) throw DomainError("not_squarefree", "f has a repeated factor");
    return {std::move(f)};
  }
};

// A finite point (u, v), or a point at infinity.  A degree-6 model has two
// points at infinity (sign of v / u^3 against the square root of the leading
// coefficient); a degree-5 model has one.
template <class K>
struct CurvePoint {
  enum class Kind { finite, infinity_plus, infinity_minus, infinity };
  Kind kind = Kind::finite;
  K u{}, v{};

  static CurvePoint finite(K u, K v) { return {Kind::finite, std::move(u), std::move(v)}; }
  bool is_finite() const { return kind == Kind::finite; }
};

template <class K>
bool on_curve(const SexticModel<K>& M, const CurvePoint<K>& q) {
  if (!q.is_finite()) return M.f.degree() == 5 ? q.kind == CurvePoint<K>::Kind::infinity
                                                : q.kind != CurvePoint<K>::Kind::infinity;
  return is_zero(q.v * q.v - M.f(q.u));
}

template <class K>
bool is_special(const SexticModel<K>& M, const CurvePoint<K>& q) {
  if (!on_curve(M, q)) throw DomainError("off_curve", "point is not on the curve");
  if (!q.is_finite()) return M.f.degree() == 5;
  return is_zero(q.v);
}

// Hyperelliptic involution (u, v) -> (u, -v).
template <class K>
CurvePoint<K> involute(const CurvePoint<K>& q) {
  using Kd = typename CurvePoint<K>::Kind;
  CurvePoint<K> r = q;
  if (q.is_finite())
    r.v = -q.v;
  else if (q.kind == Kd::infinity_plus)
    r.kind = Kd::infinity_minus;
  else if (q.kind == Kd::infinity_minus)
    r.kind = Kd::infinity_plus;
  return r;
}

// A ramification point of u.  Finite ones are (root of `level`'s modulus,
// 0); rational roots get a degree-1 level.  `approx` locates the root among
// the conjugates.
struct SpecialPoint {
  bool infinity = false;
  LevelPtr<Rational> level;
  Complex approx;

  Ext<Rational> u() const { return Ext<Rational>::generator(level); }
};

std::vector<SpecialPoint> weierstrass_points(const SexticModel<Rational>& M);

// f = P^2 - Q^3.
template <class K>
struct PowerGapRep {
  Poly<K> P, Q;
  bool degenerate = false;  // Q = 0
};

template <class K>
bool power_gap_verify(const Poly<K>& f, const Poly<K>& P, const Poly<K>& Q) {
  return f == P * P - Q * Q * Q;
}

// All (P, Q) over Q with deg P = 3, deg Q <= 2 and every coefficient of
// naive height (max |numerator|, denominator) <= height_bound.
std::vector<PowerGapRep<Rational>> power_gap_search(const QPoly& f, long height_bound);

// Rationals of naive height <= h, in increasing order.
std::vector<Rational> rationals_of_height(long h);

struct RigidityVerdict {
  std::string kind;  // "constant family", "contradiction" or "common factor"
  std::string detail;
};

// d/dt on Q(t) and coefficientwise on Q(t)[u].
inline QAlpha d_param(const QAlpha& r) {
  return QAlpha(r.num().derivative() * r.den() - r.num() * r.den().derivative(), r.den() * r.den());
}

inline Poly<QAlpha> d_param(const Poly<QAlpha>& p) { return Poly<QAlpha>(p.context(), p.map([](const QAlpha& c) { return d_param(c); })); }

// For a family P(u; t), Q(u; t) with P^2 - Q^3 independent of t:
// differentiating gives 2 (dP) P = 3 (dQ) Q^2, so with gcd(P, Q) = 1 the
// cubic P divides dQ of degree <= 2 and both derivatives vanish.
RigidityVerdict rigidity_check(const Poly<QAlpha>& P, const Poly<QAlpha>& Q);

}  // namespace tricover

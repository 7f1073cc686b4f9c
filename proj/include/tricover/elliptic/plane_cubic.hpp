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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tricover/elliptic/curve.hpp"
#include "tricover/errors.hpp"
#include "tricover/exactalg/linalg.hpp"
#include "tricover/exactalg/mpoly.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"

namespace tricover {

template <class K>
using ProjPoint = std::array<K, 3>;

// Homogeneous cubic form F(X0, X1, X2).
template <class K>
struct PlaneCubic {
  MPoly<K> F;
  std::array<std::string, 3> names{"T", "U", "Z"};

  static PlaneCubic make(MPoly<K> F, std::array<std::string, 3> names = {"T", "U", "Z"}) {
    if (F.nvars() != 3 || F.total_degree() != 3 || !F.is_homogeneous())
      throw std::invalid_argument("plane cubic must be a homogeneous form of degree 3 in 3 variables");
    return PlaneCubic{std::move(F), std::move(names)};
  }

  K operator()(const ProjPoint<K>& p) const { return F(std::vector<K>(p.begin(), p.end())); }
  ProjPoint<K> gradient(const ProjPoint<K>& p) const {
    std::vector<K> v(p.begin(), p.end());
    return {F.derivative(0)(v), F.derivative(1)(v), F.derivative(2)(v)};
  }
  std::string str() const { return F.str({names[0], names[1], names[2]}); }
};

template <class K>
MPoly<K> det3(const std::array<std::array<MPoly<K>, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// det of the matrix of second partials (a cubic form, or zero).
template <class K>
MPoly<K> hessian(const PlaneCubic<K>& C) {
  std::array<std::array<MPoly<K>, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = C.F.derivative(i).derivative(j);
  return det3(m);
}

// Sylvester's resultant of the three partials, scaled so that
// Y^2 Z - X^3 - a X Z^2 - b Z^3 has discriminant 4a^3 + 27b^2.
template <class K>
K discriminant(const PlaneCubic<K>& C) {
  const auto ctx = C.F.context();
  std::array<MPoly<K>, 3> Q = {C.F.derivative(0), C.F.derivative(1), C.F.derivative(2)};
  std::array<std::array<MPoly<K>, 3>, 3> jm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) jm[i][j] = Q[i].derivative(j);
  MPoly<K> J = det3(jm);
  std::vector<MPoly<K>> rows = {Q[0], Q[1], Q[2], J.derivative(0), J.derivative(1), J.derivative(2)};
  const std::vector<std::vector<int>> mons = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  Matrix<K> M(6, std::vector<K>(6, make_int<K>(ctx, 0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M[i][j] = rows[i].coeff(mons[j]);
  return determinant(M) / make_int<K>(ctx, -221184);
}

// Monic squarefree part of the numerator: the exact vanishing locus of the
// discriminant over a rational function field.
inline QPoly discriminant_locus(const PlaneCubic<QAlpha>& C) {
  QAlpha d = discriminant(C);
  if (d.is_zero()) return QPoly();
  return squarefree_part(d.num());
}

template <class K>
bool is_smooth(const PlaneCubic<K>& C) {
  return !is_zero(discriminant(C));
}

// Flex-defining system {Hessian = 0, C = 0}.
template <class K>
struct FlexSystem {
  MPoly<K> hessian, curve;
};

template <class K>
FlexSystem<K> hessian_flex_locus(const PlaneCubic<K>& C) {
  if (!is_smooth(C)) throw DomainError("singular_cubic", "cubic is singular");
  return {hessian(C), C.F};
}

// Projective change of coordinates w = forward * p sending `flex` to
// (0:1:0) and C to Y^2 W = X^3 + a X W^2 + b W^3.
template <class K>
struct BirationalChange {
  Matrix<K> forward, inverse;
  ProjPoint<K> flex;
};

// Frozen pivot choices so that numeric reductions vary analytically.
struct WeierstrassChoice {
  int q_index = -1;  // basis vector off the tangent line
  int y_index = -1;  // coordinate form used as Y
};

template <class K>
struct WeierstrassModel {
  WeierstrassCurve<K> curve;
  BirationalChange<K> change;
  WeierstrassChoice choice;
};

namespace detail {

template <class K>
K dot(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class K>
ProjPoint<K> cross(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
bool near_zero(const K& v, double tol) {
  if constexpr (FieldTraits<K>::exact)
    return is_zero(v);
  else
    return FieldTraits<K>::magnitude(v) <= tol;
}

template <class K>
int best_index(const ProjPoint<K>& v, int forced) {
  if (forced >= 0) return forced;
  int best = -1;
  double bm = -1;
  for (int i = 0; i < 3; ++i) {
    if (is_zero(v[i])) continue;
    double m = FieldTraits<K>::magnitude(v[i]);
    if (m > bm) {
      bm = m;
      best = i;
      if (FieldTraits<K>::exact) break;
    }
  }
  return best;
}

}  // namespace detail

// Classical reduction of a cubic with a rational flex: tangent line to the
// line at infinity, flex to (0:1:0), then the a-invariant normalization and
// completion of the square and cube.  For inexact K, `tol` bounds the
// residuals accepted for the flex conditions.
template <class K>
WeierstrassModel<K> cubic_to_weierstrass(const PlaneCubic<K>& C, const ProjPoint<K>& p, double tol = 0.0,
                                         WeierstrassChoice choice = {}) {
  using detail::cross;
  using detail::dot;
  using detail::near_zero;
  const auto ctx = C.F.context();
  auto I = [&](long v) { return make_int<K>(ctx, v); };
  if (!near_zero(C(p), tol)) throw DomainError("not_on_curve", "point is not on the cubic");
  std::vector<K> pv(p.begin(), p.end());
  if (!near_zero(hessian(C)(pv), tol)) throw DomainError("not_a_flex", "point is not a flex of the cubic");
  ProjPoint<K> L = C.gradient(p);
  if (is_zero(L[0]) && is_zero(L[1]) && is_zero(L[2])) throw DomainError("singular_point", "flex is a singular point");

  WeierstrassChoice used;
  used.q_index = detail::best_index(L, choice.q_index);
  ProjPoint<K> q = {I(0), I(0), I(0)};
  q[used.q_index] = I(1);
  ProjPoint<K> Xf = cross(p, q);
  used.y_index = choice.y_index;
  if (used.y_index < 0) {
    // Largest flex coordinate giving an invertible frame.
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      return FieldTraits<K>::magnitude(p[i]) > FieldTraits<K>::magnitude(p[j]);
    });
    for (int i : order) {
      if (is_zero(p[i])) continue;
      ProjPoint<K> Yf = {I(0), I(0), I(0)};
      Yf[i] = I(1);
      Matrix<K> N = {{Xf[0], Xf[1], Xf[2]}, {Yf[0], Yf[1], Yf[2]}, {L[0], L[1], L[2]}};
      if (!is_zero(determinant(N))) {
        used.y_index = i;
        break;
      }
    }
    if (used.y_index < 0) throw std::logic_error("no admissible Y coordinate");
  }
  ProjPoint<K> Yf = {I(0), I(0), I(0)};
  Yf[used.y_index] = I(1);
  Matrix<K> N = {{Xf[0], Xf[1], Xf[2]}, {Yf[0], Yf[1], Yf[2]}, {L[0], L[1], L[2]}};
  Matrix<K> Ninv = inverse(N);

  // G(X, Y, W) = F(Ninv (X, Y, W)).
  std::vector<MPoly<K>> sub(3, MPoly<K>(ctx, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sub[i] += Ninv[i][j] * MPoly<K>::var(ctx, 3, j);
  MPoly<K> G = C.F.substitute(sub);
  auto co = [&](int x, int y, int w) { return G.coeff({x, y, w}); };
  K c = co(3, 0, 0), d = co(0, 2, 1), e = co(1, 1, 1), f = co(0, 1, 2), g = co(2, 0, 1), h = co(1, 0, 2),
    k = co(0, 0, 3);
  if (near_zero(c, tol) || near_zero(d, tol)) throw DomainError("singular_cubic", "cubic is singular at the flex frame");

  // x = X/(s W), y = Y/(t W) with s = -d/c, t = d/c.
  K a1 = -e / d, a3 = f * c / (d * d), a2 = -g / d, a4 = h * c / (d * d), a6 = -k * c * c / (d * d * d);
  K b2 = a1 * a1 + I(4) * a2, b4 = I(2) * a4 + a1 * a3, b6 = a3 * a3 + I(4) * a6;
  K c4 = b2 * b2 - I(24) * b4;
  K c6 = -b2 * b2 * b2 + I(36) * b2 * b4 - I(216) * b6;
  WeierstrassCurve<K> E{-c4 / I(48), -c6 / I(864)};

  K s = -d / c, t = d / c;
  Matrix<K> S = {{I(1) / s, I(0), I(0)}, {I(0), I(1) / t, I(0)}, {I(0), I(0), I(1)}};
  Matrix<K> Sh = {{I(1), I(0), b2 / I(12)}, {a1 / I(2), I(1), a3 / I(2)}, {I(0), I(0), I(1)}};
  Matrix<K> M = mat_mul(Sh, mat_mul(S, N));
  WeierstrassModel<K> out{E, {M, inverse(M), p}, used};
  return out;
}

// Image of a point of C; the flex maps to O.
template <class K>
ECPoint<K> map_to_weierstrass(const BirationalChange<K>& ch, const ProjPoint<K>& p) {
  std::vector<K> w = mat_vec(ch.forward, std::vector<K>(p.begin(), p.end()));
  if (is_zero(w[2])) return ECPoint<K>::at_infinity();
  K inv = one_like(w[2]) / w[2];
  return ECPoint<K>::affine(w[0] * inv, w[1] * inv);
}

template <class K>
ProjPoint<K> map_from_weierstrass(const BirationalChange<K>& ch, const ECPoint<K>& P) {
  const K& any = ch.forward[0][0];
  std::vector<K> w = P.infinity ? std::vector<K>{zero_like(any), one_like(any), zero_like(any)}
                                : std::vector<K>{P.x, P.y, one_like(any)};
  std::vector<K> v = mat_vec(ch.inverse, w);
  return {v[0], v[1], v[2]};
}

// Projective equality.
template <class K>
bool same_point(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  return is_zero(a[0] * b[1] - a[1] * b[0]) && is_zero(a[0] * b[2] - a[2] * b[0]) &&
         is_zero(a[1] * b[2] - a[2] * b[1]);
}

// Exact check that F(inverse w) is proportional to Y^2 W - X^3 - a X W^2 - b W^3.
template <class K>
bool verify_weierstrass(const PlaneCubic<K>& C, const WeierstrassModel<K>& M) {
  const auto ctx = C.F.context();
  std::vector<MPoly<K>> sub(3, MPoly<K>(ctx, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sub[i] += M.change.inverse[i][j] * MPoly<K>::var(ctx, 3, j);
  MPoly<K> G = C.F.substitute(sub);
  MPoly<K> W = MPoly<K>::term(ctx, make_int<K>(ctx, 1), {0, 2, 1}) - MPoly<K>::term(ctx, make_int<K>(ctx, 1), {3, 0, 0}) -
               MPoly<K>::term(ctx, M.curve.a, {1, 0, 2}) - MPoly<K>::term(ctx, M.curve.b, {0, 0, 3});
  K scale = G.coeff({0, 2, 1});
  if (is_zero(scale)) return false;
  return G == scale * W;
}

}  // namespace tricover

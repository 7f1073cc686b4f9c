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
#include <optional>
#include <string>
#include <vector>

#include "tricover/cover/cover.hpp"
#include "tricover/elliptic/curve.hpp"
#include "tricover/elliptic/plane_cubic.hpp"
#include "tricover/errors.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"
#include "tricover/exactalg/tower.hpp"

namespace tricover {

// The fiber at alpha: f = (alpha^3 + 1) u^6 - 2u^3 + 1 = P^2 - Q^3 with
// P = u^3 - 1, Q = -alpha u^2, and E: z^3 + 3 alpha u^2 z - 2(u^3 - 1) = 0.
template <class K>
struct PencilFiber {
  K alpha;
  Poly<K> f, P, Q;
  PlaneCubic<K> cubic;  // in (T, U, Z)
  // alpha = 0: f = (u^3 - 1)^2 is not squarefree, so there is no cover; E is smooth.
  bool bad_genus2_reduction = false;
  std::optional<CoverData<K>> cover;
};

template <class K>
PlaneCubic<K> pencil_cubic(const K& alpha) {
  const auto ctx = FieldTraits<K>::context(alpha);
  auto I = [&](long v) { return make_int<K>(ctx, v); };
  MPoly<K> F(ctx, 3);
  F.add_term({0, 0, 3}, I(1));
  F.add_term({0, 2, 1}, I(3) * alpha);
  F.add_term({0, 3, 0}, I(-2));
  F.add_term({3, 0, 0}, I(2));
  return PlaneCubic<K>::make(F);
}

template <class K>
PencilFiber<K> build_fiber(const K& alpha) {
  const auto ctx = FieldTraits<K>::context(alpha);
  auto I = [&](long v) { return make_int<K>(ctx, v); };
  if (is_zero(alpha * alpha * alpha + I(1)))
    throw DomainError("discriminant_locus", "discriminant locus: alpha^3 = -1");
  PencilFiber<K> F;
  F.alpha = alpha;
  F.P = Poly<K>(ctx, {I(-1), I(0), I(0), I(1)});
  F.Q = Poly<K>(ctx, {I(0), I(0), -alpha});
  F.f = F.P * F.P - F.Q * F.Q * F.Q;
  F.cubic = pencil_cubic(alpha);
  F.bad_genus2_reduction = is_zero(alpha);
  if (!F.bad_genus2_reduction)
    F.cover = build_cover(SexticModel<K>::make(F.f), PowerGapRep<K>{F.P, F.Q, false});
  return F;
}

// A finite flex (1 : u : lambda u) of E: lambda is a root of
// alpha lambda^2 - 2 lambda - alpha^2 and (lambda^3 + 3 alpha lambda - 2) u^3 = -2.
// Exactly, the lambda level carries both lambda roots (lambda and
// 2/alpha - lambda); `lambda` selects one, and the u level is the generic
// cube root, standing for its three conjugate branches.
template <class K>
struct BasePoint {
  K alpha;
  LevelPtr<K> lambda_level;
  Ext<K> lambda;
  LevelPtr<Ext<K>> u_level;
  Ext<Ext<K>> u, z;
  int lambda_branch = 0;  // 0: the generator, 1: its conjugate 2/alpha - lambda
};

template <class K>
Poly<K> lambda_equation(const K& alpha) {
  const auto ctx = FieldTraits<K>::context(alpha);
  return Poly<K>(ctx, {-alpha * alpha, make_int<K>(ctx, -2), alpha});
}

// `lambda_level` and `u_level` override the default levels, e.g. by factors
// of their moduli after a zero divisor split the tower.
template <class K>
BasePoint<K> flex_branch(const K& alpha, int lambda_branch, LevelPtr<K> lambda_level = nullptr,
                         LevelPtr<Ext<K>> u_level = nullptr) {
  const auto ctx = FieldTraits<K>::context(alpha);
  auto I = [&](long v) { return make_int<K>(ctx, v); };
  if (is_zero(alpha)) throw DomainError("degenerate", "alpha = 0: the flex equations degenerate");
  if (is_zero(alpha * alpha * alpha + I(1)))
    throw DomainError("discriminant_locus", "discriminant locus: alpha^3 = -1");
  BasePoint<K> b;
  b.alpha = alpha;
  b.lambda_branch = lambda_branch;
  b.lambda_level = lambda_level ? lambda_level : make_level<K>("λ", lambda_equation(alpha));
  using E1 = Ext<K>;
  E1 g = E1::generator(b.lambda_level);
  b.lambda = lambda_branch == 0 ? g : lift(b.lambda_level, I(2) / alpha) - g;
  E1 c = b.lambda * b.lambda * b.lambda + lift(b.lambda_level, I(3) * alpha) * b.lambda - lift(b.lambda_level, I(2));
  E1 z1 = lift(b.lambda_level, I(0));
  // u^3 + 2 / c
  b.u_level = u_level ? u_level
                      : make_level<E1>("u", Poly<E1>(b.lambda_level, {lift(b.lambda_level, I(2)) / c, z1, z1,
                                                                      lift(b.lambda_level, I(1))}));
  b.u = Ext<E1>::generator(b.u_level);
  b.z = lift(b.u_level, b.lambda) * b.u;
  return b;
}

// Both lambda branches; each u level stands for three conjugate u branches.
template <class K>
std::vector<BasePoint<K>> flex_branches(const K& alpha) {
  auto L = make_level<K>("λ", lambda_equation(alpha));
  return {flex_branch(alpha, 0, L), flex_branch(alpha, 1, L)};
}

// Flexes of E_0: (u, z) with z u = 0 and the three points at infinity.
struct DegenerateFlexSet {
  QPoly u_zero_z;       // z^3 + 2 on u = 0
  QPoly z_zero_u;       // u^3 - 1 on z = 0
  QPoly infinity_z;     // z^3 - 2 on T = 0, U = 1
};
DegenerateFlexSet degenerate_flexes();

// E_0: z^3 - 2u^3 + 2 = 0.  The three points (1 : 0 : z) with z^3 = -2 over
// the splitting field, first point as origin; orders of p2 - p1, p3 - p2, p3 - p1.
struct DegenerateFiberCheck {
  QPoly z_modulus;
  std::array<long, 3> difference_orders{0, 0, 0};
};
DegenerateFiberCheck degenerate_fiber_check();

// The three points of E over u = u(flex): p2 is the flex, p1 and p3 are the
// two roots of the residual quadratic z^2 + z2 z + z2^2 + 3 alpha u^2, p1 the
// generator of its level and p3 the conjugate.  p1 = p3 happens (the line
// u = const is tangent at p1, D of order 2); then the level has degree 1.  With p2 as origin,
// D = phi(p2) - phi(p1) = -phi(p1) and the section's components agree iff
// phi(p1) + phi(p3) = O.
template <class K>
struct SectionValue {
  using T1 = Ext<K>;
  using T2 = Ext<T1>;
  using T3 = Ext<T2>;
  LevelPtr<T2> z_level;
  WeierstrassModel<T2> model;  // flex origin, over the u level
  WeierstrassCurve<T3> curve;
  std::array<ProjPoint<T3>, 3> points;
  std::array<ECPoint<T3>, 3> images;
  ECPoint<T3> D;
  bool equal_components = false;
  bool p1_equals_p3 = false;
  T1 tau;  // x(D)^3 / b: invariant under scaling, lies in the lambda level
};

namespace detail {

template <class K>
Ext<K> project_down(const Ext<Ext<K>>& e, const char* what) {
  if (!e.in_base()) throw std::logic_error(std::string(what) + " does not descend");
  return e.coord(0);
}

}  // namespace detail

template <class K>
SectionValue<K> section(const BasePoint<K>& b, LevelPtr<Ext<Ext<K>>> z_level = nullptr) {
  using S = SectionValue<K>;
  using T2 = typename S::T2;
  using T3 = typename S::T3;
  const auto ctx = FieldTraits<K>::context(b.alpha);
  auto I = [&](long v) { return make_int<K>(ctx, v); };
  auto up1 = [&](const K& x) { return lift(b.u_level, lift(b.lambda_level, x)); };
  S s;
  PlaneCubic<T2> C2 = PlaneCubic<T2>::make(pencil_cubic(b.alpha).F.map(up1, b.u_level));
  ProjPoint<T2> flex{up1(I(1)), b.u, b.z};
  s.model = cubic_to_weierstrass(C2, flex);
  if (!is_zero(s.model.curve.a)) throw std::logic_error("pencil fiber is not of j-invariant 0");

  // z^2 + z2 z + (z2^2 + 3 alpha u^2) over the u level.
  T2 c0 = b.z * b.z + up1(I(3) * b.alpha) * b.u * b.u;
  T2 disc = b.z * b.z - up1(I(4)) * c0;
  T2 at_flex = up1(I(3)) * b.z * b.z + c0;  // residual quadratic at z2
  if (is_zero(at_flex)) throw DomainError("discriminant_locus", "discriminant locus: p1 or p3 is the flex");
  at_flex.inverse();  // splits the tower if it is a zero divisor
  s.p1_equals_p3 = is_zero(disc);
  if (!s.p1_equals_p3) disc.inverse();
  if (z_level)
    s.z_level = z_level;
  else if (s.p1_equals_p3)
    s.z_level = make_level<T2>("ζ", Poly<T2>(b.u_level, {b.z / up1(I(2)), up1(I(1))}));
  else
    s.z_level = make_level<T2>("ζ", Poly<T2>(b.u_level, {c0, b.z, up1(I(1))}));
  auto up = [&](const T2& x) { return lift(s.z_level, x); };
  T3 z1 = T3::generator(s.z_level);
  T3 z3 = -up(b.z) - z1;
  T3 one = up(up1(I(1))), u = up(b.u);
  s.points = {ProjPoint<T3>{one, u, z1}, ProjPoint<T3>{one, u, up(b.z)}, ProjPoint<T3>{one, u, z3}};

  s.curve = {up(s.model.curve.a), up(s.model.curve.b)};
  BirationalChange<T3> ch;
  ch.forward = Matrix<T3>(3, std::vector<T3>(3, up(up1(I(0)))));
  ch.inverse = ch.forward;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ch.forward[i][j] = up(s.model.change.forward[i][j]);
      ch.inverse[i][j] = up(s.model.change.inverse[i][j]);
    }
  for (int i = 0; i < 3; ++i) {
    s.images[i] = map_to_weierstrass(ch, s.points[i]);
    require_on_curve(s.curve, s.images[i]);
  }
  if (!s.images[1].infinity) throw std::logic_error("flex does not map to the origin");
  s.D = ec_add(s.curve, s.images[1], ec_neg(s.images[0]));
  s.equal_components = ec_add(s.curve, s.images[0], s.images[2]).infinity;
  if (s.D.infinity) throw DomainError("discriminant_locus", "discriminant locus: p1 is the flex");
  T3 tau3 = s.D.x * s.D.x * s.D.x / s.curve.b;
  s.tau = detail::project_down(detail::project_down(tau3, "tau"), "tau");
  return s;
}

// P_n(tau): for y^2 = x^3 + b the x-polynomial of the nonzero points with
// nP = O is weighted homogeneous (x weight 2, b weight 6), so its roots are
// cut out by a polynomial in tau = x^3 / b.
QPoly torsion_tau_poly(int n);

// Squarefree primitive integer polynomial whose roots contain every alpha at
// which D has order dividing n on some branch.
QPoly torsion_param_poly(int n, int max_n = 12);

}  // namespace tricover

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
#include <string>
#include <utility>

#include "tricover/elliptic/plane_cubic.hpp"
#include "tricover/errors.hpp"
#include "tricover/genus2/sextic.hpp"

namespace tricover {

// Cyclic cubic cover w^3 = v + P(u) of v^2 = f(u) = P^2 - Q^3, with deck
// map (u, v, w) -> (u, v, theta w).
template <class K>
struct CoverData {
  Poly<K> f, P, Q;
  K ramification_resultant;  // Res_u(P, f); zero iff v + P and v - P share a zero
  int base_genus = 2;
  int degree = 3;
  int genus = 0;  // from Riemann-Hurwitz
};

// Riemann-Hurwitz for an unramified cover: 2 g' - 2 = d (2 g - 2).
inline int unramified_cover_genus(int base_genus, int degree) { return (degree * (2 * base_genus - 2) + 2) / 2; }

template <class K>
CoverData<K> build_cover(const SexticModel<K>& M, const PowerGapRep<K>& R) {
  if (!power_gap_verify(M.f, R.P, R.Q)) throw DomainError("identity_failure", "f differs from P^2 - Q^3");
  if (R.P.degree() != 3 || R.Q.degree() > 2)
    throw DomainError("bad_degree", "cover data needs deg P = 3 and deg Q <= 2");
  CoverData<K> C{M.f, R.P, R.Q, resultant(R.P, M.f)};
  if (is_zero(C.ramification_resultant)) throw DomainError("cover_ramified", "cover ramified");
  C.genus = unramified_cover_genus(C.base_genus, C.degree);
  return C;
}

// Element sum_{i<2, j<3} c_ij(u) v^i w^j of K[u][v, w]/(v^2 - f, w^3 - v - P).
template <class K>
struct CoverRingElt {
  std::array<std::array<Poly<K>, 3>, 2> c;

  static CoverRingElt zero(const ContextOf<K>& ctx) {
    CoverRingElt r;
    for (auto& row : r.c) row.fill(Poly<K>(ctx));
    return r;
  }
  static CoverRingElt monomial(const Poly<K>& a, int i, int j) {
    CoverRingElt r = zero(a.context());
    r.c[i][j] = a;
    return r;
  }
  bool is_zero() const {
    for (const auto& row : c)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  }
  friend CoverRingElt operator+(CoverRingElt a, const CoverRingElt& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) a.c[i][j] += b.c[i][j];
    return a;
  }
  friend CoverRingElt operator-(CoverRingElt a, const CoverRingElt& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) a.c[i][j] -= b.c[i][j];
    return a;
  }
  static CoverRingElt mul(const CoverRingElt& a, const CoverRingElt& b, const Poly<K>& f, const Poly<K>& P) {
    const auto ctx = f.context();
    // Unreduced product in v^i w^j, i <= 2, j <= 4.
    std::array<std::array<Poly<K>, 5>, 3> t;
    for (auto& row : t) row.fill(Poly<K>(ctx));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        if (a.c[i][j].is_zero()) continue;
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 3; ++l) t[i + k][j + l] += a.c[i][j] * b.c[k][l];
      }
    for (int j = 0; j < 5; ++j) {
      t[0][j] += f * t[2][j];
      t[2][j] = Poly<K>(ctx);
    }
    // w^3 = v + P; v w^3 = f + P v.
    for (int j = 4; j >= 3; --j) {
      Poly<K> x0 = t[0][j], x1 = t[1][j];
      t[0][j] = t[1][j] = Poly<K>(ctx);
      t[1][j - 3] += x0 + P * x1;
      t[0][j - 3] += P * x0 + f * x1;
    }
    CoverRingElt r = zero(ctx);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) r.c[i][j] = t[i][j];
    return r;
  }
};

// The cubic z^3 - 3 Q(u) z - 2 P(u) = 0, homogenized in (T:U:Z).
template <class K>
struct EllipticQuotient {
  PlaneCubic<K> cubic;
  bool identity_verified = false;
};

// (z w)^3 - 3 Q (z w) w^2 - 2 P w^3 with z w = w^2 + Q reduces to zero.
template <class K>
bool quotient_identity_holds(const CoverData<K>& C) {
  using R = CoverRingElt<K>;
  const auto ctx = C.f.context();
  R w = R::monomial(Poly<K>::constant(ctx, 1), 0, 1);
  R zw = R::monomial(Poly<K>::constant(ctx, 1), 0, 2) + R::monomial(C.Q, 0, 0);
  auto mul = [&](const R& a, const R& b) { return R::mul(a, b, C.f, C.P); };
  R w2 = mul(w, w), w3 = mul(w2, w);
  R lhs = mul(mul(zw, zw), zw) - mul(R::monomial(make_int<K>(ctx, 3) * C.Q, 0, 0), mul(zw, w2)) -
          mul(R::monomial(make_int<K>(ctx, 2) * C.P, 0, 0), w3);
  return lhs.is_zero();
}

template <class K>
MPoly<K> homogenize_tuz(const Poly<K>& p, int z_power, int total) {
  // p(U/T) T^(total - z_power) Z^z_power in variables (T, U, Z).
  const auto ctx = p.context();
  MPoly<K> r(ctx, 3);
  for (int k = 0; k <= p.degree(); ++k)
    r.add_term({total - z_power - k, k, z_power}, p.coeff(k));
  return r;
}

template <class K>
EllipticQuotient<K> elliptic_quotient(const CoverData<K>& C) {
  const auto ctx = C.f.context();
  MPoly<K> F = MPoly<K>::term(ctx, make_int<K>(ctx, 1), {0, 0, 3}) -
               homogenize_tuz(make_int<K>(ctx, 3) * C.Q, 1, 3) - homogenize_tuz(make_int<K>(ctx, 2) * C.P, 0, 3);
  EllipticQuotient<K> E{PlaneCubic<K>::make(F), quotient_identity_holds(C)};
  if (!E.identity_verified) throw DomainError("identity_failure", "z^3 - 3Qz - 2P does not vanish on the cover");
  return E;
}

// (u, v, w) with v^2 = f(u) and w^3 = v + P(u), over a tower T above K.
template <class T>
struct CoverPoint {
  T u, v, w;
};

template <class K, class T, class Embed>
bool on_cover(const CoverData<K>& C, const CoverPoint<T>& p, Embed embed) {
  return is_zero(p.v * p.v - C.f.eval_in(p.u, embed)) && is_zero(p.w * p.w * p.w - p.v - C.P.eval_in(p.u, embed));
}

// phi(u, v, w) = (1 : u : w + Q(u)/w) on the cubic.
template <class K, class T, class Embed>
ProjPoint<T> phi(const CoverData<K>& C, const CoverPoint<T>& p, Embed embed) {
  if (is_zero(p.w)) throw DomainError("pole", "z = w + Q/w has a pole at w = 0");
  T z = p.w + C.Q.eval_in(p.u, embed) / p.w;
  return {one_like(p.u), p.u, z};
}

template <class T>
CoverPoint<T> deck(const CoverPoint<T>& p, const T& theta) {
  return {p.u, p.v, theta * p.w};
}

// sigma(p) = (phi(p), phi(p^g)).
template <class K, class T, class Embed>
std::pair<ProjPoint<T>, ProjPoint<T>> sigma_eval(const CoverData<K>& C, const CoverPoint<T>& p, const T& theta,
                                                 Embed embed) {
  if (!on_cover(C, p, embed)) throw DomainError("off_cover", "point is not on the cover");
  return {phi(C, p, embed), phi(C, deck(p, theta), embed)};
}

// phi(p), phi(p^g), phi(p^g^2): the three points of the cubic over u.
template <class K, class T, class Embed>
std::array<ProjPoint<T>, 3> fiber_images(const CoverData<K>& C, const CoverPoint<T>& p, const T& theta, Embed embed) {
  if (!on_cover(C, p, embed)) throw DomainError("off_cover", "point is not on the cover");
  CoverPoint<T> p1 = deck(p, theta), p2 = deck(p1, theta);
  return {phi(C, p, embed), phi(C, p1, embed), phi(C, p2, embed)};
}

// Lower bounds for the degree of F(u, v) = 0, the image of Y in G_m^2, by
// the genus of the image (u, v with divisors n(p2 - p1), n(p3 - p1)).
// k(Y)/k(u, v) has degree m | n and is totally ramified over three points,
// so Hurwitz gives 2 g_Y - 2 >= m (2 g* - 2) + 3 (m - 1).
struct DegreeBoundsReport {
  long n = 1;
  int genus_Y = 4;
  long m_max_genus_ge2 = 1;  // floor((2 g_Y + 1) / 5)
  long degree_genus_ge2 = 1;  // ceil(n / m_max); exactly n when m_max = 1
  bool exact_genus_ge2 = true;
  long m_max_genus1 = 3;  // floor((2 g_Y + 1) / 3)
  long degree_genus1 = 1;  // ceil(n / m_max)
  bool genus0_possible = true;  // n <= 2 g_Y + 1 (functional abc on c3 u + c4 v = 1)
  long genus0_bound = 9;
};

DegreeBoundsReport image_degree_bounds(long n, int genus_Y = 4);

}  // namespace tricover

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
#include "tricover/exactalg/linalg.hpp"
#include "tricover/exactalg/mpoly.hpp"
#include "tricover/exactalg/series.hpp"
#include "tricover/genus2/sextic.hpp"

namespace tricover {

// a(u) + b(u) v modulo v^2 = f(u).
template <class K>
struct HypElt {
  Poly<K> a, b;

  static HypElt mul(const HypElt& x, const HypElt& y, const Poly<K>& f) {
    return {x.a * y.a + x.b * y.b * f, x.a * y.b + x.b * y.a};
  }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

// (A(u) + B(u) v) / (u - u0)^k on v^2 = f(u).
template <class K>
struct HypFunction {
  Poly<K> A, B;
  K u0;
  int k = 0;

  std::string str(const std::string& u = "u", const std::string& v = "v") const {
    std::string num = "(" + A.str(u) + ")";
    if (!B.is_zero()) num += " + (" + B.str(u) + ")*" + v;
    if (k == 0) return num;
    Poly<K> t = Poly<K>::x(A.context()) - Poly<K>(u0);
    return "(" + num + ")/(" + t.str(u) + ")^" + std::to_string(k);
  }
};

template <class K>
struct QuarticSingularPoint {
  K z, w;
  // "node" (nondegenerate quadratic part), "cusp" (rank-one quadratic part
  // whose square root direction meets the cubic part) or "higher".
  std::string type;
  bool nodal() const { return type == "node"; }
};

// F(z, w) = 0 with z in L(3 q0), w in L(4 q0); variables ordered (z, w).
template <class K>
struct QuarticModel {
  MPoly<K> F;
  HypFunction<K> z, w;
  CurvePoint<K> q0;
  int dim_L3 = 0, dim_L4 = 0;
  // Affine singular points with coordinates in K and the count over the
  // algebraic closure (filled by analyze_singularities).
  std::vector<QuarticSingularPoint<K>> singular;
  int singular_count = -1;
  bool smooth_at_infinity = false;
};

namespace detail {

// Laurent expansion at q0 in t = u - u0, absolute precision `prec`.
template <class K>
Series<K> expand_at(const HypFunction<K>& h, const Series<K>& vplus, int prec) {
  const auto ctx = h.A.context();
  Poly<K> shift = Poly<K>::x(ctx) + Poly<K>(h.u0);
  Series<K> a(h.A.compose(shift), prec + h.k), b(h.B.compose(shift), prec + h.k);
  return (a + b * vplus).shift(-h.k).truncate(prec);
}

// Basis of L(m q0): functions (A + B v) / t^m with deg A <= m and
// deg B <= m - 3 (regular at both points at infinity) whose numerator
// vanishes to order m at the involute q0'.  Coefficients are taken in the
// t-basis and moved back to u.
template <class K>
std::vector<HypFunction<K>> riemann_roch_basis(const Poly<K>& f, const CurvePoint<K>& q0, const Series<K>& vplus, int m) {
  const auto ctx = f.context();
  const K zero = make_int<K>(ctx, 0);
  const int na = m + 1, nb = std::max(0, m - 2);
  Matrix<K> M(m, std::vector<K>(na + nb, zero));
  for (int r = 0; r < m; ++r) {
    M[r][r] = make_int<K>(ctx, 1);
    // numerator at q0' is A(t) - B(t) v+(t)
    for (int j = 0; j < nb && j <= r; ++j) M[r][na + j] = -vplus.coeff(r - j);
  }
  auto ker = kernel(M, zero, na + nb);
  Poly<K> back = Poly<K>::x(ctx) - Poly<K>(q0.u);
  std::vector<HypFunction<K>> out;
  for (const auto& vec : ker) {
    Poly<K> A(ctx, std::vector<K>(vec.begin(), vec.begin() + na));
    Poly<K> B(ctx, std::vector<K>(vec.begin() + na, vec.end()));
    out.push_back({A.compose(back), B.compose(back), q0.u, m});
  }
  return out;
}

template <class K>
HypFunction<K> raise_pole(const HypFunction<K>& h, int k) {
  Poly<K> t = Poly<K>::x(h.A.context()) - Poly<K>(h.u0);
  Poly<K> s = pow(t, static_cast<unsigned>(k - h.k));
  return {h.A * s, h.B * s, h.u0, k};
}

template <class K>
HypFunction<K> combine(const std::vector<std::pair<K, HypFunction<K>>>& terms, int k) {
  const auto ctx = terms.front().second.A.context();
  HypFunction<K> r{Poly<K>(ctx), Poly<K>(ctx), terms.front().second.u0, k};
  for (const auto& [c, h] : terms) {
    HypFunction<K> g = raise_pole(h, k);
    r.A += c * g.A;
    r.B += c * g.B;
  }
  return r;
}

}  // namespace detail

// Exact check F(z(u, v), w(u, v)) = 0 modulo v^2 - f(u).
template <class K>
bool quartic_relation_holds(const Poly<K>& f, const QuarticModel<K>& Q) {
  const auto ctx = f.context();
  Poly<K> t = Poly<K>::x(ctx) - Poly<K>(Q.z.u0);
  const int top = 15;
  HypElt<K> zero{Poly<K>(ctx), Poly<K>(ctx)};
  HypElt<K> one{Poly<K>::constant(ctx, 1), Poly<K>(ctx)};
  std::vector<HypElt<K>> zp{one}, wp{one};
  for (int i = 1; i <= 5; ++i) zp.push_back(HypElt<K>::mul(zp.back(), {Q.z.A, Q.z.B}, f));
  for (int i = 1; i <= 3; ++i) wp.push_back(HypElt<K>::mul(wp.back(), {Q.w.A, Q.w.B}, f));
  HypElt<K> acc = zero;
  for (const auto& [e, c] : Q.F.terms()) {
    int i = e[0], j = e[1];
    int weight = Q.z.k * i + Q.w.k * j;
    if (weight > top) return false;
    HypElt<K> m = HypElt<K>::mul(zp[i], wp[j], f);
    Poly<K> s = c * pow(t, static_cast<unsigned>(top - weight));
    acc.a += s * m.a;
    acc.b += s * m.b;
  }
  return acc.is_zero();
}

// Plane quartic model of v^2 = f(u) minus a finite non-special q0.
template <class K>
QuarticModel<K> quartic_model(const SexticModel<K>& M, const CurvePoint<K>& q0) {
  if (!q0.is_finite()) throw DomainError("infinite_point", "q0 must be a finite point");
  if (is_special(M, q0)) throw DomainError("special_point", "special point: use the degree-5 model instead");
  const auto ctx = M.f.context();
  const K zero = make_int<K>(ctx, 0), one = make_int<K>(ctx, 1);
  const int order = 40;        // absolute precision of the expansions
  const int guard = order + 16;
  Poly<K> shift = Poly<K>::x(ctx) + Poly<K>(q0.u);
  Series<K> vplus = series_sqrt(Series<K>(M.f.compose(shift), guard), q0.v);

  QuarticModel<K> out;
  out.q0 = q0;
  auto L3 = detail::riemann_roch_basis(M.f, q0, vplus, 3);
  auto L4 = detail::riemann_roch_basis(M.f, q0, vplus, 4);
  out.dim_L3 = static_cast<int>(L3.size());
  out.dim_L4 = static_cast<int>(L4.size());
  if (out.dim_L3 != 2 || out.dim_L4 != 3) throw DomainError("dimension_mismatch", "Riemann-Roch dimension mismatch");

  // z: exact pole of order 3, normalized to t^-3 + O(t) (no constant term).
  HypFunction<K> z;
  bool found = false;
  for (const auto& h : L3) {
    Series<K> s = detail::expand_at(h, vplus, 1);
    if (is_zero(s.coeff(-3))) continue;
    K c = one / s.coeff(-3);
    z = detail::combine<K>({{c, h}}, 3);
    K c0 = detail::expand_at(z, vplus, 1).coeff(0);
    z.A -= Poly<K>(c0) * pow(Poly<K>::x(ctx) - Poly<K>(q0.u), 3);
    found = true;
    break;
  }
  if (!found) throw DomainError("dimension_mismatch", "no function with a triple pole");
  // w: exact pole of order 4, normalized to t^-4 + O(t^-2) with zero constant term.
  HypFunction<K> w;
  found = false;
  for (const auto& h : L4) {
    Series<K> s = detail::expand_at(h, vplus, 1);
    if (is_zero(s.coeff(-4))) continue;
    HypFunction<K> g = detail::combine<K>({{one / s.coeff(-4), h}}, 4);
    K c3 = detail::expand_at(g, vplus, 1).coeff(-3);
    g = detail::combine<K>({{one, g}, {-c3, z}}, 4);
    K c0 = detail::expand_at(g, vplus, 1).coeff(0);
    g.A -= Poly<K>(c0) * pow(Poly<K>::x(ctx) - Poly<K>(q0.u), 4);
    w = g;
    found = true;
    break;
  }
  if (!found) throw DomainError("dimension_mismatch", "no function with a quadruple pole");
  out.z = z;
  out.w = w;

  // The 15 monomials of L(15 q0).
  const std::vector<std::pair<int, int>> mons = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {0, 1}, {1, 1},
                                                 {2, 1}, {3, 1}, {0, 2}, {1, 2}, {2, 2}, {0, 3}, {1, 3}};
  Series<K> zs = detail::expand_at(z, vplus, guard), ws = detail::expand_at(w, vplus, guard);
  std::vector<Series<K>> zp{Series<K>::constant(one, guard)}, wp{Series<K>::constant(one, guard)};
  for (int i = 1; i <= 5; ++i) zp.push_back(zp.back() * zs);
  for (int i = 1; i <= 3; ++i) wp.push_back(wp.back() * ws);
  const int lo = -15;
  Matrix<K> A(order - lo + 1, std::vector<K>(mons.size(), zero));
  for (std::size_t c = 0; c < mons.size(); ++c) {
    Series<K> s = zp[mons[c].first] * wp[mons[c].second];
    if (s.precision() < order) throw std::logic_error("expansion precision too low");
    for (int r = lo; r < order; ++r) A[r - lo][c] = s.coeff(r);
  }
  // Relation without z^5.
  A.push_back(std::vector<K>(mons.size(), zero));
  A.back()[5] = one;
  auto ker = kernel(A, zero, static_cast<int>(mons.size()));
  if (ker.size() != 1) throw DomainError("dimension_mismatch", "expected a single relation without z^5");
  auto rel = ker[0];
  K lead = rel[13];  // w^3
  if (is_zero(lead)) throw DomainError("dimension_mismatch", "relation lacks w^3");
  out.F = MPoly<K>(ctx, 2);
  for (std::size_t c = 0; c < mons.size(); ++c)
    if (!is_zero(rel[c])) out.F.add_term({mons[c].first, mons[c].second}, rel[c] / lead);
  if (!quartic_relation_holds(M.f, out)) throw std::logic_error("quartic relation failed the exact check");
  // Top form c z^4 and a w^3 term: the single point at infinity (0:1:0) is smooth.
  out.smooth_at_infinity = !is_zero(out.F.coeff({4, 0})) && !is_zero(out.F.coeff({0, 3})) &&
                           is_zero(out.F.coeff({3, 1})) && is_zero(out.F.coeff({2, 2})) && is_zero(out.F.coeff({1, 3}));
  return out;
}

// Fills `singular` and `singular_count` from resultants in w and gcds.
void analyze_singularities(QuarticModel<Rational>& Q);

}  // namespace tricover

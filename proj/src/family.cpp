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
#include "tricover/genus2/family.hpp"

#include <vector>

#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/text.hpp"
#include "tricover/exactalg/tower.hpp"

namespace tricover {

MPoly<Rational> reduce_monic(const MPoly<Rational>& P, const MPoly<Rational>& F, int var) {
  const int d = F.degree(var);
  std::vector<MPoly<Rational>> fc = F.coefficients_in(var);
  if (!(fc[d] == MPoly<Rational>::constant(NoContext{}, F.nvars(), 1)))
    throw std::invalid_argument("reduce_monic needs a monic divisor");
  std::vector<MPoly<Rational>> pc = P.coefficients_in(var);
  for (int e = static_cast<int>(pc.size()) - 1; e >= d; --e) {
    if (pc[e].is_zero()) continue;
    for (int k = 0; k < d; ++k)
      if (!fc[k].is_zero()) pc[e - d + k] -= pc[e] * fc[k];
  }
  MPoly<Rational> out(NoContext{}, P.nvars());
  for (int e = 0; e < std::min(d, static_cast<int>(pc.size())); ++e)
    out += pc[e] * MPoly<Rational>::var(NoContext{}, P.nvars(), var, e);
  return out;
}

namespace {

// Element num/den of the function field of F = 0 (F monic in y); both parts
// are kept reduced.
struct CurveFn {
  MPoly<Rational> num, den;
  const MPoly<Rational>* F;
  int y;

  CurveFn make(MPoly<Rational> n, MPoly<Rational> d) const {
    return {reduce_monic(n, *F, y), reduce_monic(d, *F, y), F, y};
  }
  CurveFn operator+(const CurveFn& o) const { return make(num * o.den + o.num * den, den * o.den); }
  CurveFn operator-(const CurveFn& o) const { return make(num * o.den - o.num * den, den * o.den); }
  CurveFn operator*(const CurveFn& o) const { return make(num * o.num, den * o.den); }
  CurveFn operator/(const CurveFn& o) const { return make(num * o.den, den * o.num); }
  bool is_zero() const { return num.is_zero(); }
};

CurveFn fn(const MPoly<Rational>& p, const MPoly<Rational>& F, int y) {
  return CurveFn{p, MPoly<Rational>::constant(NoContext{}, p.nvars(), 1), &F, y}.make(
      p, MPoly<Rational>::constant(NoContext{}, p.nvars(), 1));
}

CurveFn power(const CurveFn& b, int e) {
  CurveFn r = fn(MPoly<Rational>::constant(NoContext{}, b.num.nvars(), 1), *b.F, b.y);
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

// Evaluates G at (X, Y) in the function field (G has variables x, y, ...).
CurveFn eval_at(const MPoly<Rational>& G, const CurveFn& X, const CurveFn& Y, const MPoly<Rational>& F) {
  CurveFn acc = fn(MPoly<Rational>(NoContext{}, G.nvars()), F, 1);
  for (const auto& [e, c] : G.terms()) {
    std::vector<int> rest = e;
    rest[0] = rest[1] = 0;
    CurveFn t = fn(MPoly<Rational>::term(NoContext{}, c, rest), F, 1);
    acc = acc + t * power(X, e[0]) * power(Y, e[1]);
  }
  return acc;
}

const std::vector<std::string> kFamilyVars = {"x", "y", "u", "v"};  // u, v stand for a, b

}  // namespace

QuarticFamilyReport quartic_family_checks() {
  QuarticFamilyReport rep;
  MPoly<Rational> F = parse_mpoly("y^4+u*y^2-x*y-x^3+v*x^2", kFamilyVars);
  auto P = [&](const char* s) { return fn(parse_mpoly(s, kFamilyVars), F, 1); };
  CurveFn x = P("x"), y = P("y"), a = P("u"), b = P("v");
  CurveFn one = P("1");

  for (long c : {2L, 1L}) {
    CurveFn C = P(c == 2 ? "2" : "1");
    CurveFn X = C * power(x, 4) / power(y, 4) - x;
    CurveFn Y = C * power(x, 3) / power(y, 3) - y;
    bool preserves = eval_at(F, X, Y, F).is_zero();
    CurveFn X2 = C * power(X, 4) / power(Y, 4) - X;
    CurveFn Y2 = C * power(X, 3) / power(Y, 3) - Y;
    bool invol = (X2 - x).is_zero() && (Y2 - y).is_zero();
    if (c == 2) {
      rep.involution_preserves_curve = preserves;
      rep.involution_is_involution = invol;
    } else {
      rep.half_involution_preserves_curve = preserves;
      rep.half_involution_is_involution = invol;
    }
  }

  CurveFn lam = y / x;
  CurveFn l4 = power(lam, 4);
  CurveFn mu = one / l4 - x;
  rep.sextic_identity = (mu * mu - (a * power(lam, 6) + power(lam, 5) + b * l4 - one)).is_zero();
  CurveFn m2 = P("2") * l4 * x - one;
  rep.sextic_identity_rescaled =
      (m2 * m2 - (one + P("4") * power(lam, 5) - P("4") * a * power(lam, 6) - P("4") * b * l4)).is_zero();

  // Singularities: the origin, and uniqueness for generic (a, b) through a
  // specialization where the eliminants keep their (constant) leading terms.
  MPoly<Rational> Fx = F.derivative(0), Fy = F.derivative(1);
  std::vector<Rational> origin(4, Rational(0));
  rep.origin_singular = true;
  for (const auto* G : {&F, &Fx, &Fy}) {
    for (const auto& [e, c] : G->terms())
      if (e[0] == 0 && e[1] == 0) rep.origin_singular = false;
  }
  {
    // On F_y = 0, x = 4y^3 + 2ay.
    const NoContext q;
    MPoly<Rational> xs = parse_mpoly("4y^3+2u*y", kFamilyVars);
    MPoly<Rational> xs0 = parse_mpoly("4y^3+4/3y", kFamilyVars);  // a = 2/3
    std::vector<MPoly<Rational>> sub = {xs0, MPoly<Rational>::var(q, 4, 1), MPoly<Rational>::constant(q, 4, Rational(2, 3)),
                                        MPoly<Rational>::constant(q, 4, Rational(-5, 7))};
    QPoly g1 = F.substitute(sub).to_univariate(1);
    QPoly g2 = Fx.substitute(sub).to_univariate(1);
    QPoly g = gcd(g1, g2);
    bool lead_const = true;
    MPoly<Rational> G1 = F.substitute({xs, MPoly<Rational>::var(q, 4, 1), MPoly<Rational>::var(q, 4, 2),
                                       MPoly<Rational>::var(q, 4, 3)});
    MPoly<Rational> G2 = Fx.substitute({xs, MPoly<Rational>::var(q, 4, 1), MPoly<Rational>::var(q, 4, 2),
                                        MPoly<Rational>::var(q, 4, 3)});
    for (const auto* G : {&G1, &G2}) {
      auto parts = G->coefficients_in(1);
      lead_const = lead_const && parts.back().total_degree() == 0;
    }
    rep.unique_affine_singularity = lead_const && g == QPoly::x(q) && g1.degree() == G1.degree(1) &&
                                    g2.degree() == G2.degree(1);
  }
  // Top form y^4 and an x^3 term: the point (1:0:0) is the only point at
  // infinity and dF/dt = -x^3 there.
  {
    bool top_is_y4 = true;
    for (const auto& [e, c] : F.terms())
      if (e[0] + e[1] == 4 && !(e[0] == 0 && e[1] == 4)) top_is_y4 = false;
    rep.one_smooth_point_at_infinity = top_is_y4 && !F.coeff({3, 0, 0, 0}).is_zero();
  }
  rep.genus = 3 - (rep.origin_singular && rep.unique_affine_singularity ? 1 : 0);
  return rep;
}

QuinticReport quintic_reduction_check(std::optional<Rational> a) {
  QuinticReport rep;
  const std::vector<std::string> vars = {"x", "y", "u"};
  const NoContext q;
  MPoly<Rational> F = parse_mpoly("y^4-u*x*y-x^3", vars);
  if (a) {
    F = F.substitute({MPoly<Rational>::var(q, 3, 0), MPoly<Rational>::var(q, 3, 1), MPoly<Rational>::constant(q, 3, *a)});
    rep.degenerate = a->is_zero();
  }
  auto P = [&](const char* s) {
    MPoly<Rational> p = parse_mpoly(s, vars);
    if (a) p = p.substitute({MPoly<Rational>::var(q, 3, 0), MPoly<Rational>::var(q, 3, 1), MPoly<Rational>::constant(q, 3, *a)});
    return p;
  };
  rep.y8_identity = reduce_monic(P("y^8-x^2(x^2+u*y)^2"), F, 1).is_zero();
  CurveFn w = fn(P("x^2"), F, 1) / fn(P("y"), F, 1);
  CurveFn av = fn(P("u"), F, 1);
  rep.w_identity = (w * (w + av) * (w + av) - power(fn(P("y"), F, 1), 5)).is_zero();

  auto L = make_level<Rational>("θ", parse_poly("x^4+x^3+x^2+x+1", "x"));
  using T = Ext<Rational>;
  auto lift_poly = [&](const MPoly<Rational>& p) {
    return p.map([&](const Rational& c) { return lift(L, c); }, L);
  };
  T th = T::generator(L);
  MPoly<T> FT = lift_poly(F);
  MPoly<T> moved = FT.substitute({th * MPoly<T>::var(L, 3, 0), th * th * MPoly<T>::var(L, 3, 1), MPoly<T>::var(L, 3, 2)});
  rep.automorphism = (moved - th * th * th * FT).is_zero();
  T p = th;
  for (int k = 1; k <= 10; ++k, p = p * th)
    if (p == lift(L, Rational(1))) {
      rep.automorphism_order = k;
      break;
    }
  return rep;
}

}  // namespace tricover

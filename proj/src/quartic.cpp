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
#include "tricover/genus2/quartic.hpp"

#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"

namespace tricover {

namespace {

// F(z, w) as a polynomial in w over Q(z).
Poly<QAlpha> in_w(const MPoly<Rational>& F) {
  const NoContext q;
  std::vector<QAlpha> c(F.degree(1) + 1, QAlpha(q));
  auto parts = F.coefficients_in(1);
  for (std::size_t j = 0; j < parts.size(); ++j) c[j] = QAlpha(parts[j].to_univariate(0));
  return Poly<QAlpha>(q, c);
}

QPoly numerator_of(const QAlpha& r) { return r.num(); }

// Distinct singular points over the given level: gcd in w of F, F_z, F_w
// specialized at the generator z0.
template <class K>
Poly<K> singular_w_gcd(const MPoly<Rational>& F, const K& z0) {
  const auto ctx = FieldTraits<K>::context(z0);
  auto special = [&](const MPoly<Rational>& G) {
    auto parts = G.coefficients_in(1);
    std::vector<K> c;
    for (const auto& p : parts)
      c.push_back(p.to_univariate(0).eval_in(z0, [&](const Rational& x) { return FieldTraits<K>::from_rational(ctx, x); }));
    return Poly<K>(ctx, c);
  };
  Poly<K> g = gcd(special(F), special(F.derivative(1)));
  return gcd(g, special(F.derivative(0)));
}

// Type from the quadratic and cubic parts of F at a singular point.
std::string singularity_type(const MPoly<Rational>& F, const std::vector<Rational>& at) {
  MPoly<Rational> Fz = F.derivative(0), Fw = F.derivative(1);
  Rational fzz = Fz.derivative(0)(at), fzw = Fz.derivative(1)(at), fww = Fw.derivative(1)(at);
  if (!(fzz * fww - fzw * fzw).is_zero()) return "node";
  if (fzz.is_zero() && fzw.is_zero() && fww.is_zero()) return "higher";
  // Kernel direction (dz, dw) of the rank-one quadratic part.
  Rational dz = fzz.is_zero() ? Rational(1) : -fzw, dw = fzz.is_zero() ? Rational(0) : fzz;
  // Third directional derivative along (dz, dw).
  Rational c3(0);
  const int binom[4] = {1, 3, 3, 1};
  for (int i = 0; i <= 3; ++i) {
    MPoly<Rational> D = F;
    for (int k = 0; k < 3 - i; ++k) D = D.derivative(0);
    for (int k = 0; k < i; ++k) D = D.derivative(1);
    c3 += Rational(binom[i]) * D(at) * dz.pow(3 - i) * dw.pow(i);
  }
  return c3.is_zero() ? "higher" : "cusp";
}

}  // namespace

void analyze_singularities(QuarticModel<Rational>& Q) {
  const MPoly<Rational>& F = Q.F;
  MPoly<Rational> Fz = F.derivative(0), Fw = F.derivative(1);
  QPoly r1 = numerator_of(resultant(in_w(F), in_w(Fw)));
  QPoly r2 = numerator_of(resultant(in_w(Fz), in_w(Fw)));
  QPoly G = gcd(r1, r2);
  Q.singular.clear();
  Q.singular_count = 0;
  if (G.degree() < 1) return;
  G = squarefree_part(G);
  for (const Rational& z0 : rational_roots(G)) {
    Poly<Rational> g = singular_w_gcd(F, z0);
    for (const Rational& w0 : rational_roots(g)) {
      std::vector<Rational> at{z0, w0};
      std::string type = singularity_type(F, at);
      if (type == "higher") throw DomainError("higher_singularity", "singular point is worse than a node or cusp");
      Q.singular.push_back({z0, w0, type});
    }
    Q.singular_count += g.degree() < 1 ? 0 : squarefree_part(g).degree();
  }
  QPoly rest = strip_rational_roots(G);
  if (rest.degree() > 0) {
    // Irrational z-coordinates: one level per remaining factor, conjugates
    // contribute equally.
    auto L = make_level<Rational>("z", rest);
    try {
      Poly<Ext<Rational>> g = singular_w_gcd(F, Ext<Rational>::generator(L));
      if (g.degree() > 0) Q.singular_count += rest.degree() * squarefree_part(g).degree();
    } catch (const ZeroDivisorError<Rational>&) {
      throw DomainError("unsupported", "singular locus needs a split of the z-resultant");
    }
  }
}

}  // namespace tricover

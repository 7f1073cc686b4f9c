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
#include "tricover/pencil/pencil.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tricover/exactalg/text.hpp"

namespace tricover {

DegenerateFlexSet degenerate_flexes() {
  return {parse_poly("z^3+2", "z"), parse_poly("u^3-1", "u"), parse_poly("z^3-2", "z")};
}

DegenerateFiberCheck degenerate_fiber_check() {
  using Z1 = Ext<Rational>;
  using Z2 = Ext<Z1>;
  DegenerateFiberCheck out;
  out.z_modulus = parse_poly("z^3+2", "z");
  auto L1 = make_level<Rational>("z", out.z_modulus);
  auto L2 = make_level<Z1>("ω", Poly<Z1>(L1, {lift(L1, Rational(1)), lift(L1, Rational(1)), lift(L1, Rational(1))}));
  auto up = [&](const Rational& q) { return lift(L2, lift(L1, q)); };
  auto C = PlaneCubic<Z2>::make(pencil_cubic(Rational(0)).F.map(up, L2));
  const Z2 z = lift(L2, Z1::generator(L1)), w = Z2::generator(L2);
  const std::array<ProjPoint<Z2>, 3> pts = {ProjPoint<Z2>{up(Rational(1)), up(Rational(0)), z},
                                           ProjPoint<Z2>{up(Rational(1)), up(Rational(0)), w * z},
                                           ProjPoint<Z2>{up(Rational(1)), up(Rational(0)), w * w * z}};
  auto M = cubic_to_weierstrass(C, pts[0]);
  std::array<ECPoint<Z2>, 3> img;
  for (int i = 0; i < 3; ++i) {
    if (!is_zero(C(pts[i]))) throw std::logic_error("point over u = 0 is off the cubic");
    img[i] = map_to_weierstrass(M.change, pts[i]);
  }
  auto order = [&](const ECPoint<Z2>& P) -> long {
    ECPoint<Z2> acc = P;
    for (long k = 1; k <= 12; ++k, acc = ec_add(M.curve, acc, P))
      if (acc.infinity) return k;
    return 0;
  };
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {1, 2}, {0, 2}}};
  for (int k = 0; k < 3; ++k) {
    auto [i, j] = pairs[k];
    out.difference_orders[k] = order(ec_add(M.curve, img[j], ec_neg(img[i])));
  }
  return out;
}

QPoly torsion_tau_poly(int n) {
  if (n < 2) throw std::invalid_argument("torsion order must be at least 2");
  WeierstrassCurve<Rational> E{Rational(0), Rational(1)};
  QPoly g = torsion_condition(E, n);
  int i0 = -1;
  for (int i = 0; i <= g.degree(); ++i) {
    if (g.coeff(i).is_zero()) continue;
    if (i0 < 0) i0 = i % 3;
    if (i % 3 != i0) throw std::logic_error("torsion condition is not weighted homogeneous");
  }
  std::vector<Rational> c((g.degree() - i0) / 3 + 1 + (i0 > 0 ? 1 : 0), Rational(0));
  for (int i = i0; i <= g.degree(); i += 3) c[(i - i0) / 3 + (i0 > 0 ? 1 : 0)] = g.coeff(i);
  return QPoly(NoContext{}, c);
}

QPoly torsion_param_poly(int n, int max_n) {
  if (n < 2 || n > max_n) throw std::invalid_argument("torsion order out of range");
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  static const SectionValue<QAlpha> generic = section(flex_branch(QAlpha::variable(NoContext{}), 0));
  const auto& L = generic.tau.level();
  Ext<QAlpha> e = torsion_tau_poly(n).eval_in(generic.tau, [&](const Rational& q) {
    return lift(L, QAlpha(QPoly(q)));
  });
  QAlpha N = e.norm();
  if (N.is_zero()) throw DomainError("identically_torsion", "section identically torsion, investigate");
  QPoly T = primitive_integer(squarefree_part(N.num()));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, T);
  return T;
}

}  // namespace tricover

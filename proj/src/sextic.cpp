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
#include "tricover/genus2/sextic.hpp"

#include <numeric>
#include <set>

namespace tricover {

std::vector<SpecialPoint> weierstrass_points(const SexticModel<Rational>& M) {
  std::vector<SpecialPoint> out;
  const NoContext q;
  for (const Rational& r : rational_roots(M.f)) {
    SpecialPoint s;
    s.level = make_level<Rational>("u", QPoly(q, {-r, Rational(1)}));
    s.approx = Complex(r.to_double(), 0.0);
    out.push_back(s);
  }
  QPoly rest = strip_rational_roots(M.f);
  if (rest.degree() > 0) {
    auto level = make_level<Rational>("u", rest);
    for (const Complex& z : complex_roots(rest, 1e-8)) {
      SpecialPoint s;
      s.level = level;
      s.approx = z;
      out.push_back(s);
    }
  }
  if (M.f.degree() == 5) {
    SpecialPoint s;
    s.infinity = true;
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> rationals_of_height(long h) {
  std::set<Rational> s;
  for (long d = 1; d <= h; ++d)
    for (long n = -h; n <= h; ++n)
      if (std::gcd(n, d) == 1) s.insert(Rational(n, d));
  return {s.begin(), s.end()};
}

namespace {

bool within_height(const Rational& x, long h) {
  return abs(x.num()) <= h && x.den() <= h;
}

// Monic-free square root of a degree-6 polynomial by top-down elimination:
// the cubic P with P^2 = g and positive leading coefficient, if any.
bool cubic_sqrt(const QPoly& g, QPoly* P) {
  if (g.degree() != 6) return false;
  Rational r;
  if (!rational_root(g.coeff(6), 2, &r)) return false;
  std::vector<Rational> p(4);
  p[3] = r;
  for (int k = 2; k >= 0; --k) {
    Rational acc = g.coeff(3 + k);
    for (int i = k + 1; i <= 3; ++i) {
      int j = 3 + k - i;
      if (j > k && j <= 3) acc -= p[i] * p[j];
    }
    p[k] = acc / (Rational(2) * p[3]);
  }
  *P = QPoly(NoContext{}, p);
  return *P * *P == g;
}

}  // namespace

std::vector<PowerGapRep<Rational>> power_gap_search(const QPoly& f, long height_bound) {
  std::vector<PowerGapRep<Rational>> out;
  if (f.degree() > 6 || height_bound < 1) return out;
  const auto hs = rationals_of_height(height_bound);
  const NoContext q;
  for (const auto& q2 : hs)
    for (const auto& q1 : hs)
      for (const auto& q0 : hs) {
        QPoly Q(q, {q0, q1, q2});
        QPoly P;
        if (!cubic_sqrt(f + Q * Q * Q, &P)) continue;
        bool ok = true;
        for (const auto& c : P.coeffs()) ok = ok && within_height(c, height_bound);
        if (!ok) continue;
        out.push_back({P, Q, Q.is_zero()});
        out.push_back({-P, Q, Q.is_zero()});
      }
  return out;
}

RigidityVerdict rigidity_check(const Poly<QAlpha>& P, const Poly<QAlpha>& Q) {
  Poly<QAlpha> f = P * P - Q * Q * Q;
  if (!d_param(f).is_zero()) throw DomainError("not_a_family", "not a family over fixed f: P^2 - Q^3 depends on t");
  Poly<QAlpha> dP = d_param(P), dQ = d_param(Q);
  if (dP.is_zero() && dQ.is_zero()) return {"constant family", "dP = dQ = 0"};
  Poly<QAlpha> g = gcd(P, Q);
  if (g.degree() > 0) return {"common factor", "gcd(P, Q) = " + g.str("u")};
  return {"contradiction", "2(dP)P = 3(dQ)Q^2 with gcd(P,Q) = 1 forces P | dQ, but deg dQ = " +
                               std::to_string(dQ.degree()) + " < deg P = " + std::to_string(P.degree())};
}

}  // namespace tricover

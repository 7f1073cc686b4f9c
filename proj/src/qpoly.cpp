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
#include "tricover/exactalg/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricover {

QPoly primitive_integer(const QPoly& f) {
  if (f.is_zero()) return f;
  mpz_class l = 1, g = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    ints.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return QPoly(NoContext{}, std::move(out));
}

FpPoly reduce_mod(const QPoly& f, std::uint32_t p) {
  std::vector<Fp> c;
  for (const auto& x : f.coeffs()) c.push_back(Fp::from_rational(p, x));
  return FpPoly(p, std::move(c));
}

namespace {

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

// Rational reconstruction of r mod m with |num| <= N, 0 < den <= D.
bool reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& N, const mpz_class& D, Rational* out) {
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > N) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > D) return false;
  *out = Rational(r1, t1);
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& f) {
  std::vector<Rational> roots;
  if (f.is_zero()) throw std::domain_error("zero input");
  QPoly g = primitive_integer(squarefree_part(f));
  // Strip the root 0.
  if (g.degree() >= 1 && g.coeffs()[0].is_zero()) {
    roots.emplace_back(0);
    g = primitive_integer(g / QPoly::x(NoContext{}));
  }
  if (g.degree() < 1) return roots;
  std::vector<mpz_class> c;
  for (const auto& x : g.coeffs()) c.push_back(x.num());
  mpz_class N = abs(c.front()), D = abs(c.back());
  QPoly dg = g.derivative();
  // A good prime keeps the degree and the roots simple.
  std::uint32_t p = 3;
  for (;; p += 2) {
    if (!is_prime_u32(p)) continue;
    if (mpz_class(c.back() % p) == 0) continue;
    FpPoly gp = reduce_mod(g, p);
    if (gcd(gp, gp.derivative()).degree() == 0) break;
  }
  FpPoly gp = reduce_mod(g, p);
  mpz_class bound = 2 * N * D + 1;
  std::vector<mpz_class> dc;
  for (const auto& x : dg.coeffs()) dc.push_back(x.num());
  for (const Fp& r0 : ff_poly_roots(gp)) {
    mpz_class m = p, r = r0.value();
    while (m <= bound) {
      mpz_class m2 = m * m;
      mpz_class fv = eval_mod(c, r, m2), dv = eval_mod(dc, r, m2), inv;
      if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t())) break;
      r = (r - fv * inv) % m2;
      if (r < 0) r += m2;
      m = m2;
    }
    Rational q;
    if (reconstruct(r, m, N, D, &q) && g(q).is_zero()) roots.push_back(q);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

std::vector<mpz_class> integer_coeffs(const QPoly& f) {
  std::vector<mpz_class> c;
  for (const auto& x : f.coeffs()) c.push_back(x.num());
  return c;
}

FpPoly reduce_int(const std::vector<mpz_class>& c, std::uint32_t p) {
  std::vector<Fp> r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(p, mpz_class(x % p).get_si());
  return FpPoly(p, std::move(r));
}

QPoly euclid_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace

// Brown's modular algorithm: gcds modulo word-size primes, scaled by
// gcd(lc a, lc b), combined by CRT until the lifted candidate divides both.
QPoly gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly::constant(NoContext{}, 1);
  if (a.degree() < 3 || b.degree() < 3) return euclid_gcd(a, b);
  QPoly A = primitive_integer(a), B = primitive_integer(b);
  std::vector<mpz_class> ca = integer_coeffs(A), cb = integer_coeffs(B);
  mpz_class lg;
  mpz_gcd(lg.get_mpz_t(), ca.back().get_mpz_t(), cb.back().get_mpz_t());
  std::vector<mpz_class> C;
  mpz_class M = 1;
  int deg = std::min(A.degree(), B.degree()) + 1;
  std::vector<mpz_class> last;
  for (std::uint32_t p = 2147483647u; p > 1000000u; p -= 2) {
    if (!is_prime_u32(p)) continue;
    if (mpz_class(lg % p) == 0 || mpz_class(ca.back() % p) == 0 || mpz_class(cb.back() % p) == 0) continue;
    FpPoly gp = gcd(reduce_int(ca, p), reduce_int(cb, p));
    if (gp.degree() == 0) return QPoly::constant(NoContext{}, 1);
    if (gp.degree() > deg) continue;
    gp = Fp(p, mpz_class(lg % p).get_si()) * gp;
    if (gp.degree() < deg) {
      deg = gp.degree();
      C.assign(deg + 1, 0);
      for (int i = 0; i <= deg; ++i) C[i] = gp.coeffs()[i].value();
      M = p;
      last.clear();
      continue;
    }
    mpz_class inv, pm = p;
    mpz_invert(inv.get_mpz_t(), mpz_class(M % p).get_mpz_t(), pm.get_mpz_t());
    for (int i = 0; i <= deg; ++i) {
      mpz_class diff = (mpz_class(gp.coeffs()[i].value()) - C[i]) % pm;
      if (diff < 0) diff += pm;
      C[i] += M * ((diff * inv) % pm);
    }
    M *= p;
    std::vector<mpz_class> sym(C);
    mpz_class half = M / 2;
    for (auto& x : sym)
      if (x > half) x -= M;
    if (sym != last) {
      last = sym;
      continue;
    }
    std::vector<Rational> rc;
    for (auto& x : sym) rc.emplace_back(x);
    QPoly H = primitive_integer(QPoly(NoContext{}, rc));
    if ((A % H).is_zero() && (B % H).is_zero()) return H.monic();
  }
  return euclid_gcd(a, b);
}

QPoly strip_rational_roots(const QPoly& f) {
  QPoly g = f;
  for (const Rational& r : rational_roots(f)) {
    QPoly lin = QPoly::x(NoContext{}) - QPoly(r);
    for (;;) {
      auto [q, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      g = q;
    }
  }
  return g;
}

}  // namespace tricover

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
#include "tricover/exactalg/ff.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tricover {

namespace {

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) { return (a * b) % f; }

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& f) {
  FpPoly r = FpPoly::constant(f.context(), 1) % f;
  base = base % f;
  while (e) {
    if (e & 1) r = mulmod(r, base, f);
    e >>= 1;
    if (e) base = mulmod(base, base, f);
  }
  return r;
}

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const FpPoly& g, std::mt19937_64& rng, std::vector<Fp>& out) {
  const std::uint32_t p = g.context();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeffs()[0]);
    return;
  }
  if (p == 2) {
    for (std::uint32_t v = 0; v < 2; ++v)
      if (g(Fp(p, v)).is_zero()) out.push_back(Fp(p, v));
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (;;) {
    FpPoly shift = FpPoly::x(p) + FpPoly(Fp(p, dist(rng)));
    FpPoly h = powmod(shift, (p - 1) / 2, g) - FpPoly::constant(p, 1);
    FpPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(g / d, rng, out);
      return;
    }
  }
}

}  // namespace

FpPoly powmod_x(std::uint64_t e, const FpPoly& f) { return powmod(FpPoly::x(f.context()), e, f); }

std::vector<Fp> ff_poly_roots(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("zero polynomial has no finite root set");
  std::vector<Fp> roots;
  if (f.degree() == 0) return roots;
  const std::uint32_t p = f.context();
  FpPoly fm = f.monic();
  FpPoly g = gcd(fm, powmod_x(p, fm) - FpPoly::x(p));
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<Fp> distinct;
  split_linear(g, rng, distinct);
  for (const Fp& r : distinct) {
    FpPoly lin = FpPoly::x(p) - FpPoly(r);
    FpPoly rest = fm;
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      roots.push_back(r);
      rest = q;
    }
  }
  std::sort(roots.begin(), roots.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
  return roots;
}

}  // namespace tricover

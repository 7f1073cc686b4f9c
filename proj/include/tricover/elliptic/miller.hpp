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
#include <utility>
#include <vector>

#include "tricover/elliptic/curve.hpp"
#include "tricover/errors.hpp"

namespace tricover {

// a x + b y + c raised to `exponent` (+1 or -1), with its affine zeros.
// Every factor has its poles at O only: three for a line with b != 0, two
// for a vertical.
template <class K>
struct MillerFactor {
  K a, b, c;
  int exponent = 1;
  std::vector<ECPoint<K>> zeros;

  K operator()(const ECPoint<K>& Q) const { return a * Q.x + b * Q.y + c; }
  int pole_order() const { return is_zero(b) ? 2 : 3; }
};

// Straight-line program for f with div f = n<P> - n<O>, as a product of
// lines and inverse verticals.
template <class K>
struct MillerProgram {
  long n = 1;
  ECPoint<K> point;
  std::vector<MillerFactor<K>> factors;

  std::size_t line_count() const {
    std::size_t k = 0;
    for (const auto& f : factors) k += f.exponent > 0;
    return k;
  }

  // Throws on the support of any factor.
  template <class Q>
  Q eval(const ECPoint<Q>& R, Q one) const {
    if (R.infinity) throw DomainError("on_support", "point at infinity is a pole");
    Q num = one, den = one;
    for (const auto& f : factors) {
      Q v = f(R);
      if (is_zero(v)) throw DomainError("on_support", "point lies on a factor of the Miller function");
      (f.exponent > 0 ? num : den) *= v;
    }
    return num / den;
  }

  // Formal divisor: affine points with multiplicities, then the order at O.
  std::pair<std::vector<std::pair<ECPoint<K>, long>>, long> divisor() const {
    std::vector<std::pair<ECPoint<K>, long>> pts;
    long at_inf = 0;
    auto bump = [&](const ECPoint<K>& R, long m) {
      for (auto& [S, k] : pts)
        if (S == R) {
          k += m;
          return;
        }
      pts.push_back({R, m});
    };
    for (const auto& f : factors) {
      for (const auto& z : f.zeros) bump(z, f.exponent);
      at_inf -= static_cast<long>(f.exponent) * f.pole_order();
    }
    std::vector<std::pair<ECPoint<K>, long>> out;
    for (auto& e : pts)
      if (e.second != 0) out.push_back(e);
    return {out, at_inf};
  }
};

namespace detail {

template <class K>
MillerFactor<K> line_through(const WeierstrassCurve<K>& E, const ECPoint<K>& A, const ECPoint<K>& B) {
  const K one = one_like(E.b), zero = zero_like(E.b);
  ECPoint<K> S = ec_add_unchecked(E, A, B);
  if (S.infinity) return {one, zero, -A.x, 1, {A, ec_neg(A)}};
  K slope = (A.x == B.x) ? (int_like(A.x, 3) * A.x * A.x + E.a) / (int_like(A.y, 2) * A.y) : (B.y - A.y) / (B.x - A.x);
  return {-slope, one, slope * A.x - A.y, 1, {A, B, ec_neg(S)}};
}

template <class K>
MillerFactor<K> vertical_at(const WeierstrassCurve<K>& E, const ECPoint<K>& R, int exponent) {
  return {one_like(E.b), zero_like(E.b), -R.x, exponent, {R, ec_neg(R)}};
}

}  // namespace detail

// Miller's loop f_{i+1} = f_i * l_{iP,P} / v_{(i+1)P}; the last step is the
// vertical through P and needs no denominator.
template <class K>
MillerProgram<K> miller_function(const WeierstrassCurve<K>& E, const ECPoint<K>& P, long n) {
  if (n < 1) throw std::domain_error("Miller function order must be positive");
  require_on_curve(E, P);
  if (!ec_mul_unchecked(E, n, P).infinity) throw DomainError("not_torsion", "n P is not O");
  MillerProgram<K> prog;
  prog.n = n;
  prog.point = P;
  if (P.infinity) return prog;
  long d = 1;  // exact order; f_n = f_d^(n/d)
  while (n % d != 0 || !ec_mul_unchecked(E, d, P).infinity) ++d;
  ECPoint<K> T = P;
  std::vector<MillerFactor<K>> once;
  for (long i = 1; i < d; ++i) {
    once.push_back(detail::line_through(E, T, P));
    T = ec_add_unchecked(E, T, P);
    if (i + 1 < d) once.push_back(detail::vertical_at(E, T, -1));
  }
  for (long r = 0; r < n / d; ++r) prog.factors.insert(prog.factors.end(), once.begin(), once.end());
  return prog;
}

}  // namespace tricover

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
// Shared helpers for the test suites: seeded random values and small
// independent oracles (Sylvester determinants, brute-force scans).
#pragma once

#include <random>
#include <vector>

#include "tricover/exactalg/linalg.hpp"
#include "tricover/exactalg/poly.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"
#include "tricover/exactalg/tower.hpp"

namespace testing_support {

using namespace tricover;

inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 g(20261016);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rat(long h = 9) {
  long d = rand_int(1, h);
  return Rational(rand_int(-h, h), d);
}

inline Rational rand_nonzero_rat(long h = 9) {
  for (;;) {
    Rational r = rand_rat(h);
    if (!r.is_zero()) return r;
  }
}

inline QPoly rand_qpoly(int deg, long h = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_rat(h));
  if (c.back().is_zero()) c.back() = Rational(1);
  return QPoly(NoContext{}, c);
}

// Sylvester matrix determinant: a resultant oracle independent of the
// Euclidean remainder sequence.
template <class K>
K sylvester_resultant(const Poly<K>& f, const Poly<K>& g) {
  const int m = f.degree(), n = g.degree();
  const K zero = f.zero();
  Matrix<K> S(m + n, std::vector<K>(m + n, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[i][i + j] = f.coeffs()[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[n + i][i + j] = g.coeffs()[n - j];
  return determinant(S);
}

}  // namespace testing_support

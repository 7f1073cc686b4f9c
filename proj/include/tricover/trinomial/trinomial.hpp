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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricover/exactalg/rational.hpp"

namespace tricover {

// x^n + a x^r y^s + b y^m = 0.  Absent coefficients stay symbolic.
struct TrinomialCurve {
  long n = 0, r = 0, s = 0, m = 0;
  std::optional<Rational> a, b;
};

// Diagonal form U M V = diag(d1, d2) of a 2x2 integer matrix with d1 | d2,
// d_i >= 0, and U, V unimodular.
struct SmithForm2 {
  std::array<std::array<long, 2>, 2> U{}, V{};
  long d1 = 0, d2 = 0;
};
SmithForm2 smith_form(const std::array<std::array<long, 2>, 2>& M);

struct TrinomialReport {
  long delta = 0;  // |nm - rm - sn|
  bool degenerate = false;
  long exponent_gcd = 0;  // gcd(m, n, r, s)
  long d1 = 0, d2 = 0;    // the acting group is Z/d1 x Z/d2
  bool cyclic = false;
  std::string classification;  // "possibly-infinite", "finite" or "degenerate"
  // x -> zeta^p x, y -> zeta^q y with zeta a primitive delta-th root: two
  // generators (p, q) of orders d1 and d2.
  std::array<std::array<long, 2>, 2> generators{};
  std::string u, v;        // x^n/y^m and x^r/y^(m-s)
  std::string relation;    // u + a v + b = 0
  std::string congruences;  // p n - q m = p r - q (m - s) = 0 mod delta
  std::string fiber_product;
  // Delta = 0: the three monomials are multiplicatively dependent,
  // u^e1 v^e2 = 1 with (e1, e2) primitive; the curve is a union of torus translates.
  std::array<long, 2> dependence{0, 0};
};

void validate(const TrinomialCurve& C);
TrinomialReport classify(const TrinomialCurve& C);

// Does x -> zeta^p x, y -> zeta^q y fix u and v?  Checked in Q[zeta]/(Phi_delta).
bool invariant_under(const TrinomialCurve& C, long delta, long p, long q);

// Invariance of u and v under both generators and u + a v + b = 0 modulo
// the curve equation (symbolic a, b).  Requires delta != 0.
struct InvariantCheck {
  bool generators_fix_u_v = false;
  bool relation_holds = false;
  bool ok() const { return generators_fix_u_v && relation_holds; }
};
InvariantCheck verify_invariants(const TrinomialCurve& C, const TrinomialReport& R);

// Newton triangle (n,0), (r,s), (0,m) integrally indecomposable: the gcd of
// the lattice lengths of its edges is 1 (then the trinomial is irreducible
// over every field).
bool newton_triangle_indecomposable(const TrinomialCurve& C);

// Brute-force search for a nontrivial factor of x^n + a x^r y^s + b y^m over
// F_p (a, b given mod p).  Returns the dense coefficient table g[i][j] of x^i
// y^j of a factor, or nothing.  Intended for degrees <= 4 and p <= 7.
std::optional<std::vector<std::vector<int>>> ff_trinomial_factor(const TrinomialCurve& C, int a, int b, int p);

}  // namespace tricover

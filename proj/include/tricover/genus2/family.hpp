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

#include <optional>
#include <string>

#include "tricover/exactalg/mpoly.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

// Remainder of P modulo F, where F is monic of degree d in variable `var`:
// every power var^e with e >= d is rewritten through var^d = var^d - F.
MPoly<Rational> reduce_monic(const MPoly<Rational>& P, const MPoly<Rational>& F, int var);

// Identities for y^4 + a y^2 - x y - x^3 + b x^2 = 0 over Q(a, b).  The map
// (x, y) -> (c x^4/y^4 - x, c x^3/y^3 - y) is checked for the printed
// coefficient c = 2 and for c = 1, the second root of the quadratic in x on
// the line y = lambda x.  The sextic model is checked as printed,
// mu = lambda^-4 - x with mu^2 = a lambda^6 + lambda^5 + b lambda^4 - 1, and
// in the form (2 lambda^4 x - 1)^2 = 1 + 4 lambda^5 - 4 a lambda^6 - 4 b lambda^4.
struct QuarticFamilyReport {
  bool involution_preserves_curve = false;  // c = 2
  bool involution_is_involution = false;    // c = 2
  bool half_involution_preserves_curve = false;  // c = 1
  bool half_involution_is_involution = false;    // c = 1
  bool sextic_identity = false;
  bool sextic_identity_rescaled = false;
  bool origin_singular = false;
  bool unique_affine_singularity = false;  // generic (a, b), by specialization
  bool one_smooth_point_at_infinity = false;
  int genus = 0;  // (4-1)(4-2)/2 minus the number of affine singular points
};

QuarticFamilyReport quartic_family_checks();

// y^4 - a x y - x^3 = 0 and its order-5 automorphism (x, y) -> (t x, t^2 y).
struct QuinticReport {
  bool y8_identity = false;     // y^8 = x^2 (x^2 + a y)^2 mod the curve
  bool w_identity = false;      // w (w + a)^2 = y^5 with w = x^2 / y
  bool automorphism = false;    // F(t x, t^2 y) = t^3 F for t^5 = 1
  int automorphism_order = 0;
  bool degenerate = false;      // a = 0: y^4 = x^3 is rational
};

// a = nullopt keeps a symbolic.
QuinticReport quintic_reduction_check(std::optional<Rational> a = std::nullopt);

}  // namespace tricover

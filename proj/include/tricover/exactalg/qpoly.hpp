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

#include <cstdint>
#include <vector>

#include "tricover/exactalg/ff.hpp"
#include "tricover/exactalg/poly.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

using QPoly = Poly<Rational>;

// Scales f to coprime integer coefficients with positive leading coefficient.
QPoly primitive_integer(const QPoly& f);

// Reduction modulo p; throws std::domain_error if p divides a denominator.
FpPoly reduce_mod(const QPoly& f, std::uint32_t p);

// Distinct rational roots, ascending (Hensel lifting from a good prime and
// rational reconstruction, each candidate confirmed exactly).
std::vector<Rational> rational_roots(const QPoly& f);

// f divided by all its rational linear factors (with multiplicity).
QPoly strip_rational_roots(const QPoly& f);

}  // namespace tricover

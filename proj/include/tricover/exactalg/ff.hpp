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

#include "tricover/exactalg/fp.hpp"
#include "tricover/exactalg/poly.hpp"

namespace tricover {

using FpPoly = Poly<Fp>;

// x^e mod f over F_p.
FpPoly powmod_x(std::uint64_t e, const FpPoly& f);

// All roots of f in F_p with multiplicity, ascending.  The distinct roots come
// from equal-degree splitting of gcd(f, x^p - x); the splitting randomness is
// a fixed-seed generator, so results are deterministic.
std::vector<Fp> ff_poly_roots(const FpPoly& f);

}  // namespace tricover

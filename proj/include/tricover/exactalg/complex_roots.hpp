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

#include <vector>

#include "tricover/exactalg/numeric.hpp"
#include "tricover/exactalg/qpoly.hpp"

namespace tricover {

struct RootDiscs {
  std::vector<Complex> centers;
  // Each disc |x - center| <= radius contains exactly one root of f.
  std::vector<double> radii;
};

// Numeric roots of a squarefree rational polynomial by Aberth iteration on a
// power-of-two rescaled copy.  Inclusion radii come from the Weierstrass
// corrections n*|f(z_i) / (lc * prod_{j != i}(z_i - z_j))| with a running
// rounding-error bound on f(z_i); all discs are pairwise disjoint and have
// radius <= tol, otherwise DomainError("no_convergence").
RootDiscs complex_root_discs(const QPoly& f, double tol);

std::vector<Complex> complex_roots(const QPoly& f, double tol);

// Roots of a polynomial with complex coefficients (lowest degree first) by
// Durand-Kerner iteration; for the low-degree fibers of numeric towers.
std::vector<Complex> complex_poly_roots(const std::vector<Complex>& coeffs);

}  // namespace tricover

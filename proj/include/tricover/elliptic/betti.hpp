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
#include <complex>
#include <optional>

#include "tricover/exactalg/numeric.hpp"

namespace tricover {

using LComplex = std::complex<long double>;

// Period lattice of y^2 = x^3 + a x + b, i.e. of the Weierstrass function
// with g2 = -4a, g3 = -4b.  tau = w2/w1 is reduced to the fundamental domain.
struct PeriodLattice {
  LComplex w1, w2, tau;
  LComplex g2, g3;
};

PeriodLattice period_lattice(Complex a, Complex b, double tol = 1e-12);

// Weierstrass function and derivative for the lattice.
LComplex wp(const PeriodLattice& L, LComplex z);
LComplex wp_prime(const PeriodLattice& L, LComplex z);

// z with wp(z) = x and wp'(z) = 2y, reduced into the period parallelogram.
LComplex elliptic_log(const PeriodLattice& L, Complex x, Complex y, double tol = 1e-12);

struct BettiCoordinates {
  double b1 = 0, b2 = 0;  // in [0, 1)
  PeriodLattice lattice;
  LComplex z;
};

// Lattice coordinates of the elliptic logarithm of P (O gives (0, 0)).
BettiCoordinates betti_coordinates(Complex a, Complex b, bool infinity, Complex x, Complex y, double tol = 1e-12);

// Fraction k/d with d <= max_den closest to t modulo 1, if within tol.
struct Fraction {
  long k = 0, d = 1;
};
std::optional<Fraction> nearby_fraction(double t, long max_den, double tol);

// Smallest common denominator d <= max_den making both coordinates
// rational within tol; nullopt if none fits.
std::optional<long> betti_torsion_order(const BettiCoordinates& c, long max_den, double tol);

}  // namespace tricover

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
#include <optional>
#include <vector>

#include "tricover/elliptic/betti.hpp"
#include "tricover/exactalg/numeric.hpp"
#include "tricover/pencil/certify.hpp"

namespace tricover {

// A finite flex over complex alpha: lambda = (1 +- sqrt(1 + alpha^3)) / alpha
// (branch 0 takes +, so lambda ~ 2/alpha as alpha -> 0) and u = omega^k times
// the principal cube root of -2 / (lambda^3 + 3 alpha lambda - 2).
struct NumericBasePoint {
  Complex alpha, lambda, u, z;
  int lambda_branch = 0, u_branch = 0;
};

std::vector<NumericBasePoint> numeric_flex_branches(Complex alpha);
NumericBasePoint numeric_flex(Complex alpha, int lambda_branch, int u_branch);

// D on the Weierstrass model of E with the flex as origin, by the same
// reduction as the exact pipeline in complex floating point.
struct NumericSection {
  NumericBasePoint base;
  Complex a, b;  // y^2 = x^3 + a x + b, a ~ 0
  Complex x, y;  // D
  Complex tau;   // x^3 / b
  double component_gap = 0;  // |phi(p1) + phi(p3)| in coordinates
  BettiCoordinates betti;
};

// Throws DomainError when alpha is too close to 0 or to alpha^3 = -1.
NumericSection numeric_section(Complex alpha, int lambda_branch, int u_branch = 0);

struct ScanOptions {
  Complex center{0.0, 0.0};
  double radius = 1.0;
  int n_max = 6;
  int samples = 2000;  // grid points in the disc, per lambda branch
  double tol = 1e-6;
  int jobs = 1;
  double coarse = 0.5;  // distance of N * betti to Z^2 that starts Newton (0.5: every sample)
};

// Torsion parameters of D in a disc: grid samples flagged by their Betti
// coordinates, refined by Newton on P_N(tau(alpha)), confirmed by Betti
// coordinates within tol of (1/N) Z^2.  Sorted by order, then |alpha|.
std::vector<SigmaCandidate> numeric_scan(const ScanOptions& opt);

}  // namespace tricover

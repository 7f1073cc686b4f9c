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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tricover/cover/cover.hpp"
#include "tricover/elliptic/miller.hpp"
#include "tricover/elliptic/torsion.hpp"
#include "tricover/exactalg/numeric.hpp"
#include "tricover/pencil/pencil.hpp"

namespace tricover {

// Number-field tower alpha / lambda / u / zeta over Q.
using PA0 = Ext<Rational>;
using PA1 = Ext<PA0>;
using PA2 = Ext<PA1>;
using PA3 = Ext<PA2>;

// tau = c0 + c1 lambda, computed once over Q(alpha).
struct TauFormula {
  QAlpha c0, c1;
};
const TauFormula& tau_formula();

// One field-like component of the tower over an alpha modulus.
struct PencilComponent {
  LevelPtr<Rational> alpha_level;
  LevelPtr<PA0> lambda_level;
  LevelPtr<PA1> u_level;
  LevelPtr<PA2> z_level;
  SectionValue<PA0> section;
};

struct ComponentSearch {
  std::vector<PencilComponent> components;
  std::vector<QPoly> spurious;  // alpha moduli where the tau condition has no lambda
  std::vector<QPoly> excluded;  // alpha = 0 or alpha^3 = -1
  int splits = 0;
};

// Sections over Q[alpha]/(h), splitting levels whenever a zero divisor
// turns up.  With `tau_condition`, the lambda level is cut down to the
// common roots with tau_condition(tau).
ComponentSearch pencil_components(const QPoly& h, const QPoly* tau_condition = nullptr);

// Nested Horner evaluation at chosen complex roots (alpha, lambda, u, zeta).
using TowerRoots = std::array<Complex, 4>;

template <class K>
struct TowerDepth {
  static constexpr int value = 0;
};
template <class K>
struct TowerDepth<Ext<K>> {
  static constexpr int value = 1 + TowerDepth<K>::value;
};

inline std::complex<long double> to_complex_ld(const Rational& x, const TowerRoots&) {
  return {static_cast<long double>(x.to_double()), 0.0L};
}
template <class K>
std::complex<long double> to_complex_ld(const Ext<K>& e, const TowerRoots& r) {
  const std::complex<long double> t(r[TowerDepth<K>::value]);
  std::complex<long double> acc = 0.0L;
  for (int i = static_cast<int>(e.coords().size()) - 1; i >= 0; --i) acc = acc * t + to_complex_ld(e.coord(i), r);
  return acc;
}
template <class K>
Complex to_complex(const K& e, const TowerRoots& r) {
  auto z = to_complex_ld(e, r);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Complex embeddings of a component: one per (alpha root, lambda root), with
// the first u and zeta roots.
std::vector<TowerRoots> component_embeddings(const PencilComponent& c);

struct CertifiedSection {
  PencilComponent component;
  TorsionCertificate<PA3> certificate;
};

// A point of Sigma: alpha where D is torsion on the given branch.
struct SigmaCandidate {
  enum class Status { exact_certified, numeric_candidate };
  Complex alpha;
  QPoly minpoly;  // exact entries: the alpha modulus of the component
  int root_index = -1;  // position of alpha among complex_roots(minpoly)
  int lambda_branch = 0;  // 0: lambda ~ 2/alpha as alpha -> 0, 1: lambda -> 0
  int u_branch = 0;       // u = omega^k times the principal cube root
  long order = 0;
  Status status = Status::numeric_candidate;
  bool degenerate = false;  // the alpha = 0 limit, reported but not certified
  std::array<double, 2> betti{0, 0};
  std::shared_ptr<const CertifiedSection> exact;
  TowerRoots roots{};
};

const char* status_name(SigmaCandidate::Status s);

// Branch labels of a numeric flex (alpha, lambda, u).
int lambda_branch_label(Complex alpha, Complex lambda);
int u_branch_label(Complex alpha, Complex lambda, Complex u);

// Exact torsion certificates at the roots of g (normally a factor of T_n).
struct CertificationReport {
  std::vector<SigmaCandidate> candidates;
  ComponentSearch search;
  std::vector<QPoly> non_torsion;  // components where D turned out non-torsion
};
CertificationReport certify_torsion_roots(const QPoly& g, int n, TorsionOptions opt = {});

// D at a rational alpha0, through elliptic torsion_order.
struct WitnessResult {
  PencilComponent component;
  TorsionVerdict<PA3> verdict;
};
WitnessResult nontorsion_witness(const Rational& alpha0, int branch = 0, TorsionOptions opt = {});

struct BiluCertificate {
  SigmaCandidate candidate;
  long order = 0;
  MillerProgram<PA3> miller;  // div = n(D) - n(O)
  std::size_t chain_length = 0;
  DegreeBoundsReport bounds;
  std::vector<std::string> statement;
};

BiluCertificate bilu_certificate(const SigmaCandidate& c);
bool verify_bilu(const BiluCertificate& b);

}  // namespace tricover

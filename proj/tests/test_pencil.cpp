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
#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "tricover/exactalg/complex_roots.hpp"
#include "tricover/exactalg/text.hpp"
#include "tricover/pencil/certify.hpp"
#include "tricover/pencil/pencil.hpp"
#include "tricover/pencil/scan.hpp"

using namespace tricover;
using namespace testing_support;

namespace {

QPoly A(const std::string& s) { return parse_poly(s, "α"); }
QAlpha alpha_var() { return QAlpha::variable(NoContext{}); }

Complex eval_c(const QPoly& p, Complex x) {
  Complex acc = 0.0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).to_double();
  return acc;
}

Complex eval_c(const QAlpha& r, Complex x) { return eval_c(r.num(), x) / eval_c(r.den(), x); }

Complex rand_alpha() {
  for (;;) {
    Complex a(rand_int(-1500, 1500) / 1000.0, rand_int(-1500, 1500) / 1000.0);
    if (std::abs(a) > 0.1 && std::abs(a * a * a + 1.0) > 0.1) return a;
  }
}

// Strip the factors alpha and alpha^3 + 1 and normalize the sign.
QPoly strip_locus(QPoly p) {
  for (const QPoly& bad : {A("α"), A("α^3+1")})
    while (p.degree() > 0 && gcd(p, bad).degree() > 0) p = p / gcd(p, bad);
  p = primitive_integer(p);
  if (p.coeff(p.degree()) < Rational(0)) p = -p;
  return p;
}

// Independent route to T_n: on the two lambda branches tau and 16 / tau
// satisfy alpha^3 (4 - tau)^2 = 16 tau, so T_n is the squarefree part of
// Res_tau(P_n(tau), alpha^3 (4 - tau)^2 - 16 tau).
QPoly resultant_oracle(int n) {
  QAlpha a = alpha_var(), a3 = a * a * a;
  QPoly Pn = torsion_tau_poly(n);
  std::vector<QAlpha> c;
  for (int i = 0; i <= Pn.degree(); ++i) c.push_back(QAlpha(QPoly(Pn.coeff(i))));
  Poly<QAlpha> F(NoContext{}, c);
  Poly<QAlpha> G(NoContext{}, {QAlpha::constant(NoContext{}, 16) * a3, QAlpha::constant(NoContext{}, -8) * a3 -
                                                                          QAlpha::constant(NoContext{}, 16),
                               a3});
  QAlpha r = sylvester_resultant(F, G);
  return strip_locus(squarefree_part(r.num()));
}

}  // namespace

TEST_CASE("fiber equations") {
  QAlpha a = alpha_var();
  auto F = build_fiber(a);
  CHECK(F.f == F.P * F.P - F.Q * F.Q * F.Q);
  CHECK(F.f.degree() == 6);
  CHECK(F.f.coeff(6) == a * a * a + QAlpha::constant(NoContext{}, 1));
  CHECK(F.f.coeff(3) == QAlpha::constant(NoContext{}, -2));
  CHECK(F.f.coeff(0) == QAlpha::constant(NoContext{}, 1));
  REQUIRE(F.cover.has_value());
  CHECK(F.cover->genus == 4);

  auto F1 = build_fiber(Rational(1));
  CHECK(F1.f == parse_poly("2u^6-2u^3+1", "u"));
  CHECK_FALSE(F1.bad_genus2_reduction);

  auto F0 = build_fiber(Rational(0));
  CHECK(F0.bad_genus2_reduction);
  CHECK_FALSE(F0.cover.has_value());
  CHECK(F0.f == parse_poly("(u^3-1)^2", "u"));
  CHECK(is_smooth(F0.cubic));

  try {
    build_fiber(Rational(-1));
    FAIL("alpha = -1 accepted");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "discriminant_locus");
  }
}

TEST_CASE("hessian flex system on z = lambda u") {
  QAlpha a = alpha_var();
  auto C = pencil_cubic(a);
  const NoContext ctx;
  using MP = MPoly<QAlpha>;
  // variables (T, u, lambda): T = 1, U = u, Z = lambda u
  MP one = MP::constant(ctx, 3, QAlpha::constant(ctx, 1));
  MP u = MP::var(ctx, 3, 1), lam = MP::var(ctx, 3, 2);
  std::vector<MP> sub = {one, u, lam * u};
  MP H = hessian(C).substitute(sub), E = C.F.substitute(sub);
  auto c = [&](long v) { return MP::constant(ctx, 3, QAlpha::constant(ctx, v)); };
  MP al = MP::constant(ctx, 3, a);
  MP quad = al * lam * lam - c(2) * lam - al * al;
  CHECK(H == c(432) * u * u * quad);
  CHECK(E == (lam * lam * lam + c(3) * al * lam - c(2)) * u * u * u + c(2));
  CHECK(lambda_equation(a) == Poly<QAlpha>(ctx, {-a * a, QAlpha::constant(ctx, -2), a}));

  for (const auto& b : flex_branches(a)) {
    std::vector<Ext<Ext<QAlpha>>> pt = {lift(b.u_level, lift(b.lambda_level, QAlpha::constant(ctx, 1))), b.u, b.z};
    auto up = [&](const QAlpha& q) { return lift(b.u_level, lift(b.lambda_level, q)); };
    CHECK(is_zero(C.F.eval_in(pt, up)));
    CHECK(is_zero(hessian(C).eval_in(pt, up)));
    CHECK(b.z == lift(b.u_level, b.lambda) * b.u);
  }
  CHECK_THROWS_AS(flex_branch(QAlpha::constant(ctx, 0), 0), DomainError);

  auto d = degenerate_flexes();
  CHECK(d.u_zero_z == parse_poly("z^3+2", "z"));
  CHECK(d.z_zero_u == parse_poly("u^3-1", "u"));
  CHECK(d.infinity_z == parse_poly("z^3-2", "z"));
}

TEST_CASE("branch asymptotics near alpha = 0") {
  // On the distinguished branch lambda = 2/alpha + O(alpha^2), so
  // u^3 = -2 / (lambda^3 + 3 alpha lambda - 2) = -alpha^3/4 + O(alpha^6)
  // and z^3 = lambda^3 u^3 -> -2.
  for (double r : {1e-1, 1e-2, 1e-3}) {
    Complex a(r * 0.6, r * 0.8);
    auto p = numeric_flex(a, 0, 0);
    CHECK(std::abs(p.u * p.u * p.u + a * a * a / 4.0) < 2.0 * std::pow(r, 5));
    CHECK(std::abs(p.z * p.z * p.z + 2.0) < 10.0 * r * r * r);
    auto q = numeric_flex(a, 1, 0);
    CHECK(std::abs(q.lambda) < 2.0 * r * r);
  }
  for (int k = 0; k < 6; ++k) {
    auto p = numeric_flex_branches(Complex(0.7, -0.2))[k];
    CHECK(lambda_branch_label(p.alpha, p.lambda) == p.lambda_branch);
    CHECK(u_branch_label(p.alpha, p.lambda, p.u) == p.u_branch);
  }
}

TEST_CASE("equal components of the section") {
  QAlpha a = alpha_var();
  for (int br = 0; br < 2; ++br) {
    auto s = section(flex_branch(a, br));
    CHECK(s.equal_components);
    CHECK(s.images[1].infinity);
    CHECK(s.images[2] == s.D);
    auto sum = ec_add(s.curve, ec_add(s.curve, s.images[0], s.images[1]), s.images[2]);
    CHECK(sum.infinity);
  }
  const auto& tf = tau_formula();
  for (int i = 0; i < 50; ++i) {
    Complex al = rand_alpha();
    int br = static_cast<int>(rand_int(0, 1));
    auto ns = numeric_section(al, br, static_cast<int>(rand_int(0, 2)));
    double scale = std::max({1.0, std::abs(ns.x), std::abs(ns.y)});
    CHECK(ns.component_gap < 1e-8 * scale);
    CHECK(std::abs(ns.a) < 1e-8 * std::max(1.0, std::abs(ns.b)));
    Complex tau = eval_c(tf.c0, al) + eval_c(tf.c1, al) * ns.base.lambda;
    CHECK(std::abs(tau - ns.tau) < 1e-7 * std::max(1.0, std::abs(tau)));
  }
}

TEST_CASE("alpha = 0 fiber: differences over u = 0 have order 3") {
  auto c = degenerate_fiber_check();
  CHECK(c.z_modulus == parse_poly("z^3+2", "z"));
  for (long o : c.difference_orders) CHECK(o == 3);
}

TEST_CASE("torsion parameter polynomials") {
  CHECK(torsion_tau_poly(2) == parse_poly("2t+2", "t"));
  CHECK(torsion_tau_poly(3) == parse_poly("3t^2+12t", "t"));
  CHECK(torsion_tau_poly(4) == parse_poly("4t^3+84t^2+48t-32", "t"));
  for (int n = 2; n <= 4; ++n) {
    QPoly T = torsion_param_poly(n);
    CHECK_FALSE(T.is_zero());
    CHECK(is_squarefree(T));
  }
  // frozen from the resultant oracle
  const QPoly T2 = A("25α^3+16"), T4 = A("3025α^9+2136α^6-672α^3-512");
  CHECK(resultant_oracle(2) == T2);
  CHECK(resultant_oracle(4) == T4);
  CHECK(resultant_oracle(3) == A("1"));
  CHECK(strip_locus(torsion_param_poly(2)) == T2);
  CHECK(strip_locus(torsion_param_poly(4)) == T4);
  CHECK(torsion_param_poly(3) == A("α^3+1"));
  for (int n : {5, 6}) CHECK(strip_locus(torsion_param_poly(n)) == resultant_oracle(n));

  QPoly T3 = torsion_param_poly(3), T6 = torsion_param_poly(6);
  CHECK(primitive_integer(gcd(T3, T6)) == primitive_integer(T3));
  CHECK(primitive_integer(gcd(T2, torsion_param_poly(6))) == T2);
  int d3 = T3.degree(), d5 = torsion_param_poly(5).degree(), d7 = torsion_param_poly(7).degree();
  CHECK(d3 < d5);
  CHECK(d5 < d7);
  CHECK_THROWS_AS(torsion_param_poly(1), std::invalid_argument);
  CHECK_THROWS_AS(torsion_param_poly(13), std::invalid_argument);
}

TEST_CASE("non-torsion witness at alpha = 1") {
  for (int br = 0; br < 2; ++br) {
    auto w = nontorsion_witness(Rational(1), br);
    REQUIRE(std::holds_alternative<NonTorsionWitness>(w.verdict));
    const auto& nw = std::get<NonTorsionWitness>(w.verdict);
    CHECK((nw.kind == "order_mismatch" || nw.kind == "exact_failure"));
    CHECK(verify_witness(w.component.section.curve, w.component.section.D, nw));
  }
  CHECK_THROWS_AS(nontorsion_witness(Rational(-1)), DomainError);
  CHECK_THROWS_AS(nontorsion_witness(Rational(0)), DomainError);
}

TEST_CASE("exact certification of torsion parameters") {
  for (int n : {2, 4}) {
    auto rep = certify_torsion_roots(torsion_param_poly(n), n);
    REQUIRE_FALSE(rep.candidates.empty());
    for (const auto& c : rep.candidates) {
      CHECK(c.status == SigmaCandidate::Status::exact_certified);
      REQUIRE(c.exact);
      CHECK(n % c.order == 0);
      CHECK(verify_certificate(c.exact->component.section.curve, c.exact->certificate));
      CHECK(std::abs(c.alpha * c.alpha * c.alpha + 1.0) > 1e-3);
      // independent floating-point pipeline at the same branch
      auto ns = numeric_section(c.alpha, c.lambda_branch, c.u_branch);
      for (double b : {ns.betti.b1, ns.betti.b2}) {
        double k = std::round(b * c.order);
        CHECK(std::abs(b - k / c.order) < 1e-6);
      }
      // phi(p2) - phi(p1) and phi(p3) - phi(p2) have the same order
      const auto& s = c.exact->component.section;
      auto e3 = ec_add(s.curve, s.images[2], ec_neg(s.images[1]));
      CHECK(ec_mul(s.curve, c.order, e3).infinity);
      for (long d = 1; d < c.order; ++d) CHECK_FALSE(ec_mul(s.curve, d, e3).infinity);
    }
  }
  auto rep = certify_torsion_roots(A("α^3+1"), 3);
  CHECK(rep.candidates.empty());
  CHECK_FALSE(rep.search.excluded.empty());
}

TEST_CASE("bilu certificate replays") {
  auto rep = certify_torsion_roots(A("25α^3+16"), 2);
  REQUIRE_FALSE(rep.candidates.empty());
  auto b = bilu_certificate(rep.candidates[0]);
  CHECK(verify_bilu(b));
  CHECK(b.order == 2);
  CHECK(b.chain_length >= 1);
  CHECK(b.chain_length <= 4);
  CHECK(b.statement.size() >= 2);

  auto tampered = b;
  tampered.order = 3;
  CHECK_FALSE(verify_bilu(tampered));
  auto bad = rep.candidates[0];
  bad.order = 3;
  try {
    bilu_certificate(bad);
    FAIL("tampered order accepted");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "replay_failed");
  }
  SigmaCandidate numeric;
  numeric.alpha = rep.candidates[0].alpha;
  numeric.order = 2;
  try {
    bilu_certificate(numeric);
    FAIL("numeric candidate accepted");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "not_exact");
  }
}

TEST_CASE("numeric scan") {
  ScanOptions o;
  o.n_max = 1;
  CHECK(numeric_scan(o).empty());

  o.radius = 0.5;
  o.n_max = 3;
  o.samples = 400;
  auto near0 = numeric_scan(o);
  bool found = std::any_of(near0.begin(), near0.end(),
                           [](const auto& c) { return c.degenerate && c.order == 3 && std::abs(c.alpha) < 1e-6; });
  CHECK(found);

  // Agreement with the exact torsion parameters of order <= 4 on |alpha| <= 1.5.
  o.radius = 1.5;
  o.n_max = 4;
  o.samples = 1000;
  o.jobs = 2;
  auto scan = numeric_scan(o);
  std::vector<std::pair<Complex, int>> exact;
  for (int n = 2; n <= 4; ++n)
    for (Complex r : complex_roots(torsion_param_poly(n), 1e-12))
      if (std::abs(r) <= 1.5 && std::abs(r * r * r + 1.0) > 1e-3) exact.push_back({r, n});
  for (const auto& [r, n] : exact) {
    bool hit = std::any_of(scan.begin(), scan.end(),
                           [&](const auto& c) { return std::abs(c.alpha - r) < 1e-6 && n % c.order == 0; });
    CHECK_MESSAGE(hit, "exact root not recovered: ", r);
  }
  for (const auto& c : scan) {
    if (c.degenerate) continue;
    bool hit = std::any_of(exact.begin(), exact.end(),
                           [&](const auto& e) { return std::abs(c.alpha - e.first) < 1e-6 && e.second % c.order == 0; });
    CHECK_MESSAGE(hit, "scan candidate without exact root: ", c.alpha);
  }
  std::size_t prev = 0;
  for (int n : {3, 6, 9}) {
    o.n_max = n;
    o.samples = 600;
    std::size_t k = numeric_scan(o).size();
    CHECK(k >= prev);
    prev = k;
  }
}

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
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tricover/exactalg/text.hpp"
#include "tricover/genus2/family.hpp"
#include "tricover/genus2/quartic.hpp"
#include "tricover/genus2/sextic.hpp"

using namespace tricover;
using namespace testing_support;

namespace {

QPoly P(const char* s) { return parse_poly(s, "u"); }

Poly<QAlpha> PA(const char* s) {
  // u-polynomial with coefficients in Q(t), read from a text in u and t.
  MPoly<Rational> m = parse_mpoly(s, {"u", "t"});
  const NoContext q;
  std::vector<QAlpha> c(std::max(0, m.degree(0)) + 1, QAlpha(q));
  auto parts = m.coefficients_in(0);
  for (std::size_t i = 0; i < parts.size(); ++i) c[i] = QAlpha(parts[i].to_univariate(1));
  return Poly<QAlpha>(q, c);
}

CurvePoint<Rational> fin(long u, long v) { return CurvePoint<Rational>::finite(Rational(u), Rational(v)); }

std::string key(const PowerGapRep<Rational>& r) { return r.P.str("u") + "|" + r.Q.str("u"); }

}  // namespace

TEST_CASE("special points of sextic and quintic models") {
  auto M = SexticModel<Rational>::make(P("u^6-1"));
  auto pts = weierstrass_points(M);
  REQUIRE(pts.size() == 6);
  std::set<int> degrees;
  for (const auto& s : pts) {
    CHECK(!s.infinity);
    CHECK(M.f.eval_in(s.u(), [&](const Rational& c) { return lift(s.level, c); }).is_zero());
    CHECK(std::abs(std::pow(s.approx, 6) - Complex(1, 0)) < 1e-9);
    degrees.insert(s.level->degree());
  }
  CHECK(degrees == std::set<int>{1, 4});

  auto M5 = SexticModel<Rational>::make(P("u^5-u"));
  auto p5 = weierstrass_points(M5);
  REQUIRE(p5.size() == 6);
  CHECK(p5.back().infinity);

  auto M1 = SexticModel<Rational>::make(P("2u^6-2u^3+1"));
  auto p1 = weierstrass_points(M1);
  REQUIRE(p1.size() == 6);
  for (const auto& s : p1) CHECK(s.level->degree() == 6);

  CHECK_THROWS_AS(SexticModel<Rational>::make(P("(u-1)^2(u^4+3)")), DomainError);
  CHECK_THROWS_AS(SexticModel<Rational>::make(P("u^4+1")), DomainError);
}

TEST_CASE("special point predicate") {
  auto M1 = SexticModel<Rational>::make(P("2u^6-2u^3+1"));
  CHECK(!is_special(M1, fin(0, 1)));
  auto M = SexticModel<Rational>::make(P("u^6-1"));
  CHECK(is_special(M, fin(1, 0)));
  CurvePoint<Rational> inf;
  inf.kind = CurvePoint<Rational>::Kind::infinity_plus;
  CHECK(!is_special(M, inf));
  CHECK(!is_special(M, involute(inf)));
  auto M5 = SexticModel<Rational>::make(P("u^5-u"));
  CurvePoint<Rational> inf5;
  inf5.kind = CurvePoint<Rational>::Kind::infinity;
  CHECK(is_special(M5, inf5));
  CHECK_THROWS_AS(is_special(M, fin(2, 1)), DomainError);
}

TEST_CASE("power gap representations") {
  CHECK(power_gap_verify(PA("(t^3+1)u^6-2u^3+1"), PA("u^3-1"), PA("-t*u^2")));
  CHECK(power_gap_verify(P("u^6"), P("u^3"), QPoly(NoContext{})));
  CHECK(!power_gap_verify(PA("(t^3+1)u^6-2u^3+1"), PA("u^3+1"), PA("-t*u^2")));

  auto has = [](const std::vector<PowerGapRep<Rational>>& v, const QPoly& p, const QPoly& q) {
    for (const auto& r : v)
      if (r.P == p && r.Q == q) return true;
    return false;
  };
  auto r0 = power_gap_search(P("u^6-2u^3+1"), 3);
  CHECK(has(r0, P("u^3-1"), QPoly(NoContext{})));
  for (const auto& r : r0)
    if (r.Q.is_zero()) CHECK(r.degenerate);
  auto r1 = power_gap_search(P("2u^6-2u^3+1"), 2);
  CHECK(has(r1, P("u^3-1"), P("-u^2")));
  auto r2 = power_gap_search(P("u^6+1"), 1);
  CHECK(has(r2, P("u^3"), P("-1")));
  for (const auto* v : {&r0, &r1, &r2})
    for (const auto& r : *v) CHECK(power_gap_verify(P("0") + r.P * r.P - r.Q * r.Q * r.Q, r.P, r.Q));

  // Even f: the search is closed under u -> -u.
  auto even = power_gap_search(P("u^6+1"), 2);
  std::set<std::string> keys;
  for (const auto& r : even) keys.insert(key(r));
  for (const auto& r : even) {
    PowerGapRep<Rational> m{r.P.compose(P("-u")), r.Q.compose(P("-u")), r.degenerate};
    CHECK(keys.count(key(m)) == 1);
  }
  CHECK(rationals_of_height(1).size() == 3);
  CHECK(rationals_of_height(2).size() == 7);
}

TEST_CASE("rigidity of power gap families") {
  CHECK(rigidity_check(PA("u^3-1"), PA("-u^2")).kind == "constant family");
  CHECK(rigidity_check(PA("u^3+0*t-1"), PA("-u^2")).kind == "constant family");
  CHECK_THROWS_AS(rigidity_check(PA("u^3+t"), PA("-u^2")), DomainError);
}

TEST_CASE("plane quartic model from L(3 q0) and L(4 q0)") {
  auto M = SexticModel<Rational>::make(P("2u^6-2u^3+1"));
  // u -> omega u fixes (0, +-1); there the singular point is a cusp.
  for (auto q0 : {fin(0, 1), fin(0, -1), fin(1, 1), fin(1, -1)}) {
    auto Q = quartic_model(M, q0);
    CHECK(Q.dim_L3 == 2);
    CHECK(Q.dim_L4 == 3);
    CHECK(Q.F.total_degree() == 4);
    CHECK(Q.F.degree(0) == 4);
    CHECK(Q.F.degree(1) == 3);
    CHECK(quartic_relation_holds(M.f, Q));
    CHECK(Q.smooth_at_infinity);
    analyze_singularities(Q);
    CHECK(Q.singular_count == 1);
    REQUIRE(Q.singular.size() == 1);
    CHECK(Q.singular[0].type == (q0.u.is_zero() ? "cusp" : "node"));
    // Smooth plane quartic genus minus one node.
    CHECK((4 - 1) * (4 - 2) / 2 - Q.singular_count == 2);
  }
  {
    auto Q = quartic_model(M, fin(0, 1));
    CHECK(Q.F == parse_mpoly("w^3-z^4+3z^3-11/4z^2+1/2z+1/4", {"z", "w"}));
    CHECK(Q.singular.empty());
    analyze_singularities(Q);
    CHECK(Q.singular[0].z == Rational(1));
    CHECK(Q.singular[0].w == Rational(0));
  }
  CHECK_THROWS_AS(quartic_model(SexticModel<Rational>::make(P("u^6-1")), fin(1, 0)), DomainError);
  CurvePoint<Rational> inf;
  inf.kind = CurvePoint<Rational>::Kind::infinity_plus;
  CHECK_THROWS_AS(quartic_model(M, inf), DomainError);
}

TEST_CASE("quartic family identities") {
  auto r = quartic_family_checks();
  // As printed, the coefficient 2 does not preserve the quartic; the second
  // root of the quadratic on y = lambda x gives coefficient 1.
  CHECK(!r.involution_preserves_curve);
  CHECK(r.half_involution_preserves_curve);
  CHECK(r.half_involution_is_involution);
  CHECK(!r.sextic_identity);
  CHECK(r.sextic_identity_rescaled);
  CHECK(r.origin_singular);
  CHECK(r.unique_affine_singularity);
  CHECK(r.one_smooth_point_at_infinity);
  CHECK(r.genus == 2);
}

TEST_CASE("quintic reduction of y^4 = a x y + x^3") {
  auto r = quintic_reduction_check();
  CHECK(r.y8_identity);
  CHECK(r.w_identity);
  CHECK(r.automorphism);
  CHECK(r.automorphism_order == 5);
  CHECK(!r.degenerate);
  auto r0 = quintic_reduction_check(Rational(0));
  CHECK(r0.degenerate);
  CHECK(r0.y8_identity);
  auto r3 = quintic_reduction_check(Rational(3));
  CHECK(r3.w_identity);
}

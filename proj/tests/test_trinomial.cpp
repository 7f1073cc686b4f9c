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
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "tricover/errors.hpp"
#include "tricover/genus2/family.hpp"
#include "tricover/trinomial/trinomial.hpp"

using namespace tricover;
using namespace testing_support;

namespace {

TrinomialCurve curve(long n, long r, long s, long m) { return {n, r, s, m, std::nullopt, std::nullopt}; }

TrinomialCurve rand_curve(long hi) {
  for (;;) {
    TrinomialCurve C = curve(rand_int(0, hi), rand_int(0, hi), rand_int(0, hi), rand_int(0, hi));
    try {
      validate(C);
      return C;
    } catch (const DomainError&) {
    }
  }
}

// Brute-force group: (p, q) mod delta with p n - q m = p r - q (m - s) = 0.
struct GroupOracle {
  long order = 0, exponent = 0;
};
GroupOracle brute_group(const TrinomialCurve& C, long delta) {
  GroupOracle g;
  auto md = [&](long x) { return ((x % delta) + delta) % delta; };
  for (long p = 0; p < delta; ++p)
    for (long q = 0; q < delta; ++q) {
      if (md(p * C.n - q * C.m) || md(p * C.r - q * (C.m - C.s))) continue;
      ++g.order;
      long k = 1;
      while (md(k * p) || md(k * q)) ++k;
      g.exponent = std::max(g.exponent, k);
    }
  return g;
}

}  // namespace

TEST_CASE("classification examples") {
  auto R = classify(curve(3, 1, 1, 4));
  CHECK(R.delta == 5);
  CHECK(R.cyclic);
  CHECK(R.d1 == 1);
  CHECK(R.d2 == 5);
  CHECK(R.classification == "possibly-infinite");
  CHECK(R.u == "x^3/y^4");
  CHECK(R.v == "x/y^3");

  auto D = classify(curve(2, 1, 1, 2));
  CHECK(D.delta == 0);
  CHECK(D.degenerate);
  CHECK(D.classification == "degenerate");
  CHECK(D.dependence == std::array<long, 2>{1, -2});

  auto G = classify(curve(6, 2, 2, 6));
  CHECK(G.delta == 12);
  CHECK(G.d1 == 2);
  CHECK(G.d2 == 6);
  CHECK_FALSE(G.cyclic);
  CHECK(G.classification == "finite");
  CHECK(G.exponent_gcd == 2);

  CHECK_THROWS_AS(classify(curve(2, 2, 0, 3)), DomainError);
  CHECK_THROWS_AS(classify(curve(-1, 1, 1, 2)), DomainError);
  TrinomialCurve z = curve(3, 1, 1, 4);
  z.a = Rational(0);
  CHECK_THROWS_AS(classify(z), DomainError);
}

TEST_CASE("determinant and smith form on random exponents") {
  for (int i = 0; i < 500; ++i) {
    TrinomialCurve C = rand_curve(12);
    auto R = classify(C);
    long det = C.n * (C.m - C.s) - C.m * C.r;
    CHECK(std::labs(det) == R.delta);
    // determinantal divisors: d1 is the gcd of the entries, d1 d2 = |det|
    long g = std::gcd(std::gcd(C.n, C.m), std::gcd(C.r, C.m - C.s));
    CHECK(R.d1 == g);
    if (R.degenerate) {
      CHECK(R.d2 == 0);
      auto [e1, e2] = R.dependence;
      CHECK(e1 * C.n + e2 * C.r == 0);
      CHECK(e1 * C.m + e2 * (C.m - C.s) == 0);
      CHECK(std::gcd(e1, e2) == 1);
      continue;
    }
    CHECK(R.d2 % R.d1 == 0);
    CHECK(R.d1 * R.d2 == R.delta);
    CHECK(R.cyclic == (R.exponent_gcd == 1));
    if (R.delta <= 60) {
      auto o = brute_group(C, R.delta);
      CHECK(o.order == R.delta);
      CHECK(o.exponent == R.d2);
    }
  }
  for (int i = 0; i < 200; ++i) {
    std::array<std::array<long, 2>, 2> M = {{{rand_int(-30, 30), rand_int(-30, 30)}, {rand_int(-30, 30), rand_int(-30, 30)}}};
    auto S = smith_form(M);
    // U M V = diag(d1, d2)
    long P[2][2] = {};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) P[a][d] += S.U[a][b] * M[b][c] * S.V[c][d];
    CHECK(P[0][0] == S.d1);
    CHECK(P[1][1] == S.d2);
    CHECK(P[0][1] == 0);
    CHECK(P[1][0] == 0);
    CHECK(std::labs(S.U[0][0] * S.U[1][1] - S.U[0][1] * S.U[1][0]) == 1);
    CHECK(std::labs(S.V[0][0] * S.V[1][1] - S.V[0][1] * S.V[1][0]) == 1);
    if (S.d1) CHECK(S.d2 % S.d1 == 0);
  }
}

TEST_CASE("invariants of the group action") {
  for (auto C : {curve(3, 1, 1, 4), curve(6, 2, 2, 6), curve(5, 2, 1, 3), curve(4, 1, 3, 5)}) {
    auto R = classify(C);
    auto chk = verify_invariants(C, R);
    CHECK(chk.generators_fix_u_v);
    CHECK(chk.relation_holds);
  }
  // x -> zeta x, y -> zeta^2 y on y^4 - a x y - x^3 in the (3,1,1,4) labeling
  auto C = curve(3, 1, 1, 4);
  CHECK(invariant_under(C, 5, 1, 2));
  CHECK_FALSE(invariant_under(C, 5, 1, 1));
  CHECK_FALSE(invariant_under(C, 5, 0, 1));
  TrinomialCurve concrete = C;
  concrete.a = Rational(3);
  concrete.b = Rational(-1, 2);
  auto R = classify(concrete);
  CHECK(verify_invariants(concrete, R).ok());
  CHECK(R.relation == "u + 3 v + -1/2 = 0");
  CHECK_THROWS_AS(verify_invariants(curve(2, 1, 1, 2), classify(curve(2, 1, 1, 2))), DomainError);
}

TEST_CASE("swapping x and y") {
  for (int i = 0; i < 200; ++i) {
    TrinomialCurve C = rand_curve(10);
    // y^n + a y^r x^s + b x^m  reads  x^m + a x^s y^r + b y^n
    TrinomialCurve S = curve(C.m, C.s, C.r, C.n);
    auto R = classify(C), Q = classify(S);
    CHECK(R.delta == Q.delta);
    CHECK(R.d1 == Q.d1);
    CHECK(R.d2 == Q.d2);
    CHECK(R.classification == Q.classification);
  }
}

TEST_CASE("no factors over small prime fields") {
  int tested = 0;
  while (tested < 20) {
    TrinomialCurve C = curve(rand_int(1, 3), rand_int(0, 3), rand_int(0, 3), rand_int(1, 3));
    try {
      validate(C);
    } catch (const DomainError&) {
      continue;
    }
    if (classify(C).delta == 0 || !newton_triangle_indecomposable(C)) continue;
    int p = tested % 2 ? 5 : 3;
    int a = static_cast<int>(rand_int(1, p - 1)), b = static_cast<int>(rand_int(1, p - 1));
    CHECK_FALSE(ff_trinomial_factor(C, a, b, p).has_value());
    ++tested;
  }
  // soundness: x^2 + 2 x y + y^2 = (x + y)^2 over F_3
  auto f = ff_trinomial_factor(curve(2, 1, 1, 2), 2, 1, 3);
  REQUIRE(f.has_value());
  CHECK((*f)[1][0] == 1);
  CHECK((*f)[0][1] == 1);
  CHECK_FALSE(ff_trinomial_factor(curve(2, 1, 1, 2), 1, 2, 3).has_value());
}

TEST_CASE("order-5 quintic identity") {
  auto q = quintic_reduction_check();
  CHECK(q.y8_identity);
  CHECK(q.w_identity);
  CHECK(q.automorphism);
  CHECK(q.automorphism_order == 5);
  CHECK(classify(curve(3, 1, 1, 4)).delta == q.automorphism_order);
}

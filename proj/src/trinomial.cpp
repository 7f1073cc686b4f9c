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
#include "tricover/trinomial/trinomial.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "tricover/errors.hpp"
#include "tricover/exactalg/mpoly.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/tower.hpp"

namespace tricover {

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 identity2() { return {{{1, 0}, {0, 1}}}; }

void swap_rows(Mat2& A, Mat2& U) {
  std::swap(A[0], A[1]);
  std::swap(U[0], U[1]);
}
void swap_cols(Mat2& A, Mat2& V) {
  for (auto* X : {&A, &V}) {
    std::swap((*X)[0][0], (*X)[0][1]);
    std::swap((*X)[1][0], (*X)[1][1]);
  }
}
// row i -= k * row j
void row_sub(Mat2& A, Mat2& U, int i, int j, long k) {
  for (int c = 0; c < 2; ++c) {
    A[i][c] -= k * A[j][c];
    U[i][c] -= k * U[j][c];
  }
}
// col i -= k * col j
void col_sub(Mat2& A, Mat2& V, int i, int j, long k) {
  for (int r = 0; r < 2; ++r) {
    A[r][i] -= k * A[r][j];
    V[r][i] -= k * V[r][j];
  }
}

std::string pow_str(const char* var, long e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string quotient_str(const std::string& num, const std::string& den) {
  if (den == "1") return num;
  return num + "/" + den;
}

QPoly cyclotomic(long k) {
  QPoly f = QPoly::monomial(Rational(1), static_cast<int>(k)) - QPoly::constant(NoContext{}, 1);
  for (long d = 1; d < k; ++d)
    if (k % d == 0) f = f / cyclotomic(d);
  return f;
}

long mod(long x, long d) { return ((x % d) + d) % d; }

}  // namespace

SmithForm2 smith_form(const Mat2& M) {
  Mat2 A = M, U = identity2(), V = identity2();
  for (int guard = 0; guard < 256; ++guard) {
    // smallest nonzero entry to (0, 0)
    int bi = -1, bj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (A[i][j] != 0 && (bi < 0 || std::labs(A[i][j]) < std::labs(A[bi][bj]))) bi = i, bj = j;
    if (bi < 0) break;
    if (bi == 1) swap_rows(A, U);
    if (bj == 1) swap_cols(A, V);
    row_sub(A, U, 1, 0, A[1][0] / A[0][0]);
    col_sub(A, V, 1, 0, A[0][1] / A[0][0]);
    if (A[1][0] != 0 || A[0][1] != 0) continue;
    if (A[0][0] != 0 && A[1][1] % A[0][0] != 0) {
      // fold row 1 into row 0 and repeat
      row_sub(A, U, 0, 1, -1);
      continue;
    }
    break;
  }
  for (int i = 0; i < 2; ++i)
    if (A[i][i] < 0) {
      A[i][i] = -A[i][i];
      U[i][0] = -U[i][0];
      U[i][1] = -U[i][1];
    }
  if (A[0][1] != 0 || A[1][0] != 0) throw std::logic_error("smith form did not converge");
  SmithForm2 S;
  S.U = U;
  S.V = V;
  S.d1 = A[0][0];
  S.d2 = A[1][1];
  if (S.d1 == 0 && S.d2 != 0) throw std::logic_error("smith form out of order");
  return S;
}

void validate(const TrinomialCurve& C) {
  if (C.n < 0 || C.r < 0 || C.s < 0 || C.m < 0) throw DomainError("bad_exponents", "exponents must be nonnegative");
  const std::pair<long, long> e1{C.n, 0}, e2{C.r, C.s}, e3{0, C.m};
  if (e1 == e2 || e2 == e3 || e1 == e3) throw DomainError("degenerate_exponents", "two monomials coincide");
  if ((C.a && C.a->is_zero()) || (C.b && C.b->is_zero()))
    throw DomainError("zero_coefficient", "coefficients a and b must be nonzero");
}

TrinomialReport classify(const TrinomialCurve& C) {
  validate(C);
  TrinomialReport R;
  R.delta = std::labs(C.n * C.m - C.r * C.m - C.s * C.n);
  R.degenerate = R.delta == 0;
  R.exponent_gcd = std::gcd(std::gcd(C.n, C.m), std::gcd(C.r, C.s));
  const std::string sa = C.a ? C.a->str() : "a", sb = C.b ? C.b->str() : "b";
  R.u = quotient_str(pow_str("x", C.n), pow_str("y", C.m));
  R.v = quotient_str(pow_str("x", C.r), pow_str("y", C.m - C.s));
  R.relation = "u + " + sa + " v + " + sb + " = 0";
  R.congruences = "p*" + std::to_string(C.n) + " - q*" + std::to_string(C.m) + " = p*" + std::to_string(C.r) +
                  " - q*" + std::to_string(C.m - C.s) + " = 0 mod " + std::to_string(R.delta);
  // (p, q) -> (p n - q m, p r - q (m - s))
  const Mat2 M = {{{C.n, -C.m}, {C.r, -(C.m - C.s)}}};
  SmithForm2 S = smith_form(M);
  R.d1 = S.d1;
  R.d2 = S.d2;
  if (R.degenerate) {
    long e1 = C.r, e2 = -C.n;
    if (e1 == 0 && e2 == 0) e1 = C.m - C.s, e2 = -C.m;
    long g = std::gcd(e1, e2);
    e1 /= g;
    e2 /= g;
    if (e1 < 0 || (e1 == 0 && e2 < 0)) e1 = -e1, e2 = -e2;
    if (e1 * C.m + e2 * (C.m - C.s) != 0) throw std::logic_error("dependence vector misses a relation");
    R.dependence = {e1, e2};
    R.classification = "degenerate";
    R.fiber_product = "union of translates of tori: u^" + std::to_string(e1) + " v^" + std::to_string(e2) + " = 1";
    return R;
  }
  if (S.d1 * S.d2 != R.delta) throw std::logic_error("invariant factors do not multiply to delta");
  for (int i = 0; i < 2; ++i) {
    long k = R.delta / (i == 0 ? S.d1 : S.d2);
    R.generators[i] = {mod(S.V[0][i] * k, R.delta), mod(S.V[1][i] * k, R.delta)};
  }
  R.cyclic = S.d1 == 1;
  if (R.cyclic != (R.exponent_gcd == 1)) throw std::logic_error("cyclicity disagrees with the exponent gcd");
  R.classification = R.cyclic ? "possibly-infinite" : "finite";
  R.fiber_product = R.cyclic ? "cyclic cover of degree " + std::to_string(R.delta) + " of the line " + R.relation
                             : "fiber product of cyclic covers of degrees " + std::to_string(S.d1) + " and " +
                                   std::to_string(S.d2) + " of the line " + R.relation;
  return R;
}

bool invariant_under(const TrinomialCurve& C, long delta, long p, long q) {
  if (delta <= 0) throw std::invalid_argument("invariance needs delta > 0");
  if (delta > 1000) throw std::invalid_argument("delta too large for the cyclotomic level");
  using Z = Ext<Rational>;
  auto L = make_level<Rational>("ζ", cyclotomic(delta));
  const Z zeta = Z::generator(L), one = lift(L, Rational(1));
  auto zpow = [&](long e) {
    Z acc = one, base = zeta;
    for (e = mod(e, delta); e; e >>= 1, base = base * base)
      if (e & 1) acc = acc * base;
    return acc;
  };
  // u = x^n y^-m picks up zeta^(p n - q m); v = x^r y^-(m-s) picks up zeta^(p r - q (m-s))
  return zpow(p * C.n - q * C.m) == one && zpow(p * C.r - q * (C.m - C.s)) == one;
}

InvariantCheck verify_invariants(const TrinomialCurve& C, const TrinomialReport& R) {
  if (R.delta == 0) throw DomainError("degenerate", "delta = 0: no finite group action");
  InvariantCheck out;
  out.generators_fix_u_v = invariant_under(C, R.delta, R.generators[0][0], R.generators[0][1]) &&
                           invariant_under(C, R.delta, R.generators[1][0], R.generators[1][1]);
  // variables (x, y, a, b); y^m (u + a v + b) has exponents shifted by m in y
  using MP = MPoly<Rational>;
  auto mono = [](long ex, long ey, long ea, long eb) {
    if (ex < 0 || ey < 0) throw std::logic_error("negative exponent after clearing y^m");
    return MP::term(NoContext{}, Rational(1),
                    {static_cast<int>(ex), static_cast<int>(ey), static_cast<int>(ea), static_cast<int>(eb)});
  };
  auto coef = [&](const std::optional<Rational>& c, int var) {
    return c ? MP::constant(NoContext{}, 4, *c) : MP::var(NoContext{}, 4, var);
  };
  MP A = coef(C.a, 2), B = coef(C.b, 3);
  MP cleared = mono(C.n, -C.m + C.m, 0, 0) + A * mono(C.r, -(C.m - C.s) + C.m, 0, 0) + B * mono(0, C.m, 0, 0);
  MP curve = mono(C.n, 0, 0, 0) + A * mono(C.r, C.s, 0, 0) + B * mono(0, C.m, 0, 0);
  out.relation_holds = (cleared - curve).is_zero();
  return out;
}

bool newton_triangle_indecomposable(const TrinomialCurve& C) {
  long g = std::gcd(std::gcd(std::labs(C.r - C.n), C.s), std::gcd(std::gcd(C.r, std::labs(C.m - C.s)), std::gcd(C.n, C.m)));
  return g == 1;
}

std::optional<std::vector<std::vector<int>>> ff_trinomial_factor(const TrinomialCurve& C, int a, int b, int p) {
  validate(C);
  if (p < 2 || p > 7) throw std::invalid_argument("prime out of range for brute force");
  a = static_cast<int>(mod(a, p));
  b = static_cast<int>(mod(b, p));
  if (a == 0 || b == 0) throw DomainError("zero_coefficient", "coefficients vanish mod p");
  using Table = std::vector<std::vector<int>>;
  const int DX = static_cast<int>(std::max(C.n, C.r)), DY = static_cast<int>(std::max(C.m, C.s));
  Table F(DX + 1, std::vector<int>(DY + 1, 0));
  F[C.n][0] = (F[C.n][0] + 1) % p;
  F[C.r][C.s] = (F[C.r][C.s] + a) % p;
  F[0][C.m] = (F[0][C.m] + b) % p;
  const int gx = DX / 2;
  const int cells = (gx + 1) * (DY + 1);
  if (std::pow(double(p), cells) > 2e7) throw std::invalid_argument("trinomial too large for brute force");
  std::vector<int> inv(p, 0);
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < p; ++j)
      if (i * j % p == 1) inv[i] = j;

  // lex order, x major; leading cell of a table
  auto lead = [](const Table& T) -> std::pair<int, int> {
    for (int i = static_cast<int>(T.size()) - 1; i >= 0; --i)
      for (int j = static_cast<int>(T[i].size()) - 1; j >= 0; --j)
        if (T[i][j]) return {i, j};
    return {-1, -1};
  };
  // exact division F / G; quotient or nothing
  auto divide = [&](const Table& G) -> std::optional<Table> {
    auto [li, lj] = lead(G);
    Table Rm = F, Q(DX + 1, std::vector<int>(DY + 1, 0));
    for (;;) {
      auto [ri, rj] = lead(Rm);
      if (ri < 0) return Q;
      if (ri < li || rj < lj) return std::nullopt;
      int c = Rm[ri][rj] * inv[G[li][lj]] % p;
      int qi = ri - li, qj = rj - lj;
      Q[qi][qj] = (Q[qi][qj] + c) % p;
      for (int i = 0; i <= li; ++i)
        for (int j = 0; j < static_cast<int>(G[i].size()); ++j)
          if (G[i][j]) {
            if (qi + i > DX || qj + j > DY) return std::nullopt;
            Rm[qi + i][qj + j] = ((Rm[qi + i][qj + j] - c * G[i][j]) % p + p) % p;
          }
    }
  };
  Table G(gx + 1, std::vector<int>(DY + 1, 0));
  std::vector<int> digits(cells, 0);
  for (;;) {
    int k = 0;
    while (k < cells && ++digits[k] == p) digits[k++] = 0;
    if (k == cells) break;
    for (int c = 0; c < cells; ++c) G[c / (DY + 1)][c % (DY + 1)] = digits[c];
    auto [li, lj] = lead(G);
    if (li < 0 || G[li][lj] != 1) continue;  // monic representatives only
    if (li == 0 && lj == 0) continue;        // units
    auto Q = divide(G);
    if (!Q) continue;
    auto [qi, qj] = lead(*Q);
    if (qi == 0 && qj == 0) continue;
    return G;
  }
  return std::nullopt;
}

}  // namespace tricover

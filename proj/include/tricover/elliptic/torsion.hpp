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

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "tricover/elliptic/curve.hpp"
#include "tricover/errors.hpp"
#include "tricover/exactalg/ff.hpp"
#include "tricover/exactalg/tower.hpp"

namespace tricover {

// Degree-1 residue maps K -> F_p.  For a tower level these are the simple
// roots of the reduced modulus above each residue map of the base.
template <class K>
struct Embedder;

template <>
struct Embedder<Rational> {
  using Map = std::function<Fp(const Rational&)>;
  static std::vector<Map> all(const NoContext&, std::uint32_t p) {
    return {[p](const Rational& q) { return Fp::from_rational(p, q); }};
  }
};

template <class K>
struct Embedder<Ext<K>> {
  using Map = std::function<Fp(const Ext<K>&)>;
  static std::vector<Map> all(const LevelPtr<K>& L, std::uint32_t p) {
    std::vector<Map> out;
    for (auto& phi : Embedder<K>::all(L->base, p)) {
      std::vector<Fp> mc;
      try {
        for (const K& c : L->modulus.coeffs()) mc.push_back(phi(c));
      } catch (const std::domain_error&) {
        continue;
      }
      FpPoly m(p, mc);
      std::vector<Fp> roots = ff_poly_roots(m);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        bool simple = (i == 0 || !(roots[i - 1] == roots[i])) && (i + 1 == roots.size() || !(roots[i + 1] == roots[i]));
        if (!simple) continue;
        Fp r = roots[i];
        out.push_back([phi, r](const Ext<K>& e) {
          Fp acc(r.modulus(), 0);
          for (int k = static_cast<int>(e.coords().size()) - 1; k >= 0; --k) acc = acc * r + phi(e.coord(k));
          return acc;
        });
      }
    }
    return out;
  }
};

struct ReductionRecord {
  std::uint32_t p = 0;
  int embedding = 0;  // index in Embedder enumeration order
  long order = 0;     // order of the reduced point
};

// Certificate that P has exact order n: the double-and-add chain for n
// replays to O and no proper divisor kills P.
template <class K>
struct TorsionCertificate {
  struct Step {
    std::string op;  // "dbl" or "add"
    ECPoint<K> result;
  };
  long order = 0;
  ECPoint<K> point;
  std::vector<Step> chain;
  std::vector<ReductionRecord> primes;
};

// Either two good primes whose reduced orders differ with both primes above
// both orders plus one ("order_mismatch"), or two good primes agreeing on n
// (both above n+1) while n P != O exactly ("exact_failure").
struct NonTorsionWitness {
  std::string kind;
  ReductionRecord first, second;
};

template <class K>
using TorsionVerdict = std::variant<TorsionCertificate<K>, NonTorsionWitness>;

struct TorsionOptions {
  std::uint32_t prime_bound = 5000;
  long max_exact_order = 64;
};

namespace detail {

template <class K, class Map>
bool reduce_curve(const WeierstrassCurve<K>& E, const ECPoint<K>& P, const Map& phi, WeierstrassCurve<Fp>* Ep,
                  ECPoint<Fp>* Pp) {
  try {
    Ep->a = phi(E.a);
    Ep->b = phi(E.b);
    if (Ep->discriminant().is_zero()) return false;
    if (P.infinity) {
      *Pp = ECPoint<Fp>::at_infinity();
    } else {
      *Pp = ECPoint<Fp>::affine(phi(P.x), phi(P.y));
    }
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

inline long reduced_order(const WeierstrassCurve<Fp>& E, const ECPoint<Fp>& P) {
  const std::uint32_t p = E.a.modulus();
  const long hasse = static_cast<long>(p) + 1 + 2 * static_cast<long>(std::ceil(std::sqrt(double(p))));
  ECPoint<Fp> Q = P;
  for (long k = 1; k <= hasse; ++k) {
    if (Q.infinity) return k;
    Q = ec_add_unchecked(E, Q, P);
  }
  throw std::logic_error("reduced point order exceeds the Hasse bound");
}

}  // namespace detail

// Reduction order of P at the prime p through the given embedding index;
// 0 if that residue map is unusable (bad reduction, denominators).
template <class K>
long reduction_order_at(const WeierstrassCurve<K>& E, const ECPoint<K>& P, std::uint32_t p, int embedding) {
  auto maps = Embedder<K>::all(FieldTraits<K>::context(E.a), p);
  if (embedding < 0 || embedding >= static_cast<int>(maps.size())) return 0;
  WeierstrassCurve<Fp> Ep{Fp(p, 0), Fp(p, 0)};
  ECPoint<Fp> Pp;
  if (!detail::reduce_curve(E, P, maps[embedding], &Ep, &Pp)) return 0;
  return detail::reduced_order(Ep, Pp);
}

template <class K>
std::vector<typename TorsionCertificate<K>::Step> double_and_add_chain(const WeierstrassCurve<K>& E, long n,
                                                                       const ECPoint<K>& P) {
  std::vector<typename TorsionCertificate<K>::Step> chain;
  int top = 63;
  while (top > 0 && !((n >> top) & 1)) --top;
  ECPoint<K> acc = P;
  for (int b = top - 1; b >= 0; --b) {
    acc = ec_add_unchecked(E, acc, acc);
    chain.push_back({"dbl", acc});
    if ((n >> b) & 1) {
      acc = ec_add_unchecked(E, acc, P);
      chain.push_back({"add", acc});
    }
  }
  return chain;
}

// Replays the chain from the certified point and checks the divisor condition.
template <class K>
bool verify_certificate(const WeierstrassCurve<K>& E, const TorsionCertificate<K>& c) {
  if (c.order < 1 || !on_curve(E, c.point)) return false;
  ECPoint<K> acc = c.point;
  long k = 1;
  for (const auto& s : c.chain) {
    if (s.op == "dbl") {
      acc = ec_add_unchecked(E, acc, acc);
      k *= 2;
    } else if (s.op == "add") {
      acc = ec_add_unchecked(E, acc, c.point);
      k += 1;
    } else {
      return false;
    }
    if (!(acc == s.result)) return false;
  }
  if (k != c.order || !acc.infinity) return false;
  for (long d = 1; d < c.order; ++d)
    if (c.order % d == 0 && ec_mul_unchecked(E, d, c.point).infinity) return false;
  return true;
}

template <class K>
bool verify_witness(const WeierstrassCurve<K>& E, const ECPoint<K>& P, const NonTorsionWitness& w) {
  const ReductionRecord& a = w.first;
  const ReductionRecord& b = w.second;
  if (a.p == b.p || a.p < 5 || b.p < 5) return false;
  if (reduction_order_at(E, P, a.p, a.embedding) != a.order) return false;
  if (reduction_order_at(E, P, b.p, b.embedding) != b.order) return false;
  long top = std::max(a.order, b.order);
  if (std::min(a.p, b.p) <= static_cast<std::uint32_t>(top + 1)) return false;
  if (w.kind == "order_mismatch") return a.order != b.order;
  if (w.kind == "exact_failure") {
    if (a.order != b.order) return false;
    ECPoint<K> Q = P;
    for (long k = 1; k <= a.order; ++k) {
      if (Q.infinity) return false;
      Q = ec_add_unchecked(E, Q, P);
    }
    return true;
  }
  return false;
}

// Torsion decision by reduction at degree-1 primes p >= 5 of good reduction,
// with an exact confirmation of the candidate order.
template <class K>
TorsionVerdict<K> torsion_order(const WeierstrassCurve<K>& E, const ECPoint<K>& P, const TorsionOptions& opt = {}) {
  require_on_curve(E, P);
  if (is_zero(E.discriminant())) throw DomainError("singular_curve", "curve is singular");
  if (P.infinity) {
    TorsionCertificate<K> c;
    c.order = 1;
    c.point = P;
    return c;
  }
  std::vector<ReductionRecord> recs;
  std::vector<long> refuted;
  for (std::uint32_t p = 5; p < opt.prime_bound; p += 2) {
    if (!is_prime_u32(p)) continue;
    auto maps = Embedder<K>::all(FieldTraits<K>::context(E.a), p);
    for (int i = 0; i < static_cast<int>(maps.size()); ++i) {
      WeierstrassCurve<Fp> Ep{Fp(p, 0), Fp(p, 0)};
      ECPoint<Fp> Pp;
      if (!detail::reduce_curve(E, P, maps[i], &Ep, &Pp)) continue;
      recs.push_back({p, i, detail::reduced_order(Ep, Pp)});
      break;
    }
    if (recs.empty() || recs.back().p != p) continue;
    const ReductionRecord& r = recs.back();
    for (std::size_t j = 0; j + 1 < recs.size(); ++j) {
      const ReductionRecord& s = recs[j];
      if (std::min(r.p, s.p) <= static_cast<std::uint32_t>(std::max(r.order, s.order) + 1)) continue;
      if (r.order != s.order) return NonTorsionWitness{"order_mismatch", s, r};
      if (r.order > opt.max_exact_order ||
          std::find(refuted.begin(), refuted.end(), r.order) != refuted.end())
        continue;
      const long n = r.order;
      if (ec_mul_unchecked(E, n, P).infinity) {
        TorsionCertificate<K> c;
        c.order = n;
        c.point = P;
        c.chain = double_and_add_chain(E, n, P);
        c.primes = {s, r};
        if (!verify_certificate(E, c)) throw std::logic_error("torsion certificate failed to replay");
        return c;
      }
      NonTorsionWitness w{"exact_failure", s, r};
      if (verify_witness(E, P, w)) return w;
      refuted.push_back(n);
    }
  }
  throw DomainError("insufficient_primes", "insufficient primes below " + std::to_string(opt.prime_bound));
}

}  // namespace tricover

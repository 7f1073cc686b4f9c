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

#include <string>
#include <vector>

#include "json.hpp"
#include "tricover/cover/cover.hpp"
#include "tricover/elliptic/betti.hpp"
#include "tricover/elliptic/miller.hpp"
#include "tricover/elliptic/torsion.hpp"
#include "tricover/exactalg/numeric.hpp"
#include "tricover/exactalg/qpoly.hpp"
#include "tricover/exactalg/ratfunc.hpp"
#include "tricover/exactalg/tower.hpp"
#include "tricover/pencil/certify.hpp"
#include "tricover/trinomial/trinomial.hpp"

namespace tricover {

using Json = nlohmann::ordered_json;

// {"var": v, "coeffs": [[exp, "p/q"], ...]}, nonzero terms by increasing exponent.
Json poly_json(const QPoly& p, const std::string& var);
QPoly poly_from_json(const Json& j);

Json complex_json(Complex z);
Complex complex_from_json(const Json& j);

// Field elements: a rational is "p/q"; an element of Q(alpha) is
// {"num": poly, "den": poly}; a tower element is {"level": name, "coords": [...]}.
template <class K>
struct JsonValue;

template <>
struct JsonValue<Rational> {
  static Json to(const Rational& x) { return x.str(); }
  static Rational from(const Json& j, const NoContext&) { return Rational::parse(j.get<std::string>()); }
};

template <>
struct JsonValue<QAlpha> {
  static Json to(const QAlpha& x) { return Json{{"num", poly_json(x.num(), "α")}, {"den", poly_json(x.den(), "α")}}; }
  static QAlpha from(const Json& j, const NoContext&) {
    return QAlpha(poly_from_json(j.at("num"))) / QAlpha(poly_from_json(j.at("den")));
  }
};

template <class K>
struct JsonValue<Ext<K>> {
  static Json to(const Ext<K>& e) {
    Json c = Json::array();
    for (const auto& x : e.coords()) c.push_back(JsonValue<K>::to(x));
    return Json{{"level", e.level()->name}, {"coords", c}};
  }
  // The level supplies the contexts of every lower level through ExtLevel::base.
  static Ext<K> from(const Json& j, const LevelPtr<K>& L) {
    if (j.at("level").get<std::string>() != L->name) throw std::invalid_argument("tower level name mismatch");
    std::vector<K> c;
    for (const auto& x : j.at("coords")) c.push_back(JsonValue<K>::from(x, L->base));
    if (static_cast<int>(c.size()) != L->degree()) throw std::invalid_argument("tower element has wrong length");
    return Ext<K>(L, std::move(c));
  }
};

template <class K>
Json value_json(const K& x) {
  return JsonValue<K>::to(x);
}

template <class K>
Json point_json(const ECPoint<K>& P) {
  if (P.infinity) return Json{{"infinity", true}};
  return Json{{"x", value_json(P.x)}, {"y", value_json(P.y)}};
}

template <class K>
ECPoint<K> point_from_json(const Json& j, const ContextOf<K>& ctx) {
  if (j.value("infinity", false)) return ECPoint<K>::at_infinity();
  return ECPoint<K>::affine(JsonValue<K>::from(j.at("x"), ctx), JsonValue<K>::from(j.at("y"), ctx));
}

template <class K>
Json curve_json(const WeierstrassCurve<K>& E) {
  return Json{{"a", value_json(E.a)}, {"b", value_json(E.b)}};
}

// Polynomial with field-element coefficients, same layout as poly_json.
template <class K>
Json field_poly_json(const Poly<K>& p, const std::string& var) {
  Json c = Json::array();
  for (int i = 0; i <= p.degree(); ++i)
    if (!is_zero(p.coeff(i))) c.push_back(Json::array({i, value_json(p.coeff(i))}));
  return Json{{"var", var}, {"coeffs", c}};
}

Json reduction_json(const ReductionRecord& r);
ReductionRecord reduction_from_json(const Json& j);

// {"order": n, "point": ..., "chain": [{"op", "result"}...], "primes": [...]}
template <class K>
Json certificate_json(const TorsionCertificate<K>& c) {
  Json chain = Json::array(), primes = Json::array();
  for (const auto& s : c.chain) chain.push_back(Json{{"op", s.op}, {"result", point_json(s.result)}});
  for (const auto& r : c.primes) primes.push_back(reduction_json(r));
  return Json{{"order", c.order}, {"point", point_json(c.point)}, {"chain", chain}, {"primes", primes}};
}

template <class K>
TorsionCertificate<K> certificate_from_json(const Json& j, const ContextOf<K>& ctx) {
  TorsionCertificate<K> c;
  c.order = j.at("order").get<long>();
  c.point = point_from_json<K>(j.at("point"), ctx);
  for (const auto& s : j.at("chain"))
    c.chain.push_back({s.at("op").get<std::string>(), point_from_json<K>(s.at("result"), ctx)});
  for (const auto& r : j.at("primes")) c.primes.push_back(reduction_from_json(r));
  return c;
}

// Line factors a x + b y + c with their exponents and the point n is taken of.
template <class K>
Json miller_json(const MillerProgram<K>& m) {
  Json f = Json::array();
  for (const auto& l : m.factors)
    f.push_back(Json{{"a", value_json(l.a)}, {"b", value_json(l.b)}, {"c", value_json(l.c)}, {"exponent", l.exponent}});
  return Json{{"n", m.n}, {"point", point_json(m.point)}, {"factors", f}};
}

template <class K>
MillerProgram<K> miller_from_json(const Json& j, const ContextOf<K>& ctx) {
  MillerProgram<K> m;
  m.n = j.at("n").get<long>();
  m.point = point_from_json<K>(j.at("point"), ctx);
  for (const auto& l : j.at("factors")) {
    MillerFactor<K> f{JsonValue<K>::from(l.at("a"), ctx), JsonValue<K>::from(l.at("b"), ctx),
                      JsonValue<K>::from(l.at("c"), ctx), l.at("exponent").get<int>(), {}};
    m.factors.push_back(std::move(f));
  }
  return m;
}

Json witness_json(const NonTorsionWitness& w);

template <class K>
Json verdict_json(const TorsionVerdict<K>& v) {
  if (const auto* c = std::get_if<TorsionCertificate<K>>(&v))
    return Json{{"kind", "torsion_certificate"}, {"certificate", certificate_json(*c)}};
  return Json{{"kind", "non_torsion_witness"}, {"witness", witness_json(std::get<NonTorsionWitness>(v))}};
}

Json betti_json(const BettiCoordinates& c);

// {"alpha": ..., "branch": {...}, "order": n, "status": "...", "certificate": {...}}
Json candidate_json(const SigmaCandidate& c);
Json bilu_json(const BiluCertificate& b);
Json degree_bounds_json(const DegreeBoundsReport& r);
Json trinomial_json(const TrinomialReport& r);

// Tower of an exact candidate: the level moduli from alpha up.
Json component_json(const PencilComponent& c);

}  // namespace tricover

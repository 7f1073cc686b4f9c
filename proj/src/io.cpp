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
#include "tricover/io/serialize.hpp"

#include <stdexcept>

namespace tricover {

Json poly_json(const QPoly& p, const std::string& var) {
  Json c = Json::array();
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) c.push_back(Json::array({i, p.coeff(i).str()}));
  return Json{{"var", var}, {"coeffs", c}};
}

QPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& t : j.at("coeffs")) {
    int e = t.at(0).get<int>();
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, Rational(0));
    c[e] += Rational::parse(t.at(1).get<std::string>());
  }
  return QPoly(NoContext{}, c);
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Json reduction_json(const ReductionRecord& r) {
  return Json{{"p", r.p}, {"embedding", r.embedding}, {"order", r.order}};
}

ReductionRecord reduction_from_json(const Json& j) {
  return {j.at("p").get<std::uint32_t>(), j.at("embedding").get<int>(), j.at("order").get<long>()};
}

Json witness_json(const NonTorsionWitness& w) {
  return Json{{"kind", w.kind}, {"first", reduction_json(w.first)}, {"second", reduction_json(w.second)}};
}

Json betti_json(const BettiCoordinates& c) { return Json::array({c.b1, c.b2}); }

Json component_json(const PencilComponent& c) {
  return Json{{"alpha", poly_json(c.alpha_level->modulus, "α")},
              {"lambda", field_poly_json(c.lambda_level->modulus, "λ")},
              {"u", field_poly_json(c.u_level->modulus, "u")},
              {"zeta", field_poly_json(c.z_level->modulus, "ζ")}};
}

Json candidate_json(const SigmaCandidate& c) {
  Json alpha;
  if (c.degenerate)
    alpha = "0";
  else if (c.exact)
    alpha = Json{{"minpoly", poly_json(c.minpoly, "α")}, {"root_index", c.root_index}, {"approx", complex_json(c.alpha)}};
  else
    alpha = complex_json(c.alpha);
  Json j{{"alpha", alpha},
         {"branch", Json{{"lambda", c.lambda_branch}, {"u", c.u_branch}}},
         {"order", c.order},
         {"status", status_name(c.status)},
         {"degenerate", c.degenerate}};
  if (!c.degenerate) j["betti"] = Json::array({c.betti[0], c.betti[1]});
  if (c.exact) {
    const auto& s = c.exact->component.section;
    j["certificate"] = Json{{"tower", component_json(c.exact->component)},
                            {"curve", curve_json(s.curve)},
                            {"torsion", certificate_json(c.exact->certificate)}};
  }
  return j;
}

Json bilu_json(const BiluCertificate& b) {
  return Json{{"candidate", candidate_json(b.candidate)},
              {"order", b.order},
              {"miller", miller_json(b.miller)},
              {"chain_length", b.chain_length},
              {"degree_bounds", degree_bounds_json(b.bounds)},
              {"statement", b.statement}};
}

Json degree_bounds_json(const DegreeBoundsReport& r) {
  return Json{{"n", r.n},
              {"genus_Y", r.genus_Y},
              {"genus_ge2", Json{{"m_max", r.m_max_genus_ge2}, {"degree", r.degree_genus_ge2}, {"exact", r.exact_genus_ge2}}},
              {"genus1", Json{{"m_max", r.m_max_genus1}, {"degree", r.degree_genus1}}},
              {"genus0", Json{{"possible", r.genus0_possible}, {"bound", r.genus0_bound}}}};
}

Json trinomial_json(const TrinomialReport& r) {
  Json j{{"delta", r.delta},
         {"degenerate", r.degenerate},
         {"exponent_gcd", r.exponent_gcd},
         {"invariant_factors", Json::array({r.d1, r.d2})},
         {"cyclic", r.cyclic},
         {"classification", r.classification},
         {"u", r.u},
         {"v", r.v},
         {"relation", r.relation},
         {"fiber_product", r.fiber_product}};
  if (r.degenerate)
    j["dependence"] = Json::array({r.dependence[0], r.dependence[1]});
  else {
    j["congruences"] = r.congruences;
    j["generators"] = Json::array({Json::array({r.generators[0][0], r.generators[0][1]}),
                                   Json::array({r.generators[1][0], r.generators[1][1]})});
  }
  return j;
}

}  // namespace tricover

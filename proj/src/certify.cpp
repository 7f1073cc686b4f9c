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
#include "tricover/pencil/certify.hpp"

#include <cmath>
#include <stdexcept>

#include "tricover/elliptic/betti.hpp"
#include "tricover/exactalg/complex_roots.hpp"

namespace tricover {

const TauFormula& tau_formula() {
  static const TauFormula f = [] {
    auto s = section(flex_branch(QAlpha::variable(NoContext{}), 0));
    return TauFormula{s.tau.coord(0), s.tau.coord(1)};
  }();
  return f;
}

namespace {

PA0 eval_at(const QAlpha& r, const PA0& a) {
  auto embed = [&](const Rational& q) { return lift(a.level(), q); };
  return r.num().eval_in(a, embed) / r.den().eval_in(a, embed);
}

struct Item {
  LevelPtr<Rational> L0;
  LevelPtr<PA0> L1;
  LevelPtr<PA1> L2;
  LevelPtr<PA2> L3;
};

template <class B>
std::pair<LevelPtr<B>, LevelPtr<B>> halves(const LevelPtr<B>& L, const Poly<B>& factor) {
  return {make_level<B>(L->name, factor), make_level<B>(L->name, L->modulus / factor)};
}

}  // namespace

ComponentSearch pencil_components(const QPoly& h, const QPoly* tau_condition) {
  ComponentSearch out;
  std::vector<Item> work{{make_level<Rational>("α", h), nullptr, nullptr, nullptr}};
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    try {
      PA0 a = PA0::generator(it.L0);
      PA0 d = a * a * a + lift(it.L0, Rational(1));
      if (a.is_zero() || d.is_zero()) {
        out.excluded.push_back(it.L0->modulus);
        continue;
      }
      a.inverse();
      d.inverse();
      if (!it.L1) {
        auto L = make_level<PA0>("λ", lambda_equation(a));
        if (tau_condition) {
          const auto& tf = tau_formula();
          PA1 tau = lift(L, eval_at(tf.c0, a)) + lift(L, eval_at(tf.c1, a)) * PA1::generator(L);
          PA1 e = tau_condition->eval_in(tau, [&](const Rational& q) { return lift(L, lift(it.L0, q)); });
          Poly<PA0> G = e.is_zero() ? L->modulus : gcd(L->modulus, e.as_poly());
          if (G.degree() < 1) {
            out.spurious.push_back(it.L0->modulus);
            continue;
          }
          L = make_level<PA0>("λ", G);
        }
        it.L1 = L;
      }
      BasePoint<PA0> b = flex_branch(a, 0, it.L1, it.L2);
      it.L2 = b.u_level;
      SectionValue<PA0> s = section(b, it.L3);
      it.L3 = s.z_level;
      out.components.push_back({it.L0, it.L1, it.L2, it.L3, std::move(s)});
    } catch (const ZeroDivisorError<Rational>& e) {
      if (e.level() != it.L0) throw;
      auto [x, y] = halves(it.L0, e.factor());
      work.push_back({x, nullptr, nullptr, nullptr});
      work.push_back({y, nullptr, nullptr, nullptr});
      ++out.splits;
    } catch (const ZeroDivisorError<PA0>& e) {
      if (e.level() != it.L1) throw;
      auto [x, y] = halves(it.L1, e.factor());
      work.push_back({it.L0, x, nullptr, nullptr});
      work.push_back({it.L0, y, nullptr, nullptr});
      ++out.splits;
    } catch (const ZeroDivisorError<PA1>& e) {
      if (e.level() != it.L2) throw;
      auto [x, y] = halves(it.L2, e.factor());
      work.push_back({it.L0, it.L1, x, nullptr});
      work.push_back({it.L0, it.L1, y, nullptr});
      ++out.splits;
    } catch (const ZeroDivisorError<PA2>& e) {
      if (e.level() != it.L3) throw;
      auto [x, y] = halves(it.L3, e.factor());
      work.push_back({it.L0, it.L1, it.L2, x});
      work.push_back({it.L0, it.L1, it.L2, y});
      ++out.splits;
    }
  }
  return out;
}

namespace {

template <class B>
std::vector<Complex> level_roots(const LevelPtr<B>& L, const TowerRoots& r) {
  std::vector<Complex> c;
  for (const auto& k : L->modulus.coeffs()) c.push_back(to_complex(k, r));
  return complex_poly_roots(c);
}

}  // namespace

std::vector<TowerRoots> component_embeddings(const PencilComponent& c) {
  std::vector<TowerRoots> out;
  for (Complex a : complex_roots(c.alpha_level->modulus, 1e-12)) {
    TowerRoots r{a, 0.0, 0.0, 0.0};
    for (Complex l : level_roots(c.lambda_level, r)) {
      r[1] = l;
      r[2] = level_roots(c.u_level, r).front();
      r[3] = level_roots(c.z_level, r).front();
      out.push_back(r);
    }
  }
  return out;
}

const char* status_name(SigmaCandidate::Status s) {
  return s == SigmaCandidate::Status::exact_certified ? "exact-certified" : "numeric-candidate";
}

int lambda_branch_label(Complex alpha, Complex lambda) {
  Complex s = std::sqrt(1.0 + alpha * alpha * alpha);
  Complex ld = (1.0 + s) / alpha, lo = (1.0 - s) / alpha;
  return std::abs(lambda - ld) <= std::abs(lambda - lo) ? 0 : 1;
}

int u_branch_label(Complex alpha, Complex lambda, Complex u) {
  Complex c = lambda * lambda * lambda + 3.0 * alpha * lambda - 2.0;
  Complex r = std::pow(-2.0 / c, 1.0 / 3.0);
  double t = std::arg(u / r) / (2.0 * M_PI / 3.0);
  long k = std::lround(t);
  return static_cast<int>(((k % 3) + 3) % 3);
}

CertificationReport certify_torsion_roots(const QPoly& g, int n, TorsionOptions opt) {
  CertificationReport rep;
  QPoly P = torsion_tau_poly(n);
  rep.search = pencil_components(squarefree_part(g), &P);
  for (const auto& comp : rep.search.components) {
    const auto& s = comp.section;
    auto verdict = torsion_order(s.curve, s.D, opt);
    if (!std::holds_alternative<TorsionCertificate<PA3>>(verdict)) {
      rep.non_torsion.push_back(comp.alpha_level->modulus);
      continue;
    }
    auto cert = std::make_shared<CertifiedSection>(CertifiedSection{comp, std::get<TorsionCertificate<PA3>>(verdict)});
    if (n % cert->certificate.order != 0) throw std::logic_error("certified order does not divide n");
    std::vector<Complex> alphas = complex_roots(comp.alpha_level->modulus, 1e-12);
    for (const TowerRoots& r : component_embeddings(comp)) {
      SigmaCandidate c;
      c.alpha = r[0];
      c.minpoly = comp.alpha_level->modulus;
      for (std::size_t i = 0; i < alphas.size(); ++i)
        if (std::abs(alphas[i] - r[0]) < 1e-9 * std::max(1.0, std::abs(r[0]))) c.root_index = static_cast<int>(i);
      c.lambda_branch = lambda_branch_label(r[0], r[1]);
      c.u_branch = u_branch_label(r[0], r[1], r[2]);
      c.order = cert->certificate.order;
      c.status = SigmaCandidate::Status::exact_certified;
      c.exact = cert;
      c.roots = r;
      auto bc = betti_coordinates(to_complex(s.curve.a, r), to_complex(s.curve.b, r), s.D.infinity,
                                  to_complex(s.D.x, r), to_complex(s.D.y, r));
      c.betti = {bc.b1, bc.b2};
      rep.candidates.push_back(std::move(c));
    }
  }
  return rep;
}

WitnessResult nontorsion_witness(const Rational& alpha0, int branch, TorsionOptions opt) {
  if (alpha0.is_zero()) throw DomainError("degenerate", "alpha = 0 is the degenerate fiber");
  if ((alpha0 * alpha0 * alpha0 + Rational(1)).is_zero())
    throw DomainError("discriminant_locus", "discriminant locus: alpha^3 = -1");
  auto search = pencil_components(QPoly(NoContext{}, {-alpha0, Rational(1)}));
  if (search.components.empty()) throw std::logic_error("no component over a rational alpha");
  const auto& comp = search.components[static_cast<std::size_t>(branch) % search.components.size()];
  return {comp, torsion_order(comp.section.curve, comp.section.D, opt)};
}

BiluCertificate bilu_certificate(const SigmaCandidate& c) {
  if (c.status != SigmaCandidate::Status::exact_certified || !c.exact)
    throw DomainError("not_exact", "certify exactly first");
  const auto& s = c.exact->component.section;
  TorsionCertificate<PA3> claimed = c.exact->certificate;
  claimed.order = c.order;
  if (c.order < 1 || !verify_certificate(s.curve, claimed))
    throw DomainError("replay_failed", "torsion certificate does not replay for order " + std::to_string(c.order));
  BiluCertificate b;
  b.candidate = c;
  b.order = c.order;
  b.miller = miller_function(s.curve, s.D, c.order);
  b.chain_length = claimed.chain.size();
  b.bounds = image_degree_bounds(c.order);
  const std::string n = std::to_string(c.order);
  b.statement = {
      "the divisor class " + n + "(p2 - p1) is principal: it is the pullback of the Miller function of " + n + " D",
      "the divisor class " + n + "(p3 - p1) is principal: p3 - p1 maps to 2 D on the elliptic quotient",
      "the units u, v with divisors " + n + "(p2 - p1), " + n + "(p3 - p1) map Y to a curve F(u, v) = 0 in G_m^2",
  };
  return b;
}

bool verify_bilu(const BiluCertificate& b) {
  if (!b.candidate.exact) return false;
  const auto& s = b.candidate.exact->component.section;
  TorsionCertificate<PA3> claimed = b.candidate.exact->certificate;
  claimed.order = b.order;
  if (!verify_certificate(s.curve, claimed)) return false;
  if (b.miller.n != b.order || !(b.miller.point == s.D)) return false;
  auto [pts, at_inf] = b.miller.divisor();
  if (at_inf != -b.order || pts.size() != 1) return false;
  return pts[0].first == s.D && pts[0].second == b.order;
}

}  // namespace tricover

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
#include "tricover/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "tricover/cover/cover.hpp"
#include "tricover/elliptic/betti.hpp"
#include "tricover/elliptic/torsion.hpp"
#include "tricover/errors.hpp"
#include "tricover/exactalg/text.hpp"
#include "tricover/genus2/family.hpp"
#include "tricover/genus2/quartic.hpp"
#include "tricover/io/serialize.hpp"
#include "tricover/pencil/certify.hpp"
#include "tricover/pencil/pencil.hpp"
#include "tricover/pencil/scan.hpp"
#include "tricover/trinomial/trinomial.hpp"

namespace tricover {

namespace {

// Bad user input detected after CLI11 parsing (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rat_arg(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + flag + ": not a rational number: " + s);
  }
}

QPoly poly_arg(const std::string& s, const std::string& var, const char* flag) {
  try {
    return parse_poly(s, var);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

TorsionOptions torsion_options() {
  TorsionOptions o;
  if (const char* env = std::getenv("GENUS2_PRIME_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (!end || *end || v < 5 || v > 2000000000UL) throw UsageError("GENUS2_PRIME_BOUND must be an integer >= 5");
    o.prime_bound = static_cast<std::uint32_t>(v);
  }
  return o;
}

template <class K>
std::string affine_cubic(const PlaneCubic<K>& C) {
  const auto ctx = C.F.context();
  using MP = MPoly<K>;
  MP one = MP::constant(ctx, 3, make_int<K>(ctx, 1));
  return C.F.substitute({one, MP::var(ctx, 3, 1), MP::var(ctx, 3, 2)}).str({"t", "u", "z"});
}

template <class K>
Json poly_value_json(const Poly<K>& p, const std::string& var) {
  if constexpr (std::is_same_v<K, Rational>)
    return poly_json(p, var);
  else
    return field_poly_json(p, var);
}

template <class K>
Json cover_json(const CoverData<K>& C) {
  auto E = elliptic_quotient(C);
  return Json{{"genus", C.genus},
              {"base_genus", C.base_genus},
              {"degree", C.degree},
              {"ramification_resultant", value_json(C.ramification_resultant)},
              {"unramified", !is_zero(C.ramification_resultant)},
              {"quotient_cubic", E.cubic.F.str({"t", "u", "z"})},
              {"quotient_identity", E.identity_verified}};
}

template <class K>
Json fiber_json(const K& alpha) {
  auto F = build_fiber(alpha);
  Json j{{"alpha", value_json(alpha)},
         {"f", poly_value_json(F.f, "u")},
         {"f_text", F.f.str("u")},
         {"P", F.P.str("u")},
         {"Q", F.Q.str("u")},
         {"power_gap_identity", F.f == F.P * F.P - F.Q * F.Q * F.Q},
         {"cubic", affine_cubic(F.cubic)},
         {"cubic_projective", F.cubic.F.str({"t", "u", "z"})},
         {"discriminant_locus", "α^3+1"},
         {"bad_genus2_reduction", F.bad_genus2_reduction}};
  j["cover"] = F.cover ? cover_json(*F.cover) : Json(nullptr);
  return j;
}

struct Globals {
  std::uint64_t seed = 20261016;
  int jobs = 1;
  std::string output;
};

// ---- pencil -------------------------------------------------------------

Json cmd_pencil_build(const std::string& alpha) {
  if (alpha.empty() || alpha == "symbolic") return fiber_json(QAlpha::variable(NoContext{}));
  return fiber_json(rat_arg(alpha, "alpha"));
}

Json numeric_branches_json(Complex a) {
  Json arr = Json::array();
  for (const auto& b : numeric_flex_branches(a))
    arr.push_back(Json{{"lambda_branch", b.lambda_branch},
                       {"u_branch", b.u_branch},
                       {"distinguished", b.lambda_branch == 0},
                       {"lambda", complex_json(b.lambda)},
                       {"u", complex_json(b.u)},
                       {"z", complex_json(b.z)}});
  return arr;
}

Json cmd_pencil_flexes(const std::string& alpha) {
  if (alpha.empty() || alpha == "symbolic")
    return Json{{"alpha", "symbolic"},
                {"equations", Json::array({"αλ^2-2λ-α^2", "(λ^3+3αλ-2)u^3+2"})},
                {"z", "λu"}};
  Rational a = rat_arg(alpha, "alpha");
  if (a.is_zero()) {
    auto d = degenerate_flexes();
    return Json{{"alpha", "0"},
                {"degenerate", true},
                {"flexes", Json{{"u_zero", d.u_zero_z.str("z")}, {"z_zero", d.z_zero_u.str("u")},
                                {"infinity", d.infinity_z.str("z")}}}};
  }
  Json exact = Json::array();
  for (const auto& b : flex_branches(a))
    exact.push_back(Json{{"lambda_branch", b.lambda_branch},
                         {"lambda_level", poly_json(b.lambda_level->modulus, "λ")},
                         {"lambda", value_json(b.lambda)},
                         {"u_level", field_poly_json(b.u_level->modulus, "u")}});
  return Json{{"alpha", a.str()}, {"degenerate", false}, {"exact", exact}, {"numeric", numeric_branches_json(a.to_double())}};
}

Json cmd_pencil_section(const std::string& alpha, int branch, int samples, std::uint64_t seed) {
  Rational a = rat_arg(alpha, "alpha");
  if (a.is_zero()) throw DomainError("degenerate", "alpha = 0 is the degenerate fiber");
  if ((a * a * a + Rational(1)).is_zero()) throw DomainError("discriminant_locus", "discriminant locus: alpha^3 = -1");
  auto search = pencil_components(QPoly(NoContext{}, {-a, Rational(1)}));
  if (search.components.empty()) throw std::logic_error("no component over a rational alpha");
  const auto& comp = search.components[static_cast<std::size_t>(branch) % search.components.size()];
  const auto& s = comp.section;
  Json pts = Json::array(), emb = Json::array();
  for (const auto& P : s.images) pts.push_back(point_json(P));
  for (const auto& r : component_embeddings(comp)) {
    auto bc = betti_coordinates(to_complex(s.curve.a, r), to_complex(s.curve.b, r), s.D.infinity,
                                to_complex(s.D.x, r), to_complex(s.D.y, r));
    emb.push_back(Json{{"lambda_branch", lambda_branch_label(r[0], r[1])},
                       {"u_branch", u_branch_label(r[0], r[1], r[2])},
                       {"lambda", complex_json(r[1])},
                       {"u", complex_json(r[2])},
                       {"betti", betti_json(bc)}});
  }
  Json j{{"alpha", a.str()},
         {"branch", branch},
         {"components", search.components.size()},
         {"tower", component_json(comp)},
         {"curve", curve_json(s.curve)},
         {"images", pts},
         {"D", point_json(s.D)},
         {"equal_components", s.equal_components},
         {"p1_equals_p3", s.p1_equals_p3},
         {"tau", value_json(s.tau)},
         {"embeddings", emb}};
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 20);
    Json arr = Json::array();
    while (static_cast<int>(arr.size()) < samples) {
      Rational q(num(rng), den(rng));
      if (q.is_zero() || (q * q * q + Rational(1)).is_zero()) continue;
      int br = static_cast<int>(rng() % 2);
      auto ns = numeric_section(q.to_double(), br);
      arr.push_back(Json{{"alpha", q.str()}, {"lambda_branch", br}, {"component_gap", ns.component_gap}});
    }
    j["seed"] = seed;
    j["samples"] = arr;
  }
  return j;
}

Json cmd_pencil_torsion_poly(int n, int max_n) {
  if (n < 2 || n > max_n) throw UsageError("--n must lie in [2, max-n]");
  QPoly T = torsion_param_poly(n, max_n);
  return Json{{"n", n}, {"T", poly_json(T, "α")}, {"T_text", T.str("α")}, {"degree", T.degree()},
              {"tau_poly", poly_json(torsion_tau_poly(n), "t")}};
}

Json cmd_pencil_certify(int n, const std::string& factor, bool bilu, const std::string& alpha, int branch) {
  TorsionOptions opt = torsion_options();
  if (!alpha.empty()) {
    Rational a = rat_arg(alpha, "alpha");
    auto w = nontorsion_witness(a, branch, opt);
    const auto& s = w.component.section;
    bool valid = std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, NonTorsionWitness>)
            return verify_witness(s.curve, s.D, v);
          else
            return verify_certificate(s.curve, v);
        },
        w.verdict);
    return Json{{"alpha", a.str()}, {"branch", branch}, {"verdict", verdict_json(w.verdict)}, {"valid", valid}};
  }
  if (n < 2 || n > 12) throw UsageError("--n must lie in [2, 12]");
  QPoly g = factor.empty() ? torsion_param_poly(n) : poly_arg(factor, "α", "factor");
  auto rep = certify_torsion_roots(g, n, opt);
  Json cands = Json::array(), nt = Json::array(), sp = Json::array(), ex = Json::array(), bl = Json::array();
  for (const auto& c : rep.candidates) {
    cands.push_back(candidate_json(c));
    if (bilu) bl.push_back(bilu_json(bilu_certificate(c)));
  }
  for (const auto& q : rep.non_torsion) nt.push_back(poly_json(q, "α"));
  for (const auto& q : rep.search.spurious) sp.push_back(poly_json(q, "α"));
  for (const auto& q : rep.search.excluded) ex.push_back(poly_json(q, "α"));
  Json j{{"n", n}, {"factor", poly_json(g, "α")}, {"candidates", cands}, {"non_torsion", nt},
         {"spurious", sp}, {"excluded", ex}};
  if (bilu) j["bilu"] = bl;
  return j;
}

Json cmd_pencil_scan(const ScanOptions& o) {
  if (o.radius <= 0) throw UsageError("--radius must be positive");
  if (o.samples < 1) throw UsageError("--samples must be positive");
  auto v = numeric_scan(o);
  Json c = Json::array();
  for (const auto& s : v) c.push_back(candidate_json(s));
  return Json{{"center", complex_json(o.center)}, {"radius", o.radius}, {"n_max", o.n_max}, {"samples", o.samples},
              {"tol", o.tol}, {"count", v.size()}, {"candidates", c}};
}

// ---- ec -----------------------------------------------------------------

struct EcArgs {
  std::string a, b, x, y;
};

Json cmd_ec_torsion(const EcArgs& e) {
  WeierstrassCurve<Rational> E{rat_arg(e.a, "a"), rat_arg(e.b, "b")};
  if (E.discriminant().is_zero()) throw DomainError("singular_curve", "curve is singular");
  auto P = ECPoint<Rational>::affine(rat_arg(e.x, "x"), rat_arg(e.y, "y"));
  require_on_curve(E, P);
  auto v = torsion_order(E, P, torsion_options());
  bool valid = std::holds_alternative<NonTorsionWitness>(v)
                   ? verify_witness(E, P, std::get<NonTorsionWitness>(v))
                   : verify_certificate(E, std::get<TorsionCertificate<Rational>>(v));
  return Json{{"curve", curve_json(E)}, {"point", point_json(P)}, {"verdict", verdict_json(v)}, {"valid", valid}};
}

Json cmd_ec_betti(const EcArgs& e, long max_den, double tol) {
  Rational a = rat_arg(e.a, "a"), b = rat_arg(e.b, "b"), x = rat_arg(e.x, "x"), y = rat_arg(e.y, "y");
  WeierstrassCurve<Rational> E{a, b};
  if (E.discriminant().is_zero()) throw DomainError("singular_curve", "curve is singular");
  require_on_curve(E, ECPoint<Rational>::affine(x, y));
  auto c = betti_coordinates(a.to_double(), b.to_double(), false, x.to_double(), y.to_double());
  auto ord = betti_torsion_order(c, max_den, tol);
  return Json{{"betti", betti_json(c)}, {"max_den", max_den}, {"tol", tol},
              {"torsion_order", ord ? Json(*ord) : Json(nullptr)}};
}

// ---- genus2 -------------------------------------------------------------

Json cmd_quartic_model(const std::string& f, const std::string& alpha, const std::string& u0, const std::string& v0) {
  QPoly F;
  if (!f.empty())
    F = poly_arg(f, "u", "f");
  else if (!alpha.empty())
    F = build_fiber(rat_arg(alpha, "alpha")).f;
  else
    throw UsageError("quartic-model needs --f or --alpha");
  auto M = SexticModel<Rational>::make(F);
  auto q0 = CurvePoint<Rational>::finite(rat_arg(u0, "u0"), rat_arg(v0, "v0"));
  if (!on_curve(M, q0)) throw DomainError("off_curve", "q0 is not on the curve");
  auto Q = quartic_model(M, q0);
  analyze_singularities(Q);
  Json sing = Json::array();
  for (const auto& s : Q.singular) sing.push_back(Json{{"z", s.z.str()}, {"w", s.w.str()}, {"type", s.type}});
  return Json{{"f", poly_json(F, "u")},
              {"q0", Json{{"u", q0.u.str()}, {"v", q0.v.str()}}},
              {"F", Q.F.str({"z", "w"})},
              {"terms", Q.F.terms().size()},
              {"total_degree", Q.F.total_degree()},
              {"bidegree", Json::array({Q.F.degree(0), Q.F.degree(1)})},
              {"z", Q.z.str()},
              {"w", Q.w.str()},
              {"singular_point", sing},
              {"singular_count", Q.singular_count},
              {"smooth_at_infinity", Q.smooth_at_infinity},
              {"relation_holds", quartic_relation_holds(M.f, Q)}};
}

Json cmd_family_checks() {
  auto r = quartic_family_checks();
  auto q = quintic_reduction_check();
  return Json{{"quartic",
               Json{{"involution_preserves_curve", r.involution_preserves_curve},
                    {"involution_is_involution", r.involution_is_involution},
                    {"corrected_involution_preserves_curve", r.half_involution_preserves_curve},
                    {"corrected_involution_is_involution", r.half_involution_is_involution},
                    {"sextic_identity", r.sextic_identity},
                    {"sextic_identity_rescaled", r.sextic_identity_rescaled},
                    {"origin_singular", r.origin_singular},
                    {"unique_affine_singularity", r.unique_affine_singularity},
                    {"one_smooth_point_at_infinity", r.one_smooth_point_at_infinity},
                    {"genus", r.genus}}},
              {"quintic",
               Json{{"y8_identity", q.y8_identity},
                    {"w_identity", q.w_identity},
                    {"automorphism", q.automorphism},
                    {"automorphism_order", q.automorphism_order}}}};
}

// ---- cover --------------------------------------------------------------

Json cmd_cover_build(const std::string& alpha, const std::string& f, const std::string& P, const std::string& Q) {
  if (!alpha.empty()) {
    Rational a = rat_arg(alpha, "alpha");
    auto F = build_fiber(a);
    if (!F.cover) throw DomainError("not_squarefree", "f has a repeated factor: no genus-2 curve at alpha = 0");
    return Json{{"alpha", a.str()}, {"f", poly_json(F.f, "u")}, {"cover", cover_json(*F.cover)}};
  }
  if (P.empty() || Q.empty()) throw UsageError("cover build needs --alpha or both --P and --Q");
  QPoly PP = poly_arg(P, "u", "P"), QQ = poly_arg(Q, "u", "Q");
  QPoly ff = f.empty() ? PP * PP - QQ * QQ * QQ : poly_arg(f, "u", "f");
  auto C = build_cover(SexticModel<Rational>::make(ff), PowerGapRep<Rational>{PP, QQ, QQ.is_zero()});
  return Json{{"f", poly_json(ff, "u")}, {"cover", cover_json(C)}};
}

Json cmd_degree_bounds(long n, int g) {
  if (n < 1) throw UsageError("--n must be positive");
  if (g < 2) throw UsageError("--genus-y must be at least 2");
  return degree_bounds_json(image_degree_bounds(n, g));
}

// ---- trinomial ----------------------------------------------------------

Json cmd_trinomial(long n, long r, long s, long m, const std::string& a, const std::string& b) {
  TrinomialCurve C{n, r, s, m, std::nullopt, std::nullopt};
  if (!a.empty()) C.a = rat_arg(a, "a");
  if (!b.empty()) C.b = rat_arg(b, "b");
  auto R = classify(C);
  Json j = trinomial_json(R);
  if (!R.degenerate && R.delta <= 1000) j["invariants_verified"] = verify_invariants(C, R).ok();
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> step_aliases() {
  return {{"fiber", "pencil build"},           {"flexes", "pencil flexes"},
          {"section", "pencil section"},       {"torsion-poly", "pencil torsion-poly"},
          {"certify", "pencil certify"},       {"scan", "pencil scan"},
          {"ec-torsion", "ec torsion"},        {"betti", "ec betti"},
          {"quartic", "genus2 quartic-model"}, {"family", "genus2 family-checks"},
          {"cover", "cover build"},            {"degree-bounds", "cover degree-bounds"},
          {"trinomial", "trinomial classify"}};
}

std::vector<std::string> expand_step_alias(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string step;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--step") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--step needs a name");
      step = args[++i];
    } else if (args[i].rfind("--step=", 0) == 0) {
      step = args[i].substr(7);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (step.empty()) return rest;
  for (const auto& [name, cmd] : step_aliases())
    if (name == step) {
      std::vector<std::string> out;
      std::size_t b = 0;
      for (std::size_t e; (e = cmd.find(' ', b)) != std::string::npos; b = e + 1) out.push_back(cmd.substr(b, e - b));
      out.push_back(cmd.substr(b));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  throw std::invalid_argument("unknown step name: " + step);
}

int run_cli(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_step_alias(raw);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact and numeric tools for a pencil of genus-2 curves with unramified cubic covers"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--jobs", g.jobs, "worker threads for scans")->check(CLI::Range(1, 256));
  app.add_option("--output,-o", g.output, "write the JSON result to this file");
  std::string step_doc;
  for (const auto& [name, cmd] : step_aliases()) step_doc += " " + name;
  app.footer("--step NAME runs a command by step name:" + step_doc);

  std::function<Json()> action;

  auto* pencil = app.add_subcommand("pencil", "the pencil of genus-2 curves and its elliptic quotients");
  pencil->require_subcommand(1);
  std::string alpha;
  int branch = 0, n = 0, max_n = 12, samples = 0;
  {
    auto* c = pencil->add_subcommand("build", "equations of the fiber at alpha");
    c->add_option("--alpha", alpha, "rational alpha, or 'symbolic' (default)");
    c->callback([&] { action = [&] { return cmd_pencil_build(alpha); }; });
  }
  {
    auto* c = pencil->add_subcommand("flexes", "finite flexes of E_alpha");
    c->add_option("--alpha", alpha, "rational alpha, or 'symbolic' (default)");
    c->callback([&] { action = [&] { return cmd_pencil_flexes(alpha); }; });
  }
  {
    auto* c = pencil->add_subcommand("section", "the section D = phi(p2) - phi(p1) at a rational alpha");
    c->add_option("--alpha", alpha, "rational alpha")->required();
    c->add_option("--branch", branch, "lambda branch / tower component")->check(CLI::Range(0, 1));
    c->add_option("--samples", samples, "random alphas for the numeric equal-components check")->check(CLI::Range(0, 10000));
    c->callback([&] { action = [&] { return cmd_pencil_section(alpha, branch, samples, g.seed); }; });
  }
  {
    auto* c = pencil->add_subcommand("torsion-poly", "T_n(alpha)");
    c->add_option("--n", n, "torsion order")->required();
    c->add_option("--max-n", max_n, "upper bound on n")->check(CLI::Range(2, 64));
    c->callback([&] { action = [&] { return cmd_pencil_torsion_poly(n, max_n); }; });
  }
  std::string factor;
  bool bilu = false;
  {
    auto* c = pencil->add_subcommand("certify", "exact torsion certificates at roots of T_n, or a witness at --alpha");
    c->add_option("--n", n, "torsion order");
    c->add_option("--factor", factor, "factor of T_n in alpha (default: T_n)");
    c->add_flag("--bilu", bilu, "attach Bilu certificates");
    c->add_option("--alpha", alpha, "rational alpha: non-torsion witness mode");
    c->add_option("--branch", branch, "component for --alpha")->check(CLI::Range(0, 1));
    c->callback([&] {
      if (alpha.empty() && n == 0) throw CLI::ValidationError("certify needs --n or --alpha");
      action = [&] { return cmd_pencil_certify(n, factor, bilu, alpha, branch); };
    });
  }
  ScanOptions so;
  double cre = 0, cim = 0;
  {
    auto* c = pencil->add_subcommand("scan", "numeric torsion parameters in a disc");
    c->add_option("--center-re", cre, "disc center, real part");
    c->add_option("--center-im", cim, "disc center, imaginary part");
    c->add_option("--radius", so.radius, "disc radius");
    c->add_option("--n-max", so.n_max, "largest torsion order")->check(CLI::Range(1, 12));
    c->add_option("--samples", so.samples, "grid points per branch");
    c->add_option("--tol", so.tol, "Betti tolerance");
    c->callback([&] {
      action = [&] {
        so.center = Complex(cre, cim);
        so.jobs = g.jobs;
        return cmd_pencil_scan(so);
      };
    });
  }

  auto* ec = app.add_subcommand("ec", "elliptic curves y^2 = x^3 + a x + b over Q");
  ec->require_subcommand(1);
  EcArgs ea;
  long max_den = 12;
  double tol = 1e-6;
  auto ec_opts = [&](CLI::App* c) {
    c->add_option("--a", ea.a)->required();
    c->add_option("--b", ea.b)->required();
    c->add_option("--x", ea.x)->required();
    c->add_option("--y", ea.y)->required();
  };
  {
    auto* c = ec->add_subcommand("torsion", "exact order or non-torsion witness of a rational point");
    ec_opts(c);
    c->callback([&] { action = [&] { return cmd_ec_torsion(ea); }; });
  }
  {
    auto* c = ec->add_subcommand("betti", "Betti coordinates of a rational point");
    ec_opts(c);
    c->add_option("--max-den", max_den, "largest denominator tried")->check(CLI::Range(1L, 1000L));
    c->add_option("--tol", tol, "tolerance");
    c->callback([&] { action = [&] { return cmd_ec_betti(ea, max_den, tol); }; });
  }

  auto* g2 = app.add_subcommand("genus2", "genus-2 models");
  g2->require_subcommand(1);
  std::string f, u0, v0, P, Q;
  {
    auto* c = g2->add_subcommand("quartic-model", "plane quartic model from L(3 q0) and L(4 q0)");
    c->add_option("--f", f, "sextic or quintic in u");
    c->add_option("--alpha", alpha, "use the pencil fiber at alpha");
    c->add_option("--u0", u0, "q0 = (u0, v0)")->required();
    c->add_option("--v0", v0)->required();
    c->callback([&] { action = [&] { return cmd_quartic_model(f, alpha, u0, v0); }; });
  }
  {
    auto* c = g2->add_subcommand("family-checks", "identities of the quartic and quintic families");
    c->callback([&] { action = [&] { return cmd_family_checks(); }; });
  }

  auto* cov = app.add_subcommand("cover", "unramified cyclic cubic covers w^3 = v + P");
  cov->require_subcommand(1);
  long bn = 0;
  int genus_y = 4;
  {
    auto* c = cov->add_subcommand("build", "cover from a pencil fiber or from P, Q");
    c->add_option("--alpha", alpha, "pencil fiber");
    c->add_option("--f", f, "sextic f = P^2 - Q^3 (default: computed)");
    c->add_option("--P", P, "cubic P(u)");
    c->add_option("--Q", Q, "quadratic Q(u)");
    c->callback([&] { action = [&] { return cmd_cover_build(alpha, f, P, Q); }; });
  }
  {
    auto* c = cov->add_subcommand("degree-bounds", "degree bounds for images of n-th power maps");
    c->add_option("--n", bn)->required();
    c->add_option("--genus-y", genus_y);
    c->callback([&] { action = [&] { return cmd_degree_bounds(bn, genus_y); }; });
  }

  auto* tri = app.add_subcommand("trinomial", "x^n + a x^r y^s + b y^m = 0");
  tri->require_subcommand(1);
  long tn = 0, tr = 0, ts = 0, tm = 0;
  std::string ta, tb;
  {
    auto* c = tri->add_subcommand("classify", "group action and finiteness classification");
    c->add_option("--n", tn)->required();
    c->add_option("--r", tr)->required();
    c->add_option("--s", ts)->required();
    c->add_option("--m", tm)->required();
    c->add_option("--a", ta, "rational a (default symbolic)");
    c->add_option("--b", tb, "rational b (default symbolic)");
    c->callback([&] { action = [&] { return cmd_trinomial(tn, tr, ts, tm, ta, tb); }; });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitUsage;
  }

  Json result;
  int code = kExitOk;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    result = error_json(e.kind(), e.what());
    code = kExitDomain;
  } catch (const std::invalid_argument& e) {
    result = error_json("invalid_argument", e.what());
    code = kExitDomain;
  } catch (const std::domain_error& e) {
    result = error_json("domain_error", e.what());
    code = kExitDomain;
  }
  const std::string text = result.dump(2);
  if (!g.output.empty() && code == kExitOk) {
    std::ofstream f(g.output);
    if (!f) {
      err << "error: cannot write " << g.output << "\n";
      return kExitUsage;
    }
    f << text << "\n";
  } else {
    out << text << "\n";
  }
  return code;
}

}  // namespace tricover

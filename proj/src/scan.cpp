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
#include "tricover/pencil/scan.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>
#include <utility>

#include "tricover/elliptic/plane_cubic.hpp"
#include "tricover/errors.hpp"

namespace tricover {

NumericBasePoint numeric_flex(Complex alpha, int lambda_branch, int u_branch) {
  NumericBasePoint p;
  p.alpha = alpha;
  p.lambda_branch = lambda_branch;
  p.u_branch = u_branch;
  Complex s = std::sqrt(1.0 + alpha * alpha * alpha);
  p.lambda = (lambda_branch == 0 ? 1.0 + s : 1.0 - s) / alpha;
  // 1 - s loses digits for small alpha: use (1 - s) = -alpha^3 / (1 + s).
  if (lambda_branch == 1) p.lambda = -alpha * alpha / (1.0 + s);
  Complex c = p.lambda * p.lambda * p.lambda + 3.0 * alpha * p.lambda - 2.0;
  const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  p.u = std::pow(-2.0 / c, 1.0 / 3.0) * std::pow(omega, u_branch);
  p.z = p.lambda * p.u;
  return p;
}

std::vector<NumericBasePoint> numeric_flex_branches(Complex alpha) {
  std::vector<NumericBasePoint> out;
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < 3; ++k) out.push_back(numeric_flex(alpha, l, k));
  return out;
}

NumericSection numeric_section(Complex alpha, int lambda_branch, int u_branch) {
  if (std::abs(alpha) < 1e-12) throw DomainError("degenerate", "alpha = 0 is the degenerate fiber");
  if (std::abs(alpha * alpha * alpha + 1.0) < 1e-12)
    throw DomainError("discriminant_locus", "discriminant locus: alpha^3 = -1");
  NumericSection s;
  s.base = numeric_flex(alpha, lambda_branch, u_branch);
  const Complex u = s.base.u, z = s.base.z;
  MPoly<Complex> F(NoContext{}, 3);
  F.add_term({0, 0, 3}, 1.0);
  F.add_term({0, 2, 1}, 3.0 * alpha);
  F.add_term({0, 3, 0}, -2.0);
  F.add_term({3, 0, 0}, 2.0);
  auto C = PlaneCubic<Complex>::make(F);
  double scale = std::max({1.0, std::abs(u), std::abs(z), std::abs(alpha)});
  auto M = cubic_to_weierstrass(C, ProjPoint<Complex>{1.0, u, z}, 1e-7 * std::pow(scale, 4));
  s.a = M.curve.a;
  s.b = M.curve.b;
  Complex c0 = z * z + 3.0 * alpha * u * u;
  Complex z1 = (-z + std::sqrt(z * z - 4.0 * c0)) / 2.0;
  ECPoint<Complex> P1 = map_to_weierstrass(M.change, ProjPoint<Complex>{1.0, u, z1});
  if (P1.infinity || std::abs(3.0 * z * z + c0) < 1e-12 * scale * scale)
    throw DomainError("discriminant_locus", "discriminant locus: p1 is the flex");
  s.x = P1.x;
  s.y = -P1.y;
  ECPoint<Complex> P3 = map_to_weierstrass(M.change, ProjPoint<Complex>{1.0, u, -z - z1});
  s.component_gap = P3.infinity ? HUGE_VAL : std::abs(P3.x - P1.x) + std::abs(P3.y + P1.y);
  s.tau = s.x * s.x * s.x / s.b;
  s.betti = betti_coordinates(s.a, s.b, false, s.x, s.y);
  return s;
}

namespace {

// max-norm distance of N * (b1, b2) to Z^2
double lattice_gap(const BettiCoordinates& c, int N) {
  auto g = [&](double t) {
    double v = N * t;
    return std::abs(v - std::round(v));
  };
  return std::max(g(c.b1), g(c.b2));
}

struct Refined {
  Complex alpha;
  bool degenerate = false;
  bool ok = false;
};

// tau = x(D)^3 / b in closed form on a fixed lambda branch, with d tau / d alpha:
// tau = 4 alpha^3 / (1 + s)^2 on branch 0 and 16 / that on branch 1, s^2 = 1 + alpha^3.
std::pair<Complex, Complex> tau_and_slope(Complex a, int branch) {
  const Complex s = std::sqrt(1.0 + a * a * a), ds = 1.5 * a * a / s;
  const Complex q = 4.0 * a * a * a / ((1.0 + s) * (1.0 + s));
  const Complex dq = 12.0 * a * a / ((1.0 + s) * (1.0 + s)) - 2.0 * q * ds / (1.0 + s);
  if (branch == 0) return {q, dq};
  return {16.0 / q, -16.0 * dq / (q * q)};
}

// Newton on F(alpha) = P_N(tau(alpha)) along a fixed branch.
Refined refine(Complex alpha, int branch, const std::vector<double>& PN, const ScanOptions& opt) {
  auto F = [&](Complex a, Complex& fp) {
    auto [t, dt] = tau_and_slope(a, branch);
    Complex acc = 0.0, d = 0.0;
    for (auto it = PN.rbegin(); it != PN.rend(); ++it) {
      d = d * t + acc;
      acc = acc * t + *it;
    }
    fp = d * dt;
    return acc;
  };
  Refined r;
  for (int it = 0; it < 60; ++it) {
    if (std::abs(alpha) < 1e-6) {
      r.alpha = 0.0;
      r.degenerate = true;
      r.ok = true;
      return r;
    }
    Complex fp, f = F(alpha, fp);
    if (!std::isfinite(std::abs(f)) || !std::isfinite(std::abs(fp))) return r;
    if (fp == Complex(0.0, 0.0)) return r;
    Complex step = f / fp;
    alpha -= step;
    if (std::abs(alpha - opt.center) > opt.radius * 1.05 + 1e-9) return r;
    if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(alpha))) {
      r.alpha = alpha;
      r.ok = true;
      return r;
    }
  }
  return r;
}

}  // namespace

std::vector<SigmaCandidate> numeric_scan(const ScanOptions& opt) {
  std::vector<SigmaCandidate> all;
  if (opt.n_max < 2) return all;
  std::vector<std::vector<double>> PN(opt.n_max + 1);
  for (int N = 2; N <= opt.n_max; ++N) {
    QPoly p = torsion_tau_poly(N);
    for (int i = 0; i <= p.degree(); ++i) PN[N].push_back(p.coeff(i).to_double());
  }

  // Square grid with about `samples` points inside the disc.
  const double h = opt.radius * std::sqrt(M_PI / std::max(1, opt.samples));
  const int m = static_cast<int>(std::ceil(opt.radius / h));
  std::vector<Complex> grid;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j) {
      Complex a = opt.center + Complex(i * h, j * h);
      if (std::abs(a - opt.center) > opt.radius) continue;
      if (std::abs(a * a * a + 1.0) < 1e-3 || std::abs(a) < 1e-9) continue;
      grid.push_back(a);
    }

  std::mutex mu;
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<SigmaCandidate> local;
    for (std::size_t g = lo; g < hi; ++g)
      for (int branch = 0; branch < 2; ++branch) {
        NumericSection s;
        try {
          s = numeric_section(grid[g], branch);
        } catch (const std::exception&) {
          continue;
        }
        for (int N = 2; N <= opt.n_max; ++N) {
          if (lattice_gap(s.betti, N) > opt.coarse) continue;
          Refined r = refine(grid[g], branch, PN[N], opt);
          if (!r.ok) continue;
          SigmaCandidate c;
          c.lambda_branch = branch;
          c.status = SigmaCandidate::Status::numeric_candidate;
          if (r.degenerate) {
            if (N % 3 != 0 || std::abs(opt.center) > opt.radius) continue;
            c.alpha = 0.0;
            c.degenerate = true;
            c.order = 3;
            local.push_back(c);
            continue;
          }
          if (std::abs(r.alpha - opt.center) > opt.radius) continue;
          if (std::abs(r.alpha * r.alpha * r.alpha + 1.0) < opt.tol) continue;
          NumericSection t;
          try {
            t = numeric_section(r.alpha, branch);
          } catch (const std::exception&) {
            continue;
          }
          auto order = betti_torsion_order(t.betti, N, opt.tol);
          if (!order) continue;
          c.alpha = r.alpha;
          c.order = *order;
          c.betti = {t.betti.b1, t.betti.b2};
          c.roots = {t.base.alpha, t.base.lambda, t.base.u, 0.0};
          local.push_back(c);
        }
      }
    std::lock_guard<std::mutex> lock(mu);
    all.insert(all.end(), local.begin(), local.end());
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  const std::size_t chunk = (grid.size() + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    std::size_t lo = t * chunk, hi = std::min(grid.size(), lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();

  // Deterministic merge: same branch and alpha within 1e-7 keep the least order.
  auto key = [](const SigmaCandidate& c) {
    return std::make_tuple(c.lambda_branch, c.alpha.real(), c.alpha.imag(), c.order);
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<SigmaCandidate> out;
  for (const auto& c : all) {
    bool dup = false;
    for (auto& o : out)
      if (o.lambda_branch == c.lambda_branch && o.degenerate == c.degenerate &&
          std::abs(o.alpha - c.alpha) < 1e-7 * std::max(1.0, std::abs(c.alpha))) {
        o.order = std::min(o.order, c.order);
        dup = true;
        break;
      }
    if (!dup) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    if (std::abs(a.alpha) != std::abs(b.alpha)) return std::abs(a.alpha) < std::abs(b.alpha);
    return std::make_pair(a.alpha.real(), a.alpha.imag()) < std::make_pair(b.alpha.real(), b.alpha.imag());
  });
  return out;
}

}  // namespace tricover

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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricover/exactalg/poly.hpp"

namespace tricover {

// Sparse multivariate (Laurent) polynomial: exponent vector -> coefficient.
// Negative exponents are allowed so that monomial ratios can be formed.
template <class K>
class MPoly {
 public:
  using Context = ContextOf<K>;
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, K>;

  MPoly() = default;
  MPoly(Context ctx, int nvars) : ctx_(std::move(ctx)), n_(nvars) {}

  static MPoly constant(const Context& ctx, int nvars, const K& c) {
    MPoly p(ctx, nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
  }
  static MPoly constant(const Context& ctx, int nvars, long c) { return constant(ctx, nvars, make_int<K>(ctx, c)); }
  static MPoly var(const Context& ctx, int nvars, int i, int e = 1) {
    MPoly p(ctx, nvars);
    Exps x(nvars, 0);
    x[i] = e;
    p.add_term(x, make_int<K>(ctx, 1));
    return p;
  }
  static MPoly term(const Context& ctx, const K& c, Exps x) {
    MPoly p(ctx, static_cast<int>(x.size()));
    p.add_term(x, c);
    return p;
  }

  const Context& context() const { return ctx_; }
  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  K coeff(const Exps& x) const {
    auto it = t_.find(x);
    return it == t_.end() ? make_int<K>(ctx_, 0) : it->second;
  }

  void add_term(const Exps& x, const K& c) {
    if (tricover::is_zero(c)) return;
    auto it = t_.find(x);
    if (it == t_.end()) {
      t_.emplace(x, c);
      return;
    }
    it->second += c;
    if (tricover::is_zero(it->second)) t_.erase(it);
  }

  int total_degree() const {
    int d = kZeroDegree;
    for (const auto& [x, c] : t_) {
      int s = 0;
      for (int e : x) s += e;
      d = std::max(d, s);
    }
    return d;
  }
  int degree(int i) const {
    int d = kZeroDegree;
    for (const auto& [x, c] : t_) d = std::max(d, x[i]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [x, c] : t_) {
      int s = 0;
      for (int e : x) s += e;
      if (d >= 0 && s != d) return false;
      d = s;
    }
    return true;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [x, c] : o.t_) add_term(x, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [x, c] : o.t_) add_term(x, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [x, c] : r.t_) c = -c;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.ctx_, a.n_);
    for (const auto& [x, c] : a.t_)
      for (const auto& [y, d] : b.t_) {
        Exps z(a.n_);
        for (int i = 0; i < a.n_; ++i) z[i] = x[i] + y[i];
        r.add_term(z, c * d);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator*(const K& s, const MPoly& a) {
    MPoly r(a.ctx_, a.n_);
    for (const auto& [x, c] : a.t_) r.add_term(x, s * c);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  MPoly derivative(int i) const {
    MPoly r(ctx_, n_);
    for (const auto& [x, c] : t_) {
      if (x[i] == 0) continue;
      Exps y = x;
      --y[i];
      r.add_term(y, make_int<K>(ctx_, x[i]) * c);
    }
    return r;
  }

  // Evaluation in a ring R; coefficients enter through `embed`.  Negative
  // exponents require invertible values.
  template <class R, class Embed>
  R eval_in(const std::vector<R>& v, Embed embed) const {
    R acc = zero_like(v.at(0));
    std::vector<std::map<int, R>> cache(n_);
    auto power = [&](int i, int e) -> const R& {
      auto it = cache[i].find(e);
      if (it != cache[i].end()) return it->second;
      R base = e < 0 ? one_like(v[i]) / v[i] : v[i];
      R r = one_like(v[i]);
      for (int k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
      return cache[i].emplace(e, r).first->second;
    };
    for (const auto& [x, c] : t_) {
      R m = embed(c);
      for (int i = 0; i < n_; ++i)
        if (x[i] != 0) m = m * power(i, x[i]);
      acc = acc + m;
    }
    return acc;
  }
  K operator()(const std::vector<K>& v) const {
    return eval_in(v, [](const K& c) { return c; });
  }

  // Replace variable i by the polynomial s[i] (non-negative exponents only).
  MPoly substitute(const std::vector<MPoly>& s) const {
    if (s.empty()) throw std::invalid_argument("empty substitution");
    MPoly acc(ctx_, s[0].nvars());
    std::vector<std::vector<MPoly>> pw(n_);
    for (const auto& [x, c] : t_) {
      MPoly m = constant(ctx_, s[0].nvars(), c);
      for (int i = 0; i < n_; ++i) {
        if (x[i] < 0) throw std::domain_error("substitution into negative exponent");
        auto& cache = pw[i];
        if (cache.empty()) cache.push_back(constant(ctx_, s[0].nvars(), 1));
        while (static_cast<int>(cache.size()) <= x[i]) cache.push_back(cache.back() * s[i]);
        if (x[i] > 0) m = m * cache[x[i]];
      }
      acc += m;
    }
    return acc;
  }

  // Coefficients with respect to variable i: result[k] multiplies x_i^k.
  std::vector<MPoly> coefficients_in(int i) const {
    int d = degree(i);
    std::vector<MPoly> r(std::max(d + 1, 0), MPoly(ctx_, n_));
    for (const auto& [x, c] : t_) {
      if (x[i] < 0) throw std::domain_error("negative exponent");
      Exps y = x;
      y[i] = 0;
      r[x[i]].add_term(y, c);
    }
    return r;
  }

  // Univariate view in variable i when every other exponent is zero.
  Poly<K> to_univariate(int i) const {
    std::vector<K> c(std::max(degree(i) + 1, 0), make_int<K>(ctx_, 0));
    for (const auto& [x, k] : t_) {
      for (int j = 0; j < n_; ++j)
        if (j != i && x[j] != 0) throw std::domain_error("polynomial is not univariate");
      c[x[i]] = k;
    }
    return Poly<K>(ctx_, std::move(c));
  }

  static MPoly from_univariate(const Poly<K>& p, int nvars, int i) {
    MPoly r(p.context(), nvars);
    for (int k = 0; k <= p.degree(); ++k) {
      Exps x(nvars, 0);
      x[i] = k;
      r.add_term(x, p.coeffs()[k]);
    }
    return r;
  }

  template <class F>
  auto map(F fn, const ContextOf<decltype(fn(std::declval<const K&>()))>& ctx) const {
    using R = decltype(fn(std::declval<const K&>()));
    MPoly<R> r(ctx, n_);
    for (const auto& [x, c] : t_) r.add_term(x, fn(c));
    return r;
  }

  // Terms in graded order, highest total degree first, lexicographic in the
  // order given by `print_order` (indices into `names`).
  std::string str(const std::vector<std::string>& names, std::vector<int> print_order = {}) const;

 private:
  Context ctx_{};
  int n_ = 0;
  Terms t_;
};

template <class K>
MPoly<K> pow(const MPoly<K>& p, unsigned e) {
  MPoly<K> r = MPoly<K>::constant(p.context(), p.nvars(), 1), b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class K>
std::string MPoly<K>::str(const std::vector<std::string>& names, std::vector<int> order) const {
  if (t_.empty()) return "0";
  if (order.empty())
    for (int i = 0; i < n_; ++i) order.push_back(i);
  std::vector<std::pair<Exps, K>> items(t_.begin(), t_.end());
  auto key = [&](const Exps& x) {
    std::vector<int> k;
    int s = 0;
    for (int e : x) s += e;
    k.push_back(s);
    for (int i : order) k.push_back(x[i]);
    return k;
  };
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) { return key(a.first) > key(b.first); });
  std::string out;
  for (const auto& [x, c] : items) {
    std::string cs = to_str(c);
    bool composite = cs.find_first_of("+-", 1) != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    bool neg = !composite && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    std::string mono;
    for (int i : order) {
      if (x[i] == 0) continue;
      mono += names[i];
      if (x[i] != 1) mono += "^" + std::to_string(x[i]);
    }
    if (mono.empty())
      out += cs;
    else
      out += (cs == "1" ? "" : cs) + mono;
  }
  return out;
}

}  // namespace tricover

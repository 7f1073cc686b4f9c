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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricover/exactalg/field.hpp"

namespace tricover {

// Dense univariate polynomial over a scalar domain K.  Coefficients are
// stored lowest degree first with no trailing zeros; the zero polynomial has
// an empty coefficient vector and degree kZeroDegree.  The variable name is
// not part of the value; printing takes it as an argument.
inline constexpr int kZeroDegree = -1;

template <class K>
class Poly {
 public:
  using Context = ContextOf<K>;

  Poly() = default;
  explicit Poly(Context ctx) : ctx_(std::move(ctx)) {}
  Poly(Context ctx, std::vector<K> c) : ctx_(std::move(ctx)), c_(std::move(c)) { trim(); }
  // Constant polynomial.
  explicit Poly(const K& c) : ctx_(FieldTraits<K>::context(c)), c_{c} { trim(); }

  static Poly monomial(const K& c, int e) {
    Poly p(FieldTraits<K>::context(c));
    if (tricover::is_zero(c)) return p;
    p.c_.assign(e + 1, zero_like(c));
    p.c_[e] = c;
    return p;
  }
  static Poly x(const Context& ctx) { return monomial(make_int<K>(ctx, 1), 1); }
  static Poly constant(const Context& ctx, long n) { return Poly(ctx, {make_int<K>(ctx, n)}); }

  const Context& context() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : make_int<K>(ctx_, 0);
  }
  const K& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  K zero() const { return make_int<K>(ctx_, 0); }
  K one() const { return make_int<K>(ctx_, 1); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (tricover::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.ctx_, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const K& s, Poly p) {
    for (auto& x : p.c_) x = s * x;
    p.trim();
    return p;
  }
  friend Poly operator*(Poly p, const K& s) { return s * std::move(p); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; the divisor's leading coefficient must be
  // invertible in K.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(a.ctx_), r = a;
    if (a.degree() < b.degree()) return {q, r};
    K inv = b.one() / b.lead();
    q.c_.assign(a.degree() - b.degree() + 1, a.zero());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      int top = k + b.degree();
      if (top >= static_cast<int>(r.c_.size())) continue;
      K t = r.c_[top] * inv;
      q.c_[k] = t;
      if (tricover::is_zero(t)) continue;
      for (int j = 0; j <= b.degree(); ++j) r.c_[k + j] -= t * b.c_[j];
      r.c_.resize(top);  // the top coefficient cancels exactly
    }
    q.trim();
    r.trim();
    return {q, r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(ctx_);
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(make_int<K>(ctx_, static_cast<long>(i)) * c_[i]);
    return Poly(ctx_, std::move(r));
  }

  K operator()(const K& x) const {
    K acc = zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Horner evaluation in a ring R receiving K through embed().
  template <class R, class Embed>
  R eval_in(const R& x, Embed embed) const {
    R acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  Poly compose(const Poly& g) const {
    Poly acc(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Poly(*it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return (one() / lead()) * (*this);
  }

  template <class F>
  auto map(F fn) const {
    using R = decltype(fn(std::declval<const K&>()));
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(fn(x));
    return r;
  }

  std::string str(const std::string& var) const;

 private:
  void trim() {
    while (!c_.empty() && tricover::is_zero(c_.back())) c_.pop_back();
  }
  Context ctx_{};
  std::vector<K> c_;
};

template <class K>
Poly<K> pow(const Poly<K>& p, unsigned e) {
  Poly<K> r = Poly<K>::constant(p.context(), 1), b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

// Monic gcd (zero if both inputs are zero).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

class Rational;
// Modular (multi-prime) gcd over Q, defined in qpoly.cpp; preferred by
// overload resolution wherever Poly<Rational> is used.
Poly<Rational> gcd(Poly<Rational> a, Poly<Rational> b);

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct Xgcd {
  Poly<K> g, s, t;
};

template <class K>
Xgcd<K> xgcd(const Poly<K>& a, const Poly<K>& b) {
  const auto& ctx = a.context();
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(ctx, 1), s1(ctx), t0(ctx), t1 = Poly<K>::constant(ctx, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = r0.one() / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

// Resultant by the Euclidean algorithm; K must allow division by the
// leading coefficients met along the way.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant of two zero polynomials");
  const K one = a.is_zero() ? b.one() : a.one();
  if (a.is_zero() || b.is_zero()) {
    const Poly<K>& o = a.is_zero() ? b : a;
    return o.degree() == 0 ? one : o.zero();
  }
  K res = one;
  while (b.degree() > 0) {
    Poly<K> r = a % b;
    if (r.is_zero()) return a.zero();
    int da = a.degree(), db = b.degree(), dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
    K l = b.lead();
    for (int i = 0; i < da - dr; ++i) res *= l;
    a = std::move(b);
    b = std::move(r);
  }
  K l = b.lead();
  for (int i = 0; i < a.degree(); ++i) res *= l;
  return res;
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& f) {
  if (f.is_zero()) throw std::domain_error("zero input");
  if (f.degree() == 0) return f.monic();
  return (f / gcd(f, f.derivative())).monic();
}

template <class K>
bool is_squarefree(const Poly<K>& f) {
  return gcd(f, f.derivative()).degree() == 0;
}

template <class K>
K discriminant(const Poly<K>& f) {
  return resultant(f, f.derivative());
}

template <class K>
std::string Poly<K>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const K& c = c_[i];
    if (tricover::is_zero(c)) continue;
    std::string cs = to_str(c);
    bool composite = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    bool neg = !composite && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace tricover

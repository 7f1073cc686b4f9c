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

#include <stdexcept>
#include <string>

#include "tricover/exactalg/poly.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

// Quotient num/den of polynomials over a field K, kept with gcd 1 and monic
// denominator so that equal values have equal representations.
template <class K>
class RatFunc {
 public:
  using Context = ContextOf<K>;

  RatFunc() : den_(Poly<K>::constant(Context{}, 1)) {}
  explicit RatFunc(Context ctx) : num_(ctx), den_(Poly<K>::constant(ctx, 1)) {}
  explicit RatFunc(Poly<K> n) : num_(std::move(n)), den_(Poly<K>::constant(num_.context(), 1)) {}
  RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static RatFunc constant(const Context& ctx, long n) { return RatFunc(Poly<K>::constant(ctx, n)); }
  static RatFunc variable(const Context& ctx) { return RatFunc(Poly<K>::x(ctx)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  const Context& context() const { return num_.context(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.context());
    // Cross-cancel first to keep intermediate degrees down.
    Poly<K> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    r.fix_sign();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  K operator()(const K& x) const {
    K d = den_(x);
    if (tricover::is_zero(d)) throw std::domain_error("pole of rational function");
    return num_(x) / d;
  }

  std::string str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>::constant(num_.context(), 1);
      return;
    }
    Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    fix_sign();
  }
  void fix_sign() {
    K l = den_.lead();
    if (l == den_.one()) return;
    K inv = den_.one() / l;
    num_ = inv * num_;
    den_ = inv * den_;
  }
  Poly<K> num_, den_;
};

template <class K>
struct FieldTraits<RatFunc<K>> {
  using Context = ContextOf<K>;
  static constexpr bool exact = true;
  static Context context(const RatFunc<K>& x) { return x.context(); }
  static RatFunc<K> from_int(const Context& c, long n) { return RatFunc<K>::constant(c, n); }
  static RatFunc<K> from_rational(const Context& c, const Rational& q) {
    return RatFunc<K>(Poly<K>(FieldTraits<K>::from_rational(c, q)));
  }
  static bool is_zero(const RatFunc<K>& x) { return x.is_zero(); }
  static double magnitude(const RatFunc<K>& x) { return x.is_zero() ? 0.0 : 1.0; }
  // Generic printing names the variable by nesting depth.
  static std::string str(const RatFunc<K>& x) { return x.str(variable_name()); }
  static std::string variable_name();
};

template <class K>
struct RatFuncDepth {
  static constexpr int value = 0;
};
template <class K>
struct RatFuncDepth<RatFunc<K>> {
  static constexpr int value = 1 + RatFuncDepth<K>::value;
};

template <class K>
std::string FieldTraits<RatFunc<K>>::variable_name() {
  constexpr int d = RatFuncDepth<K>::value;
  return d == 0 ? "α" : (d == 1 ? "β" : "γ");
}

using QAlpha = RatFunc<Rational>;

}  // namespace tricover

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

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricover/exactalg/poly.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

// One level K[t]/(m(t)) of a tower.  The modulus is monic; it is not checked
// for irreducibility, so zero divisors are reported lazily by Ext::inverse.
template <class K>
struct ExtLevel {
  std::string name;
  Poly<K> modulus;
  ContextOf<K> base;
  int degree() const { return modulus.degree(); }
};

template <class K>
using LevelPtr = std::shared_ptr<const ExtLevel<K>>;

template <class K>
LevelPtr<K> make_level(std::string name, const Poly<K>& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("tower level needs a modulus of positive degree");
  return std::make_shared<const ExtLevel<K>>(ExtLevel<K>{std::move(name), modulus.monic(), modulus.context()});
}

// Thrown when inversion meets a zero divisor: `factor` is a nontrivial monic
// factor of the level's modulus, which lets the caller split the tower.
template <class K>
class ZeroDivisorError : public std::domain_error {
 public:
  ZeroDivisorError(LevelPtr<K> level, Poly<K> factor)
      : std::domain_error("zero divisor in tower level " + level->name), level_(std::move(level)),
        factor_(std::move(factor)) {}
  const LevelPtr<K>& level() const { return level_; }
  const Poly<K>& factor() const { return factor_; }

 private:
  LevelPtr<K> level_;
  Poly<K> factor_;
};

// Element of K[t]/(m): coordinates on 1, t, ..., t^(d-1).
template <class K>
class Ext {
 public:
  using Context = LevelPtr<K>;

  Ext() = default;
  explicit Ext(LevelPtr<K> L) : L_(std::move(L)), c_(L_->degree(), make_int<K>(L_->base, 0)) {}
  Ext(LevelPtr<K> L, const K& base) : Ext(std::move(L)) { c_[0] = base; }
  Ext(LevelPtr<K> L, std::vector<K> coords) : L_(std::move(L)) {
    *this = from_poly(L_, Poly<K>(L_->base, std::move(coords)));
  }

  static Ext generator(const LevelPtr<K>& L) { return from_poly(L, Poly<K>::x(L->base)); }
  static Ext from_poly(const LevelPtr<K>& L, const Poly<K>& p) {
    Ext e(L);
    Poly<K> r = p.degree() >= L->degree() ? p % L->modulus : p;
    for (int i = 0; i <= r.degree(); ++i) e.c_[i] = r.coeffs()[i];
    return e;
  }

  const LevelPtr<K>& level() const { return L_; }
  const std::vector<K>& coords() const { return c_; }
  const K& coord(int i) const { return c_[i]; }
  Poly<K> as_poly() const { return Poly<K>(L_->base, c_); }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!tricover::is_zero(x)) return false;
    return true;
  }
  // True when the element lies in the base field.
  bool in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!tricover::is_zero(c_[i])) return false;
    return true;
  }

  friend Ext operator+(Ext a, const Ext& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend Ext operator-(Ext a, const Ext& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  Ext operator-() const {
    Ext r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Ext operator*(const Ext& a, const Ext& b) {
    a.check(b);
    const int d = a.L_->degree();
    const K zero = make_int<K>(a.L_->base, 0);
    std::vector<K> prod(2 * d - 1, zero);
    for (int i = 0; i < d; ++i) {
      if (tricover::is_zero(a.c_[i])) continue;
      for (int j = 0; j < d; ++j)
        if (!tricover::is_zero(b.c_[j])) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& m = a.L_->modulus.coeffs();
    for (int k = 2 * d - 2; k >= d; --k) {
      if (tricover::is_zero(prod[k])) continue;
      K t = prod[k];
      for (int j = 0; j < d; ++j) prod[k - d + j] -= t * m[j];
    }
    prod.resize(d);
    Ext r;
    r.L_ = a.L_;
    r.c_ = std::move(prod);
    return r;
  }
  friend Ext operator*(const K& s, Ext a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend Ext operator/(const Ext& a, const Ext& b) { return a * b.inverse(); }
  Ext& operator+=(const Ext& o) { return *this = *this + o; }
  Ext& operator-=(const Ext& o) { return *this = *this - o; }
  Ext& operator*=(const Ext& o) { return *this = *this * o; }
  Ext& operator/=(const Ext& o) { return *this = *this / o; }
  friend bool operator==(const Ext& a, const Ext& b) { return a.L_ == b.L_ && a.c_ == b.c_; }

  Ext inverse() const {
    if (is_zero()) throw std::domain_error("zero input");
    Xgcd<K> r = xgcd(as_poly(), L_->modulus);
    if (r.g.degree() > 0) throw ZeroDivisorError<K>(L_, r.g);
    return from_poly(L_, r.s);
  }

  Ext pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Ext r(L_, make_int<K>(L_->base, 1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  // Norm to the base: resultant of the (monic) modulus and the representative.
  K norm() const { return resultant(L_->modulus, as_poly()); }

  K trace() const {
    const int d = L_->degree();
    K acc = make_int<K>(L_->base, 0);
    Ext basis = Ext(L_, make_int<K>(L_->base, 1));
    Ext t = generator(L_);
    for (int i = 0; i < d; ++i) {
      acc += ((*this) * basis).c_[i];
      basis = basis * t;
    }
    return acc;
  }

  std::string str() const { return as_poly().str(L_->name); }

 private:
  void check(const Ext& o) const {
    if (L_ != o.L_) throw std::logic_error("mixing elements of different tower levels");
  }
  LevelPtr<K> L_;
  std::vector<K> c_;
};

// Reinterpret an element in a level whose modulus divides the old one.
template <class K>
Ext<K> rebase(const Ext<K>& e, const LevelPtr<K>& L) {
  return Ext<K>::from_poly(L, e.as_poly());
}

template <class K>
struct FieldTraits<Ext<K>> {
  using Context = LevelPtr<K>;
  static constexpr bool exact = FieldTraits<K>::exact;
  static Context context(const Ext<K>& x) { return x.level(); }
  static Ext<K> from_int(const Context& L, long n) { return Ext<K>(L, make_int<K>(L->base, n)); }
  static Ext<K> from_rational(const Context& L, const Rational& q) {
    return Ext<K>(L, FieldTraits<K>::from_rational(L->base, q));
  }
  static bool is_zero(const Ext<K>& x) { return x.is_zero(); }
  static double magnitude(const Ext<K>& x) { return x.is_zero() ? 0.0 : 1.0; }
  static std::string str(const Ext<K>& x) { return x.str(); }
};

// Embed a base element into a level.
template <class K>
Ext<K> lift(const LevelPtr<K>& L, const K& x) {
  return Ext<K>(L, x);
}

}  // namespace tricover

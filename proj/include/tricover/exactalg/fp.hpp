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

#include <cstdint>
#include <string>

#include "tricover/exactalg/field.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

bool is_prime_u32(std::uint64_t n);

// Element of the prime field F_p, p < 2^31.  The prime is carried by every
// element; callers validate it once through check_prime().
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t p, long long v) : p_(p), v_(reduce(p, v)) {}

  static std::uint32_t check_prime(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v_ + b.v_;
    return raw(a.p_, s >= a.p_ ? s - a.p_ : s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.p_, a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(a.p_, static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  // Reduction of a rational; throws if p divides the denominator.
  static Fp from_rational(std::uint32_t p, const Rational& q);

 private:
  static Fp raw(std::uint32_t p, std::uint32_t v) {
    Fp r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }
  static std::uint32_t reduce(std::uint32_t p, long long v) {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  std::uint32_t p_ = 2;
  std::uint32_t v_ = 0;
};

template <>
struct FieldTraits<Fp> {
  using Context = std::uint32_t;
  static constexpr bool exact = true;
  static Context context(const Fp& x) { return x.modulus(); }
  static Fp from_int(const Context& p, long n) { return Fp(p, n); }
  static Fp from_rational(const Context& p, const Rational& q) { return Fp::from_rational(p, q); }
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static double magnitude(const Fp& x) { return x.is_zero() ? 0.0 : 1.0; }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
};

}  // namespace tricover

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
#include <vector>

#include "tricover/exactalg/poly.hpp"

namespace tricover {

// Truncated Laurent series sum_{k >= val} c_k t^k known modulo t^prec.
// Every operation propagates the absolute precision; reading a coefficient
// at or above prec throws.
template <class K>
class Series {
 public:
  using Context = ContextOf<K>;

  Series() = default;
  Series(Context ctx, int prec) : ctx_(std::move(ctx)), val_(prec), prec_(prec) {}
  Series(const Poly<K>& p, int prec) : ctx_(p.context()), val_(0), prec_(prec) {
    for (int k = 0; k < prec && k <= p.degree(); ++k) c_.push_back(p.coeffs()[k]);
    c_.resize(std::max(prec, 0), make_int<K>(ctx_, 0));
    normalize();
  }
  static Series constant(const K& c, int prec) { return Series(Poly<K>(c), prec); }

  const Context& context() const { return ctx_; }
  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool is_zero_to_precision() const { return c_.empty(); }

  K coeff(int k) const {
    if (k >= prec_) throw std::domain_error("series coefficient beyond truncation order");
    if (k < val_) return make_int<K>(ctx_, 0);
    return c_[k - val_];
  }

  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    int prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    Series r(a.ctx_, prec);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.val_ = a.val_ + b.val_;
    int len = prec - r.val_;
    r.c_.assign(std::max(len, 0), make_int<K>(a.ctx_, 0));
    for (int i = 0; i < static_cast<int>(a.c_.size()) && i < len; ++i) {
      if (tricover::is_zero(a.c_[i])) continue;
      for (int j = 0; j < static_cast<int>(b.c_.size()) && i + j < len; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  friend Series operator*(const K& s, Series a) {
    for (auto& x : a.c_) x = s * x;
    a.normalize();
    return a;
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of a series that vanishes to its precision");
    int rel = prec_ - val_;
    Series r(ctx_, -val_ + rel);
    r.val_ = -val_;
    K inv0 = make_int<K>(ctx_, 1) / c_[0];
    r.c_.assign(rel, make_int<K>(ctx_, 0));
    for (int k = 0; k < rel; ++k) {
      K s = k == 0 ? make_int<K>(ctx_, 1) : make_int<K>(ctx_, 0);
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s -= c_[j] * r.c_[k - j];
      r.c_[k] = s * inv0;
    }
    r.normalize();
    return r;
  }

  // Multiply by t^k.
  Series shift(int k) const {
    Series r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
  }

  // Truncate to a smaller absolute precision.
  Series truncate(int prec) const {
    Series r = *this;
    if (prec >= prec_) return r;
    r.prec_ = prec;
    int len = std::max(prec - r.val_, 0);
    if (static_cast<int>(r.c_.size()) > len) r.c_.resize(len);
    r.normalize();
    return r;
  }

  // Same coefficients with the precision raised to prec; the unknown tail
  // reads as zero.  Only for iterations that recompute the tail.
  Series pad(int prec) const {
    Series r = *this;
    if (prec <= prec_) return r;
    if (r.c_.empty()) r.val_ = prec;
    else r.c_.resize(prec - r.val_, make_int<K>(ctx_, 0));
    r.prec_ = prec;
    return r;
  }

  std::string str(const std::string& var) const {
    std::string out;
    for (int k = val_; k < prec_; ++k) {
      const K& c = c_[k - val_];
      if (tricover::is_zero(c)) continue;
      std::string cs = to_str(c);
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      if (!out.empty()) out += cs[0] == '-' ? "" : "+";
      out += k == 0 ? cs : (cs == "1" ? "" : (cs == "-1" ? "-" : cs)) + var + (k == 1 ? "" : "^" + std::to_string(k));
    }
    if (out.empty()) out = "0";
    return out + "+O(" + var + "^" + std::to_string(prec_) + ")";
  }

 private:
  static Series combine(const Series& a, const Series& b, bool sub) {
    int prec = std::min(a.prec_, b.prec_);
    int val = std::min(a.c_.empty() ? prec : a.val_, b.c_.empty() ? prec : b.val_);
    Series r(a.ctx_, prec);
    if (val >= prec) return r;
    r.val_ = val;
    r.c_.assign(prec - val, make_int<K>(a.ctx_, 0));
    for (int k = val; k < prec; ++k) {
      if (k >= a.val_ && k - a.val_ < static_cast<int>(a.c_.size())) r.c_[k - val] += a.c_[k - a.val_];
      if (k >= b.val_ && k - b.val_ < static_cast<int>(b.c_.size())) {
        if (sub)
          r.c_[k - val] -= b.c_[k - b.val_];
        else
          r.c_[k - val] += b.c_[k - b.val_];
      }
    }
    r.normalize();
    return r;
  }
  void normalize() {
    std::size_t i = 0;
    while (i < c_.size() && tricover::is_zero(c_[i])) ++i;
    if (i == c_.size()) {
      c_.clear();
      val_ = prec_;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(i));
    val_ += static_cast<int>(i);
  }

  Context ctx_{};
  int val_ = 0;
  int prec_ = 0;
  std::vector<K> c_;
};

// Square root with prescribed constant term c0 (f must have valuation 0 and
// f(0) = c0^2).  Newton iteration g <- (g + f/g)/2 doubling the precision.
template <class K>
Series<K> series_sqrt(const Series<K>& f, const K& c0) {
  if (is_zero(c0)) throw std::domain_error("zero constant term for square root");
  if (f.valuation() != 0 || !(f.coeff(0) == c0 * c0)) throw std::domain_error("constant-term mismatch");
  const K half = make_int<K>(f.context(), 1) / make_int<K>(f.context(), 2);
  Series<K> g = Series<K>::constant(c0, 1);
  int prec = 1;
  while (prec < f.precision()) {
    prec = std::min(2 * prec, f.precision());
    Series<K> gp = g.pad(prec);
    g = half * (gp + f.truncate(prec) / gp);
  }
  return g;
}

}  // namespace tricover

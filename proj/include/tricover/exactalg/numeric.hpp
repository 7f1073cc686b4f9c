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

#include <complex>
#include <string>

#include "tricover/exactalg/field.hpp"
#include "tricover/exactalg/rational.hpp"

namespace tricover {

using Complex = std::complex<double>;

template <>
struct FieldTraits<Complex> {
  using Context = NoContext;
  static constexpr bool exact = false;
  static Context context(const Complex&) { return {}; }
  static Complex from_int(const Context&, long n) { return Complex(static_cast<double>(n), 0.0); }
  static Complex from_rational(const Context&, const Rational& q) { return Complex(q.to_double(), 0.0); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string str(const Complex& x);
};

}  // namespace tricover
